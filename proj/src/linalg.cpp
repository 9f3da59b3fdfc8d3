#include "foamlab/linalg.hpp"

#include <utility>

namespace foamlab {

bool RowSpace::add(std::vector<i64> row) {
    for (auto& x : row) x = R_.norm(x);
    for (std::size_t k = 0; k < rows_.size(); ++k) {
        std::size_t pc = pivots_[k];
        if (pc >= row.size() || row[pc] == 0) continue;
        i64 f = row[pc];
        const auto& piv = rows_[k];
        for (std::size_t j = pc; j < row.size(); ++j) row[j] = R_.sub(row[j], R_.mul(f, piv[j]));
    }
    std::size_t pc = 0;
    while (pc < row.size() && row[pc] == 0) ++pc;
    if (pc == row.size()) return false;
    i64 inv = R_.inv(row[pc]);
    for (auto& x : row) x = R_.mul(x, inv);
    // keep earlier pivot rows reduced in the new pivot column
    for (auto& r : rows_) {
        if (pc >= r.size() || r[pc] == 0) continue;
        i64 f = r[pc];
        for (std::size_t j = 0; j < r.size(); ++j) r[j] = R_.sub(r[j], R_.mul(f, row[j]));
    }
    rows_.push_back(std::move(row));
    pivots_.push_back(pc);
    return true;
}

int rank_mod(const ModMatrix& A, const CoefRing& R) {
    if (!R.is_field()) throw Error(ErrorKind::WrongRing, "rank needs a prime field");
    RowSpace rs(R);
    for (const auto& row : A) rs.add(row);
    return rs.rank();
}

i64 eval_at(const MultiPoly& q, const std::map<std::string, i64>& point, const CoefRing& R) {
    const auto& vars = q.vars();
    std::vector<i64> vals(vars.size(), 0);
    for (std::size_t i = 0; i < vars.size(); ++i) {
        if (q.degree_in(vars[i]) == 0) continue;
        auto it = point.find(vars[i]);
        if (it == point.end()) throw Error(ErrorKind::InvalidArgument, "no value for " + vars[i]);
        vals[i] = R.norm(it->second);
    }
    i64 acc = 0;
    for (const auto& [mono, c] : q.terms()) {
        i64 t = R.norm(c);
        for (std::size_t i = 0; i < mono.size(); ++i)
            if (mono[i]) t = R.mul(t, R.pow(vals[i], static_cast<unsigned>(mono[i])));
        acc = R.add(acc, t);
    }
    return acc;
}

PolyMatrix poly_zero(std::size_t rows, std::size_t cols, const CoefRing& R) {
    return PolyMatrix(rows, std::vector<MultiPoly>(cols, MultiPoly(R)));
}

PolyMatrix poly_identity(std::size_t n, const CoefRing& R) {
    PolyMatrix I = poly_zero(n, n, R);
    for (std::size_t i = 0; i < n; ++i) I[i][i] = MultiPoly::constant(R, 1);
    return I;
}

PolyMatrix poly_mul(const PolyMatrix& A, const PolyMatrix& B) {
    if (A.empty() || B.empty()) return {};
    if (A[0].size() != B.size()) throw Error(ErrorKind::InvalidArgument, "matrix shapes do not match");
    CoefRing R = B[0][0].ring();
    PolyMatrix C = poly_zero(A.size(), B[0].size(), R);
    for (std::size_t i = 0; i < A.size(); ++i)
        for (std::size_t k = 0; k < B.size(); ++k) {
            if (A[i][k].is_zero()) continue;
            for (std::size_t j = 0; j < B[0].size(); ++j)
                if (!B[k][j].is_zero()) C[i][j] += A[i][k] * B[k][j];
        }
    return C;
}

namespace {

PolyMatrix zip_with(const PolyMatrix& A, const PolyMatrix& B, bool minus) {
    if (A.size() != B.size()) throw Error(ErrorKind::InvalidArgument, "matrix shapes do not match");
    PolyMatrix C = A;
    for (std::size_t i = 0; i < A.size(); ++i) {
        if (A[i].size() != B[i].size()) throw Error(ErrorKind::InvalidArgument, "matrix shapes do not match");
        for (std::size_t j = 0; j < A[i].size(); ++j) C[i][j] = minus ? A[i][j] - B[i][j] : A[i][j] + B[i][j];
    }
    return C;
}

}  // namespace

PolyMatrix poly_add(const PolyMatrix& A, const PolyMatrix& B) { return zip_with(A, B, false); }
PolyMatrix poly_sub(const PolyMatrix& A, const PolyMatrix& B) { return zip_with(A, B, true); }

bool poly_is_zero(const PolyMatrix& A) {
    for (const auto& row : A)
        for (const auto& x : row)
            if (!x.is_zero()) return false;
    return true;
}

PolyMatrix poly_map(const PolyMatrix& A, const std::function<MultiPoly(const MultiPoly&)>& f) {
    PolyMatrix C = A;
    for (auto& row : C)
        for (auto& x : row) x = f(x);
    return C;
}

PolySolve poly_solve(const PolyMatrix& A, const PolyMatrix& B) {
    std::size_t n = A.size();
    std::size_t m = B.empty() ? 0 : B[0].size();
    PolySolve out;
    if (n == 0) {
        out.ok = out.exact = true;
        return out;
    }
    CoefRing R = A[0][0].ring();
    PolyMatrix M(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (A[i].size() != n || B.size() != n) throw Error(ErrorKind::InvalidArgument, "poly_solve needs a square system");
        M[i] = A[i];
        M[i].insert(M[i].end(), B[i].begin(), B[i].end());
    }
    std::size_t cols = n + m;
    MultiPoly prev = MultiPoly::constant(R, 1);
    int sign = 1;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t r = k;
        while (r < n && M[r][k].is_zero()) ++r;
        if (r == n) return out;
        if (r != k) {
            std::swap(M[r], M[k]);
            sign = -sign;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == k) continue;
            for (std::size_t j = 0; j < cols; ++j) {
                if (j == k) continue;
                M[i][j] = (M[k][k] * M[i][j] - M[i][k] * M[k][j]).exact_div(prev);
            }
            M[i][k] = MultiPoly(R);
        }
        prev = M[k][k];
    }
    // every diagonal entry is now the determinant of the row-swapped matrix
    out.ok = true;
    out.det = sign > 0 ? prev : -prev;
    out.adjB = poly_zero(n, m, R);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < m; ++j) out.adjB[i][j] = sign > 0 ? M[i][n + j] : -M[i][n + j];
    out.exact = true;
    out.X = poly_zero(n, m, R);
    for (std::size_t i = 0; i < n && out.exact; ++i)
        for (std::size_t j = 0; j < m; ++j) {
            MultiPoly q;
            if (!out.adjB[i][j].divides_into(out.det, q)) {
                out.exact = false;
                break;
            }
            out.X[i][j] = q;
        }
    if (!out.exact) out.X.clear();
    return out;
}

MultiPoly poly_det(const PolyMatrix& A) {
    if (A.empty()) return MultiPoly();
    PolySolve s = poly_solve(A, PolyMatrix(A.size()));
    return s.ok ? s.det : MultiPoly(A[0][0].ring());
}

}  // namespace foamlab
