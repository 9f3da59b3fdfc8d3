#include "foamlab/sym.hpp"

#include <sstream>

namespace foamlab {

std::string pigment_var(int i) { return "X" + std::to_string(i); }

std::vector<std::string> pigment_vars(int N) {
    std::vector<std::string> v;
    for (int i = 1; i <= N; ++i) v.push_back(pigment_var(i));
    return v;
}

namespace {

MultiPoly elementary(int n, const std::vector<std::string>& vars, CoefRing R) {
    // e_n(x_1..x_k) = e_n(x_1..x_{k-1}) + x_k e_{n-1}(x_1..x_{k-1})
    std::vector<MultiPoly> e(n + 1, MultiPoly(R));
    e[0] = MultiPoly::constant(R, 1);
    for (const auto& v : vars) {
        MultiPoly x = MultiPoly::variable(R, v);
        for (int k = n; k >= 1; --k) e[k] += x * e[k - 1];
    }
    return e[n];
}

MultiPoly complete(int n, const std::vector<std::string>& vars, CoefRing R) {
    std::vector<MultiPoly> h(n + 1, MultiPoly(R));
    h[0] = MultiPoly::constant(R, 1);
    for (const auto& v : vars) {
        MultiPoly x = MultiPoly::variable(R, v);
        for (int k = 1; k <= n; ++k) h[k] += x * h[k - 1];
    }
    return h[n];
}

}  // namespace

MultiPoly symmetric_basis(SymKind kind, int n, const std::vector<std::string>& vars, CoefRing R) {
    if (n < 0) throw Error(ErrorKind::InvalidArgument, "symmetric basis index must be >= 0");
    switch (kind) {
        case SymKind::Elementary:
            if (n > static_cast<int>(vars.size())) return MultiPoly(R);
            return elementary(n, vars, R);
        case SymKind::Complete:
            if (vars.empty()) return n == 0 ? MultiPoly::constant(R, 1) : MultiPoly(R);
            return complete(n, vars, R);
        case SymKind::PowerSum: {
            if (n == 0) return MultiPoly::constant(R, static_cast<i64>(vars.size()));
            MultiPoly r(R);
            for (const auto& v : vars) r += MultiPoly::monomial(R, v, n);
            return r;
        }
    }
    return MultiPoly(R);
}

bool is_symmetric_in(const MultiPoly& q, const std::vector<std::string>& vars) {
    for (std::size_t i = 0; i + 1 < vars.size(); ++i)
        if (q.swap_vars(vars[i], vars[i + 1]) != q) return false;
    return true;
}

bool SymPoly::certify() const {
    for (const auto& b : blocks)
        if (!is_symmetric_in(poly, b)) return false;
    return true;
}

Laurent Laurent::monomial(int e, i64 c) {
    Laurent l;
    l.add(e, c);
    return l;
}

void Laurent::add(int e, i64 c) {
    if (c == 0) return;
    auto& x = c_[e];
    x += c;
    if (x == 0) c_.erase(e);
}

Laurent Laurent::operator+(const Laurent& o) const {
    Laurent r = *this;
    r += o;
    return r;
}

Laurent& Laurent::operator+=(const Laurent& o) {
    for (auto& [e, c] : o.c_) add(e, c);
    return *this;
}

Laurent Laurent::operator*(const Laurent& o) const {
    Laurent r;
    for (auto& [e1, c1] : c_)
        for (auto& [e2, c2] : o.c_) r.add(e1 + e2, c1 * c2);
    return r;
}

i64 Laurent::at_one() const {
    i64 s = 0;
    for (auto& [e, c] : c_) s += c;
    return s;
}

bool Laurent::nonnegative() const {
    for (auto& [e, c] : c_)
        if (c < 0) return false;
    return true;
}

std::string Laurent::str() const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [e, c] : c_) {
        i64 a = c < 0 ? -c : c;
        if (first)
            os << (c < 0 ? "-" : "");
        else
            os << (c < 0 ? " - " : " + ");
        first = false;
        if (e == 0) {
            os << a;
            continue;
        }
        if (a != 1) os << a << "*";
        os << "q";
        if (e != 1) os << "^" << e;
    }
    return os.str();
}

Laurent qint(int n) {
    Laurent r;
    for (int k = 0; k < n; ++k) r.add(n - 1 - 2 * k, 1);
    return r;
}

Laurent qbinom(int m, int a) {
    if (a < 0 || a > m) return Laurent();
    // Gaussian binomial in v = q^2, shifted by q^{-a(m-a)}
    std::vector<std::vector<std::map<int, i64>>> G(m + 1, std::vector<std::map<int, i64>>(m + 1));
    for (int i = 0; i <= m; ++i) {
        G[i][0][0] = 1;
        G[i][i][0] = 1;
        for (int k = 1; k < i; ++k) {
            auto& g = G[i][k];
            for (auto& [e, c] : G[i - 1][k - 1]) g[e] += c;
            for (auto& [e, c] : G[i - 1][k]) g[e + k] += c;
        }
    }
    Laurent r;
    for (auto& [e, c] : G[m][a]) r.add(2 * e - a * (m - a), c);
    return r;
}

}  // namespace foamlab
