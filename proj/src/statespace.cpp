#include "foamlab/statespace.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

#include "foamlab/corpus.hpp"

namespace foamlab {

std::string base_name(Base b) { return b == Base::Equivariant ? "equivariant" : "phi0"; }

Base parse_base(const std::string& s) {
    if (s == "equivariant") return Base::Equivariant;
    if (s == "phi0") return Base::Phi0;
    throw Error(ErrorKind::InvalidArgument, "unknown base '" + s + "' (equivariant or phi0)");
}

namespace {

MultiPoly in_ring(const MultiPoly& q, const CoefRing& R) { return q.ring() == R ? q : q.change_ring(R); }

// Partitions with parts <= max_part and at most max_len + extra parts; the ones with at most
// max_len parts come first (they are the basis), smaller sizes first within each group.
std::vector<std::vector<int>> box_partitions(int max_part, int max_len, int extra = 0) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int bound, int left) -> void {
        out.push_back(cur);
        if (left == 0) return;
        for (int p = 1; p <= bound; ++p) {
            cur.push_back(p);
            self(self, p, left - 1);
            cur.pop_back();
        }
    };
    if (max_len + extra >= 0) rec(rec, max_part, max_len + extra);
    std::stable_sort(out.begin(), out.end(), [&](const auto& a, const auto& b) {
        bool ea = static_cast<int>(a.size()) > max_len, eb = static_cast<int>(b.size()) > max_len;
        if (ea != eb) return eb;
        return std::accumulate(a.begin(), a.end(), 0) < std::accumulate(b.begin(), b.end(), 0);
    });
    return out;
}

MultiPoly e_lambda(const std::vector<int>& lambda) {
    CoefRing Z = CoefRing::integers();
    MultiPoly q = MultiPoly::constant(Z, 1);
    for (int k : lambda) q *= gen(Z, GenFamily::Inner, SymKind::Elementary, k);
    return q;
}

struct Slot {
    int after;  // number of moves of the shape before the decoration
    int edge;
    std::vector<std::vector<int>> lambdas;
};

// All decorated versions of shape: one e_lambda per slot.
Presentation decorate_all(const std::string& label, const Movie& shape, const std::vector<Slot>& slots, int N) {
    std::vector<Movie> movies;
    std::vector<std::size_t> idx(slots.size(), 0);
    for (const auto& s : slots)
        if (s.lambdas.empty()) throw Error(ErrorKind::InvalidArgument, label + ": empty decoration slot");
    while (true) {
        Movie m;
        m.name = label;
        m.input = shape.input;
        for (std::size_t k = 0; k <= shape.moves.size(); ++k) {
            for (std::size_t s = 0; s < slots.size(); ++s) {
                if (slots[s].after != static_cast<int>(k)) continue;
                const auto& lam = slots[s].lambdas[idx[s]];
                if (!lam.empty()) m.moves.push_back(make_decorate(slots[s].edge, e_lambda(lam)));
            }
            if (k < shape.moves.size()) m.moves.push_back(shape.moves[k]);
        }
        movies.push_back(m);
        std::size_t s = 0;
        while (s < slots.size() && ++idx[s] == slots[s].lambdas.size()) idx[s++] = 0;
        if (s == slots.size()) break;
    }
    return presentation_from_movies(label, movies, N);
}

std::vector<int> parse_ints(const std::string& s) {
    std::vector<int> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            out.push_back(std::stoi(item, &used));
            if (used != item.size()) throw std::invalid_argument(item);
        } catch (const std::exception&) {
            throw Error(ErrorKind::InvalidArgument, "bad thickness list '" + s + "'");
        }
    }
    return out;
}

void require_thickness(bool ok, const std::string& what) {
    if (!ok) throw Error(ErrorKind::InvalidArgument, what);
}

}  // namespace

Presentation presentation_from_movies(const std::string& label, const std::vector<Movie>& gens, int N, CoefRing R) {
    if (gens.empty()) throw Error(ErrorKind::InvalidArgument, label + ": no generators");
    Presentation P;
    P.label = label;
    for (const auto& m : gens) {
        if (!m.input.empty()) throw Error(ErrorKind::InvalidArgument, label + ": generator '" + m.name + "' does not start at the empty web");
        FoamSum v = to_foam_sum(m, R);
        if (P.gens.empty()) {
            P.shape = v.shape;
        } else if (!same_movie(P.shape, v.shape)) {
            throw Error(ErrorKind::InvalidArgument, label + ": generator '" + m.name + "' has a different undecorated shape");
        }
        P.gens.push_back(v.z);
        P.degrees.push_back(movie_degree(m, N));
        P.spherical = P.spherical && !has_saddle(m);
    }
    return P;
}

Presentation circle_presentation(int a, int N, int extra) {
    require_thickness(a >= 1 && a <= N, "circle thickness must be in 1..N");
    Movie shape;
    shape.moves.push_back(make_cup(a));
    int e = output(shape).edges.begin()->first;
    return decorate_all("circle:" + std::to_string(a), shape, {{1, e, box_partitions(a, N - a, extra)}}, N);
}

Presentation digon_presentation(int a, int b, int N, int extra) {
    require_thickness(a >= 1 && b >= 1 && a + b <= N, "digon thicknesses must be positive with a + b <= N");
    MovieBuilder B;
    int e = B.push(make_cup(a + b))[0];
    auto d = B.push(make_digon_cup(a, b, e));
    Movie shape = B.movie();
    return decorate_all("digon:" + std::to_string(a) + "," + std::to_string(b), shape,
                        {{1, e, box_partitions(a + b, N - a - b)}, {2, d[1], box_partitions(a, b, extra)}}, N);
}

Presentation bad_digon_presentation(int a, int b, int N, int extra) {
    require_thickness(a >= 1 && b >= 1 && a + b <= N, "bad digon thicknesses must be positive with a + b <= N");
    MovieBuilder B;
    int e1 = B.push(make_cup(a))[0];
    int e2 = B.push(make_cup(b))[0];
    B.push(make_zip(a, b, e1, e2));
    Movie shape = B.movie();
    return decorate_all("bad_digon:" + std::to_string(a) + "," + std::to_string(b), shape,
                        {{1, e1, box_partitions(a, N - a)}, {2, e2, box_partitions(b, N - a - b, extra)}}, N);
}

Presentation assoc_presentation(int a, int b, int c, int N, bool co, int extra) {
    require_thickness(a >= 1 && b >= 1 && c >= 1 && a + b + c <= N, "assoc thicknesses must be positive with a + b + c <= N");
    MovieBuilder B;
    int e = B.push(make_cup(a + b + c))[0];
    auto d = B.push(make_digon_cup(a, b + c, e));
    auto x = B.push(make_digon_cup(b, c, d[2]));
    if (co) B.push(make_coassoc(x[0]));
    Movie shape = B.movie();
    std::string label = std::string(co ? "coassoc:" : "assoc:") + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c);
    return decorate_all(label, shape,
                        {{1, e, box_partitions(a + b + c, N - a - b - c)},
                         {2, d[1], box_partitions(a, b + c)},
                         {3, x[1], box_partitions(b, c, extra)}},
                        N);
}

Presentation standard_presentation(const std::string& spec, int N, int extra) {
    auto colon = spec.find(':');
    if (colon == std::string::npos) throw Error(ErrorKind::InvalidArgument, "web spec '" + spec + "' needs kind:thicknesses");
    std::string kind = spec.substr(0, colon);
    std::vector<int> t = parse_ints(spec.substr(colon + 1));
    auto need = [&](std::size_t n) {
        if (t.size() != n) throw Error(ErrorKind::InvalidArgument, "web spec '" + spec + "' needs " + std::to_string(n) + " thicknesses");
    };
    if (kind == "circle") {
        need(1);
        return circle_presentation(t[0], N, extra);
    }
    if (kind == "digon") {
        need(2);
        return digon_presentation(t[0], t[1], N, extra);
    }
    if (kind == "bad_digon") {
        need(2);
        return bad_digon_presentation(t[0], t[1], N, extra);
    }
    if (kind == "assoc" || kind == "coassoc") {
        need(3);
        return assoc_presentation(t[0], t[1], t[2], N, kind == "coassoc", extra);
    }
    throw Error(ErrorKind::InvalidArgument, "unknown web kind '" + kind + "'");
}

MultiPoly pairing(const FoamSum& v, const FoamSum& g, int N) {
    PairingTable T(v.shape, g.shape, N);
    return T(v.z, g.z);
}

PairingTable::PairingTable(const Movie& left, const Movie& right, int N) : N_(N) {
    MovieMap mir = mirror_mapped(right);
    Web mid = output(left);
    MovieMap mm;
    if (mid == mir.movie.input) {
        std::map<int, int> id;
        for (const auto& [e, _] : mid.edges) id[e] = e;
        mm = compose_mapped(left, mir.movie, id);
    } else {
        mm = compose_mapped(left, mir.movie);
    }
    if (!is_closed(mm.movie)) throw Error(ErrorKind::BoundaryMismatch, "pairing needs foams from the empty web");
    closed_ = compile(mm.movie);
    left_ = mm.first;
    for (std::size_t l = 0; l < mir.first.level.size(); ++l) {
        int ml = mir.first.level[l];
        right_.level.push_back(mm.second.level.at(ml));
        std::map<int, int> em;
        for (const auto& [e, me] : mir.first.edges[l]) em[e] = mm.second.edges.at(ml).at(me);
        right_.edges.push_back(em);
    }
}

MultiPoly PairingTable::operator()(const MultiPoly& zl, const MultiPoly& zr) const {
    auto via = [](const LevelMap& L) {
        return [&L](Token t) { return Token{L.level.at(t.first), L.edges.at(t.first).at(t.second)}; };
    };
    MultiPoly z = retag(zl, via(left_)) * retag(in_ring(zr, zl.ring()), via(right_));
    return evaluate_tagged(closed_, N_, z).value;
}

namespace {

MultiPoly to_base(const MultiPoly& q, Base base, int N) {
    return base == Base::Phi0 ? base_change(q, BaseChange::KillEquivariance, 0, N) : q;
}

std::vector<MultiPoly> gens_in(const Presentation& P, const CoefRing& R) {
    std::vector<MultiPoly> out;
    for (const auto& z : P.gens) out.push_back(in_ring(z, R));
    return out;
}

}  // namespace

GramMatrix gram_matrix(const Presentation& P, int N, Base base, CoefRing R) {
    GramMatrix G;
    G.degrees = P.degrees;
    G.base = base;
    G.ring = R;
    G.N = N;
    PairingTable T(P.shape, P.shape, N);
    auto gs = gens_in(P, R);
    G.entries = poly_zero(gs.size(), gs.size(), R);
    for (std::size_t i = 0; i < gs.size(); ++i)
        for (std::size_t j = 0; j < gs.size(); ++j) G.entries[i][j] = to_base(T(gs[i], gs[j]), base, N);
    return G;
}

RankResult graded_rank(const GramMatrix& G, int specializations, std::uint64_t seed) {
    std::size_t n = G.entries.size();
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return G.degrees[a] < G.degrees[b]; });
    CoefRing F = G.ring.is_field() ? G.ring : CoefRing::prime(kBigPrime);
    std::mt19937_64 rng(seed);
    std::optional<RankResult> first;
    for (int s = 0; s < std::max(1, specializations); ++s) {
        std::map<std::string, i64> point;
        std::set<i64> used;
        for (int i = 1; i <= G.N; ++i) {
            i64 v = 0;
            for (int tries = 0; tries < 64; ++tries) {
                v = static_cast<i64>(rng() % static_cast<std::uint64_t>(F.p));
                if (!used.count(v)) break;
            }
            used.insert(v);
            point[pigment_var(i)] = v;
        }
        RowSpace rs(F);
        RankResult r;
        for (int i : order) {
            std::vector<i64> row;
            for (std::size_t j = 0; j < n; ++j) row.push_back(eval_at(in_ring(G.entries[i][j], F), point, F));
            if (rs.add(row)) {
                r.basis.push_back(i);
                r.graded.add(G.degrees[i], 1);
            }
        }
        r.rank = rs.rank();
        if (!first) {
            first = r;
        } else if (r.graded != first->graded || r.basis != first->basis) {
            throw Error(ErrorKind::RankUnstable, "specialisations disagree: " + first->graded.str() + " vs " + r.graded.str());
        }
    }
    return *first;
}

bool is_zero_in_statespace(const FoamSum& v, const Presentation& P, int N, Base base) {
    PairingTable T(v.shape, P.shape, N);
    for (const auto& g : P.gens)
        if (!to_base(T(v.z, in_ring(g, v.z.ring())), base, N).is_zero()) return false;
    return true;
}

MultiPoly act_on_coefficient(const Operator& op, const ActionParams& AP, const MultiPoly& q0) {
    MultiPoly q = in_ring(q0, AP.ring);
    auto none = [](std::optional<Token>) -> int {
        throw Error(ErrorKind::InvalidArgument, "matrix entries are pigment polynomials");
    };
    switch (op.kind) {
        case OpKind::Witt: return decoration_witt(op.n, q, none);
        case OpKind::E: return decoration_witt(-1, q, none);
        case OpKind::H: return decoration_witt(0, q, none).scaled(2);
        case OpKind::F:
        case OpKind::D: return -decoration_witt(1, q, none);
    }
    return q;
}

OperatorMatrix induced_action(const Operator& op, const ActionParams& AP, const Presentation& P, int N, Base base) {
    const CoefRing& R = AP.ring;
    GramMatrix G = gram_matrix(P, N, base, R);
    RankResult rk = graded_rank(G);
    const auto& B = rk.basis;
    std::size_t n = P.size(), r = B.size();
    auto gs = gens_in(P, R);
    PairingTable T(P.shape, P.shape, N);

    // images of every generator, paired with every generator
    std::vector<MultiPoly> image(n);
    PolyMatrix W = poly_zero(n, n, R);  // W[k][i] = <op g_k; g_i>
    for (std::size_t k = 0; k < n; ++k) {
        image[k] = act(op, AP, FoamSum{P.shape, gs[k]}).z;
        for (std::size_t i = 0; i < n; ++i) W[k][i] = to_base(T(image[k], gs[i]), base, N);
    }
    auto coef = [&](const MultiPoly& q) {
        return base == Base::Phi0 ? MultiPoly(R) : act_on_coefficient(op, AP, q);
    };

    // A x = b expresses a vector through the basis, with b_i = <v; basis_i>
    PolyMatrix A = poly_zero(r, r, R);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j) A[i][j] = G.entries[B[j]][B[i]];

    PolyMatrix rhs = poly_zero(r, r, R);
    for (std::size_t j = 0; j < r; ++j)
        for (std::size_t i = 0; i < r; ++i) rhs[i][j] = W[B[j]][B[i]];
    PolySolve sol = poly_solve(A, rhs);
    if (!sol.ok) throw Error(ErrorKind::RankUnstable, P.label + ": basis Gram block is singular");
    if (!sol.exact)
        throw Error(ErrorKind::InvalidArgument, P.label + ": basis Gram block " + sol.det.str() + " is not a unit, matrix entries would not be polynomial");

    OperatorMatrix out;
    out.op = op;
    out.basis = B;
    for (int b : B) out.degrees.push_back(P.degrees[b]);
    out.M = sol.X;
    out.base = base;
    out.N = N;

    // op(basis_j) - sum_k M_kj basis_k must pair to zero with every generator
    for (std::size_t j = 0; j < r; ++j)
        for (std::size_t i = 0; i < n; ++i) {
            MultiPoly d = W[B[j]][i];
            for (std::size_t k = 0; k < r; ++k) d -= out.M[k][j] * G.entries[B[k]][i];
            if (!d.is_zero())
                throw Error(ErrorKind::NotWellDefined, P.label + ": image of generator " + std::to_string(B[j]) + " leaves the span of the basis");
        }

    // over phi0 the multiples E_k g are zero, so op(E_k) has to die under phi0
    if (base == Base::Phi0) {
        std::vector<std::string> xs = pigment_vars(N);
        for (int k = 1; k <= N; ++k) {
            MultiPoly Ek = symmetric_basis(SymKind::Elementary, k, xs, R);
            if (!to_base(act_on_coefficient(op, AP, Ek), base, N).is_zero())
                throw Error(ErrorKind::NotWellDefined, op.str() + " does not preserve the kernel of phi0 (E" + std::to_string(k) + ")");
            ++out.kernel_vectors;
        }
    }

    // relations det g_k - sum_j adj_j basis_j among the generators must map to zero
    std::set<int> in_basis(B.begin(), B.end());
    for (std::size_t k = 0; k < n; ++k) {
        if (in_basis.count(static_cast<int>(k))) continue;
        PolyMatrix b = poly_zero(r, 1, R);
        for (std::size_t i = 0; i < r; ++i) b[i][0] = G.entries[k][B[i]];
        PolySolve rel = poly_solve(A, b);
        const MultiPoly& det = rel.det;
        for (std::size_t i = 0; i < n; ++i) {
            MultiPoly lhs = det * G.entries[k][i];
            for (std::size_t j = 0; j < r; ++j) lhs -= rel.adjB[j][0] * G.entries[B[j]][i];
            if (!lhs.is_zero()) throw Error(ErrorKind::RankUnstable, P.label + ": generator " + std::to_string(k) + " is not in the span of the basis");
            MultiPoly img = coef(det) * G.entries[k][i] + det * W[k][i];
            for (std::size_t j = 0; j < r; ++j)
                img -= coef(rel.adjB[j][0]) * G.entries[B[j]][i] + rel.adjB[j][0] * W[B[j]][i];
            if (!img.is_zero())
                throw Error(ErrorKind::NotWellDefined, P.label + ": " + op.str() + " does not preserve the relation for generator " + std::to_string(k));
        }
        ++out.kernel_vectors;
    }
    return out;
}

PolyMatrix compose_operators(const OperatorMatrix& A, const OperatorMatrix& B, const ActionParams& AP) {
    if (A.basis != B.basis) throw Error(ErrorKind::InvalidArgument, "operator matrices on different bases");
    PolyMatrix prod = poly_mul(A.M, B.M);
    if (A.base == Base::Phi0) return prod;
    return poly_add(poly_map(B.M, [&](const MultiPoly& q) { return act_on_coefficient(A.op, AP, q); }), prod);
}

PolyMatrix operator_power(const OperatorMatrix& A, int k, const ActionParams& AP) {
    if (k < 1) throw Error(ErrorKind::InvalidArgument, "operator power must be positive");
    OperatorMatrix cur = A;
    for (int i = 1; i < k; ++i) cur.M = compose_operators(A, cur, AP);
    return cur.M;
}

MoyRelation parse_moy_relation(const std::string& s) {
    if (s == "circle") return MoyRelation::Circle;
    if (s == "digon") return MoyRelation::Digon;
    if (s == "bad_digon") return MoyRelation::BadDigon;
    if (s == "assoc") return MoyRelation::Assoc;
    throw Error(ErrorKind::InvalidArgument, "unknown relation '" + s + "' (circle, digon, bad_digon, assoc)");
}

std::string moy_relation_name(MoyRelation r) {
    switch (r) {
        case MoyRelation::Circle: return "circle";
        case MoyRelation::Digon: return "digon";
        case MoyRelation::BadDigon: return "bad_digon";
        case MoyRelation::Assoc: return "assoc";
    }
    return "?";
}

MoyReport moy_check(MoyRelation rel, int a, int b, int c, int N, Base base, int extra) {
    auto rank_of = [&](const Presentation& P) { return graded_rank(gram_matrix(P, N, base)).graded; };
    MoyReport r;
    r.relation = rel;
    switch (rel) {
        case MoyRelation::Circle: {
            Presentation P = circle_presentation(a, N, extra);
            r.lhs_label = P.label;
            r.rhs_label = "empty";
            r.lhs = rank_of(P);
            r.rhs = Laurent::monomial(0);
            r.factor = qbinom(N, a);
            break;
        }
        case MoyRelation::Digon: {
            Presentation L = digon_presentation(a, b, N, extra), Rp = circle_presentation(a + b, N);
            r.lhs_label = L.label;
            r.rhs_label = Rp.label;
            r.lhs = rank_of(L);
            r.rhs = rank_of(Rp);
            r.factor = qbinom(a + b, a);
            break;
        }
        case MoyRelation::BadDigon: {
            Presentation L = bad_digon_presentation(a, b, N, extra), Rp = circle_presentation(a, N);
            r.lhs_label = L.label;
            r.rhs_label = Rp.label;
            r.lhs = rank_of(L);
            r.rhs = rank_of(Rp);
            r.factor = qbinom(N - a, b);
            break;
        }
        case MoyRelation::Assoc: {
            Presentation L = assoc_presentation(a, b, c, N, false, extra), Rp = assoc_presentation(a, b, c, N, true, extra);
            r.lhs_label = L.label;
            r.rhs_label = Rp.label;
            r.lhs = rank_of(L);
            r.rhs = rank_of(Rp);
            r.factor = Laurent::monomial(0);
            Laurent closed = qbinom(N, a + b + c) * qbinom(a + b + c, a) * qbinom(b + c, b);
            r.expected = r.rhs;
            r.ok = r.lhs == r.rhs && r.lhs == closed;
            return r;
        }
    }
    r.expected = r.factor * r.rhs;
    r.ok = r.lhs == r.expected;
    return r;
}

}  // namespace foamlab
