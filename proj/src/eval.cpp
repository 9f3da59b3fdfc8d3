#include "foamlab/eval.hpp"

#include <set>

namespace foamlab {

ShapeFactor shape_factor(const FoamComplex& F, const Coloring& c, int N) {
    ShapeFactor sf;
    int s = 0;
    for (int i = 1; i <= N; ++i) {
        int chi = monochrome_euler(F, c, i);
        if (chi % 2) throw Error(ErrorKind::OddEuler, "monochrome surface " + std::to_string(i) + " has odd Euler characteristic");
        s += i * (chi / 2);
    }
    for (int i = 1; i <= N; ++i)
        for (int j = i + 1; j <= N; ++j) {
            int chi = bichrome_euler(F, c, i, j);
            if (chi % 2)
                throw Error(ErrorKind::OddEuler,
                            "bichrome surface " + std::to_string(i) + "," + std::to_string(j) + " has odd Euler characteristic");
            if (chi) sf.half_chi[{i, j}] = chi / 2;
            for (const Seam& seam : seam_circles(F, c, i, j))
                if (seam.positive) ++s;
        }
    sf.s = s;
    sf.sign = (s % 2 == 0) ? 1 : -1;
    return sf;
}

RatFun apply_shape(const ShapeFactor& sf, MultiPoly numerator) {
    RatFun r(sf.sign > 0 ? std::move(numerator) : -numerator);
    for (auto& [ij, h] : sf.half_chi) r = ratfun_times_difference(std::move(r), ij.first, ij.second, -h);
    return ratfun_normalize(r);
}

RatFun colored_eval(const FoamComplex& F, const Coloring& c, int N, CoefRing R) {
    MultiPoly P = MultiPoly::constant(R, 1).embed(make_alphabet(pigment_vars(N)));
    for (std::size_t f = 0; f < F.facets.size(); ++f) {
        const MultiPoly& d = F.facets[f].decoration;
        if (d.is_constant() && d.constant_term() == 1) continue;
        P *= realize_on(d.ring() == R ? d : d.change_ring(R), c[f], N);
    }
    return apply_shape(shape_factor(F, c, N), std::move(P));
}

RatFun colored_eval_tagged(const FoamComplex& F, const Coloring& c, int N, const MultiPoly& z) {
    Realizer real(F, c, N);
    return apply_shape(shape_factor(F, c, N), real(z));
}

namespace {

EvalResult finish(std::vector<ColoredTerm> terms, int N, CoefRing R, bool breakdown) {
    EvalResult out;
    out.N = N;
    std::vector<RatFun> rs;
    for (auto& t : terms) rs.push_back(t.value);
    RatFun sum = ratfun_sum(rs);
    if (rs.empty()) sum.num = MultiPoly(R);
    if (!sum.is_polynomial()) throw Error(ErrorKind::NotPolynomial, "evaluation leaves a denominator: " + sum.str());
    out.value = sum.num.trimmed();
    if (!is_symmetric_in(out.value.embed(make_alphabet(pigment_vars(N))), pigment_vars(N)))
        throw Error(ErrorKind::NotSymmetric, "evaluation is not symmetric: " + out.value.str());
    if (breakdown) out.terms = std::move(terms);
    return out;
}

}  // namespace

EvalResult evaluate(const FoamComplex& F, int N, CoefRing R, bool breakdown) {
    if (!F.closed) throw Error(ErrorKind::InvalidArgument, "only closed foams can be evaluated");
    std::vector<ColoredTerm> terms;
    for_each_coloring(F, N, [&](const Coloring& c) { terms.push_back({c, colored_eval(F, c, N, R)}); });
    return finish(std::move(terms), N, R, breakdown);
}

EvalResult evaluate_tagged(const FoamComplex& F, int N, const MultiPoly& z, bool breakdown) {
    if (!F.closed) throw Error(ErrorKind::InvalidArgument, "only closed foams can be evaluated");
    std::vector<ColoredTerm> terms;
    for_each_coloring(F, N, [&](const Coloring& c) { terms.push_back({c, colored_eval_tagged(F, c, N, z)}); });
    return finish(std::move(terms), N, z.ring(), breakdown);
}

MultiPoly evaluate_movie(const Movie& m, int N, CoefRing R) {
    FoamComplex F = compile(m);
    for (auto& f : F.facets) f.decoration = f.decoration.change_ring(R);
    return evaluate(F, N, R).value;
}

int pigment_degree(const MultiPoly& q) {
    if (q.is_zero()) return -1;
    if (!q.is_homogeneous()) throw Error(ErrorKind::NonHomogeneous, q.str() + " is not homogeneous");
    return 2 * q.total_degree();
}

int shape_degree(const FoamComplex& F, int N) {
    int d = 0;
    for (const Facet& f : F.facets) d -= f.thickness * (N - f.thickness) * f.chi;
    for (const Binding& b : F.bindings) {
        if (b.circle) continue;
        int a = F.facets[b.thin1].thickness, bb = F.facets[b.thin2].thickness;
        d += a * bb + (a + bb) * (N - a - bb);
    }
    for (const SingularVertex& v : F.vertices) {
        int a = v.thickness[0], b = v.thickness[1], c = v.thickness[2];
        d -= a * b + b * c + a * c + (a + b + c) * (N - a - b - c);
    }
    return d;
}

int degree(const FoamComplex& F, int N) {
    int d = shape_degree(F, N);
    for (const Facet& f : F.facets) d += decoration_degree(f.decoration);
    return d;
}

int move_degree(const BasicMove& m, int N) {
    switch (m.kind) {
        case MoveKind::Cup:
        case MoveKind::Cap: return -m.a * (N - m.a);
        case MoveKind::Saddle: return m.a * (N - m.a);
        case MoveKind::DigonCup:
        case MoveKind::DigonCap: return -m.a * m.b;
        case MoveKind::Zip:
        case MoveKind::Unzip: return m.a * m.b;
        case MoveKind::Decorate: return decoration_degree(m.poly);
        default: return 0;
    }
}

int movie_degree(const Movie& m, int N) {
    int d = 0;
    for (const auto& mv : m.moves) d += move_degree(mv, N);
    return d;
}

MultiPoly coproduct(const MultiPoly& R, Token thin1, Token thin2) {
    std::map<std::string, MultiPoly> s;
    CoefRing K = R.ring();
    for (const auto& v : R.vars()) {
        auto g = parse_generator(v);
        if (!g) throw Error(ErrorKind::InvalidArgument, "not a decoration generator: " + v);
        if (g->family == GenFamily::Global || g->family == GenFamily::Pigment) continue;
        if (g->family != GenFamily::Inner || g->tag) throw Error(ErrorKind::InvalidArgument, "coproduct needs untagged inner generators");
        auto part = [&](Token t, int k) {
            Generator h = *g;
            h.k = k;
            h.tag = t;
            return generator_poly(K, h);
        };
        MultiPoly img(K);
        if (g->kind == SymKind::PowerSum) {
            img = part(thin1, g->k) + part(thin2, g->k);
        } else {
            for (int r = 0; r <= g->k; ++r) img += part(thin1, r) * part(thin2, g->k - r);
        }
        s[v] = img;
    }
    return s.empty() ? R : R.subst(s);
}

namespace {

MultiPoly hatify(const MultiPoly& R) {
    std::map<std::string, MultiPoly> s;
    for (const auto& v : R.vars()) {
        auto g = parse_generator(v);
        if (!g) throw Error(ErrorKind::InvalidArgument, "not a decoration generator: " + v);
        if (g->family != GenFamily::Inner) continue;
        Generator h = *g;
        h.family = GenFamily::Hat;
        s[v] = generator_poly(R.ring(), h);
    }
    return s.empty() ? R : R.subst(s);
}

}  // namespace

GluedBubble glue_bubble(const Movie& m, Token t, const MultiPoly& R, int N, bool plain_side) {
    int L = t.first;
    Slices sl = replay(m);
    if (L < 0 || L >= static_cast<int>(sl.webs.size())) throw Error(ErrorKind::IndexOutOfRange, "no such level");
    const Web& W = sl.webs[L];
    int a = W.edge(t.second).thickness;
    int b = N - a;
    if (b < 1) throw Error(ErrorKind::InvalidArgument, "no room for a bubble on a facet of thickness N");
    MovieBuilder B(W, m.name + "+bubble");
    int c = B.push(make_cup(b))[0];
    if (!R.is_zero() && !(R.is_constant() && R.constant_term() == 1)) B.push(make_decorate(c, R));
    // plain side: the facet is the first thin sheet of the bubble seam
    std::vector<int> z = plain_side ? B.push(make_zip(a, b, t.second, c)) : B.push(make_zip(b, a, c, t.second));
    std::vector<int> u = plain_side ? B.push(make_unzip(a, b, z[2])) : B.push(make_unzip(b, a, z[2]));
    int strand = plain_side ? u[0] : u[1];
    int circle = plain_side ? u[1] : u[0];
    B.push(make_cap(b, circle));
    Movie pre = sub_movie(m, 0, L);
    Movie post = sub_movie(m, L, static_cast<int>(m.moves.size()));
    std::map<int, int> id;
    for (auto& [e, _] : W.edges) id[e] = e;
    MovieMap first = compose_mapped(pre, B.movie(), id);
    std::map<int, int> bnd;
    for (auto& [e, _] : W.edges) bnd[e] = first.second.edges.back().at(e == t.second ? strand : e);
    MovieMap second = compose_mapped(first.movie, post, bnd);
    GluedBubble out;
    out.movie = second.movie;
    out.movie.name = m.name;
    LevelMap post_map = second.second;
    out.token_map = [L, post_map](Token x) -> Token {
        if (x.first <= L) return x;
        int k = x.first - L;
        return {post_map.level.at(k), post_map.edges.at(k).at(x.second)};
    };
    return out;
}

BubbleReport bubble_check(const Movie& m, Token t, const MultiPoly& R, int N, bool plain_side) {
    BubbleReport rep;
    FoamComplex F = compile(m);
    int f = F.facet_of(t);
    int a = F.facets[f].thickness;
    int b = N - a;
    CoefRing K = R.ring();
    if (b == 0) {
        if (!R.is_constant()) {
            rep.ok = false;
            rep.message = "a decoration on an empty complement must be constant";
        }
        return rep;
    }
    int sign = ((b * (b + 1) / 2) % 2 == 0) ? 1 : -1;
    if (!plain_side && (a * b) % 2) sign = -sign;
    GluedBubble G = glue_bubble(m, t, R, N, plain_side);
    FoamComplex FG = compile(G.movie);
    for (auto& x : FG.facets) x.decoration = x.decoration.change_ring(K);
    FoamComplex Fr = F;
    for (auto& x : Fr.facets) x.decoration = x.decoration.change_ring(K);
    Fr.facets[f].decoration *= hatify(R);
    std::map<Coloring, RatFun> rhs;
    for_each_coloring(Fr, N, [&](const Coloring& c) { rhs[c] = colored_eval(Fr, c, N, K); });
    std::size_t seen = 0;
    for_each_coloring(FG, N, [&](const Coloring& cg) {
        if (!rep.ok) return;
        Coloring c(F.facets.size());
        for (std::size_t g = 0; g < F.facets.size(); ++g) c[g] = cg[FG.facet_of(G.token_map(F.facets[g].rep))];
        ++seen;
        RatFun lhs = colored_eval(FG, cg, N, K);
        if (sign < 0) lhs.num = -lhs.num;
        RatFun other = rhs.count(c) ? rhs.at(c) : RatFun(MultiPoly(K));
        other.num = -other.num;
        if (!ratfun_sum({lhs, other}).num.is_zero()) {
            rep.ok = false;
            rep.witness = c;
            rep.message = "bubble relation fails at a coloring: " + lhs.str() + " vs " + (rhs.count(c) ? rhs.at(c).str() : "0");
        }
    });
    if (rep.ok && seen != rhs.size()) {
        rep.ok = false;
        rep.message = "coloring counts differ after gluing";
    }
    return rep;
}

}  // namespace foamlab
