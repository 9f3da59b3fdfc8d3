#include "foamlab/actions.hpp"

#include <set>

#include "foamlab/corpus.hpp"

namespace foamlab {

ActionParams sl2_from_witt(const ActionParams& P) {
    ActionParams Q = P;
    const CoefRing& R = P.ring;
    if (!Q.t1) Q.t1 = R.add(P.nu1.at(1, R), R.norm(P.s));
    if (!Q.t2) Q.t2 = R.add(P.nu2.at(1, R), R.norm(P.s));
    if (!Q.t3) Q.t3 = R.add(P.nu3.at(1, R), R.half());
    return Q;
}

FoamSum canonical(const FoamSum& v) {
    FoamComplex F = compile(v.shape);
    FoamSum out{v.shape, retag(v.z, [&](Token t) { return F.facets[F.facet_of(t)].rep; })};
    return out;
}

FoamSum to_foam_sum(const Movie& m, CoefRing R) {
    Slices sl = replay(m);
    FoamSum v;
    v.shape = undecorated(m);
    v.z = MultiPoly::constant(R, 1);
    int level = 0;
    for (std::size_t k = 0; k < m.moves.size(); ++k) {
        const BasicMove& mv = m.moves[k];
        if (mv.kind != MoveKind::Decorate) {
            ++level;
            continue;
        }
        int th = sl.webs[k].edge(mv.e1).thickness;
        MultiPoly q = mv.poly.ring() == R ? mv.poly : mv.poly.change_ring(R);
        v.z *= tag_decoration(q, {level, mv.e1}, th);
    }
    return canonical(v);
}

namespace {

void require_same_shape(const FoamSum& a, const FoamSum& b) {
    if (!same_movie(a.shape, b.shape)) throw Error(ErrorKind::InvalidArgument, "foam sums over different shapes");
}

MultiPoly in_ring(const MultiPoly& q, const CoefRing& R) { return q.ring() == R ? q : q.change_ring(R); }

std::function<Token(Token)> level_map(const LevelMap& L) {
    return [&L](Token t) { return Token{L.level.at(t.first), L.edges.at(t.first).at(t.second)}; };
}

}  // namespace

FoamSum operator+(const FoamSum& a, const FoamSum& b) {
    require_same_shape(a, b);
    return {a.shape, a.z + in_ring(b.z, a.z.ring())};
}

FoamSum operator-(const FoamSum& a, const FoamSum& b) {
    require_same_shape(a, b);
    return {a.shape, a.z - in_ring(b.z, a.z.ring())};
}

FoamSum scaled(const FoamSum& a, i64 c) { return {a.shape, a.z.scaled(a.z.ring().norm(c))}; }

FoamSum compose(const FoamSum& a, const FoamSum& b) {
    // Equal boundaries glue by edge id; web_isomorphism may pick a symmetry otherwise.
    Web mid = output(a.shape);
    MovieMap mm;
    if (mid == b.shape.input) {
        std::map<int, int> id;
        for (const auto& [e, _] : mid.edges) id[e] = e;
        mm = compose_mapped(a.shape, b.shape, id);
    } else {
        mm = compose_mapped(a.shape, b.shape);
    }
    MultiPoly za = retag(a.z, level_map(mm.first));
    MultiPoly zb = retag(in_ring(b.z, a.z.ring()), level_map(mm.second));
    return canonical({mm.movie, za * zb});
}

FoamSum mirror(const FoamSum& a) {
    MovieMap mm = mirror_mapped(a.shape);
    return canonical({mm.movie, retag(a.z, level_map(mm.first))});
}

std::vector<std::pair<i64, Movie>> expand_terms(const FoamSum& v) {
    std::vector<std::pair<i64, Movie>> out;
    Slices sl = replay(v.shape);
    const CoefRing& R = v.z.ring();
    const auto& vars = v.z.vars();
    std::vector<std::optional<Generator>> gens;
    for (const auto& name : vars) gens.push_back(parse_generator(name));
    for (const auto& [mono, c] : v.z.terms()) {
        std::map<Token, MultiPoly> at;
        MultiPoly global = MultiPoly::constant(R, 1);
        for (std::size_t i = 0; i < mono.size(); ++i) {
            if (!mono[i]) continue;
            if (!gens[i]) throw Error(ErrorKind::InvalidArgument, "not a decoration generator: " + vars[i]);
            Generator g = *gens[i];
            if (!g.tag) {
                global *= generator_poly(R, g).pow(mono[i]);
                continue;
            }
            Token t = *g.tag;
            g.tag.reset();
            auto it = at.try_emplace(t, MultiPoly::constant(R, 1)).first;
            it->second *= generator_poly(R, g).pow(mono[i]);
        }
        if (!global.is_constant()) {
            if (at.empty()) {
                for (std::size_t l = 0; l < sl.webs.size() && at.empty(); ++l)
                    if (!sl.webs[l].edges.empty()) at.emplace(Token{static_cast<int>(l), sl.webs[l].edges.begin()->first}, MultiPoly::constant(R, 1));
                if (at.empty()) throw Error(ErrorKind::InvalidArgument, "no facet to carry the decoration " + global.str());
            }
            at.begin()->second *= global;
        }
        Movie m = v.shape;
        m.moves.clear();
        auto it = at.begin();
        for (std::size_t l = 0; l <= v.shape.moves.size(); ++l) {
            for (; it != at.end() && it->first.first == static_cast<int>(l); ++it)
                m.moves.push_back(make_decorate(it->first.second, it->second));
            if (l < v.shape.moves.size()) m.moves.push_back(v.shape.moves[l]);
        }
        out.emplace_back(c, std::move(m));
    }
    return out;
}

std::string Operator::str() const {
    switch (kind) {
        case OpKind::Witt: return "L:" + std::to_string(n);
        case OpKind::E: return "e";
        case OpKind::H: return "h";
        case OpKind::F: return "f";
        case OpKind::D: return "d";
    }
    return "?";
}

Operator parse_operator(const std::string& s) {
    Operator op;
    if (s == "e") op.kind = OpKind::E;
    else if (s == "h") op.kind = OpKind::H;
    else if (s == "f") op.kind = OpKind::F;
    else if (s == "d") op.kind = OpKind::D;
    else if (s.rfind("L:", 0) == 0) {
        std::size_t used = 0;
        try {
            op.n = std::stoi(s.substr(2), &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used == 0 || used != s.size() - 2) throw Error(ErrorKind::InvalidArgument, "bad operator '" + s + "'");
        if (op.n < -1) throw Error(ErrorKind::IndexOutOfRange, "L_n needs n >= -1");
    } else {
        throw Error(ErrorKind::InvalidArgument, "unknown operator '" + s + "' (expected L:<n>, e, h, f or d)");
    }
    return op;
}

namespace {

// Per-slice images for one shape.
struct Images {
    const FoamComplex& F;
    CoefRing R;

    MultiPoly one() const { return MultiPoly::constant(R, 1); }
    MultiPoly scalar(i64 c) const { return MultiPoly::constant(R, R.norm(c)); }
    int th(int f) const { return F.facets[f].thickness; }

    MultiPoly g(GenFamily fam, int k, int f) const {
        if (k == 0 && fam == GenFamily::Inner) return scalar(th(f));
        Generator x;
        x.family = fam;
        x.kind = SymKind::PowerSum;
        x.k = k;
        x.tag = F.facets[f].rep;
        return generator_poly(R, x);
    }
    MultiPoly p(int k, int f) const { return g(GenFamily::Inner, k, f); }
    MultiPoly hp(int k, int f) const { return g(GenFamily::Hat, k, f); }

    // sum_{k + l = n} p_k(f1) p_l(f2), hats on the second factor when asked
    MultiPoly conv(int n, int f1, int f2, bool hat2) const {
        MultiPoly out(R);
        for (int k = 0; k <= n; ++k) out += p(k, f1) * (hat2 ? hp(n - k, f2) : p(n - k, f2));
        return out;
    }
};

bool needs_half(const FoamComplex& F) {
    for (const auto& s : F.sites)
        if (s.kind == MoveKind::Cup || s.kind == MoveKind::Cap || s.kind == MoveKind::Saddle) return true;
    return false;
}

bool has_saddle_site(const FoamComplex& F) {
    for (const auto& s : F.sites)
        if (s.kind == MoveKind::Saddle) return true;
    return false;
}

void check_spherical(const ActionParams& P, const FoamComplex& F, bool nu3_zero) {
    bool saddle = has_saddle_site(F);
    if (!nu3_zero && (saddle || !P.spherical))
        throw Error(ErrorKind::NonSphericalWithNu3, "nu3 must vanish for non-spherical foams");
    if (saddle && P.spherical) throw Error(ErrorKind::InvalidArgument, "movie contains a saddle but the parameters are spherical");
}

MultiPoly witt_image(int n, const ActionParams& P, const Images& I, const MoveSite& s) {
    const CoefRing& R = P.ring;
    if (n < 0) return MultiPoly(R);
    i64 n1 = P.nu1.at(n, R), n2 = P.nu2.at(n, R), n3 = P.nu3.at(n, R);
    i64 sv = R.norm(P.s), sb = R.sub(1, sv);
    auto thin = [&](i64 c1, i64 c2, i64 cs) {
        return I.p(n, s.thin1) * I.p(0, s.thin2).scaled(c1) + I.p(n, s.thin2) * I.p(0, s.thin1).scaled(c2) +
               I.conv(n, s.thin1, s.thin2, false).scaled(cs);
    };
    auto round = [&](i64 c3, i64 ch) {
        int f = s.facet;
        MultiPoly nu = (I.hp(n, f) * I.p(0, f) - I.hp(0, f) * I.p(n, f)).scaled(c3);
        return nu + I.conv(n, f, f, true).scaled(ch);
    };
    switch (s.kind) {
        case MoveKind::DigonCup: return thin(n1, n2, sv);
        case MoveKind::DigonCap: return thin(R.neg(n1), R.neg(n2), sb);
        case MoveKind::Zip: return thin(n1, n2, R.neg(sb));
        case MoveKind::Unzip: return thin(R.neg(n1), R.neg(n2), R.neg(sv));
        case MoveKind::Cup: return round(n3, R.half());
        case MoveKind::Cap: return round(R.neg(n3), R.half());
        case MoveKind::Saddle: return I.conv(n, s.facet, s.facet, true).scaled(R.neg(R.half()));
        default: return MultiPoly(R);
    }
}

MultiPoly h_image(const ActionParams& P, const Images& I, const MoveSite& s) {
    const CoefRing& R = P.ring;
    i64 t1 = *P.t1, t2 = *P.t2;
    i64 ab = R.norm(static_cast<i64>(s.a) * s.b);
    i64 plain = R.mul(ab, R.add(t1, t2));
    i64 bar = R.mul(ab, R.sub(2, R.add(t1, t2)));
    switch (s.kind) {
        case MoveKind::DigonCup: return I.scalar(plain);
        case MoveKind::DigonCap: return I.scalar(bar);
        case MoveKind::Zip: return I.scalar(R.neg(bar));
        case MoveKind::Unzip: return I.scalar(R.neg(plain));
        case MoveKind::Cup:
        case MoveKind::Cap: return I.hp(0, s.facet).scaled(R.norm(I.th(s.facet)));
        case MoveKind::Saddle: return I.hp(0, s.facet).scaled(R.neg(R.norm(I.th(s.facet))));
        default: return MultiPoly(R);
    }
}

MultiPoly f_image(const ActionParams& P, const Images& I, const MoveSite& s) {
    const CoefRing& R = P.ring;
    i64 t1 = *P.t1, t2 = *P.t2;
    if ((s.kind == MoveKind::Cup || s.kind == MoveKind::Cap) && !P.t3)
        throw Error(ErrorKind::TwoNotInvertible, "t3 defaults to nu3_1 + 1/2; pass t3 explicitly over " + R.name());
    i64 t3 = P.t3.value_or(0);
    auto bar = [&](i64 x) { return R.sub(1, x); };
    auto thin = [&](i64 c1, i64 c2) {
        return I.p(1, s.thin1) * I.p(0, s.thin2).scaled(c1) + I.p(1, s.thin2) * I.p(0, s.thin1).scaled(c2);
    };
    auto round = [&](i64 chat, i64 cin) {
        int f = s.facet;
        return I.hp(1, f) * I.p(0, f).scaled(chat) + I.hp(0, f) * I.p(1, f).scaled(cin);
    };
    switch (s.kind) {
        case MoveKind::DigonCup: return thin(R.neg(t1), R.neg(t2));
        case MoveKind::DigonCap: return thin(R.neg(bar(t1)), R.neg(bar(t2)));
        case MoveKind::Zip: return thin(bar(t1), bar(t2));
        case MoveKind::Unzip: return thin(t1, t2);
        case MoveKind::Cup: return round(R.neg(t3), R.neg(bar(t3)));
        case MoveKind::Cap: return round(R.neg(bar(t3)), R.neg(t3));
        case MoveKind::Saddle: return round(R.half(), R.half());
        default: return MultiPoly(R);
    }
}

}  // namespace

FoamSum act(const Operator& op, const ActionParams& P0, const FoamSum& v) {
    const CoefRing& R = P0.ring;
    FoamComplex F = compile(v.shape);
    Images I{F, R};
    MultiPoly z = in_ring(v.z, R);
    ActionParams P = P0;
    auto thickness = [&](std::optional<Token> t) {
        if (!t) throw Error(ErrorKind::InvalidArgument, "facet generator without a facet");
        return F.facets[F.facet_of(*t)].thickness;
    };
    MultiPoly out(R);
    switch (op.kind) {
        case OpKind::Witt: {
            check_spherical(P, F, P.nu3.is_zero());
            if (op.n >= 0 && needs_half(F)) R.half();
            for (const auto& s : F.sites) out += witt_image(op.n, P, I, s);
            out *= z;
            out += decoration_witt(op.n, z, thickness);
            break;
        }
        case OpKind::E: out = decoration_witt(-1, z, thickness); break;
        case OpKind::H:
        case OpKind::F:
        case OpKind::D: {
            if (op.kind == OpKind::D) {
                if (!R.is_field()) throw Error(ErrorKind::WrongRing, "the differential needs a prime field");
                if (R.p == 2 && has_saddle_site(F))
                    throw Error(ErrorKind::CharTwoNonSpherical, "saddles need p > 2");
            }
            bool saddle = has_saddle_site(F);
            if (saddle && P.spherical) throw Error(ErrorKind::InvalidArgument, "movie contains a saddle but the parameters are spherical");
            if (!P.spherical) {
                if (!P.nu3.is_zero()) throw Error(ErrorKind::NonSphericalWithNu3, "nu3 must vanish for non-spherical foams");
                if (P.t3 && *P.t3 != R.half()) throw Error(ErrorKind::NonSphericalWithNu3, "t3 must be 1/2 for non-spherical foams");
            }
            if (!P.t3 && !R.invertible(2)) {
                // t3 stays unset; only cups and caps under f need it
                ActionParams Q = P;
                Q.t3 = 0;
                Q = sl2_from_witt(Q);
                Q.t3.reset();
                P = Q;
            } else {
                P = sl2_from_witt(P);
            }
            bool h = op.kind == OpKind::H;
            for (const auto& s : F.sites) out += h ? h_image(P, I, s) : f_image(P, I, s);
            out *= z;
            if (h) out += decoration_witt(0, z, thickness).scaled(2);
            else out -= decoration_witt(1, z, thickness);
            break;
        }
    }
    return {v.shape, out};
}

FoamSum act_witt(int n, const ActionParams& P, const Movie& m) {
    Operator op;
    op.kind = OpKind::Witt;
    op.n = n;
    return act(op, P, to_foam_sum(m, P.ring));
}

FoamSum act_sl2(OpKind g, const ActionParams& P, const Movie& m) {
    if (g == OpKind::Witt) throw Error(ErrorKind::InvalidArgument, "act_sl2 takes e, h or f");
    Operator op;
    op.kind = g;
    return act(op, P, to_foam_sum(m, P.ring));
}

FoamSum act_pdg(const Movie& m, const ActionParams& P, int iterate) {
    if (!P.ring.is_field()) throw Error(ErrorKind::WrongRing, "the differential needs a prime field");
    if (iterate < 0) throw Error(ErrorKind::InvalidArgument, "negative iterate");
    Operator op;
    op.kind = OpKind::D;
    FoamSum v = to_foam_sum(m, P.ring);
    for (int i = 0; i < iterate; ++i) v = act(op, P, v);
    return v;
}

std::vector<int> isotopy_levels(const Movie& m) {
    std::vector<int> out;
    for (std::size_t k = 0; k < m.moves.size(); ++k)
        if (m.moves[k].kind == MoveKind::Isotopy) out.push_back(static_cast<int>(k) + 1);
    return out;
}

bool vanishes_on_colorings(const FoamSum& v, int N) {
    if (v.z.is_zero()) return true;
    FoamComplex F = compile(v.shape);
    bool zero = true;
    for_each_coloring(F, N, [&](const Coloring& c) {
        if (!zero) return;
        Realizer real(F, c, N);
        if (!real(v.z).is_zero()) zero = false;
    });
    return zero;
}

Movie basic_foam(MoveKind k, int a, int b, int c) {
    MovieBuilder B;
    auto finish = [&](const BasicMove& mv) {
        B.push(mv);
        const Movie& m = B.movie();
        int K = level_count(m);
        Movie out = sub_movie(m, K - 1, K);
        out.name = move_name(k);
        return out;
    };
    switch (k) {
        case MoveKind::Isotopy: {
            int e = B.push(make_cup(a))[0];
            (void)e;
            return finish(BasicMove{});
        }
        case MoveKind::Decorate: {
            int e = B.push(make_cup(a))[0];
            CoefRing Z = CoefRing::integers();
            MultiPoly d = gen(Z, GenFamily::Inner, SymKind::PowerSum, 2) * gen(Z, GenFamily::Inner, SymKind::Elementary, 1) +
                          gen(Z, GenFamily::Hat, SymKind::Complete, 2) + gen(Z, GenFamily::Pigment, SymKind::PowerSum, 1) * gen(Z, GenFamily::Inner, SymKind::PowerSum, 1);
            return finish(make_decorate(e, d));
        }
        case MoveKind::Cup: return finish(make_cup(a));
        case MoveKind::Cap: return finish(make_cap(a, B.push(make_cup(a))[0]));
        case MoveKind::Saddle: {
            int e = B.push(make_cup(a))[0];
            if (b == 2) return finish(make_saddle(a, e, B.push(make_cup(a))[0]));
            return finish(make_saddle(a, e, e));
        }
        case MoveKind::DigonCup: return finish(make_digon_cup(a, b, B.push(make_cup(a + b))[0]));
        case MoveKind::DigonCap: {
            auto d = B.push(make_digon_cup(a, b, B.push(make_cup(a + b))[0]));
            return finish(make_digon_cap(a, b, d[1], d[2]));
        }
        case MoveKind::Zip: {
            int e1 = B.push(make_cup(a))[0];
            int e2 = B.push(make_cup(b))[0];
            return finish(make_zip(a, b, e1, e2));
        }
        case MoveKind::Unzip: {
            int e1 = B.push(make_cup(a))[0];
            int e2 = B.push(make_cup(b))[0];
            auto z = B.push(make_zip(a, b, e1, e2));
            return finish(make_unzip(a, b, z[2]));
        }
        case MoveKind::Coassoc: {
            auto d = B.push(make_digon_cup(a, b + c, B.push(make_cup(a + b + c))[0]));
            auto x = B.push(make_digon_cup(b, c, d[2]));
            return finish(make_coassoc(x[0]));
        }
        case MoveKind::Assoc: {
            auto d = B.push(make_digon_cup(a + b, c, B.push(make_cup(a + b + c))[0]));
            auto x = B.push(make_digon_cup(a, b, d[1]));
            return finish(make_assoc(x[3]));
        }
    }
    throw Error(ErrorKind::InvalidArgument, "unknown move kind");
}

std::vector<Movie> basic_foams(int max_thickness, bool saddles) {
    std::vector<Movie> out;
    for (int a = 1; a <= max_thickness; ++a) {
        for (MoveKind k : {MoveKind::Isotopy, MoveKind::Decorate, MoveKind::Cup, MoveKind::Cap}) out.push_back(basic_foam(k, a));
        if (saddles) {
            out.push_back(basic_foam(MoveKind::Saddle, a, 1));
            out.push_back(basic_foam(MoveKind::Saddle, a, 2));
        }
        for (int b = 1; a + b <= max_thickness; ++b) {
            for (MoveKind k : {MoveKind::DigonCup, MoveKind::DigonCap, MoveKind::Zip, MoveKind::Unzip}) out.push_back(basic_foam(k, a, b));
            for (int c = 1; a + b + c <= max_thickness; ++c) {
                out.push_back(basic_foam(MoveKind::Assoc, a, b, c));
                out.push_back(basic_foam(MoveKind::Coassoc, a, b, c));
            }
        }
    }
    return out;
}

namespace {

int check_pigments(const Movie& m) { return compile(m).max_thickness() + 2; }

CheckReport zero_report(const FoamSum& d, int N, const std::string& what) {
    CheckReport r;
    r.difference = d.z;
    r.ok = vanishes_on_colorings(d, N);
    r.message = r.ok ? what + " holds" : what + " fails: " + d.z.str();
    return r;
}

Operator W(int n) {
    Operator op;
    op.n = n;
    return op;
}

Operator S(OpKind k) {
    Operator op;
    op.kind = k;
    return op;
}

}  // namespace

CheckReport commutator_check(int n, int m, const ActionParams& P, const Movie& basic) {
    FoamSum v = to_foam_sum(basic, P.ring);
    FoamSum lhs = act(W(n), P, act(W(m), P, v)) - act(W(m), P, act(W(n), P, v));
    FoamSum d = n + m >= -1 ? lhs - scaled(act(W(n + m), P, v), n - m) : lhs;
    return zero_report(d, check_pigments(basic),
                       "[L_" + std::to_string(n) + ", L_" + std::to_string(m) + "] on " + basic.name);
}

CheckReport sl2_check(const ActionParams& P, const Movie& basic) {
    FoamSum v = to_foam_sum(basic, P.ring);
    Operator e = S(OpKind::E), f = S(OpKind::F), h = S(OpKind::H);
    auto br = [&](const Operator& x, const Operator& y) { return act(x, P, act(y, P, v)) - act(y, P, act(x, P, v)); };
    int N = check_pigments(basic);
    CheckReport r = zero_report(br(e, f) - act(h, P, v), N, "[e,f] = h on " + basic.name);
    if (!r.ok) return r;
    r = zero_report(br(h, e) - scaled(act(e, P, v), 2), N, "[h,e] = 2e on " + basic.name);
    if (!r.ok) return r;
    r = zero_report(br(h, f) + scaled(act(f, P, v), 2), N, "[h,f] = -2f on " + basic.name);
    if (r.ok) r.message = "sl2 relations hold on " + basic.name;
    return r;
}

CheckReport verify_compat(const Movie& Fm, int n, const ActionParams& P, int N) {
    CheckReport r;
    if (!is_closed(Fm)) throw Error(ErrorKind::InvalidArgument, "compatibility needs a closed foam");
    const CoefRing& R = P.ring;
    Alphabet X = make_alphabet(pigment_vars(N));
    FoamSum v = to_foam_sum(Fm, R);
    FoamSum Lv = act(W(n), P, v);
    MultiPoly lhs = evaluate_tagged(compile(Lv.shape), N, Lv.z).value.embed(X);
    MultiPoly base = evaluate_movie(Fm, N, R).embed(X);
    MultiPoly rhs = witt_act(n, base, pigment_vars(N)).embed(X);
    r.difference = lhs - rhs;
    if (!r.difference.is_zero()) {
        r.ok = false;
        r.message = "<L_" + std::to_string(n) + " F> = " + lhs.str() + " but L_" + std::to_string(n) + " <F> = " + rhs.str();
        return r;
    }
    if (n == 0 && !base.is_zero()) {
        int deg = degree(compile(Fm), N);
        MultiPoly expect = deg % 2 ? MultiPoly(R) : base.scaled(R.norm(-deg / 2));
        r.difference = lhs - expect.embed(X);
        if (!r.difference.is_zero()) {
            r.ok = false;
            r.message = "L_0 eigenvalue differs from -deg/2 = " + std::to_string(-deg / 2);
            return r;
        }
    }
    r.message = "compatible for L_" + std::to_string(n);
    return r;
}

Residuals table_residuals(const LocalCounts& lc, int n, const ActionParams& P) {
    const CoefRing& R = P.ring;
    int N = lc.N;
    i64 n1 = P.nu1.at(n, R), n2 = P.nu2.at(n, R), n3 = P.nu3.at(n, R);
    i64 sv = R.norm(P.s), sb = R.sub(1, sv), half = R.half();
    Residuals out;
    auto mul = [&](i64 c, int k) { return R.mul(c, R.norm(k)); };
    for (int i = 1; i <= N; ++i) {
        i64 r = 0;
        for (int j = 1; j <= N; ++j) {
            if (j == i) continue;
            const PairCounts &x = lc.at(i, j), &y = lc.at(j, i);
            r = R.add(r, mul(n1, x.V + x.Z - x.Lambda - x.Y));
            r = R.add(r, mul(n2, y.V + y.Z - y.Lambda - y.Y));
            r = R.add(r, mul(n3, x.A - y.A - x.U + y.U));
        }
        out.r_i.push_back(r);
    }
    for (int i = 1; i <= N; ++i)
        for (int j = i + 1; j <= N; ++j) {
            const PairCounts &x = lc.at(i, j), &y = lc.at(j, i);
            i64 r = mul(sv, x.V + y.V - x.Y - y.Y);
            r = R.add(r, mul(sb, x.Lambda + y.Lambda - x.Z - y.Z));
            r = R.add(r, mul(half, x.U + y.U + x.A + y.A - x.S - y.S));
            out.r_ij[{i, j}] = r;
        }
    return out;
}

}  // namespace foamlab
