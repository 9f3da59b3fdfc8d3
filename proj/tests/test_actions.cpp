#include <random>

#include "doctest.h"
#include "foamlab/actions.hpp"
#include "foamlab/corpus.hpp"

using namespace foamlab;

namespace {

const CoefRing ZZ = CoefRing::integers();
const CoefRing BIG = CoefRing::prime(kBigPrime);

MultiPoly var(const CoefRing& R, const std::string& s) { return MultiPoly::variable(R, s); }

ActionParams random_pack(std::mt19937_64& rng, CoefRing R, bool spherical) {
    std::uniform_int_distribution<i64> d(-50, 50);
    ActionParams P;
    P.ring = R;
    P.s = d(rng);
    P.nu1 = WittSequence::linear(d(rng));
    P.nu2 = WittSequence::linear(d(rng));
    P.nu3 = spherical ? WittSequence::linear(d(rng)) : WittSequence::zero();
    P.spherical = spherical;
    return P;
}

ActionParams random_sl2(std::mt19937_64& rng, CoefRing R) {
    std::uniform_int_distribution<i64> d(-50, 50);
    ActionParams P;
    P.ring = R;
    P.t1 = R.norm(d(rng));
    P.t2 = R.norm(d(rng));
    P.t3 = R.norm(d(rng));
    return P;
}

bool equal_sums(const FoamSum& a, const FoamSum& b) { return (a - b).z.is_zero(); }

Movie dotted_sphere(int a, const MultiPoly& dec) {
    MovieBuilder b;
    int c = b.push(make_cup(a))[0];
    b.push(make_decorate(c, dec));
    b.push(make_cap(a, c));
    return b.movie();
}

}  // namespace

TEST_CASE("sl2 parameters from Witt parameters") {
    ActionParams P;
    P.ring = CoefRing::prime(7);
    ActionParams Q = sl2_from_witt(P);
    CHECK(*Q.t1 == 0);
    CHECK(*Q.t2 == 0);
    CHECK(*Q.t3 == 4);  // 1/2 mod 7
    P.s = 3;
    P.nu1 = WittSequence::linear(2);
    Q = sl2_from_witt(P);
    CHECK(*Q.t1 == 0);  // 2*2 + 3 = 7
    CHECK(*Q.t2 == 3);
    ActionParams Z;
    CHECK_THROWS_AS(sl2_from_witt(Z), Error);
}

TEST_CASE("operator names") {
    CHECK(parse_operator("L:3").n == 3);
    CHECK(parse_operator("L:-1").n == -1);
    CHECK(parse_operator("f").kind == OpKind::F);
    CHECK(parse_operator("L:2").str() == "L:2");
    CHECK_THROWS_AS(parse_operator("L:-2"), Error);
    CHECK_THROWS_AS(parse_operator("L:x"), Error);
    CHECK_THROWS_AS(parse_operator("g"), Error);
}

TEST_CASE("foam sums") {
    MovieBuilder b;
    int c = b.push(make_cup(2))[0];
    b.push(make_decorate(c, var(ZZ, "p1")));
    auto d = b.push(make_digon_cup(1, 1, c));
    b.push(make_decorate(d[1], var(ZZ, "e1")));
    auto e = b.push(make_digon_cap(1, 1, d[1], d[2]));
    b.push(make_decorate(e[0], var(ZZ, "p1") * var(ZZ, "P1") + MultiPoly::constant(ZZ, 3)));
    b.push(make_cap(2, e[0]));
    FoamSum v = to_foam_sum(b.movie(), ZZ);
    CHECK(v.shape.moves.size() == 4);
    // p1 twice on the thick facet, merged into one generator
    bool squared = false;
    for (auto& [m, coef] : v.z.terms())
        for (int x : m) squared |= x == 2;
    CHECK(squared);
    auto terms = expand_terms(v);
    CHECK(terms.size() == v.z.size());
    FoamSum back{v.shape, MultiPoly(ZZ)};
    for (auto& [coef, mv] : terms) back = back + scaled(to_foam_sum(mv, ZZ), coef);
    CHECK(equal_sums(back, v));
    CHECK(evaluate_tagged(compile(v.shape), 3, v.z).value == evaluate_movie(b.movie(), 3));
    FoamSum mm = mirror(mirror(v));
    CHECK(evaluate_tagged(compile(mm.shape), 3, mm.z).value == evaluate_movie(b.movie(), 3));
}

TEST_CASE("Witt images on single basic foams") {
    ActionParams P;
    P.ring = BIG;
    P.s = 5;
    P.nu1 = WittSequence::linear(2);
    P.nu2 = WittSequence::linear(3);
    P.nu3 = WittSequence::linear(7);
    CHECK(act_witt(-1, P, basic_foam(MoveKind::Cup, 1)).is_zero());
    for (MoveKind k : {MoveKind::Assoc, MoveKind::Coassoc, MoveKind::Isotopy})
        for (int n = -1; n <= 3; ++n) CHECK(act_witt(n, P, basic_foam(k)).is_zero());

    // decorated facet: L_n acts on the decoration
    Movie dec = basic_foam(MoveKind::Decorate, 2);
    FoamSum v = to_foam_sum(dec, BIG);
    FoamComplex F = compile(v.shape);
    for (int n = -1; n <= 3; ++n) {
        MultiPoly expect = decoration_witt(n, v.z, [&](std::optional<Token>) { return 2; });
        CHECK(act_witt(n, P, dec).z == expect);
    }

    // digon cup, a = 1, b = 2: nu1 b p_1(thin1) + nu2 a p_1(thin2) + s (b p_1(thin1) + a p_1(thin2))
    Movie dc = basic_foam(MoveKind::DigonCup, 1, 2);
    FoamSum w = act_witt(1, P, dc);
    FoamComplex G = compile(w.shape);
    const MoveSite& s = G.sites[0];
    auto tag = [&](const std::string& g, int f) {
        Token t = G.facets[f].rep;
        return var(BIG, g + "@" + std::to_string(t.first) + "." + std::to_string(t.second));
    };
    MultiPoly expect = tag("p1", s.thin1).scaled(4 * 2 + 5 * 2) + tag("p1", s.thin2).scaled(6 * 1 + 5);
    CHECK(w.z == expect);
}

TEST_CASE("Witt action on the associativity then digon-cap composite") {
    // coassoc and assoc bring two 1-edges next to each other, the digon cap closes them
    MovieBuilder b;
    int c = b.push(make_cup(3))[0];
    auto d = b.push(make_digon_cup(1, 2, c));
    auto x = b.push(make_digon_cup(1, 1, d[2]));
    Movie pre = b.movie();
    MovieBuilder m(b.current(), "assoc_cap");
    m.push(make_coassoc(x[0]));
    auto y = m.push(make_coassoc(x[3]));
    // the digon is now formed by the two thickness-1 edges between the new vertices
    const Web& w = m.current();
    int l = -1, r = -1;
    for (auto& [id, v] : w.vertices)
        if (v.kind == VertexKind::Split && w.edge(v.thin1).thickness == 1 && w.edge(v.thin2).thickness == 1) l = v.thin1, r = v.thin2;
    REQUIRE(l >= 0);
    (void)y;
    m.push(make_digon_cap(1, 1, l, r));
    ActionParams P;
    P.ring = BIG;
    P.s = 4;
    P.nu1 = WittSequence::linear(2);
    P.nu2 = WittSequence::linear(9);
    FoamSum v = act_witt(1, P, m.movie());
    FoamComplex F = compile(v.shape);
    REQUIRE(F.sites.size() == 3);
    const MoveSite& s = F.sites[2];
    auto tag = [&](int f) {
        Token t = F.facets[f].rep;
        return var(BIG, "p1@" + std::to_string(t.first) + "." + std::to_string(t.second));
    };
    // -nu1_1 p_1(C) - nu2_1 p_1(D) + sbar (p_1(C) + p_1(D)), nothing from the (co)associativity slices
    i64 sb = 1 - 4;
    MultiPoly expect = tag(s.thin1).scaled(BIG.norm(-4 + sb)) + tag(s.thin2).scaled(BIG.norm(-18 + sb));
    CHECK(v.z == expect);
    (void)pre;
}

TEST_CASE("Witt bracket on every basic foam") {
    std::mt19937_64 rng(11);
    auto spherical = basic_foams(3, false);
    auto all = basic_foams(2, true);
    for (int pack = 0; pack < 3; ++pack) {
        ActionParams P = random_pack(rng, BIG, true);
        ActionParams Q = random_pack(rng, BIG, false);
        for (int n = -1; n <= 3; ++n)
            for (int m = -1; m <= 3; ++m) {
                for (const Movie& f : spherical) {
                    CheckReport r = commutator_check(n, m, P, f);
                    CHECK_MESSAGE(r.ok, r.message);
                }
                for (const Movie& f : all) {
                    CheckReport r = commutator_check(n, m, Q, f);
                    CHECK_MESSAGE(r.ok, r.message);
                }
            }
    }
}

TEST_CASE("sl2 relations on basic foams") {
    std::mt19937_64 rng(12);
    for (int pack = 0; pack < 3; ++pack) {
        ActionParams P = random_sl2(rng, BIG);
        for (const Movie& f : basic_foams(3, false)) {
            CheckReport r = sl2_check(P, f);
            CHECK_MESSAGE(r.ok, r.message);
        }
        // integer parameters, no 1/2 anywhere
        ActionParams Z = random_sl2(rng, ZZ);
        for (const Movie& f : basic_foams(3, false)) {
            CheckReport r = sl2_check(Z, f);
            CHECK_MESSAGE(r.ok, r.message);
        }
        ActionParams S;
        S.ring = BIG;
        S.spherical = false;
        S.t1 = BIG.norm(static_cast<i64>(rng() % 100));
        S.t2 = BIG.norm(static_cast<i64>(rng() % 100));
        for (const Movie& f : basic_foams(2, true)) {
            CheckReport r = sl2_check(S, f);
            CHECK_MESSAGE(r.ok, r.message);
        }
    }
}

TEST_CASE("sl2 from the Witt dictionary") {
    std::mt19937_64 rng(13);
    for (int pack = 0; pack < 3; ++pack) {
        ActionParams P = sl2_from_witt(random_pack(rng, BIG, true));
        for (const Movie& f : basic_foams(3, false)) {
            CHECK(equal_sums(act_sl2(OpKind::E, P, f), act_witt(-1, P, f)));
            CHECK(equal_sums(act_sl2(OpKind::H, P, f), scaled(act_witt(0, P, f), 2)));
            CHECK(equal_sums(act_sl2(OpKind::F, P, f), scaled(act_witt(1, P, f), -1)));
        }
    }
}

TEST_CASE("sl2 images of single basic foams") {
    ActionParams P;
    P.ring = ZZ;
    P.t1 = 3;
    P.t2 = 5;
    P.t3 = 7;
    Movie z = basic_foam(MoveKind::Zip, 1, 2);
    FoamSum hz = act_sl2(OpKind::H, P, z);
    // -ab (t1bar + t2bar) = -2 (-2 - 4)
    CHECK(hz.z == MultiPoly::constant(ZZ, 12));
    CHECK(act_sl2(OpKind::E, P, basic_foam(MoveKind::Assoc)).is_zero());
    FoamSum fc = act_sl2(OpKind::F, P, basic_foam(MoveKind::Cup, 2));
    FoamComplex F = compile(fc.shape);
    Token t = F.facets[0].rep;
    std::string sfx = "@" + std::to_string(t.first) + "." + std::to_string(t.second);
    // -t3 a hat(p1) - t3bar hat(p0) p1
    MultiPoly expect = var(ZZ, "hp1" + sfx).scaled(-7 * 2) + (var(ZZ, "hp0" + sfx) * var(ZZ, "p1" + sfx)).scaled(6);
    CHECK(fc.z == expect);
    // h on a cup is a(N - a)
    FoamSum hc = act_sl2(OpKind::H, P, basic_foam(MoveKind::Cup, 2));
    CHECK(hc.z == var(ZZ, "hp0" + sfx).scaled(2));
}

TEST_CASE("errors for non-spherical parameters and rings") {
    ActionParams P;
    P.ring = BIG;
    P.nu3 = WittSequence::linear(1);
    Movie sad = basic_foam(MoveKind::Saddle, 1);
    P.spherical = false;
    try {
        act_witt(1, P, sad);
        FAIL("expected NonSphericalWithNu3");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::NonSphericalWithNu3);
    }
    P.spherical = true;
    CHECK_THROWS_AS(act_witt(1, P, sad), Error);
    ActionParams Z;
    try {
        act_witt(1, Z, basic_foam(MoveKind::Cup, 1));
        FAIL("expected TwoNotInvertible");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::TwoNotInvertible);
    }
    CHECK_NOTHROW(act_witt(-1, Z, basic_foam(MoveKind::Cup, 1)));
    CHECK_NOTHROW(act_witt(2, Z, basic_foam(MoveKind::DigonCup, 1, 1)));
    ActionParams F2;
    F2.ring = CoefRing::prime(2);
    F2.spherical = false;
    try {
        act_pdg(sad, F2);
        FAIL("expected CharTwoNonSpherical");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::CharTwoNonSpherical);
    }
    CHECK_THROWS_AS(act_pdg(basic_foam(MoveKind::Cup, 1), Z), Error);
}

TEST_CASE("p-DG differential") {
    std::mt19937_64 rng(14);
    for (i64 p : {2, 3, 5}) {
        CoefRing R = CoefRing::prime(p);
        ActionParams P;
        P.ring = R;
        P.t1 = static_cast<i64>(rng() % p);
        P.t2 = static_cast<i64>(rng() % p);
        P.t3 = static_cast<i64>(rng() % p);
        CHECK(act_pdg(basic_foam(MoveKind::Assoc), P).is_zero());
        for (const Movie& f : basic_foams(p == 2 ? 3 : 2, false)) {
            FoamSum v = act_pdg(f, P, static_cast<int>(p));
            CHECK_MESSAGE(vanishes_on_colorings(v, 4), (f.name + " p=" + std::to_string(p) + ": " + v.z.str()));
        }
        if (p > 2) {
            ActionParams S = P;
            S.spherical = false;
            S.t3.reset();
            for (const Movie& f : basic_foams(2, true)) {
                FoamSum v = act_pdg(f, S, static_cast<int>(p));
                CHECK_MESSAGE(vanishes_on_colorings(v, 4), (f.name + " p=" + std::to_string(p)));
            }
        }
    }
    // d^j x = j! x^{j+1} on a pigment decoration
    CoefRing R = CoefRing::prime(7);
    ActionParams P;
    P.ring = R;
    P.t1 = P.t2 = 0;
    P.t3 = 1;
    Movie iso = basic_foam(MoveKind::Isotopy, 1);
    MovieBuilder b(iso.input);
    b.push(make_decorate(iso.input.edges.begin()->first, var(R, "X1")));
    FoamSum v = act_pdg(b.movie(), P, 3);
    CHECK(v.z == MultiPoly::monomial(R, "X1", 4, 6));
}

TEST_CASE("compatibility with evaluation on the corpus") {
    auto corpus = standard_corpus();
    std::mt19937_64 rng(15);
    int spherical = 0, saddles = 0;
    for (const auto& e : corpus) {
        ActionParams P = random_pack(rng, BIG, e.spherical);
        for (int n = -1; n <= 3; ++n) {
            CheckReport r = verify_compat(e.movie, n, P, e.N);
            CHECK_MESSAGE(r.ok, (e.movie.name + ": " + r.message));
        }
        (e.spherical ? spherical : saddles)++;
    }
    CHECK(spherical >= 50);
    CHECK(saddles >= 20);
    ActionParams P = random_pack(rng, BIG, true);
    CHECK(verify_compat(dotted_sphere(1, var(ZZ, "p1")), 1, P, 2).ok);
}

TEST_CASE("residual bookkeeping per coloring") {
    auto corpus = standard_corpus();
    std::mt19937_64 rng(16);
    for (const auto& e : corpus) {
        FoamComplex F = compile(undecorated(e.movie));
        ActionParams P = random_pack(rng, BIG, e.spherical);
        int n = static_cast<int>(rng() % 4);
        for_each_coloring(F, e.N, [&](const Coloring& c) {
            LocalCounts lc = tally_counts(F, c, e.N);
            Residuals r = table_residuals(lc, n, P);
            for (i64 x : r.r_i) CHECK(x == 0);
            for (auto& [ij, x] : r.r_ij) CHECK(BIG.add(x, x) == BIG.norm(bichrome_euler(F, c, ij.first, ij.second)));
        });
    }
}

TEST_CASE("Leibniz rule and grading") {
    auto corpus = standard_corpus(7, 30, 10);
    std::mt19937_64 rng(17);
    for (const auto& e : corpus) {
        int K = level_count(e.movie);
        if (K < 2) continue;
        int cut = 1 + static_cast<int>(rng() % (K - 1));
        Movie a = sub_movie(e.movie, 0, cut), b = sub_movie(e.movie, cut, K);
        ActionParams P = random_pack(rng, BIG, e.spherical);
        FoamSum va = to_foam_sum(a, BIG), vb = to_foam_sum(b, BIG);
        for (int n = -1; n <= 2; ++n) {
            Operator op;
            op.n = n;
            FoamSum whole = act(op, P, compose(va, vb));
            FoamSum parts = compose(act(op, P, va), vb) + compose(va, act(op, P, vb));
            CHECK(equal_sums(whole, parts));
            int d0 = movie_degree(e.movie, e.N);
            for (auto& [c, m] : expand_terms(act_witt(n, P, e.movie))) CHECK(movie_degree(m, e.N) == d0 + 2 * n);
        }
    }
}
