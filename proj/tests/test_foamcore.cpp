#include <random>
#include <set>

#include "doctest.h"
#include "foamlab/coloring.hpp"
#include "foamlab/corpus.hpp"

using namespace foamlab;

namespace {

Movie sphere(int a = 1) {
    MovieBuilder b;
    int c = b.push(make_cup(a))[0];
    b.push(make_cap(a, c));
    return b.movie();
}

Movie theta(int a, int b) {
    MovieBuilder B;
    int c = B.push(make_cup(a + b))[0];
    auto d = B.push(make_digon_cup(a, b, c));
    auto e = B.push(make_digon_cap(a, b, d[1], d[2]));
    B.push(make_cap(a + b, e[0]));
    return B.movie();
}

Web merge_web() {
    // two thin edges merging into a thick one that splits again: a closed theta web
    Web w;
    w.edges[0] = {1, 1, 0, 1};
    w.edges[1] = {1, 1, 0, 1};
    w.edges[2] = {2, 0, 1, 1};
    w.vertices[0] = {VertexKind::Merge, 2, 0, 1};
    w.vertices[1] = {VertexKind::Split, 2, 0, 1};
    return w;
}

int binomial(int n, int k) {
    int r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

}  // namespace

TEST_CASE("web validation") {
    Web circle;
    circle.edges[0] = {3, -1, -1, 1};
    CHECK(validate_web(circle).ok);
    CHECK(validate_web(merge_web()).ok);
    Web bad = merge_web();
    bad.edges[2].thickness = 3;
    auto d = validate_web(bad);
    CHECK_FALSE(d.ok);
    CHECK(d.kind == ErrorKind::FlowViolation);
    Web dangling;
    dangling.edges[0] = {1, 0, 5, 1};
    CHECK_FALSE(validate_web(dangling).ok);
}

TEST_CASE("apply_move local models") {
    Web w;
    auto r = apply_move(w, make_cup(2));
    REQUIRE(r.web.edges.size() == 1);
    CHECK(r.web.edges.begin()->second.thickness == 2);
    CHECK(r.web.edges.begin()->second.is_circle());

    // digon cup on a non-circle 2-edge
    auto r2 = apply_move(merge_web(), make_digon_cup(1, 1, 2));
    CHECK(r2.web.vertices.size() == 4);
    int ones = 0;
    for (auto& [id, e] : r2.web.edges) ones += e.thickness == 1;
    CHECK(ones == 4);
    CHECK(r2.consumed == std::vector<int>{2});
    CHECK(r2.created.size() == 4);

    // the two thin edges of a theta web run in parallel only in one order
    CHECK_NOTHROW(apply_move(merge_web(), make_zip(1, 1, 0, 1)));
    CHECK_THROWS_AS(apply_move(merge_web(), make_zip(1, 2, 0, 2)), Error);
    try {
        apply_move(merge_web(), make_zip(1, 1, 1, 0));
        FAIL("zip on non-parallel edges must fail");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::PatternMismatch);
    }
    CHECK_THROWS_AS(apply_move(w, make_cap(1, 0)), Error);
    CHECK_THROWS_AS(apply_move(r.web, make_cap(1, r.created[0])), Error);
}

TEST_CASE("moves preserve validity and mirror back") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 40; ++trial) {
        MovieBuilder B;
        for (int step = 0; step < 5; ++step) {
            auto cands = candidate_moves(B.current(), 3, true);
            if (cands.empty()) break;
            B.push(cands[std::uniform_int_distribution<std::size_t>(0, cands.size() - 1)(rng)]);
            CHECK(validate_web(B.current()).ok);
        }
        Movie m = B.movie();
        Movie mm = mirror(mirror(m));
        CHECK(same_movie(mm, m));
        CHECK(web_isomorphism(output(mirror(m)), m.input).has_value());
        CHECK(mirror(m).moves.size() == m.moves.size());
    }
}

TEST_CASE("movie algebra") {
    MovieBuilder b;
    b.push(make_cup(1));
    Movie cup = b.movie();
    Movie cap = mirror(cup);
    REQUIRE(cap.moves.size() == 1);
    CHECK(cap.moves[0].kind == MoveKind::Cap);
    CHECK(cap.moves[0].a == 1);
    Movie s = compose(cup, cap);
    CHECK(is_closed(s));
    CHECK(s.moves.size() == 2);
    try {
        compose(cup, cup);
        FAIL("boundary mismatch expected");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::BoundaryMismatch);
    }
    // mirror swaps every kind and keeps decorations
    MovieBuilder t;
    int c = t.push(make_cup(2))[0];
    auto d = t.push(make_digon_cup(1, 1, c));
    t.push(make_decorate(d[1], MultiPoly::variable(CoefRing::integers(), "p1")));
    auto z = t.push(make_unzip(1, 1, d[0]) );
    (void)z;
    Movie m = t.movie();
    Movie mi = mirror(m);
    std::vector<MoveKind> kinds;
    for (auto& mv : mi.moves) kinds.push_back(mv.kind);
    CHECK(kinds == std::vector<MoveKind>{MoveKind::Zip, MoveKind::Decorate, MoveKind::DigonCap, MoveKind::Cap});
}

TEST_CASE("compile: sphere, theta, saddles") {
    FoamComplex S = compile(sphere());
    REQUIRE(S.facets.size() == 1);
    CHECK(S.facets[0].chi == 2);
    CHECK(S.bindings.empty());
    CHECK(S.closed);

    FoamComplex T = compile(theta(1, 1));
    REQUIRE(T.facets.size() == 3);
    for (auto& f : T.facets) CHECK(f.chi == 1);
    REQUIRE(T.bindings.size() == 1);
    CHECK(T.bindings[0].circle);
    CHECK(T.facets[T.bindings[0].thick].thickness == 2);
    CHECK(T.vertices.empty());

    MovieBuilder b;
    int c1 = b.push(make_cup(1))[0];
    int c2 = b.push(make_cup(1))[0];
    int s = b.push(make_saddle(1, c1, c2))[0];
    CHECK_FALSE(is_closed(b.movie()));
    b.push(make_cap(1, s));
    FoamComplex P = compile(b.movie());
    REQUIRE(P.facets.size() == 1);
    CHECK(P.facets[0].chi == 2);
    CHECK_FALSE(P.spherical);

    MovieBuilder t;
    int c = t.push(make_cup(1))[0];
    auto sp = t.push(make_saddle(1, c, c));
    int j = t.push(make_saddle(1, sp[0], sp[1]))[0];
    t.push(make_cap(1, j));
    FoamComplex Tor = compile(t.movie());
    CHECK(Tor.facets[0].chi == 0);
}

TEST_CASE("compile: singular vertices") {
    MovieBuilder b;
    int c = b.push(make_cup(3))[0];
    auto d = b.push(make_digon_cup(1, 2, c));
    auto x = b.push(make_digon_cup(1, 1, d[2]));
    b.push(make_coassoc(x[0]));
    FoamComplex F = compile(b.movie());
    REQUIRE(F.vertices.size() == 1);
    const SingularVertex& v = F.vertices[0];
    CHECK(v.bindings.size() == 4);
    CHECK(v.thickness == std::array<int, 3>{1, 1, 1});
    CHECK(F.facets[v.sheets[3]].thickness == 3);
    CHECK_FALSE(F.closed);
}

TEST_CASE("coloring enumeration") {
    FoamComplex S = compile(sphere());
    auto cs = enumerate_colorings(S, 2);
    REQUIRE(cs.size() == 2);
    CHECK(cs[0][0] == 1u);
    CHECK(cs[1][0] == 2u);
    CHECK(monochrome_euler(S, cs[0], 1) == 2);
    CHECK(monochrome_euler(S, cs[0], 2) == 0);

    for (int N = 1; N <= 4; ++N)
        for (int a = 1; a <= N; ++a) {
            Web w;
            w.edges[0] = {a, -1, -1, 1};
            Movie cyl;
            cyl.input = w;
            cyl.moves.push_back(BasicMove{});
            FoamComplex C = compile(cyl);
            CHECK(enumerate_colorings(C, N).size() == static_cast<std::size_t>(binomial(N, a)));
        }

    FoamComplex T = compile(theta(1, 1));
    auto ct = enumerate_colorings(T, 2);
    REQUIRE(ct.size() == 2);
    std::set<std::pair<PigmentSet, PigmentSet>> thins;
    for (auto& c : ct) {
        CHECK(c[T.bindings[0].thick] == 3u);
        thins.insert({c[T.bindings[0].thin1], c[T.bindings[0].thin2]});
    }
    CHECK(thins == std::set<std::pair<PigmentSet, PigmentSet>>{{1u, 2u}, {2u, 1u}});
    // brute force over all assignments agrees
    for (int N = 2; N <= 4; ++N) {
        FoamComplex U = compile(theta(1, 2));
        std::size_t brute = 0;
        PigmentSet full = (1u << N) - 1;
        for (PigmentSet a = 0; a <= full; ++a)
            for (PigmentSet b = 0; b <= full; ++b)
                for (PigmentSet t = 0; t <= full; ++t) {
                    Coloring c(3);
                    c[U.bindings[0].thick] = t;
                    c[U.bindings[0].thin1] = a;
                    c[U.bindings[0].thin2] = b;
                    brute += is_admissible(U, c, N);
                }
        CHECK(enumerate_colorings(U, N).size() == brute);
    }
    CHECK(enumerate_colorings(compile(theta(2, 2)), 3).empty());
}

TEST_CASE("bichrome data on small foams") {
    FoamComplex S = compile(sphere());
    Coloring c{1u};
    auto d = bichrome_data(S, c, 1, 2);
    CHECK(d.chi == 2);
    CHECK(d.theta_plus == 0);
    CHECK(d.ij.U == 1);
    CHECK(d.ij.A == 1);
    CHECK(d.ji.U == 0);

    FoamComplex T = compile(theta(1, 1));
    int seen_positive = 0;
    for (auto& col : enumerate_colorings(T, 2)) {
        auto b = bichrome_data(T, col, 1, 2);
        CHECK(b.chi == 2);
        seen_positive += b.theta_plus;
        CHECK(b.theta_plus == (col[T.bindings[0].thin1] == 1u ? 1 : 0));
    }
    CHECK(seen_positive == 1);
    CHECK_THROWS_AS(bichrome_data(T, enumerate_colorings(T, 2)[0], 2, 1), Error);
}

TEST_CASE("Euler bookkeeping on random movies") {
    auto corpus = standard_corpus(99, 60, 30);
    int checked = 0;
    for (auto& e : corpus) {
        FoamComplex F = compile(e.movie);
        for_each_coloring(F, e.N, [&](const Coloring& c) {
            LocalCounts lc = tally_counts(F, c, e.N);
            for (int i = 1; i <= e.N; ++i) {
                if (e.spherical) {
                    CHECK(lc.cups[i - 1] == lc.caps[i - 1]);
                    CHECK(monochrome_euler(F, c, i) == lc.cups[i - 1] + lc.caps[i - 1]);
                }
                for (int j = 1; j <= e.N; ++j) {
                    if (i == j) continue;
                    const PairCounts &p = lc.at(i, j), &q = lc.at(j, i);
                    CHECK(p.Z + p.V == p.Y + p.Lambda);
                    if (e.spherical) CHECK(p.U + q.A == q.U + p.A);
                    if (i < j) CHECK(bichrome_euler(F, c, i, j) == tally_euler(lc, i, j));
                }
            }
            ++checked;
        });
    }
    CHECK(checked > 100);
}

TEST_CASE("colorings are permuted by relabelling pigments") {
    auto corpus = standard_corpus(5, 20, 10);
    for (auto& e : corpus) {
        if (e.N < 2) continue;
        FoamComplex F = compile(e.movie);
        auto cs = enumerate_colorings(F, e.N);
        std::set<Coloring> all(cs.begin(), cs.end());
        // swap pigments 1 and 2
        for (auto& c : cs) {
            Coloring s = c;
            for (auto& x : s) {
                PigmentSet b1 = x & 1u, b2 = (x >> 1) & 1u;
                x = (x & ~3u) | (b1 << 1) | b2;
            }
            CHECK(all.count(s) == 1);
        }
    }
}

TEST_CASE("binding thin order must be consistent") {
    // a zip followed by an unzip of the same strands keeps the thin order
    MovieBuilder b;
    int c1 = b.push(make_cup(1))[0];
    int c2 = b.push(make_cup(1))[0];
    auto z = b.push(make_zip(1, 1, c1, c2));
    auto u = b.push(make_unzip(1, 1, z[2]));
    b.push(make_cap(1, u[0]));
    b.push(make_cap(1, u[1]));
    FoamComplex F = compile(b.movie());
    REQUIRE(F.bindings.size() == 1);
    CHECK(F.bindings[0].circle);
    CHECK(F.facets[F.bindings[0].thin1].rep.second == c1);
}
