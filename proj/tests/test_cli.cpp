#include <sstream>

#include "doctest.h"
#include "foamlab/cli.hpp"
#include "foamlab/dsl.hpp"
#include "foamlab/eval.hpp"

using namespace foamlab;

namespace {

const char* kFixtures = "fixtures/fixtures.foam";

struct Run {
    int code;
    std::string out, err;
};

Run run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

ErrorKind parse_error_kind(const std::string& text, std::string* msg = nullptr) {
    try {
        parse_foam(text);
    } catch (const Error& e) {
        if (msg) *msg = e.what();
        return e.kind();
    }
    FAIL("parse did not throw");
    return ErrorKind::InvalidArgument;
}

}  // namespace

TEST_CASE("sphere movie parses to two moves") {
    FoamFile f = parse_foam("movie sphere on empty { cup(1) -> c1; cap(1) on c1; }");
    REQUIRE(f.movies.size() == 1);
    const Movie& m = f.movies[0].movie;
    CHECK(m.name == "sphere");
    CHECK(m.moves.size() == 2);
    CHECK(is_closed(m));
}

TEST_CASE("unknown move reports line and column") {
    std::string msg;
    CHECK(parse_error_kind("movie m on empty {\n  cup(1) -> c;\n  flip(1);\n}\n", &msg) == ErrorKind::SyntaxError);
    CHECK_MESSAGE(msg.find("3:3") != std::string::npos, (msg));
}

TEST_CASE("unresolved ids and binding arity") {
    CHECK(parse_error_kind("movie m on empty { cap(1) on nope; }") == ErrorKind::UnresolvedId);
    CHECK(parse_error_kind("movie m on missing { isotopy; }") == ErrorKind::UnresolvedId);
    CHECK(parse_error_kind("movie m on empty { cup(1) -> c; decorate c with dot; }") == ErrorKind::UnresolvedId);
    CHECK(parse_error_kind("movie m on empty { cup(1) -> (a, b); }") == ErrorKind::PatternMismatch);
    CHECK(parse_error_kind("sum s = 2*nothing;") == ErrorKind::UnresolvedId);
}

TEST_CASE("fixture file round-trips through the printer") {
    FoamFile f = parse_foam_file(kFixtures);
    CHECK(f.movies.size() >= 8);
    std::string once = print_foam(f);
    std::string twice = print_foam(parse_foam(once));
    CHECK(once == twice);
    for (const auto& md : f.movies) {
        const MovieDecl* back = parse_foam(once).find_movie(md.movie.name);
        REQUIRE(back);
        CHECK(back->movie.moves.size() == md.movie.moves.size());
    }
}

TEST_CASE("polynomial expressions") {
    MultiPoly a = parse_poly("2*p_1^2 - hat(p_3) + X_2*E_1");
    CHECK(parse_poly(poly_to_dsl(a)) == a);
    CHECK(parse_poly("h_0") == parse_poly("1"));
    WittSequence w = parse_witt_spec("tab:[1,2,3]");
    CHECK(w.at(-1, CoefRing::integers()) == 1);
    CHECK(w.at(1, CoefRing::integers()) == 3);
    CHECK(parse_witt_spec("lin:2").at(3, CoefRing::integers()) == 8);
    CHECK_THROWS_AS(parse_witt_spec("quad:1"), Error);
}

TEST_CASE("eval of the worked spheres") {
    Run r = run({"eval", "--N", "2", std::string(kFixtures) + "#dotted_sphere"});
    CHECK(r.code == 0);
    CHECK(r.out == "-1\n");
    CHECK(run({"eval", "--N", "2", std::string(kFixtures) + "#sphere"}).out == "0\n");
    CHECK(run({"eval", "--N", "2", std::string(kFixtures) + "#dots"}).out == "-2\n");
    CHECK(run({"eval", "--N", "2", std::string(kFixtures) + "#torus"}).out == "2\n");
    CHECK(run({"eval", "--N", "2", "--mod", "3", std::string(kFixtures) + "#torus"}).out == "-1\n");
    CHECK(run({"eval", "--N", "2", "--phi0", std::string(kFixtures) + "#sphere2"}).out == "0\n");
}

TEST_CASE("degree and rank") {
    CHECK(run({"degree", "--N", "2", std::string(kFixtures) + "#dotted_sphere"}).out == "0\n");
    CHECK(run({"rank", "--web", "circle:1", "--N", "2"}).out == "q^-1 + q\n");
    CHECK(run({"rank", "--web", "circle:2", "--N", "4", "--base", "phi0"}).out == "q^-4 + q^-2 + 2 + q^2 + q^4\n");
}

TEST_CASE("act prints a sum in the DSL") {
    Run r = run({"act", "--op", "L:1", std::string(kFixtures) + "#dotted_sphere"});
    REQUIRE(r.code == 0);
    FoamFile back = parse_foam(r.out);
    CHECK(back.sums.size() == 1);
    CHECK(run({"act", "--op", "L:-1", std::string(kFixtures) + "#sphere"}).out == "0\n");
}

TEST_CASE("moy-check and check suites") {
    CHECK(run({"moy-check", "--relation", "circle", "--a", "1", "--N", "3"}).code == 0);
    Run r = run({"check", "--suite", "commutators", "--nmax", "1", "--packs", "1"});
    CHECK_MESSAGE(r.code == 0, (r.out));
    CHECK(r.out.find("commutators: pass") != std::string::npos);
}

TEST_CASE("exit codes") {
    CHECK(run({}).code == 2);
    CHECK(run({"eval", "--N", "2"}).code == 2);
    CHECK(run({"eval", "--N", "2", "missing.foam#x"}).code == 2);
    CHECK(run({"eval", "--N", "2", std::string(kFixtures) + "#nothing"}).code == 2);
    CHECK(run({"act", "--op", "d", std::string(kFixtures) + "#sphere"}).code == 2);
    CHECK(run({"check", "--suite", "nope"}).code == 2);
    CHECK(run({"induced", "--web", "circle:1", "--N", "2", "--op", "e", "--base", "phi0"}).code == 1);
}

TEST_CASE("json output is deterministic and versioned") {
    std::vector<std::string> args{"--json", "eval", "--N", "3", "--breakdown", std::string(kFixtures) + "#sphere2"};
    Run a = run(args), b = run(args);
    CHECK(a.out == b.out);
    CHECK(a.out.find("\"schema\": \"foamlab.v1\"") != std::string::npos);
    Run e = run({"--json", "eval", "--N", "2", std::string(kFixtures) + "#nothing"});
    CHECK(e.code == 2);
    CHECK(e.out.find("\"kind\": \"UnresolvedId\"") != std::string::npos);
    Run g1 = run({"--json", "induced", "--web", "circle:1", "--N", "2", "--op", "d", "--mod", "3", "--t3", "2"});
    Run g2 = run({"--json", "induced", "--web", "circle:1", "--N", "2", "--op", "d", "--mod", "3", "--t3", "2"});
    CHECK(g1.code == 0);
    CHECK(g1.out == g2.out);
}
