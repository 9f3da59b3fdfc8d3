#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "foamlab/actions.hpp"

namespace foamlab {

struct WebDecl {
    std::string name;
    Web web;
    std::map<int, std::string> edge_names;
};

struct MovieDecl {
    Movie movie;     // movie.name is the declared name
    std::string on;  // "empty" or a web name
    // Names bound to the created edges of each move ("" when unbound); may be empty.
    std::vector<std::vector<std::string>> binds;
};

struct DecorationDecl {
    std::string name;
    MultiPoly poly;
};

struct ParamsDecl {
    std::string name;
    ActionParams params;
};

struct SumDecl {
    std::string name;
    std::vector<std::pair<i64, std::string>> terms;  // coefficient, movie name
};

struct FoamFile {
    std::vector<WebDecl> webs;
    std::vector<DecorationDecl> decorations;
    std::vector<ParamsDecl> params;
    std::vector<MovieDecl> movies;
    std::vector<SumDecl> sums;

    const WebDecl* find_web(const std::string& n) const;
    const MovieDecl* find_movie(const std::string& n) const;
    const DecorationDecl* find_decoration(const std::string& n) const;
    const ParamsDecl* find_params(const std::string& n) const;
    const SumDecl* find_sum(const std::string& n) const;
};

// SyntaxError / UnresolvedId / PatternMismatch / InvalidWeb carry "line:col" positions.
FoamFile parse_foam(const std::string& text);
FoamFile parse_foam_file(const std::string& path);
// Normalized text; parse(print(f)) prints back to the same text.
std::string print_foam(const FoamFile& f);

// Polynomial expressions in DSL syntax (p_3, hat(p_3), E_1, X_2, ...).
MultiPoly parse_poly(const std::string& text);
std::string poly_to_dsl(const MultiPoly& q);

// "lin:<l>" or "tab:[v_-1,v_0,...]".
WittSequence parse_witt_spec(const std::string& s);

// Expands a foam sum into term movies and a `sum` declaration.
FoamFile foam_sum_file(const FoamSum& v, const std::string& name);

// Weighted movies of a sum or a single movie.
std::vector<std::pair<i64, Movie>> resolve_target(const FoamFile& f, const std::string& name);

}  // namespace foamlab
