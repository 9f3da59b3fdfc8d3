#pragma once

#include <map>
#include <string>
#include <vector>

#include "foamlab/web.hpp"

namespace foamlab {

struct Movie {
    std::string name;
    Web input;
    std::vector<BasicMove> moves;
    // Optional display names for edge ids (input edges and created edges).
    std::map<int, std::string> edge_names;

    std::string edge_name(int id) const;
};

// Webs W_0 .. W_K together with the per-move results.
struct Slices {
    std::vector<Web> webs;
    std::vector<MoveResult> results;
};

Slices replay(const Movie& m);
Web output(const Movie& m);
bool is_closed(const Movie& m);
bool has_saddle(const Movie& m);
int level_count(const Movie& m);  // number of moves

// For each level of the source movie: the level it lands on and an edge-id map.
struct LevelMap {
    std::vector<int> level;
    std::vector<std::map<int, int>> edges;
};

struct MovieMap {
    Movie movie;
    LevelMap first;   // compose: levels of a; mirror: levels of the source
    LevelMap second;  // compose: levels of b
};

// Requires output(a) isomorphic to input(b); BoundaryMismatch otherwise.
MovieMap compose_mapped(const Movie& a, const Movie& b);
// Same, with an explicit map from b's input edge ids to a's output edge ids.
MovieMap compose_mapped(const Movie& a, const Movie& b, const std::map<int, int>& boundary);
MovieMap mirror_mapped(const Movie& m);
Movie compose(const Movie& a, const Movie& b);
Movie mirror(const Movie& m);
// Moves from..to-1 of m, starting from slice from.
Movie sub_movie(const Movie& m, int from, int to);

// Structural equality (webs, moves and decorations).
bool same_movie(const Movie& a, const Movie& b);

BasicMove make_cup(int a, int orient = 1);
BasicMove make_cap(int a, int e);
BasicMove make_digon_cup(int a, int b, int e);
BasicMove make_digon_cap(int a, int b, int e1, int e2);
BasicMove make_zip(int a, int b, int e1, int e2);
BasicMove make_unzip(int a, int b, int e);
BasicMove make_assoc(int e);
BasicMove make_coassoc(int e);
BasicMove make_saddle(int a, int e1, int e2);
BasicMove make_decorate(int e, MultiPoly poly);

// Appends moves while tracking the current slice.
class MovieBuilder {
public:
    explicit MovieBuilder(Web input = {}, std::string name = "");
    // Returns the created edge ids.
    std::vector<int> push(const BasicMove& m);
    const Web& current() const { return current_; }
    const Movie& movie() const { return movie_; }

private:
    Movie movie_;
    Web current_;
};

}  // namespace foamlab
