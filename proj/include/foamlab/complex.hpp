#pragma once

#include <array>
#include <map>
#include <utility>
#include <vector>

#include "foamlab/movie.hpp"

namespace foamlab {

using Token = std::pair<int, int>;  // (level, edge id)

struct Cell {
    int dim = 0;
    std::vector<int> sheets;  // facet ids, with multiplicity
};

struct Facet {
    int thickness = 0;
    int chi = 0;
    MultiPoly decoration;  // product of decorations, untagged generator variables
    Token rep;             // smallest token of the facet
};

struct Binding {
    bool circle = false;
    int thick = -1, thin1 = -1, thin2 = -1;
    std::vector<int> ends;  // singular vertices (two for intervals), -1 for a boundary end
};

struct SingularVertex {
    std::array<int, 6> sheets{};  // facets A, B, C, T, then the two middle facets
    std::array<int, 3> thickness{};
    std::vector<int> bindings;
};

// Facets touched by one basic move, for the local tallies and the operators.
struct MoveSite {
    MoveKind kind = MoveKind::Isotopy;
    int a = 0, b = 0;
    int thin1 = -1, thin2 = -1, thick = -1;  // digon / zip moves
    int facet = -1;                          // cup, cap, saddle
    int level = 0;                           // slab index (1-based)
};

struct FoamComplex {
    std::vector<Facet> facets;
    std::vector<Binding> bindings;
    std::vector<SingularVertex> vertices;
    std::vector<Cell> cells;
    std::vector<MoveSite> sites;
    std::map<Token, int> token_facet;
    bool closed = false;
    bool spherical = true;

    int facet_of(Token t) const;
    int max_thickness() const;
};

FoamComplex compile(const Movie& m);

}  // namespace foamlab
