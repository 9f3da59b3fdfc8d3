#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "foamlab/complex.hpp"

namespace foamlab {

// Pigment subset per facet; pigment i is bit i-1.
using PigmentSet = std::uint32_t;
using Coloring = std::vector<PigmentSet>;

inline bool has_pigment(PigmentSet s, int i) { return (s >> (i - 1)) & 1u; }
std::vector<int> pigments_of(PigmentSet s);

// Admissible colorings, facets in id order, subsets in colex order.
std::vector<Coloring> enumerate_colorings(const FoamComplex& F, int N);
void for_each_coloring(const FoamComplex& F, int N, const std::function<void(const Coloring&)>& fn);
bool is_admissible(const FoamComplex& F, const Coloring& c, int N);

int monochrome_euler(const FoamComplex& F, const Coloring& c, int i);
int bichrome_euler(const FoamComplex& F, const Coloring& c, int i, int j);

// Per ordered pair (i, j): cup/cap/saddle count facets with i but not j,
// digon and zip moves count i on the first thin facet and j on the second.
struct PairCounts {
    int U = 0, A = 0, V = 0, Lambda = 0, Z = 0, Y = 0, S = 0;
    bool operator==(const PairCounts&) const = default;
};

struct LocalCounts {
    int N = 0;
    std::vector<PairCounts> pairs;  // (i-1)*N + (j-1)
    std::vector<int> cups, caps;    // per pigment, index i-1
    const PairCounts& at(int i, int j) const { return pairs[(i - 1) * N + (j - 1)]; }
    PairCounts& at(int i, int j) { return pairs[(i - 1) * N + (j - 1)]; }
};

LocalCounts tally_counts(const FoamComplex& F, const Coloring& c, int N);
// A + U + Lambda + V - Z - Y over both flavours, minus saddles.
int tally_euler(const LocalCounts& lc, int i, int j);

struct Seam {
    std::vector<int> bindings;
    bool positive = false;
};

// Seam circles of the (i, j) bichrome surface, i < j.
std::vector<Seam> seam_circles(const FoamComplex& F, const Coloring& c, int i, int j);

struct BichromeData {
    int chi = 0;
    int theta_plus = 0;
    PairCounts ij, ji;
};

BichromeData bichrome_data(const FoamComplex& F, const Coloring& c, int i, int j);

}  // namespace foamlab
