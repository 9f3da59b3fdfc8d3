#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "foamlab/movie.hpp"

namespace foamlab {

// Every basic move that applies to w.
std::vector<BasicMove> candidate_moves(const Web& w, int max_thickness, bool saddles);
// Fewest moves that empty w (caps, digon caps, unzips, (co)assoc, merging saddles), or -1 if
// more than max_depth are needed.
int closing_cost(const Web& w, int max_depth, bool saddles);

struct CorpusOptions {
    int max_thickness = 2;
    int max_moves = 6;        // basic moves other than decorations
    int max_N = 3;
    int max_dec_degree = 4;   // polynomial degree of a decoration (deg X = 1)
    int max_decorations = 2;
    bool saddles = false;     // non-spherical entries must contain a saddle
};

struct CorpusEntry {
    Movie movie;
    int N = 0;
    bool spherical = true;
};

CorpusEntry random_closed_movie(std::mt19937_64& rng, const CorpusOptions& opt);
MultiPoly random_decoration(std::mt19937_64& rng, int degree, CoefRing R = CoefRing::integers());
// Drops the decorations of a movie.
Movie undecorated(const Movie& m);

// The standard test corpus: spherical entries followed by entries with saddles.
std::vector<CorpusEntry> standard_corpus(std::uint64_t seed = 20240611, int spherical = 160, int with_saddles = 60);

}  // namespace foamlab
