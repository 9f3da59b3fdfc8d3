#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "foamlab/actions.hpp"
#include "foamlab/corpus.hpp"

namespace foamlab {

struct SuiteOptions {
    int nmax = 3;
    std::uint64_t seed = 20240611;
    int spherical = 160;
    int with_saddles = 60;
    int packs = 3;
};

struct SuiteResult {
    std::string suite;
    bool ok = true;
    long checks = 0;
    std::vector<std::string> failures;  // first few only
    std::vector<std::pair<std::string, long>> counts;

    void fail(const std::string& msg);
    void count(const std::string& what, long n = 1);
};

std::vector<std::string> suite_names();
// euler, commutators, compat, pdg; InvalidArgument for anything else.
SuiteResult run_suite(const std::string& name, const SuiteOptions& opt = {});

// Random Witt parameter pack over R (nu3 = 0 unless spherical).
ActionParams random_witt_pack(std::mt19937_64& rng, CoefRing R, bool spherical);
// Random sl2 parameters t1, t2, t3 over R.
ActionParams random_sl2_pack(std::mt19937_64& rng, CoefRing R);

}  // namespace foamlab
