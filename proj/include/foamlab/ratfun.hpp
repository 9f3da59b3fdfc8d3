#pragma once

#include <map>
#include <utility>
#include <vector>

#include "foamlab/poly.hpp"

namespace foamlab {

// numerator / prod_{i<j} (X_i - X_j)^{m_ij}, pigments indexed from 1.
struct RatFun {
    MultiPoly num;
    std::map<std::pair<int, int>, int> den;

    RatFun() = default;
    explicit RatFun(MultiPoly n) : num(std::move(n)) {}

    bool is_polynomial() const { return den.empty(); }
    std::string str() const;
};

MultiPoly pigment_difference(CoefRing R, int i, int j);

// Cancel (X_i - X_j) factors that divide the numerator.
RatFun ratfun_normalize(const RatFun& r);
RatFun ratfun_sum(const std::vector<RatFun>& rs);
// Multiply by (X_i - X_j)^e for any integer e (negative e goes to the denominator).
RatFun ratfun_times_difference(RatFun r, int i, int j, int e);

}  // namespace foamlab
