#pragma once

#include <cstdint>
#include <string>

#include "foamlab/errors.hpp"

namespace foamlab {

using i64 = std::int64_t;

// Base ring of coefficients: the integers or a prime field F_p.
struct CoefRing {
    enum Kind { Integers, PrimeField } kind = Integers;
    i64 p = 0;

    static CoefRing integers() { return {}; }
    static CoefRing prime(i64 p);

    bool is_field() const { return kind == PrimeField; }
    bool operator==(const CoefRing& o) const { return kind == o.kind && p == o.p; }
    bool operator!=(const CoefRing& o) const { return !(*this == o); }

    i64 norm(i64 a) const;
    i64 from_int(i64 a) const { return norm(a); }
    i64 add(i64 a, i64 b) const;
    i64 sub(i64 a, i64 b) const;
    i64 neg(i64 a) const;
    i64 mul(i64 a, i64 b) const;
    i64 pow(i64 a, unsigned e) const;
    // Multiplicative inverse; over Z only +-1 are invertible.
    i64 inv(i64 a) const;
    bool invertible(i64 a) const;
    // 1/2 in this ring, or TwoNotInvertible.
    i64 half() const;
    // Signed representative in (-p/2, p/2] for printing.
    i64 signed_rep(i64 a) const;

    std::string name() const;
};

bool is_prime(i64 n);

// Large prime used for random specialisations (2^61 - 1).
constexpr i64 kBigPrime = 2305843009213693951LL;

}  // namespace foamlab
