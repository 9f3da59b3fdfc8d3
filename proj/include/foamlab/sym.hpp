#pragma once

#include <map>
#include <string>
#include <vector>

#include "foamlab/poly.hpp"

namespace foamlab {

enum class SymKind { Elementary, Complete, PowerSum };

// e_n, h_n or p_n in the given variables; p_0 is the number of variables.
MultiPoly symmetric_basis(SymKind kind, int n, const std::vector<std::string>& vars, CoefRing R = CoefRing::integers());

// Names X1..XN.
std::vector<std::string> pigment_vars(int N);
std::string pigment_var(int i);

// A polynomial with a declared invariance group S_{a1} x ... x S_{al}, one block of variables per factor.
struct SymPoly {
    MultiPoly poly;
    std::vector<std::vector<std::string>> blocks;

    // Adjacent-transposition invariance inside each block.
    bool certify() const;
};

bool is_symmetric_in(const MultiPoly& q, const std::vector<std::string>& vars);

// Laurent polynomial in q with integer coefficients.
class Laurent {
public:
    Laurent() = default;
    static Laurent monomial(int e, i64 c = 1);

    const std::map<int, i64>& coeffs() const { return c_; }
    Laurent operator+(const Laurent& o) const;
    Laurent operator*(const Laurent& o) const;
    Laurent& operator+=(const Laurent& o);
    bool operator==(const Laurent& o) const { return c_ == o.c_; }
    bool operator!=(const Laurent& o) const { return c_ != o.c_; }
    i64 at_one() const;
    bool nonnegative() const;
    std::string str() const;
    void add(int e, i64 c);

private:
    std::map<int, i64> c_;
};

// Quantum integer [n] and quantum binomial qbinom(m, a), balanced form.
Laurent qint(int n);
Laurent qbinom(int m, int a);

}  // namespace foamlab
