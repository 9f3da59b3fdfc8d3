#pragma once

#include <optional>
#include <string>
#include <vector>

#include "foamlab/poly.hpp"

namespace foamlab {

// L_n . q = -sum_z z^{n+1} dq/dz over the given variables (all variables of q if empty).
MultiPoly witt_act(int n, const MultiPoly& q, const std::vector<std::string>& vars = {});

// Iterated d = sum_k x_k^2 d/dx_k; WrongRing unless q lives over F_p.
MultiPoly p_derivation(const MultiPoly& q, int iterate = 1);
// d twisted by a degree-2 element t: d_t(P) = d(P) + tP.
MultiPoly twisted_p_derivation(const MultiPoly& q, const MultiPoly& t, int iterate = 1);

// Scalar sequence indexed from -1 to n_max.
class WittSequence {
public:
    enum class Tag { Linear, Table };

    static WittSequence linear(i64 lambda, int n_max = 16);
    static WittSequence table(std::vector<i64> from_minus_one);
    static WittSequence zero(int n_max = 16) { return linear(0, n_max); }

    Tag tag() const { return tag_; }
    int n_max() const { return n_max_; }
    i64 lambda() const { return lambda_; }
    const std::vector<i64>& values() const { return values_; }
    // Value in the given ring; IndexOutOfRange outside [-1, n_max].
    i64 at(int n, const CoefRing& R) const;
    bool is_zero() const;
    std::string spec() const;

private:
    Tag tag_ = Tag::Linear;
    i64 lambda_ = 0;
    int n_max_ = 16;
    std::vector<i64> values_;
};

struct WittCheck {
    bool ok = true;
    int n = 0, m = 0;
};

// Checks lambda_{-1} = 0 and n l_n - m l_m = (n - m) l_{n+m}: first over 0 <= m < n,
// then over the pairs with m = -1.
WittCheck witt_sequence_check(const WittSequence& s, const CoefRing& R = CoefRing::integers());

struct FlatSequence {
    std::vector<MultiPoly> tau;  // tau[0] is tau_{-1}
    int n_max() const { return static_cast<int>(tau.size()) - 2; }
    const MultiPoly& at(int n) const;
};

MultiPoly twisted_witt_act(int n, const FlatSequence& tau, const MultiPoly& q);

struct Curvature {
    int n, m;
    MultiPoly kappa;
};

// kappa(tau)_{n,m} for all -1 <= m < n with n + m <= n_max; flat iff all entries vanish.
std::vector<Curvature> flatness_check(const FlatSequence& tau);
bool is_flat(const FlatSequence& tau);

enum class BaseChange { ToPrimeField, KillEquivariance };

// ToPrimeField(p) reduces coefficients; KillEquivariance sends every E_i of X1..XN to 0
// (NotInSymmetricSubring if q is not symmetric in X1..XN).
MultiPoly base_change(const MultiPoly& q, BaseChange phi, i64 p = 0, int N = 0);

}  // namespace foamlab
