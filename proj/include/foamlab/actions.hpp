#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "foamlab/eval.hpp"
#include "foamlab/witt.hpp"

namespace foamlab {

struct ActionParams {
    CoefRing ring = CoefRing::integers();
    i64 s = 0;
    WittSequence nu1 = WittSequence::zero(), nu2 = WittSequence::zero(), nu3 = WittSequence::zero();
    // sl2 parameters; unset ones are filled from the Witt side by sl2_from_witt.
    std::optional<i64> t1, t2, t3;
    bool spherical = true;
};

// t1 = nu1_1 + s, t2 = nu2_1 + s, t3 = nu3_1 + 1/2 for the unset ones.
ActionParams sl2_from_witt(const ActionParams& P);

// Decorated foams sharing one undecorated shape: z is a polynomial in generators tagged by
// facet representatives of compile(shape).
struct FoamSum {
    Movie shape;
    MultiPoly z;

    bool is_zero() const { return z.is_zero(); }
};

FoamSum to_foam_sum(const Movie& m, CoefRing R);
// Retag every generator to its facet representative.
FoamSum canonical(const FoamSum& v);
FoamSum operator+(const FoamSum& a, const FoamSum& b);
FoamSum operator-(const FoamSum& a, const FoamSum& b);
FoamSum scaled(const FoamSum& a, i64 c);
// Shapes compose along the boundary, decorations multiply.
FoamSum compose(const FoamSum& a, const FoamSum& b);
FoamSum mirror(const FoamSum& a);
// One decorated movie per monomial of z, with its coefficient.
std::vector<std::pair<i64, Movie>> expand_terms(const FoamSum& v);

enum class OpKind { Witt, E, H, F, D };

struct Operator {
    OpKind kind = OpKind::Witt;
    int n = 0;  // index of L_n
    std::string str() const;
};

// "L:<n>", "e", "h", "f" or "d".
Operator parse_operator(const std::string& s);

FoamSum act(const Operator& op, const ActionParams& P, const FoamSum& v);
FoamSum act_witt(int n, const ActionParams& P, const Movie& m);
FoamSum act_sl2(OpKind g, const ActionParams& P, const Movie& m);
// The differential f over F_p, applied iterate times.
FoamSum act_pdg(const Movie& m, const ActionParams& P, int iterate = 1);

// Levels of Isotopy moves (they act by 0).
std::vector<int> isotopy_levels(const Movie& m);

// z vanishes on every coloring of the shape with N pigments.
bool vanishes_on_colorings(const FoamSum& v, int N);

struct CheckReport {
    bool ok = true;
    std::string message;
    MultiPoly difference;
};

// The single-move movie of a basic foam, on the smallest web it applies to.
Movie basic_foam(MoveKind k, int a = 1, int b = 1, int c = 1);
// One of each kind for thicknesses up to max_thickness (saddles included when asked).
std::vector<Movie> basic_foams(int max_thickness, bool saddles);

// [L_n, L_m] - (n - m) L_{n+m} applied to the movie.
CheckReport commutator_check(int n, int m, const ActionParams& P, const Movie& basic);
// [e,f] = h, [h,e] = 2e, [h,f] = -2f.
CheckReport sl2_check(const ActionParams& P, const Movie& basic);

// <L_n F> against L_n <F>, and for n = 0 the eigenvalue -deg/2.
CheckReport verify_compat(const Movie& F, int n, const ActionParams& P, int N);

// Residual coefficients of L_n <F, c> in the basis p_n(X_i), h_n(X_i, X_j).
struct Residuals {
    std::vector<i64> r_i;                    // index i-1
    std::map<std::pair<int, int>, i64> r_ij;  // i < j
};

Residuals table_residuals(const LocalCounts& lc, int n, const ActionParams& P);

}  // namespace foamlab
