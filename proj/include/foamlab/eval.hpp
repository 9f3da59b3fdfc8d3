#pragma once

#include <functional>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "foamlab/decoration.hpp"
#include "foamlab/ratfun.hpp"

namespace foamlab {

// The undecorated part of a colored evaluation: sign / prod (X_i - X_j)^{chi_ij / 2}.
struct ShapeFactor {
    int sign = 1;
    std::map<std::pair<int, int>, int> half_chi;  // i < j
    int s = 0;                                     // exponent of -1
};

ShapeFactor shape_factor(const FoamComplex& F, const Coloring& c, int N);
RatFun apply_shape(const ShapeFactor& sf, MultiPoly numerator);

// Colored evaluation using the facet decorations of the complex.
RatFun colored_eval(const FoamComplex& F, const Coloring& c, int N, CoefRing R = CoefRing::integers());
// Colored evaluation with an external decoration in tagged generators.
RatFun colored_eval_tagged(const FoamComplex& F, const Coloring& c, int N, const MultiPoly& z);

struct ColoredTerm {
    Coloring coloring;
    RatFun value;
};

struct EvalResult {
    MultiPoly value;
    std::vector<ColoredTerm> terms;
    int N = 0;
};

// Sum over colorings; NotPolynomial / NotSymmetric if the sum misbehaves.
EvalResult evaluate(const FoamComplex& F, int N, CoefRing R = CoefRing::integers(), bool breakdown = false);
EvalResult evaluate_tagged(const FoamComplex& F, int N, const MultiPoly& z, bool breakdown = false);
MultiPoly evaluate_movie(const Movie& m, int N, CoefRing R = CoefRing::integers());

// Paper degree of a homogeneous polynomial in X1..XN; -1 for zero; NonHomogeneous otherwise.
int pigment_degree(const MultiPoly& q);

// N-degree of the foam; NonHomogeneous if a facet decoration is not homogeneous.
int degree(const FoamComplex& F, int N);
// Degree contribution of the shape alone (decorations ignored).
int shape_degree(const FoamComplex& F, int N);
// Sum of the degrees of the basic moves; defined for foams with boundary as well.
int move_degree(const BasicMove& m, int N);
int movie_degree(const Movie& m, int N);

// Generalized decoration: the hat side of facet f carries R, realized on the complement.
struct BubbleReport {
    bool ok = true;
    std::optional<Coloring> witness;
    std::string message;
};

// Glue a bubble of thickness N-a decorated by R (inner generators of the bubble) to the facet
// through token t, and compare per coloring with R on the hat side of f. The two sides of the
// facet differ by (-1)^{a(N-a)}; plain_side picks the one without that factor.
BubbleReport bubble_check(const Movie& m, Token t, const MultiPoly& R, int N, bool plain_side = true);
struct GluedBubble {
    Movie movie;
    std::function<Token(Token)> token_map;  // tokens of the original movie into the glued one
};
GluedBubble glue_bubble(const Movie& m, Token t, const MultiPoly& R, int N, bool plain_side);

// Split an inner decoration of a thick facet into thin facet generators (coproduct).
MultiPoly coproduct(const MultiPoly& R, Token thin1, Token thin2);

}  // namespace foamlab
