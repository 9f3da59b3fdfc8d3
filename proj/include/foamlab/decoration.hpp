#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>

#include "foamlab/coloring.hpp"
#include "foamlab/sym.hpp"

namespace foamlab {

// Decoration generators, as polynomial variable names:
//   p3 e2 h1      symmetric functions of the facet's pigments
//   hp3 he2 hh1   the same on the complementary pigments
//   P3 E2 H1      the same on all N pigments
//   X4            a single pigment variable
// Facet generators may carry a tag "@level.edge" naming the facet by one of its edges.
enum class GenFamily { Inner, Hat, Global, Pigment };

struct Generator {
    GenFamily family = GenFamily::Inner;
    SymKind kind = SymKind::PowerSum;
    int k = 0;
    std::optional<Token> tag;
};

std::optional<Generator> parse_generator(const std::string& var);
std::string generator_name(const Generator& g);
MultiPoly generator_poly(CoefRing R, const Generator& g);
MultiPoly gen(CoefRing R, GenFamily fam, SymKind kind, int k);

// Paper degree (deg X = 2); NonHomogeneous unless every term has the same degree.
int decoration_degree(const MultiPoly& q);
bool is_decoration(const MultiPoly& q);

// Tag the facet generators of an untagged decoration; inner p0 e0 h0 become numbers.
MultiPoly tag_decoration(const MultiPoly& q, Token t, int thickness);
// Remove tags (all facet generators must carry the same tag).
MultiPoly untag_decoration(const MultiPoly& z);
// Rename tags; the map may fold several tags onto one.
MultiPoly retag(const MultiPoly& z, const std::function<Token(Token)>& f);

// L_n on decorations as a derivation on generators. thickness(tag) supplies p0 of inner
// generators; untagged inner generators use thickness(std::nullopt).
MultiPoly decoration_witt(int n, const MultiPoly& z, const std::function<int(std::optional<Token>)>& thickness);

// Value of a generator on a pigment set S of size a inside {1..N}, as a polynomial in X1..XN.
MultiPoly realize_generator(const Generator& g, PigmentSet S, int N, CoefRing R);
// Realize an untagged decoration on one facet.
MultiPoly realize_on(const MultiPoly& q, PigmentSet S, int N);

// Realizes tagged decorations for one coloring of a complex.
class Realizer {
public:
    Realizer(const FoamComplex& F, const Coloring& c, int N) : F_(F), c_(c), N_(N) {}
    MultiPoly operator()(const MultiPoly& z);

private:
    const FoamComplex& F_;
    const Coloring& c_;
    int N_;
    std::map<std::string, MultiPoly> cache_;
};

}  // namespace foamlab
