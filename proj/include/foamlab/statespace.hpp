#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "foamlab/actions.hpp"
#include "foamlab/linalg.hpp"
#include "foamlab/sym.hpp"

namespace foamlab {

enum class Base { Equivariant, Phi0 };

std::string base_name(Base b);
Base parse_base(const std::string& s);

// Generators of a state space: decorations z_i on one undecorated shape from the empty web.
struct Presentation {
    std::string label;
    Movie shape;
    std::vector<MultiPoly> gens;  // tagged decorations
    std::vector<int> degrees;
    bool spherical = true;

    Web web() const { return output(shape); }
    std::size_t size() const { return gens.size(); }
    FoamSum generator(std::size_t i) const { return {shape, gens.at(i)}; }
};

// Movies with the same undecorated shape and empty input; InvalidArgument otherwise.
Presentation presentation_from_movies(const std::string& label, const std::vector<Movie>& gens, int N,
                                      CoefRing R = CoefRing::integers());

// Cups of thickness a decorated by e_lambda, lambda with parts <= a and at most N - a + extra parts.
Presentation circle_presentation(int a, int N, int extra = 0);
// cup(a+b), then digon_cup(a, b); e_mu on the thick facet, e_lambda (parts <= a, at most b + extra
// parts) on the thin1 facet.
Presentation digon_presentation(int a, int b, int N, int extra = 0);
// cup(a) with e_lambda, cup(b), zip(a, b); e_mu on the b facet, at most N - a - b + extra parts.
Presentation bad_digon_presentation(int a, int b, int N, int extra = 0);
// cup(a+b+c), digon_cup(a, b+c), digon_cup(b, c) on the b+c strand, then coassoc when co is set.
Presentation assoc_presentation(int a, int b, int c, int N, bool co, int extra = 0);
// "circle:a", "digon:a,b", "bad_digon:a,b", "assoc:a,b,c", "coassoc:a,b,c".
Presentation standard_presentation(const std::string& spec, int N, int extra = 0);

// <v; g> = evaluation of v glued to the mirror of g.
MultiPoly pairing(const FoamSum& v, const FoamSum& g, int N);

// Pairings of decorations on two fixed shapes with a common boundary; the closed foam is
// compiled once.
class PairingTable {
public:
    PairingTable(const Movie& left, const Movie& right, int N);
    MultiPoly operator()(const MultiPoly& zl, const MultiPoly& zr) const;

private:
    int N_;
    FoamComplex closed_;
    LevelMap left_, right_;
};

struct GramMatrix {
    PolyMatrix entries;  // <g_i; g_j>
    std::vector<int> degrees;
    Base base = Base::Equivariant;
    CoefRing ring;
    int N = 0;
};

GramMatrix gram_matrix(const Presentation& P, int N, Base base = Base::Equivariant,
                       CoefRing R = CoefRing::integers());

struct RankResult {
    Laurent graded;
    int rank = 0;
    std::vector<int> basis;  // generator indices, ascending degree
};

// Rank of the Gram form after specialising X to random distinct values mod 2^61 - 1, greedily
// in ascending degree. Several specialisations must agree (RankUnstable otherwise).
RankResult graded_rank(const GramMatrix& G, int specializations = 3, std::uint64_t seed = 7);

// v pairs to zero with every generator.
bool is_zero_in_statespace(const FoamSum& v, const Presentation& P, int N, Base base = Base::Equivariant);

// Matrix of an operator on the basis picked by graded_rank: column j is the image of basis
// element j. Entries are polynomials in X1..XN (Equivariant) or constants (Phi0).
struct OperatorMatrix {
    Operator op;
    std::vector<int> basis;
    std::vector<int> degrees;
    PolyMatrix M;
    Base base = Base::Equivariant;
    int N = 0;
    std::size_t kernel_vectors = 0;  // relations among the generators that were checked
};

OperatorMatrix induced_action(const Operator& op, const ActionParams& AP, const Presentation& P, int N,
                              Base base = Base::Equivariant);

// Action of op on matrix entries (pigment polynomials).
MultiPoly act_on_coefficient(const Operator& op, const ActionParams& AP, const MultiPoly& q);
// Matrix of A after B: A(M_B) + M_A M_B.
PolyMatrix compose_operators(const OperatorMatrix& A, const OperatorMatrix& B, const ActionParams& AP);
// Matrix of op^k.
PolyMatrix operator_power(const OperatorMatrix& A, int k, const ActionParams& AP);

enum class MoyRelation { Circle, Digon, BadDigon, Assoc };
MoyRelation parse_moy_relation(const std::string& s);
std::string moy_relation_name(MoyRelation r);

struct MoyReport {
    MoyRelation relation = MoyRelation::Circle;
    std::string lhs_label, rhs_label;
    Laurent lhs, rhs, factor, expected;  // expected = factor * rhs
    bool ok = false;
};

// Circle: rank(circle(a)) = [N choose a]. Digon: rank(digon(a,b)) = [a+b choose a] rank(circle(a+b)).
// BadDigon: rank(bad_digon(a,b)) = [N-a choose b] rank(circle(a)).
// Assoc: rank(assoc(a,b,c)) = rank(coassoc(a,b,c)) = [N choose a+b+c][a+b+c choose a][b+c choose b].
MoyReport moy_check(MoyRelation rel, int a, int b, int c, int N, Base base = Base::Equivariant, int extra = 0);

}  // namespace foamlab
