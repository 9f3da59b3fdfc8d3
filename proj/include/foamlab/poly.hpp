#pragma once

#include <functional>
#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "foamlab/coef.hpp"

namespace foamlab {

using Mono = std::vector<int>;

// Names compare chunkwise: digit runs numerically, everything else bytewise.
bool natural_less(const std::string& a, const std::string& b);

// Graded lexicographic order, largest monomial first.
struct GrlexGreater {
    bool operator()(const Mono& a, const Mono& b) const;
};

using Alphabet = std::shared_ptr<const std::vector<std::string>>;

// Exact multivariate polynomial. The alphabet is kept in natural order so that
// serialisation does not depend on construction history.
class MultiPoly {
public:
    using TermMap = std::map<Mono, i64, GrlexGreater>;

    MultiPoly();
    explicit MultiPoly(CoefRing R);
    MultiPoly(CoefRing R, std::vector<std::string> vars);

    static MultiPoly constant(CoefRing R, i64 c);
    static MultiPoly variable(CoefRing R, const std::string& name);
    static MultiPoly monomial(CoefRing R, const std::string& name, int exp, i64 c = 1);

    const CoefRing& ring() const { return ring_; }
    const std::vector<std::string>& vars() const { return *vars_; }
    const TermMap& terms() const { return terms_; }
    int var_index(const std::string& name) const;

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    i64 constant_term() const;
    // Polynomial degree (deg x = 1); -1 for the zero polynomial.
    int total_degree() const;
    bool is_homogeneous() const;
    int degree_in(const std::string& var) const;
    std::size_t size() const { return terms_.size(); }

    // Re-embed into a larger (natural-ordered) alphabet.
    MultiPoly embed(const Alphabet& bigger) const;
    // Drop variables that do not occur.
    MultiPoly trimmed() const;

    MultiPoly operator+(const MultiPoly& o) const;
    MultiPoly operator-(const MultiPoly& o) const;
    MultiPoly operator*(const MultiPoly& o) const;
    MultiPoly operator-() const;
    MultiPoly& operator+=(const MultiPoly& o);
    MultiPoly& operator-=(const MultiPoly& o);
    MultiPoly& operator*=(const MultiPoly& o);
    MultiPoly scaled(i64 c) const;
    MultiPoly pow(unsigned e) const;
    bool operator==(const MultiPoly& o) const;
    bool operator!=(const MultiPoly& o) const { return !(*this == o); }

    // Exact quotient a / b; DivisionNotExact if b does not divide a.
    MultiPoly exact_div(const MultiPoly& b) const;
    // Returns true and sets q when b divides *this.
    bool divides_into(const MultiPoly& b, MultiPoly& q) const;

    MultiPoly derivative(const std::string& var) const;
    // Substitute polynomials for some variables; other variables are kept.
    MultiPoly subst(const std::map<std::string, MultiPoly>& s) const;
    // Swap two variables (used for symmetry certification).
    MultiPoly swap_vars(const std::string& a, const std::string& b) const;
    // Image under the unique ring map into another coefficient ring.
    MultiPoly change_ring(CoefRing R) const;

    // Keep only the part of a given polynomial degree.
    MultiPoly homogeneous_part(int d) const;
    // Apply f to each term (monomial, coefficient) and sum the results.
    MultiPoly map_terms(const std::function<MultiPoly(const Mono&, i64)>& f) const;

    std::string str() const;
    void add_term(const Mono& m, i64 c);

private:
    CoefRing ring_;
    Alphabet vars_;
    TermMap terms_;

    void unify(const MultiPoly& o, MultiPoly& a, MultiPoly& b) const;
};

Alphabet make_alphabet(std::vector<std::string> names);
Alphabet alphabet_union(const Alphabet& a, const Alphabet& b);

std::string scalar_str(const CoefRing& R, i64 c);

}  // namespace foamlab
