#pragma once
// Brute-force evaluation of hand-built closed foams. Deliberately independent of the
// compiled complexes: cells, facets and seams are written out by hand, colorings are
// all subset assignments, and the sum is taken over an explicit common denominator.

#include <array>
#include <functional>
#include <map>
#include <vector>

#include "foamlab/ratfun.hpp"
#include "foamlab/sym.hpp"

namespace oracle {

using foamlab::CoefRing;
using foamlab::MultiPoly;

struct HandCell {
    int dim;
    std::vector<int> facets;
};

struct HandFoam {
    std::vector<int> thickness;
    std::vector<HandCell> cells;
    // circular bindings (thick, thin1, thin2)
    std::vector<std::array<int, 3>> seams;
    // decoration of a facet as a function of its pigments
    std::vector<std::function<MultiPoly(const std::vector<int>&, int)>> decoration;
};

inline std::vector<int> members(unsigned s) {
    std::vector<int> v;
    for (int i = 1; s; ++i, s >>= 1)
        if (s & 1u) v.push_back(i);
    return v;
}

inline int euler(const HandFoam& F, const std::function<bool(int)>& in) {
    int chi = 0;
    for (auto& c : F.cells) {
        bool any = false;
        for (int f : c.facets) any = any || in(f);
        if (any) chi += (c.dim % 2) ? -1 : 1;
    }
    return chi;
}

struct Term {
    std::vector<unsigned> coloring;
    int sign;
    MultiPoly numerator;
    std::map<std::pair<int, int>, int> half_chi;
};

inline std::vector<Term> terms(const HandFoam& F, int N) {
    const CoefRing Z = CoefRing::integers();
    std::vector<Term> out;
    std::size_t n = F.thickness.size();
    std::vector<unsigned> c(n, 0);
    unsigned limit = 1u << N;
    std::function<void(std::size_t)> rec = [&](std::size_t f) {
        if (f == n) {
            for (auto& s : F.seams)
                if ((c[s[1]] & c[s[2]]) || (c[s[1]] | c[s[2]]) != c[s[0]]) return;
            Term t;
            t.coloring = c;
            int s = 0;
            for (int i = 1; i <= N; ++i) {
                int chi = euler(F, [&](int g) { return (c[g] >> (i - 1)) & 1u; });
                s += i * chi / 2;
            }
            for (int i = 1; i <= N; ++i)
                for (int j = i + 1; j <= N; ++j) {
                    int chi = euler(F, [&](int g) { return ((c[g] >> (i - 1)) & 1u) != ((c[g] >> (j - 1)) & 1u); });
                    t.half_chi[{i, j}] = chi / 2;
                    for (auto& sm : F.seams)
                        if (((c[sm[1]] >> (i - 1)) & 1u) && ((c[sm[2]] >> (j - 1)) & 1u)) ++s;
                }
            t.sign = s % 2 ? -1 : 1;
            t.numerator = MultiPoly::constant(Z, t.sign);
            for (std::size_t g = 0; g < n; ++g)
                if (F.decoration.size() > g && F.decoration[g]) t.numerator *= F.decoration[g](members(c[g]), N);
            out.push_back(t);
            return;
        }
        for (unsigned s = 0; s < limit; ++s) {
            if (static_cast<int>(members(s).size()) != F.thickness[f]) continue;
            c[f] = s;
            rec(f + 1);
        }
    };
    rec(0);
    return out;
}

inline MultiPoly diff(int i, int j) {
    const CoefRing Z = CoefRing::integers();
    return MultiPoly::variable(Z, foamlab::pigment_var(i)) - MultiPoly::variable(Z, foamlab::pigment_var(j));
}

// Sum over colorings with every term brought over prod (X_i - X_j)^M.
inline MultiPoly evaluate(const HandFoam& F, int N) {
    const CoefRing Z = CoefRing::integers();
    auto ts = terms(F, N);
    int M = 0;
    for (auto& t : ts)
        for (auto& [ij, h] : t.half_chi) M = std::max(M, h);
    MultiPoly D = MultiPoly::constant(Z, 1), sum(Z);
    for (int i = 1; i <= N; ++i)
        for (int j = i + 1; j <= N; ++j) D *= diff(i, j).pow(M);
    for (auto& t : ts) {
        MultiPoly x = t.numerator;
        for (int i = 1; i <= N; ++i)
            for (int j = i + 1; j <= N; ++j) x *= diff(i, j).pow(static_cast<unsigned>(M - t.half_chi[{i, j}]));
        sum += x;
    }
    return sum.exact_div(D).trimmed();
}

// One colored term as numerator over prod (X_i - X_j)^{half_chi}, negative exponents moved up.
inline foamlab::RatFun colored(const Term& t) {
    foamlab::RatFun r(t.numerator);
    for (auto& [ij, h] : t.half_chi) {
        if (h > 0) r.den[ij] = h;
        if (h < 0) r.num *= diff(ij.first, ij.second).pow(static_cast<unsigned>(-h));
    }
    return foamlab::ratfun_normalize(r);
}

inline MultiPoly power_sum(const std::vector<int>& pig, int k) {
    const CoefRing Z = CoefRing::integers();
    MultiPoly r(Z);
    for (int i : pig) r += MultiPoly::monomial(Z, foamlab::pigment_var(i), k);
    return r;
}

// A sphere of thickness a with decoration d: one vertex and one 2-cell.
inline HandFoam sphere(int a, std::function<MultiPoly(const std::vector<int>&, int)> d = nullptr) {
    HandFoam F;
    F.thickness = {a};
    F.cells = {{0, {0}}, {2, {0}}};
    F.decoration = {d};
    return F;
}

// Theta foam: three disks glued along a circle (a vertex and an edge on it).
inline HandFoam theta(int a, int b, std::function<MultiPoly(const std::vector<int>&, int)> d1 = nullptr,
                      std::function<MultiPoly(const std::vector<int>&, int)> d2 = nullptr) {
    HandFoam F;
    F.thickness = {a + b, a, b};
    F.cells = {{0, {0, 1, 2}}, {1, {0, 1, 2}}, {2, {0}}, {2, {1}}, {2, {2}}};
    F.seams = {{0, 1, 2}};
    F.decoration = {nullptr, d1, d2};
    return F;
}

}  // namespace oracle
