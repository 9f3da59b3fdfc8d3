#include "foamlab/coloring.hpp"

#include <bit>
#include <set>

namespace foamlab {

std::vector<int> pigments_of(PigmentSet s) {
    std::vector<int> out;
    for (int i = 1; s; ++i, s >>= 1)
        if (s & 1u) out.push_back(i);
    return out;
}

namespace {

struct Search {
    const FoamComplex& F;
    int N;
    const std::function<void(const Coloring&)>& fn;
    PigmentSet full;

    // -1 encodes "unassigned"; PigmentSet is unsigned so keep a separate flag.
    bool propagate(Coloring& c, std::vector<char>& set) const {
        bool changed = true;
        while (changed) {
            changed = false;
            for (const Binding& b : F.bindings) {
                bool T = set[b.thick], A = set[b.thin1], B = set[b.thin2];
                if (T && A && B) {
                    if ((c[b.thin1] & c[b.thin2]) || (c[b.thin1] | c[b.thin2]) != c[b.thick]) return false;
                } else if (T && A) {
                    if ((c[b.thin1] & ~c[b.thick])) return false;
                    PigmentSet r = c[b.thick] & ~c[b.thin1];
                    if (std::popcount(r) != F.facets[b.thin2].thickness) return false;
                    c[b.thin2] = r;
                    set[b.thin2] = 1;
                    changed = true;
                } else if (T && B) {
                    if ((c[b.thin2] & ~c[b.thick])) return false;
                    PigmentSet r = c[b.thick] & ~c[b.thin2];
                    if (std::popcount(r) != F.facets[b.thin1].thickness) return false;
                    c[b.thin1] = r;
                    set[b.thin1] = 1;
                    changed = true;
                } else if (A && B) {
                    if (c[b.thin1] & c[b.thin2]) return false;
                    c[b.thick] = c[b.thin1] | c[b.thin2];
                    set[b.thick] = 1;
                    changed = true;
                }
            }
        }
        return true;
    }

    void run(Coloring c, std::vector<char> set) const {
        if (!propagate(c, set)) return;
        std::size_t f = 0;
        while (f < c.size() && set[f]) ++f;
        if (f == c.size()) {
            fn(c);
            return;
        }
        int k = F.facets[f].thickness;
        if (k > N) return;
        if (k == 0) {
            c[f] = 0;
            set[f] = 1;
            run(c, set);
            return;
        }
        // k-subsets in increasing integer order, which is colex order
        PigmentSet s = (PigmentSet(1) << k) - 1;
        while (s <= full) {
            Coloring c2 = c;
            std::vector<char> set2 = set;
            c2[f] = s;
            set2[f] = 1;
            run(std::move(c2), std::move(set2));
            PigmentSet lo = s & (~s + 1), r = s + lo;
            s = (((r ^ s) >> 2) / lo) | r;
        }
    }
};

void collect_cells(const FoamComplex& F, const std::function<bool(int)>& in, int& chi) {
    for (const Cell& cell : F.cells) {
        bool any = false;
        for (int f : cell.sheets)
            if (in(f)) {
                any = true;
                break;
            }
        if (any) chi += cell.dim % 2 ? -1 : 1;
    }
}

}  // namespace

void for_each_coloring(const FoamComplex& F, int N, const std::function<void(const Coloring&)>& fn) {
    if (N < 0 || N > 31) throw Error(ErrorKind::InvalidArgument, "pigment count out of range");
    Search s{F, N, fn, N == 0 ? 0u : ((PigmentSet(1) << N) - 1)};
    s.run(Coloring(F.facets.size(), 0), std::vector<char>(F.facets.size(), 0));
}

std::vector<Coloring> enumerate_colorings(const FoamComplex& F, int N) {
    std::vector<Coloring> out;
    for_each_coloring(F, N, [&](const Coloring& c) { out.push_back(c); });
    return out;
}

bool is_admissible(const FoamComplex& F, const Coloring& c, int N) {
    if (c.size() != F.facets.size()) return false;
    for (std::size_t f = 0; f < c.size(); ++f) {
        if (std::popcount(c[f]) != F.facets[f].thickness) return false;
        if (N < 32 && (c[f] >> N)) return false;
    }
    for (const Binding& b : F.bindings)
        if ((c[b.thin1] & c[b.thin2]) || (c[b.thin1] | c[b.thin2]) != c[b.thick]) return false;
    return true;
}

int monochrome_euler(const FoamComplex& F, const Coloring& c, int i) {
    int chi = 0;
    collect_cells(F, [&](int f) { return has_pigment(c[f], i); }, chi);
    return chi;
}

int bichrome_euler(const FoamComplex& F, const Coloring& c, int i, int j) {
    int chi = 0;
    collect_cells(F, [&](int f) { return has_pigment(c[f], i) != has_pigment(c[f], j); }, chi);
    return chi;
}

LocalCounts tally_counts(const FoamComplex& F, const Coloring& c, int N) {
    LocalCounts lc;
    lc.N = N;
    lc.pairs.assign(N * N, {});
    lc.cups.assign(N, 0);
    lc.caps.assign(N, 0);
    for (const MoveSite& s : F.sites) {
        for (int i = 1; i <= N; ++i) {
            if (s.facet >= 0 && has_pigment(c[s.facet], i)) {
                if (s.kind == MoveKind::Cup) ++lc.cups[i - 1];
                if (s.kind == MoveKind::Cap) ++lc.caps[i - 1];
            }
            for (int j = 1; j <= N; ++j) {
                if (i == j) continue;
                PairCounts& p = lc.at(i, j);
                switch (s.kind) {
                    case MoveKind::Cup:
                    case MoveKind::Cap:
                    case MoveKind::Saddle: {
                        if (!has_pigment(c[s.facet], i) || has_pigment(c[s.facet], j)) break;
                        (s.kind == MoveKind::Cup ? p.U : s.kind == MoveKind::Cap ? p.A : p.S) += 1;
                        break;
                    }
                    case MoveKind::DigonCup:
                    case MoveKind::DigonCap:
                    case MoveKind::Zip:
                    case MoveKind::Unzip: {
                        if (!has_pigment(c[s.thin1], i) || !has_pigment(c[s.thin2], j)) break;
                        int& slot = s.kind == MoveKind::DigonCup   ? p.V
                                    : s.kind == MoveKind::DigonCap ? p.Lambda
                                    : s.kind == MoveKind::Zip      ? p.Z
                                                                   : p.Y;
                        ++slot;
                        break;
                    }
                    default: break;
                }
            }
        }
    }
    return lc;
}

int tally_euler(const LocalCounts& lc, int i, int j) {
    const PairCounts &a = lc.at(i, j), &b = lc.at(j, i);
    auto part = [](const PairCounts& p) { return p.A + p.U + p.Lambda + p.V - p.Z - p.Y; };
    return part(a) + part(b) - a.S - b.S;
}

std::vector<Seam> seam_circles(const FoamComplex& F, const Coloring& c, int i, int j) {
    auto seam_sign = [&](const Binding& b) -> int {
        if (has_pigment(c[b.thin1], i) && has_pigment(c[b.thin2], j)) return 1;
        if (has_pigment(c[b.thin1], j) && has_pigment(c[b.thin2], i)) return -1;
        return 0;
    };
    std::vector<Seam> out;
    std::vector<char> seen(F.bindings.size(), 0);
    for (std::size_t b0 = 0; b0 < F.bindings.size(); ++b0) {
        if (seen[b0] || !seam_sign(F.bindings[b0])) continue;
        Seam s;
        std::vector<int> stack{static_cast<int>(b0)};
        seen[b0] = 1;
        while (!stack.empty()) {
            int b = stack.back();
            stack.pop_back();
            s.bindings.push_back(b);
            for (int v : F.bindings[b].ends) {
                if (v < 0) throw Error(ErrorKind::InvalidArgument, "seam reaches the boundary");
                for (int nb : F.vertices[v].bindings)
                    if (!seen[nb] && seam_sign(F.bindings[nb])) {
                        seen[nb] = 1;
                        stack.push_back(nb);
                    }
            }
        }
        std::set<int> signs;
        for (int b : s.bindings) signs.insert(seam_sign(F.bindings[b]));
        if (signs.size() != 1)
            throw Error(ErrorKind::SeamSignInconsistent,
                        "seam through binding " + std::to_string(b0) + " changes sign for pigments " + std::to_string(i) + "," + std::to_string(j));
        s.positive = *signs.begin() > 0;
        out.push_back(std::move(s));
    }
    return out;
}

BichromeData bichrome_data(const FoamComplex& F, const Coloring& c, int i, int j) {
    if (i >= j) throw Error(ErrorKind::InvalidArgument, "bichrome data needs i < j");
    BichromeData d;
    d.chi = bichrome_euler(F, c, i, j);
    for (const Seam& s : seam_circles(F, c, i, j))
        if (s.positive) ++d.theta_plus;
    int N = 0;
    for (PigmentSet s : c) N = std::max(N, static_cast<int>(std::bit_width(s)));
    N = std::max(N, j);
    LocalCounts lc = tally_counts(F, c, N);
    d.ij = lc.at(i, j);
    d.ji = lc.at(j, i);
    return d;
}

}  // namespace foamlab
