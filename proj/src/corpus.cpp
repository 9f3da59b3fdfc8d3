#include "foamlab/corpus.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "foamlab/decoration.hpp"

namespace foamlab {

namespace {

bool applies(const Web& w, const BasicMove& m) {
    try {
        apply_move(w, m);
        return true;
    } catch (const Error&) {
        return false;
    }
}

std::string web_key(const Web& w) {
    std::ostringstream os;
    for (auto& [id, e] : w.edges) os << id << ':' << e.thickness << ',' << e.tail << ',' << e.head << ';';
    os << '|';
    for (auto& [id, v] : w.vertices) os << id << ':' << (v.kind == VertexKind::Merge) << v.thick << ',' << v.thin1 << ',' << v.thin2 << ';';
    return os.str();
}

std::vector<BasicMove> reducing_moves(const Web& w, bool saddles) {
    std::vector<BasicMove> out;
    for (auto& [id, e] : w.edges) {
        if (e.is_circle()) {
            out.push_back(make_cap(e.thickness, id));
            continue;
        }
        const Vertex& t = w.vertex(e.tail);
        if (t.kind == VertexKind::Split && t.thin1 == id) {
            const Edge& o = w.edge(t.thin2);
            if (o.head == e.head) out.push_back(make_digon_cap(e.thickness, o.thickness, id, t.thin2));
        }
        const Vertex& h = w.vertex(e.head);
        if (t.kind == VertexKind::Merge && h.kind == VertexKind::Split)
            out.push_back(make_unzip(w.edge(t.thin1).thickness, w.edge(t.thin2).thickness, id));
        out.push_back(make_assoc(id));
        out.push_back(make_coassoc(id));
    }
    if (saddles)
        for (auto& [i, e] : w.edges)
            for (auto& [j, f] : w.edges)
                if (i < j && e.thickness == f.thickness && (e.is_circle() || f.is_circle()))
                    out.push_back(make_saddle(e.thickness, i, j));
    std::vector<BasicMove> ok;
    for (auto& m : out)
        if (applies(w, m)) ok.push_back(m);
    return ok;
}

int cost_rec(const Web& w, int depth, bool saddles, std::map<std::string, int>& memo) {
    if (w.empty()) return 0;
    if (depth == 0) return -1;
    std::string key = web_key(w) + "#" + std::to_string(depth);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    int best = -1;
    for (const auto& m : reducing_moves(w, saddles)) {
        int c = cost_rec(apply_move(w, m).web, depth - 1, saddles, memo);
        if (c >= 0 && (best < 0 || c + 1 < best)) best = c + 1;
        if (best == 1) break;
    }
    memo[key] = best;
    return best;
}

int pick(std::mt19937_64& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

}  // namespace

std::vector<BasicMove> candidate_moves(const Web& w, int max_thickness, bool saddles) {
    std::vector<BasicMove> out;
    for (int a = 1; a <= max_thickness; ++a) {
        out.push_back(make_cup(a, 1));
        out.push_back(make_cup(a, -1));
    }
    for (auto& [id, e] : w.edges) {
        for (int a = 1; a < e.thickness; ++a) out.push_back(make_digon_cup(a, e.thickness - a, id));
        for (auto& [jd, f] : w.edges) {
            if (id == jd) continue;
            if (e.thickness + f.thickness <= max_thickness) out.push_back(make_zip(e.thickness, f.thickness, id, jd));
        }
    }
    for (auto& m : reducing_moves(w, false)) out.push_back(m);
    if (saddles)
        for (auto& [i, e] : w.edges)
            for (auto& [j, f] : w.edges)
                if (i <= j && e.thickness == f.thickness) out.push_back(make_saddle(e.thickness, i, j));
    std::vector<BasicMove> ok;
    for (auto& m : out)
        if (applies(w, m)) ok.push_back(m);
    return ok;
}

int closing_cost(const Web& w, int max_depth, bool saddles) {
    std::map<std::string, int> memo;
    return cost_rec(w, max_depth, saddles, memo);
}

MultiPoly random_decoration(std::mt19937_64& rng, int degree, CoefRing R) {
    static const GenFamily fams[] = {GenFamily::Inner, GenFamily::Inner, GenFamily::Hat, GenFamily::Global};
    static const SymKind kinds[] = {SymKind::PowerSum, SymKind::Elementary, SymKind::Complete};
    MultiPoly out(R);
    // two terms may cancel; draw again
    while (out.is_zero()) {
        int nterms = pick(rng, 1, 2);
        for (int t = 0; t < nterms; ++t) {
            MultiPoly mono = MultiPoly::constant(R, 1);
            int left = degree;
            while (left > 0) {
                int k = pick(rng, 1, left);
                mono *= gen(R, fams[pick(rng, 0, 3)], kinds[pick(rng, 0, 2)], k);
                left -= k;
            }
            int c = pick(rng, 1, 2) * (pick(rng, 0, 1) ? 1 : -1);
            out += mono.scaled(R.from_int(c));
        }
    }
    return out;
}

Movie undecorated(const Movie& m) {
    Movie r = m;
    r.moves.clear();
    for (const auto& mv : m.moves)
        if (mv.kind != MoveKind::Decorate) r.moves.push_back(mv);
    return r;
}

CorpusEntry random_closed_movie(std::mt19937_64& rng, const CorpusOptions& opt) {
    for (int attempt = 0; attempt < 1000; ++attempt) {
        int budget = pick(rng, 2, opt.max_moves);
        MovieBuilder B;
        std::vector<Web> levels{B.current()};
        int used = 0;
        bool dead = false;
        while (used < budget) {
            int left = budget - used;
            if (B.current().empty() && used >= 2 && pick(rng, 0, 2) == 0) break;
            auto cands = candidate_moves(B.current(), opt.max_thickness, opt.saddles);
            // group by kind so that rare kinds are not drowned by cups and zips
            std::map<MoveKind, std::vector<BasicMove>> by_kind;
            for (auto& m : cands) {
                int c = closing_cost(apply_move(B.current(), m).web, left - 1, opt.saddles);
                if (c >= 0) by_kind[m.kind].push_back(m);
            }
            if (by_kind.empty()) {
                dead = true;
                break;
            }
            std::vector<MoveKind> kinds;
            std::vector<double> weights;
            for (auto& [k, _] : by_kind) {
                kinds.push_back(k);
                weights.push_back(k == MoveKind::Cup || k == MoveKind::Cap ? 1.0 : 4.0);
            }
            std::discrete_distribution<int> choose(weights.begin(), weights.end());
            const auto& ms = by_kind[kinds[choose(rng)]];
            B.push(ms[pick(rng, 0, static_cast<int>(ms.size()) - 1)]);
            levels.push_back(B.current());
            ++used;
        }
        if (dead || !B.current().empty() || used < 2) continue;
        Movie shape = B.movie();
        if (opt.saddles && !has_saddle(shape)) continue;
        int maxth = 0;
        for (auto& mv : shape.moves) maxth = std::max({maxth, mv.a + mv.b, mv.a});
        if (maxth == 0) continue;
        CorpusEntry e;
        e.spherical = !has_saddle(shape);
        e.N = pick(rng, std::max(1, maxth), std::max(maxth, opt.max_N));
        // decorations at random nonempty levels
        int ndec = pick(rng, 0, opt.max_decorations);
        std::vector<std::pair<int, BasicMove>> decs;
        for (int d = 0; d < ndec; ++d) {
            std::vector<int> nonempty;
            for (std::size_t l = 0; l < levels.size(); ++l)
                if (!levels[l].edges.empty()) nonempty.push_back(static_cast<int>(l));
            if (nonempty.empty()) break;
            int l = nonempty[pick(rng, 0, static_cast<int>(nonempty.size()) - 1)];
            auto eit = levels[l].edges.begin();
            std::advance(eit, pick(rng, 0, static_cast<int>(levels[l].edges.size()) - 1));
            decs.push_back({l, make_decorate(eit->first, random_decoration(rng, pick(rng, 1, opt.max_dec_degree)))});
        }
        std::stable_sort(decs.begin(), decs.end(), [](auto& x, auto& y) { return x.first < y.first; });
        Movie full;
        full.input = shape.input;
        std::size_t di = 0;
        for (int l = 0; l <= static_cast<int>(shape.moves.size()); ++l) {
            while (di < decs.size() && decs[di].first == l) full.moves.push_back(decs[di++].second);
            if (l < static_cast<int>(shape.moves.size())) full.moves.push_back(shape.moves[l]);
        }
        e.movie = full;
        return e;
    }
    throw Error(ErrorKind::InvalidArgument, "could not generate a closed movie with these options");
}

std::vector<CorpusEntry> standard_corpus(std::uint64_t seed, int spherical, int with_saddles) {
    std::mt19937_64 rng(seed);
    std::vector<CorpusEntry> out;
    CorpusOptions opt;
    for (int i = 0; i < spherical; ++i) {
        out.push_back(random_closed_movie(rng, opt));
        out.back().movie.name = "s" + std::to_string(i);
    }
    opt.saddles = true;
    for (int i = 0; i < with_saddles; ++i) {
        out.push_back(random_closed_movie(rng, opt));
        out.back().movie.name = "n" + std::to_string(i);
    }
    return out;
}

}  // namespace foamlab
