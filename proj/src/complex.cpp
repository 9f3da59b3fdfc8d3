#include "foamlab/complex.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace foamlab {

int FoamComplex::facet_of(Token t) const {
    auto it = token_facet.find(t);
    if (it == token_facet.end())
        throw Error(ErrorKind::UnresolvedId, "no facet at level " + std::to_string(t.first) + ", edge " + std::to_string(t.second));
    return it->second;
}

int FoamComplex::max_thickness() const {
    int m = 0;
    for (auto& f : facets) m = std::max(m, f.thickness);
    return m;
}

namespace {

struct UnionFind {
    std::vector<int> p;
    int add() {
        p.push_back(static_cast<int>(p.size()));
        return p.back();
    }
    int find(int x) { return p[x] == x ? x : p[x] = find(p[x]); }
    void unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a != b) p[std::max(a, b)] = std::min(a, b);
    }
};

// Raw cells carry token indices; binding cells also carry their endpoints.
struct RawCell {
    int dim;
    std::vector<int> toks;
};

struct RawBinding {
    int thick, thin1, thin2;  // token indices
    int end0, end1;           // binding 0-cell node ids
};

struct Compiler {
    const Movie& movie;
    Slices sl;
    std::map<Token, int> tok;
    std::vector<Token> tok_list;
    std::vector<int> tok_thick;
    UnionFind uf;
    std::vector<RawCell> cells;
    std::vector<RawBinding> bcells;
    // binding 0-cell nodes: level vertices and singular vertices
    std::map<std::pair<int, int>, int> vnode;
    std::vector<int> singular_nodes;
    std::vector<std::array<int, 6>> singular_toks;
    std::vector<std::array<int, 3>> singular_th;
    int nodes = 0;
    std::vector<std::pair<int, MultiPoly>> decorations;

    explicit Compiler(const Movie& m) : movie(m), sl(replay(m)) {}

    int T(int level, int e) {
        auto key = Token{level, e};
        auto it = tok.find(key);
        if (it != tok.end()) return it->second;
        int id = uf.add();
        tok[key] = id;
        tok_list.push_back(key);
        tok_thick.push_back(sl.webs[level].edge(e).thickness);
        return id;
    }
    int V(int level, int v) {
        auto key = std::make_pair(level, v);
        auto it = vnode.find(key);
        if (it != vnode.end()) return it->second;
        vnode[key] = nodes;
        return nodes++;
    }
    std::array<int, 3> roles(int level, int v) {
        const Vertex& x = sl.webs[level].vertex(v);
        return {T(level, x.thick), T(level, x.thin1), T(level, x.thin2)};
    }
    void cell(int dim, std::vector<int> toks) {
        for (std::size_t i = 1; i < toks.size(); ++i)
            if (dim == 2) uf.unite(toks[0], toks[i]);
        cells.push_back({dim, std::move(toks)});
    }
    void binding(std::array<int, 3> r, int a, int b) {
        bcells.push_back({r[0], r[1], r[2], a, b});
        cells.push_back({1, {r[0], r[1], r[2]}});
    }

    void level_cells(int k) {
        const Web& w = sl.webs[k];
        for (auto& [id, e] : w.edges) {
            int t = T(k, id);
            if (e.is_circle()) cells.push_back({0, {t}});
            cells.push_back({1, {t}});
        }
        for (auto& [id, v] : w.vertices) {
            auto r = roles(k, id);
            V(k, id);
            cells.push_back({0, {r[0], r[1], r[2]}});
        }
    }

    void slab(int k) {
        const Web &lo = sl.webs[k - 1], &hi = sl.webs[k];
        const BasicMove& mv = movie.moves[k - 1];
        const MoveResult& res = sl.results[k - 1];
        for (auto& [id, v] : lo.vertices) {
            if (!hi.vertices.count(id)) continue;
            auto rl = roles(k - 1, id), rh = roles(k, id);
            for (int i = 0; i < 3; ++i) uf.unite(rl[i], rh[i]);
            binding(rl, V(k - 1, id), V(k, id));
        }
        for (auto& [id, e] : lo.edges) {
            if (!hi.edges.count(id)) continue;
            int a = T(k - 1, id), b = T(k, id);
            if (e.is_circle()) cell(1, {a});
            cell(2, {a, b});
        }
        const auto& cr = res.created;
        const auto& cs = res.consumed;
        auto circ_lo = [&](int e) { return lo.edge(e).is_circle(); };
        auto circ_hi = [&](int e) { return hi.edge(e).is_circle(); };
        switch (mv.kind) {
            case MoveKind::Isotopy: break;
            case MoveKind::Decorate: decorations.push_back({T(k - 1, mv.e1), mv.poly}); break;
            case MoveKind::Cup: cell(2, {T(k, cr[0])}); break;
            case MoveKind::Cap: cell(2, {T(k - 1, cs[0])}); break;
            case MoveKind::DigonCup:
            case MoveKind::DigonCap: {
                bool cup = mv.kind == MoveKind::DigonCup;
                int L = cup ? k - 1 : k, H = cup ? k : k - 1;  // thick side level, digon side level
                const auto& thick_side = cup ? cs : cr;
                const auto& digon_side = cup ? cr : cs;
                int thick = T(L, thick_side[0]);
                std::vector<int> tcell{thick, T(H, digon_side[0])};
                if (digon_side.size() == 4) tcell.push_back(T(H, digon_side[3]));
                cell(2, tcell);
                int d1 = T(H, digon_side[1]), d2 = T(H, digon_side[2]);
                const Web& dw = sl.webs[H];
                int v1 = dw.edge(digon_side[1]).tail, v2 = dw.edge(digon_side[1]).head;
                binding({thick, d1, d2}, V(H, v1), V(H, v2));
                cell(2, {d1});
                cell(2, {d2});
                if (digon_side.size() == 3) cell(1, {thick});
                break;
            }
            case MoveKind::Zip:
            case MoveKind::Unzip: {
                bool z = mv.kind == MoveKind::Zip;
                int L = z ? k - 1 : k, H = z ? k : k - 1;  // strand side level, zipped side level
                const auto& strands = z ? cs : cr;
                const auto& zipped = z ? cr : cs;
                int s1 = T(L, strands[0]), s2 = T(L, strands[1]);
                cell(2, {s1, T(H, zipped[0]), T(H, zipped[3])});
                cell(2, {s2, T(H, zipped[1]), T(H, zipped[4])});
                int t = T(H, zipped[2]);
                cell(2, {t});
                const Edge& te = sl.webs[H].edge(zipped[2]);
                binding({t, s1, s2}, V(H, te.tail), V(H, te.head));
                for (int i = 0; i < 2; ++i) {
                    bool circ = z ? circ_lo(strands[i]) : circ_hi(strands[i]);
                    if (circ) cell(1, {i == 0 ? s1 : s2});
                }
                break;
            }
            case MoveKind::Assoc:
            case MoveKind::Coassoc: {
                int s = nodes++;
                int m0 = T(k - 1, cs[0]), m1 = T(k, cr[0]);
                std::vector<std::array<int, 3>> rs;
                for (int v : res.removed_vertices) {
                    auto r = roles(k - 1, v);
                    rs.push_back(r);
                    binding(r, V(k - 1, v), s);
                }
                for (int v : res.created_vertices) {
                    auto r = roles(k, v);
                    rs.push_back(r);
                    binding(r, s, V(k, v));
                }
                std::array<int, 6> st{};
                const Edge& me = lo.edge(cs[0]);
                const Vertex& up = lo.vertex(me.tail);
                const Vertex& dn = lo.vertex(me.head);
                // recover A, B, C in left-to-right order from the bottom tree
                std::array<int, 3> abc;
                if (up.kind == VertexKind::Merge) {
                    if (dn.thin1 == cs[0]) abc = {T(k - 1, up.thin1), T(k - 1, up.thin2), T(k - 1, dn.thin2)};
                    else abc = {T(k - 1, dn.thin1), T(k - 1, up.thin1), T(k - 1, up.thin2)};
                    st[3] = T(k - 1, dn.thick);
                } else {
                    if (up.thin1 == cs[0]) abc = {T(k - 1, dn.thin1), T(k - 1, dn.thin2), T(k - 1, up.thin2)};
                    else abc = {T(k - 1, up.thin1), T(k - 1, dn.thin1), T(k - 1, dn.thin2)};
                    st[3] = T(k - 1, up.thick);
                }
                st[0] = abc[0];
                st[1] = abc[1];
                st[2] = abc[2];
                st[4] = m0;
                st[5] = m1;
                singular_nodes.push_back(s);
                singular_toks.push_back(st);
                singular_th.push_back({tok_thick[abc[0]], tok_thick[abc[1]], tok_thick[abc[2]]});
                cells.push_back({0, {st[0], st[1], st[2], st[3], st[4], st[5]}});
                cell(2, {m0});
                cell(2, {m1});
                break;
            }
            case MoveKind::Saddle: {
                if (cs.size() == 2 && cr.size() == 2) {
                    cell(2, {T(k - 1, cs[0]), T(k - 1, cs[1]), T(k, cr[0]), T(k, cr[1])});
                } else if (cs.size() == 2) {
                    // two circles -> one, or edge + circle -> edge
                    if (circ_lo(cs[0]) && circ_lo(cs[1])) {
                        cell(1, {T(k - 1, cs[0])});
                        cell(1, {T(k - 1, cs[1])});
                    } else {
                        cell(1, {T(k - 1, cs[1])});
                    }
                    cell(2, {T(k - 1, cs[0]), T(k - 1, cs[1]), T(k, cr[0])});
                } else {
                    if (circ_lo(cs[0])) {
                        cell(1, {T(k, cr[0])});
                        cell(1, {T(k, cr[1])});
                    } else {
                        cell(1, {T(k, cr[1])});
                    }
                    cell(2, {T(k - 1, cs[0]), T(k, cr[0]), T(k, cr[1])});
                }
                break;
            }
        }
    }
};

}  // namespace

FoamComplex compile(const Movie& m) {
    Compiler C(m);
    int K = static_cast<int>(m.moves.size());
    for (int k = 0; k <= K; ++k) C.level_cells(k);
    for (int k = 1; k <= K; ++k) C.slab(k);

    FoamComplex F;
    F.closed = C.sl.webs.front().empty() && C.sl.webs.back().empty();
    F.spherical = !has_saddle(m);
    // facets in order of their smallest token
    std::map<int, Token> root_rep;
    for (std::size_t i = 0; i < C.tok_list.size(); ++i) {
        int r = C.uf.find(static_cast<int>(i));
        auto it = root_rep.find(r);
        if (it == root_rep.end() || C.tok_list[i] < it->second) root_rep[r] = C.tok_list[i];
    }
    std::vector<std::pair<Token, int>> order;
    for (auto& [r, t] : root_rep) order.push_back({t, r});
    std::sort(order.begin(), order.end());
    std::map<int, int> root_facet;
    for (auto& [t, r] : order) {
        Facet f;
        f.rep = t;
        f.thickness = C.sl.webs[t.first].edge(t.second).thickness;
        f.decoration = MultiPoly::constant(CoefRing::integers(), 1);
        root_facet[r] = static_cast<int>(F.facets.size());
        F.facets.push_back(f);
    }
    auto fac = [&](int tokidx) { return root_facet.at(C.uf.find(tokidx)); };
    for (std::size_t i = 0; i < C.tok_list.size(); ++i) {
        int f = fac(static_cast<int>(i));
        F.token_facet[C.tok_list[i]] = f;
        if (F.facets[f].thickness != C.tok_thick[i])
            throw Error(ErrorKind::InvalidWeb, "a facet changes thickness along the movie");
    }
    for (auto& [t, poly] : C.decorations) {
        Facet& f = F.facets[fac(t)];
        f.decoration = f.decoration.ring() == poly.ring() ? f.decoration * poly : poly * f.decoration.change_ring(poly.ring());
    }
    for (auto& rc : C.cells) {
        Cell c;
        c.dim = rc.dim;
        // a 2-cell is a single sheet however many tokens it joins
        if (rc.dim == 2) c.sheets.push_back(fac(rc.toks[0]));
        else
            for (int t : rc.toks) c.sheets.push_back(fac(t));
        F.cells.push_back(std::move(c));
    }
    for (auto& c : F.cells) {
        int sign = c.dim % 2 ? -1 : 1;
        for (int f : c.sheets) F.facets[f].chi += sign;
    }

    // bindings: components of binding 1-cells through the level vertices
    int nb = static_cast<int>(C.bcells.size());
    std::set<int> singular(C.singular_nodes.begin(), C.singular_nodes.end());
    std::map<int, std::vector<int>> at_node;
    for (int i = 0; i < nb; ++i) {
        at_node[C.bcells[i].end0].push_back(i);
        at_node[C.bcells[i].end1].push_back(i);
    }
    UnionFind buf;
    for (int i = 0; i < nb; ++i) buf.add();
    for (auto& [node, list] : at_node) {
        if (singular.count(node)) continue;
        for (std::size_t j = 1; j < list.size(); ++j) buf.unite(list[0], list[j]);
    }
    std::map<int, int> comp_binding;
    for (int i = 0; i < nb; ++i) {
        int r = buf.find(i);
        const RawBinding& rb = C.bcells[i];
        std::array<int, 3> fs{fac(rb.thick), fac(rb.thin1), fac(rb.thin2)};
        auto it = comp_binding.find(r);
        if (it == comp_binding.end()) {
            Binding b;
            b.thick = fs[0];
            b.thin1 = fs[1];
            b.thin2 = fs[2];
            comp_binding[r] = static_cast<int>(F.bindings.size());
            F.bindings.push_back(b);
        } else {
            Binding& b = F.bindings[it->second];
            if (b.thick != fs[0] || b.thin1 != fs[1] || b.thin2 != fs[2])
                throw Error(ErrorKind::BindingInconsistent, "thin facets swap along a binding (slab cell " + std::to_string(i) + ")");
        }
    }
    std::map<int, int> node_singular;
    for (std::size_t s = 0; s < C.singular_nodes.size(); ++s) node_singular[C.singular_nodes[s]] = static_cast<int>(s);
    for (std::size_t s = 0; s < C.singular_nodes.size(); ++s) {
        SingularVertex v;
        for (int i = 0; i < 6; ++i) v.sheets[i] = fac(C.singular_toks[s][i]);
        v.thickness = C.singular_th[s];
        F.vertices.push_back(v);
    }
    // endpoints: singular nodes, or level vertices at the top/bottom boundary
    for (int i = 0; i < nb; ++i) {
        int bi = comp_binding.at(buf.find(i));
        for (int node : {C.bcells[i].end0, C.bcells[i].end1}) {
            auto it = node_singular.find(node);
            if (it != node_singular.end()) {
                F.bindings[bi].ends.push_back(it->second);
                F.vertices[it->second].bindings.push_back(bi);
            } else if (at_node[node].size() == 1) {
                F.bindings[bi].ends.push_back(-1);
            }
        }
    }
    for (auto& b : F.bindings) b.circle = b.ends.empty();

    // move sites
    for (int k = 1; k <= K; ++k) {
        const BasicMove& mv = m.moves[k - 1];
        const MoveResult& res = C.sl.results[k - 1];
        MoveSite s;
        s.kind = mv.kind;
        s.a = mv.a;
        s.b = mv.b;
        s.level = k;
        auto TF = [&](int level, int e) { return F.facet_of({level, e}); };
        switch (mv.kind) {
            case MoveKind::DigonCup:
                s.thick = TF(k - 1, res.consumed[0]);
                s.thin1 = TF(k, res.created[1]);
                s.thin2 = TF(k, res.created[2]);
                break;
            case MoveKind::DigonCap:
                s.thick = TF(k, res.created[0]);
                s.thin1 = TF(k - 1, res.consumed[1]);
                s.thin2 = TF(k - 1, res.consumed[2]);
                break;
            case MoveKind::Zip:
                s.thin1 = TF(k - 1, res.consumed[0]);
                s.thin2 = TF(k - 1, res.consumed[1]);
                s.thick = TF(k, res.created[2]);
                break;
            case MoveKind::Unzip:
                s.thin1 = TF(k, res.created[0]);
                s.thin2 = TF(k, res.created[1]);
                s.thick = TF(k - 1, res.consumed[2]);
                break;
            case MoveKind::Cup: s.facet = TF(k, res.created[0]); break;
            case MoveKind::Cap: s.facet = TF(k - 1, res.consumed[0]); break;
            case MoveKind::Saddle: s.facet = TF(k - 1, res.consumed[0]); break;
            case MoveKind::Decorate: s.facet = TF(k - 1, mv.e1); break;
            default: break;
        }
        F.sites.push_back(s);
    }
    return F;
}

}  // namespace foamlab
