#include "foamlab/web.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace foamlab {

namespace {

[[noreturn]] void mismatch(const std::string& msg) { throw Error(ErrorKind::PatternMismatch, msg); }

std::string eid(int e) { return "edge " + std::to_string(e); }

void replace_in_vertex(Vertex& v, int old_e, int new_e) {
    if (v.thick == old_e) v.thick = new_e;
    else if (v.thin1 == old_e) v.thin1 = new_e;
    else if (v.thin2 == old_e) v.thin2 = new_e;
}

std::vector<int> rotation(const Vertex& v) {
    if (v.kind == VertexKind::Merge) return {2 * v.thick, 2 * v.thin1 + 1, 2 * v.thin2 + 1};
    return {2 * v.thick + 1, 2 * v.thin2, 2 * v.thin1};
}

int dart_head(const Web& w, int d) {
    const Edge& e = w.edge(d / 2);
    return d % 2 == 0 ? e.head : e.tail;
}

int next_dart(const Web& w, int d) {
    int v = dart_head(w, d);
    auto rot = rotation(w.vertex(v));
    int r = d ^ 1;
    for (int i = 0; i < 3; ++i)
        if (rot[i] == r) return rot[(i + 2) % 3];
    throw Error(ErrorKind::InvalidWeb, "rotation system broken at vertex " + std::to_string(v));
}

// Re-attach a non-circle edge's endpoints to new vertices.
Edge make_edge(int th, int tail, int head) {
    Edge e;
    e.thickness = th;
    e.tail = tail;
    e.head = head;
    return e;
}

Edge make_circle(int th, int orient = 1) {
    Edge e;
    e.thickness = th;
    e.orient = orient;
    return e;
}

}  // namespace

const Edge& Web::edge(int id) const {
    auto it = edges.find(id);
    if (it == edges.end()) mismatch("no " + eid(id) + " in the current web");
    return it->second;
}

const Vertex& Web::vertex(int id) const {
    auto it = vertices.find(id);
    if (it == vertices.end()) throw Error(ErrorKind::InvalidWeb, "no vertex " + std::to_string(id));
    return it->second;
}

bool Web::operator==(const Web& o) const {
    if (edges.size() != o.edges.size() || vertices.size() != o.vertices.size()) return false;
    for (auto& [id, e] : edges) {
        auto it = o.edges.find(id);
        if (it == o.edges.end()) return false;
        const Edge& f = it->second;
        if (e.thickness != f.thickness || e.tail != f.tail || e.head != f.head) return false;
    }
    for (auto& [id, v] : vertices) {
        auto it = o.vertices.find(id);
        if (it == o.vertices.end()) return false;
        const Vertex& u = it->second;
        if (v.kind != u.kind || v.thick != u.thick || v.thin1 != u.thin1 || v.thin2 != u.thin2) return false;
    }
    return true;
}

std::map<int, int> trace_faces(const Web& w, int* face_count) {
    std::map<int, int> face;
    int nf = 0;
    for (auto& [id, e] : w.edges) {
        if (e.is_circle()) continue;
        for (int d : {2 * id, 2 * id + 1}) {
            if (face.count(d)) continue;
            int x = d;
            int guard = 0;
            while (!face.count(x)) {
                face[x] = nf;
                x = next_dart(w, x);
                if (++guard > 4 * static_cast<int>(w.edges.size()) + 8)
                    throw Error(ErrorKind::InvalidWeb, "face tracing does not close");
            }
            ++nf;
        }
    }
    if (face_count) *face_count = nf;
    return face;
}

WebDiagnostic validate_web(const Web& w) {
    auto fail = [](ErrorKind k, std::string msg) { return WebDiagnostic{false, k, std::move(msg)}; };
    for (auto& [id, e] : w.edges) {
        if (e.thickness < 1) return fail(ErrorKind::InvalidWeb, eid(id) + " has thickness " + std::to_string(e.thickness));
        if ((e.tail < 0) != (e.head < 0)) return fail(ErrorKind::InvalidWeb, eid(id) + " has a single endpoint");
        if (e.is_circle()) continue;
        if (!w.vertices.count(e.tail) || !w.vertices.count(e.head))
            return fail(ErrorKind::InvalidWeb, eid(id) + " ends at an unknown vertex");
    }
    for (auto& [id, v] : w.vertices) {
        std::string vn = "vertex " + std::to_string(id);
        for (int e : {v.thick, v.thin1, v.thin2})
            if (!w.edges.count(e)) return fail(ErrorKind::InvalidWeb, vn + " refers to unknown " + eid(e));
        if (v.thick == v.thin1 || v.thick == v.thin2 || v.thin1 == v.thin2)
            return fail(ErrorKind::InvalidWeb, vn + " is not trivalent");
        const Edge &T = w.edges.at(v.thick), &A = w.edges.at(v.thin1), &B = w.edges.at(v.thin2);
        if (T.thickness != A.thickness + B.thickness)
            return fail(ErrorKind::FlowViolation, vn + ": " + std::to_string(A.thickness) + " + " + std::to_string(B.thickness) +
                                                      " != " + std::to_string(T.thickness));
        bool ok = v.kind == VertexKind::Merge ? (A.head == id && B.head == id && T.tail == id)
                                               : (A.tail == id && B.tail == id && T.head == id);
        if (!ok) return fail(ErrorKind::InvalidWeb, vn + ": edge orientations do not match a " +
                                                        (v.kind == VertexKind::Merge ? "merge" : "split") + " vertex");
    }
    for (auto& [id, e] : w.edges) {
        if (e.is_circle()) continue;
        auto has = [](const Vertex& v, int x) { return v.thick == x || v.thin1 == x || v.thin2 == x; };
        if (!has(w.vertices.at(e.tail), id) || !has(w.vertices.at(e.head), id))
            return fail(ErrorKind::InvalidWeb, eid(id) + " is not listed at its endpoints");
    }
    // Planarity: V - E + F = 2 per component of the non-circle part.
    std::map<int, int> comp;
    int nc = 0;
    for (auto& [vid, v] : w.vertices) {
        if (comp.count(vid)) continue;
        std::vector<int> st{vid};
        comp[vid] = nc;
        while (!st.empty()) {
            int x = st.back();
            st.pop_back();
            const Vertex& vx = w.vertices.at(x);
            for (int e : {vx.thick, vx.thin1, vx.thin2}) {
                const Edge& ed = w.edges.at(e);
                for (int y : {ed.tail, ed.head})
                    if (!comp.count(y)) {
                        comp[y] = nc;
                        st.push_back(y);
                    }
            }
        }
        ++nc;
    }
    int nf = 0;
    try {
        trace_faces(w, &nf);
    } catch (const Error& e) {
        return fail(ErrorKind::InvalidWeb, e.what());
    }
    int ne = 0;
    for (auto& [id, e] : w.edges)
        if (!e.is_circle()) ++ne;
    int nv = static_cast<int>(w.vertices.size());
    if (nv - ne + nf != 2 * nc) return fail(ErrorKind::InvalidWeb, "rotation system is not planar");
    return {};
}

void require_valid(const Web& w) {
    auto d = validate_web(w);
    if (!d.ok) throw Error(d.kind, d.message);
}

std::optional<std::map<int, int>> web_isomorphism(const Web& a, const Web& b) {
    if (a.edges.size() != b.edges.size() || a.vertices.size() != b.vertices.size()) return std::nullopt;
    std::map<int, int> em, vm;
    std::set<int> used_e, used_v;
    // circles
    std::vector<std::pair<int, int>> ca, cb;
    for (auto& [id, e] : a.edges)
        if (e.is_circle()) ca.push_back({e.thickness, id});
    for (auto& [id, e] : b.edges)
        if (e.is_circle()) cb.push_back({e.thickness, id});
    if (ca.size() != cb.size()) return std::nullopt;
    std::sort(ca.begin(), ca.end());
    std::sort(cb.begin(), cb.end());
    for (std::size_t i = 0; i < ca.size(); ++i) {
        if (ca[i].first != cb[i].first) return std::nullopt;
        em[ca[i].second] = cb[i].second;
        used_e.insert(cb[i].second);
    }
    auto try_map = [&](int ea, int eb, std::map<int, int>& E, std::map<int, int>& V, std::set<int>& UE, std::set<int>& UV) {
        std::vector<std::pair<int, int>> st{{ea, eb}};
        while (!st.empty()) {
            auto [x, y] = st.back();
            st.pop_back();
            auto it = E.find(x);
            if (it != E.end()) {
                if (it->second != y) return false;
                continue;
            }
            if (UE.count(y)) return false;
            const Edge &ex = a.edges.at(x), &ey = b.edges.at(y);
            if (ex.thickness != ey.thickness || ex.is_circle() || ey.is_circle()) return false;
            E[x] = y;
            UE.insert(y);
            for (int end = 0; end < 2; ++end) {
                int vx = end ? ex.head : ex.tail, vy = end ? ey.head : ey.tail;
                auto jt = V.find(vx);
                if (jt != V.end()) {
                    if (jt->second != vy) return false;
                    continue;
                }
                if (UV.count(vy)) return false;
                const Vertex &X = a.vertices.at(vx), &Y = b.vertices.at(vy);
                if (X.kind != Y.kind) return false;
                V[vx] = vy;
                UV.insert(vy);
                st.push_back({X.thick, Y.thick});
                st.push_back({X.thin1, Y.thin1});
                st.push_back({X.thin2, Y.thin2});
            }
        }
        return true;
    };
    for (auto& [id, e] : a.edges) {
        if (e.is_circle() || em.count(id)) continue;
        bool found = false;
        for (auto& [jd, f] : b.edges) {
            if (f.is_circle() || used_e.count(jd) || f.thickness != e.thickness) continue;
            auto E = em;
            auto V = vm;
            auto UE = used_e;
            auto UV = used_v;
            if (try_map(id, jd, E, V, UE, UV)) {
                em = std::move(E);
                vm = std::move(V);
                used_e = std::move(UE);
                used_v = std::move(UV);
                found = true;
                break;
            }
        }
        if (!found) return std::nullopt;
    }
    return em;
}

std::string move_name(MoveKind k) {
    switch (k) {
        case MoveKind::Isotopy: return "isotopy";
        case MoveKind::Decorate: return "decorate";
        case MoveKind::Assoc: return "assoc";
        case MoveKind::Coassoc: return "coassoc";
        case MoveKind::DigonCup: return "digon_cup";
        case MoveKind::DigonCap: return "digon_cap";
        case MoveKind::Zip: return "zip";
        case MoveKind::Unzip: return "unzip";
        case MoveKind::Cup: return "cup";
        case MoveKind::Cap: return "cap";
        case MoveKind::Saddle: return "saddle";
    }
    return "?";
}

MoveKind mirror_kind(MoveKind k) {
    switch (k) {
        case MoveKind::Assoc: return MoveKind::Coassoc;
        case MoveKind::Coassoc: return MoveKind::Assoc;
        case MoveKind::DigonCup: return MoveKind::DigonCap;
        case MoveKind::DigonCap: return MoveKind::DigonCup;
        case MoveKind::Zip: return MoveKind::Unzip;
        case MoveKind::Unzip: return MoveKind::Zip;
        case MoveKind::Cup: return MoveKind::Cap;
        case MoveKind::Cap: return MoveKind::Cup;
        default: return k;
    }
}

namespace {

struct Builder {
    MoveResult r;
    int next_e, next_v;
    explicit Builder(const Web& w) {
        r.web = w;
        next_e = w.fresh_edge_id();
        next_v = w.fresh_vertex_id();
    }
    Web& W() { return r.web; }
    int new_edge(const Edge& e) {
        int id = next_e++;
        r.web.edges[id] = e;
        return id;
    }
    int new_vertex(const Vertex& v) {
        int id = next_v++;
        r.web.vertices[id] = v;
        r.created_vertices.push_back(id);
        return id;
    }
    void drop_vertex(int v) {
        r.web.vertices.erase(v);
        r.removed_vertices.push_back(v);
    }
    void retarget(int vertex, int old_e, int new_e) {
        if (vertex >= 0) replace_in_vertex(r.web.vertices.at(vertex), old_e, new_e);
    }
};

void check_thick(const Web& w, int e, int th) {
    if (w.edge(e).thickness != th)
        mismatch(eid(e) + " has thickness " + std::to_string(w.edge(e).thickness) + ", expected " + std::to_string(th));
}

void check_positive(int a, int b) {
    if (a < 1 || b < 1) mismatch("thicknesses must be positive");
}

MoveResult digon_cup(const Web& w, const BasicMove& m) {
    check_positive(m.a, m.b);
    check_thick(w, m.e1, m.a + m.b);
    const Edge e = w.edge(m.e1);
    Builder B(w);
    B.W().edges.erase(m.e1);
    B.r.consumed = {m.e1};
    int v1 = B.next_v, v2 = B.next_v + 1;
    if (e.is_circle()) {
        int ep = B.new_edge(make_edge(m.a + m.b, v2, v1));
        int d1 = B.new_edge(make_edge(m.a, v1, v2));
        int d2 = B.new_edge(make_edge(m.b, v1, v2));
        B.new_vertex({VertexKind::Split, ep, d1, d2});
        B.new_vertex({VertexKind::Merge, ep, d1, d2});
        B.r.created = {ep, d1, d2};
    } else {
        int lo = B.new_edge(make_edge(m.a + m.b, e.tail, v1));
        int d1 = B.new_edge(make_edge(m.a, v1, v2));
        int d2 = B.new_edge(make_edge(m.b, v1, v2));
        int hi = B.new_edge(make_edge(m.a + m.b, v2, e.head));
        B.new_vertex({VertexKind::Split, lo, d1, d2});
        B.new_vertex({VertexKind::Merge, hi, d1, d2});
        B.retarget(e.tail, m.e1, lo);
        B.retarget(e.head, m.e1, hi);
        B.r.created = {lo, d1, d2, hi};
    }
    return B.r;
}

MoveResult digon_cap(const Web& w, const BasicMove& m) {
    check_positive(m.a, m.b);
    check_thick(w, m.e1, m.a);
    check_thick(w, m.e2, m.b);
    const Edge &d1 = w.edge(m.e1), &d2 = w.edge(m.e2);
    if (m.e1 == m.e2 || d1.is_circle() || d2.is_circle() || d1.tail != d2.tail || d1.head != d2.head)
        mismatch(eid(m.e1) + " and " + eid(m.e2) + " do not bound a digon");
    int v1 = d1.tail, v2 = d1.head;
    const Vertex &V1 = w.vertex(v1), &V2 = w.vertex(v2);
    if (V1.kind != VertexKind::Split || V2.kind != VertexKind::Merge || V1.thin1 != m.e1 || V2.thin1 != m.e1)
        mismatch("digon on " + eid(m.e1) + ", " + eid(m.e2) + " has the wrong shape or thin order");
    int lo = V1.thick, hi = V2.thick;
    Builder B(w);
    for (int e : {m.e1, m.e2}) B.W().edges.erase(e);
    B.drop_vertex(v1);
    B.drop_vertex(v2);
    if (lo == hi) {
        B.W().edges.erase(lo);
        B.r.consumed = {lo, m.e1, m.e2};
        B.r.created = {B.new_edge(make_circle(m.a + m.b))};
    } else {
        Edge L = w.edge(lo), H = w.edge(hi);
        B.W().edges.erase(lo);
        B.W().edges.erase(hi);
        int e = B.new_edge(make_edge(m.a + m.b, L.tail, H.head));
        B.retarget(L.tail, lo, e);
        B.retarget(H.head, hi, e);
        B.r.consumed = {lo, m.e1, m.e2, hi};
        B.r.created = {e};
    }
    return B.r;
}

MoveResult zip(const Web& w, const BasicMove& m) {
    check_positive(m.a, m.b);
    check_thick(w, m.e1, m.a);
    check_thick(w, m.e2, m.b);
    if (m.e1 == m.e2) mismatch("zip needs two distinct edges");
    const Edge E1 = w.edge(m.e1), E2 = w.edge(m.e2);
    if (!E1.is_circle() && !E2.is_circle()) {
        auto face = trace_faces(w);
        if (face.at(2 * m.e1 + 1) != face.at(2 * m.e2))
            mismatch(eid(m.e1) + " and " + eid(m.e2) + " are not parallel neighbours (left, right)");
    }
    Builder B(w);
    B.W().edges.erase(m.e1);
    B.W().edges.erase(m.e2);
    int v1 = B.next_v, v2 = B.next_v + 1;
    int in1, in2, out1, out2;
    in1 = B.new_edge(E1.is_circle() ? make_edge(m.a, v2, v1) : make_edge(m.a, E1.tail, v1));
    in2 = B.new_edge(E2.is_circle() ? make_edge(m.b, v2, v1) : make_edge(m.b, E2.tail, v1));
    int t = B.new_edge(make_edge(m.a + m.b, v1, v2));
    out1 = E1.is_circle() ? in1 : B.new_edge(make_edge(m.a, v2, E1.head));
    out2 = E2.is_circle() ? in2 : B.new_edge(make_edge(m.b, v2, E2.head));
    B.new_vertex({VertexKind::Merge, t, in1, in2});
    B.new_vertex({VertexKind::Split, t, out1, out2});
    if (!E1.is_circle()) {
        B.retarget(E1.tail, m.e1, in1);
        B.retarget(E1.head, m.e1, out1);
    }
    if (!E2.is_circle()) {
        B.retarget(E2.tail, m.e2, in2);
        B.retarget(E2.head, m.e2, out2);
    }
    B.r.consumed = {m.e1, m.e2};
    B.r.created = {in1, in2, t, out1, out2};
    return B.r;
}

MoveResult unzip(const Web& w, const BasicMove& m) {
    check_positive(m.a, m.b);
    check_thick(w, m.e1, m.a + m.b);
    const Edge T = w.edge(m.e1);
    if (T.is_circle()) mismatch(eid(m.e1) + " is a circle");
    const Vertex V1 = w.vertex(T.tail), V2 = w.vertex(T.head);
    if (V1.kind != VertexKind::Merge || V2.kind != VertexKind::Split)
        mismatch(eid(m.e1) + " does not run from a merge to a split vertex");
    int in1 = V1.thin1, in2 = V1.thin2, out1 = V2.thin1, out2 = V2.thin2;
    check_thick(w, in1, m.a);
    check_thick(w, out1, m.a);
    check_thick(w, in2, m.b);
    check_thick(w, out2, m.b);
    if (in1 == out2 || in2 == out1) mismatch("unzip on " + eid(m.e1) + " would join the two strands");
    Builder B(w);
    for (int e : {in1, in2, m.e1, out1, out2}) B.W().edges.erase(e);
    B.drop_vertex(T.tail);
    B.drop_vertex(T.head);
    auto strand = [&](int in, int out, int th) {
        if (in == out) return B.new_edge(make_circle(th));
        const Edge &I = w.edge(in), &O = w.edge(out);
        int e = B.new_edge(make_edge(th, I.tail, O.head));
        B.retarget(I.tail, in, e);
        B.retarget(O.head, out, e);
        return e;
    };
    int e1 = strand(in1, out1, m.a);
    int e2 = strand(in2, out2, m.b);
    B.r.consumed = {in1, in2, m.e1, out1, out2};
    B.r.created = {e1, e2};
    return B.r;
}

MoveResult assoc(const Web& w, const BasicMove& m, bool co) {
    const Edge M = w.edge(m.e1);
    if (M.is_circle()) mismatch(eid(m.e1) + " is a circle");
    const Vertex U = w.vertex(M.tail), Wv = w.vertex(M.head);
    Builder B(w);
    B.W().edges.erase(m.e1);
    B.drop_vertex(M.tail);
    B.drop_vertex(M.head);
    int u2 = B.next_v, w2 = B.next_v + 1;
    auto reattach_head = [&](int e, int v) { B.W().edges.at(e).head = v; };
    auto reattach_tail = [&](int e, int v) { B.W().edges.at(e).tail = v; };
    bool merge = U.kind == VertexKind::Merge && Wv.kind == VertexKind::Merge && U.thick == m.e1;
    bool split = U.kind == VertexKind::Split && Wv.kind == VertexKind::Split && Wv.thick == m.e1;
    int mp;
    if (merge && !co && Wv.thin1 == m.e1) {
        int A = U.thin1, Bb = U.thin2, C = Wv.thin2, T = Wv.thick;
        mp = B.new_edge(make_edge(w.edge(Bb).thickness + w.edge(C).thickness, u2, w2));
        B.new_vertex({VertexKind::Merge, mp, Bb, C});
        B.new_vertex({VertexKind::Merge, T, A, mp});
        reattach_head(Bb, u2);
        reattach_head(C, u2);
        reattach_head(A, w2);
        reattach_tail(T, w2);
    } else if (merge && co && Wv.thin2 == m.e1) {
        int A = Wv.thin1, Bb = U.thin1, C = U.thin2, T = Wv.thick;
        mp = B.new_edge(make_edge(w.edge(A).thickness + w.edge(Bb).thickness, u2, w2));
        B.new_vertex({VertexKind::Merge, mp, A, Bb});
        B.new_vertex({VertexKind::Merge, T, mp, C});
        reattach_head(A, u2);
        reattach_head(Bb, u2);
        reattach_head(C, w2);
        reattach_tail(T, w2);
    } else if (split && !co && U.thin1 == m.e1) {
        int T = U.thick, C = U.thin2, A = Wv.thin1, Bb = Wv.thin2;
        mp = B.new_edge(make_edge(w.edge(Bb).thickness + w.edge(C).thickness, u2, w2));
        B.new_vertex({VertexKind::Split, T, A, mp});
        B.new_vertex({VertexKind::Split, mp, Bb, C});
        reattach_head(T, u2);
        reattach_tail(A, u2);
        reattach_tail(Bb, w2);
        reattach_tail(C, w2);
    } else if (split && co && U.thin2 == m.e1) {
        int T = U.thick, A = U.thin1, Bb = Wv.thin1, C = Wv.thin2;
        mp = B.new_edge(make_edge(w.edge(A).thickness + w.edge(Bb).thickness, u2, w2));
        B.new_vertex({VertexKind::Split, T, mp, C});
        B.new_vertex({VertexKind::Split, mp, A, Bb});
        reattach_head(T, u2);
        reattach_tail(C, u2);
        reattach_tail(A, w2);
        reattach_tail(Bb, w2);
    } else {
        mismatch(std::string(co ? "coassoc" : "assoc") + " does not match around " + eid(m.e1));
    }
    B.r.consumed = {m.e1};
    B.r.created = {mp};
    return B.r;
}

MoveResult saddle(const Web& w, const BasicMove& m) {
    if (m.a < 1) mismatch("thickness must be positive");
    check_thick(w, m.e1, m.a);
    check_thick(w, m.e2, m.a);
    const Edge E1 = w.edge(m.e1), E2 = w.edge(m.e2);
    Builder B(w);
    if (m.e1 == m.e2) {
        B.W().edges.erase(m.e1);
        B.r.consumed = {m.e1};
        if (E1.is_circle()) {
            int c1 = B.new_edge(make_circle(m.a, E1.orient));
            int c2 = B.new_edge(make_circle(m.a, E1.orient));
            B.r.created = {c1, c2};
        } else {
            int e = B.new_edge(make_edge(m.a, E1.tail, E1.head));
            int c = B.new_edge(make_circle(m.a, 1));
            B.retarget(E1.tail, m.e1, e);
            B.retarget(E1.head, m.e1, e);
            B.r.created = {e, c};
        }
        return B.r;
    }
    B.W().edges.erase(m.e1);
    B.W().edges.erase(m.e2);
    if (E1.is_circle() && E2.is_circle()) {
        B.r.consumed = {m.e1, m.e2};
        B.r.created = {B.new_edge(make_circle(m.a, E1.orient))};
    } else if (E1.is_circle() || E2.is_circle()) {
        int ed = E1.is_circle() ? m.e2 : m.e1, ci = E1.is_circle() ? m.e1 : m.e2;
        const Edge& X = w.edge(ed);
        int e = B.new_edge(make_edge(m.a, X.tail, X.head));
        B.retarget(X.tail, ed, e);
        B.retarget(X.head, ed, e);
        B.r.consumed = {ed, ci};
        B.r.created = {e};
    } else {
        auto face = trace_faces(w);
        bool ok = face.at(2 * m.e1) == face.at(2 * m.e2) || face.at(2 * m.e1 + 1) == face.at(2 * m.e2 + 1);
        if (!ok) mismatch(eid(m.e1) + " and " + eid(m.e2) + " do not face each other across a region");
        int f1 = B.new_edge(make_edge(m.a, E1.tail, E2.head));
        int f2 = B.new_edge(make_edge(m.a, E2.tail, E1.head));
        B.retarget(E1.tail, m.e1, f1);
        B.retarget(E2.head, m.e2, f1);
        B.retarget(E2.tail, m.e2, f2);
        B.retarget(E1.head, m.e1, f2);
        B.r.consumed = {m.e1, m.e2};
        B.r.created = {f1, f2};
    }
    return B.r;
}

}  // namespace

MoveResult apply_move(const Web& w, const BasicMove& m) {
    MoveResult r;
    switch (m.kind) {
        case MoveKind::Isotopy:
            r.web = w;
            return r;
        case MoveKind::Decorate:
            w.edge(m.e1);
            r.web = w;
            return r;
        case MoveKind::Cup: {
            if (m.a < 1) mismatch("cup thickness must be positive");
            Builder B(w);
            B.r.created = {B.new_edge(make_circle(m.a, m.orient))};
            return B.r;
        }
        case MoveKind::Cap: {
            const Edge& e = w.edge(m.e1);
            if (!e.is_circle()) mismatch(eid(m.e1) + " is not a circle");
            check_thick(w, m.e1, m.a);
            Builder B(w);
            B.W().edges.erase(m.e1);
            B.r.consumed = {m.e1};
            return B.r;
        }
        case MoveKind::DigonCup: r = digon_cup(w, m); break;
        case MoveKind::DigonCap: r = digon_cap(w, m); break;
        case MoveKind::Zip: r = zip(w, m); break;
        case MoveKind::Unzip: r = unzip(w, m); break;
        case MoveKind::Assoc: r = assoc(w, m, false); break;
        case MoveKind::Coassoc: r = assoc(w, m, true); break;
        case MoveKind::Saddle: r = saddle(w, m); break;
    }
    auto d = validate_web(r.web);
    if (!d.ok) mismatch(move_name(m.kind) + " produced an invalid web: " + d.message);
    return r;
}

}  // namespace foamlab
