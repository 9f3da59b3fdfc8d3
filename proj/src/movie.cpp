#include "foamlab/movie.hpp"

namespace foamlab {

std::string Movie::edge_name(int id) const {
    auto it = edge_names.find(id);
    return it != edge_names.end() ? it->second : "_" + std::to_string(id);
}

Slices replay(const Movie& m) {
    Slices s;
    require_valid(m.input);
    s.webs.push_back(m.input);
    for (const auto& mv : m.moves) {
        s.results.push_back(apply_move(s.webs.back(), mv));
        s.webs.push_back(s.results.back().web);
    }
    return s;
}

Web output(const Movie& m) { return replay(m).webs.back(); }

bool is_closed(const Movie& m) { return m.input.empty() && output(m).empty(); }

bool has_saddle(const Movie& m) {
    for (auto& mv : m.moves)
        if (mv.kind == MoveKind::Saddle) return true;
    return false;
}

int level_count(const Movie& m) { return static_cast<int>(m.moves.size()); }

namespace {

int lookup(const std::map<int, int>& phi, int e) {
    if (e < 0) return e;
    auto it = phi.find(e);
    if (it == phi.end()) throw Error(ErrorKind::UnresolvedId, "edge " + std::to_string(e) + " has no image");
    return it->second;
}

BasicMove translate(BasicMove mv, const std::map<int, int>& phi) {
    mv.e1 = lookup(phi, mv.e1);
    mv.e2 = lookup(phi, mv.e2);
    return mv;
}

void carry_names(const Movie& src, const std::map<int, int>& phi, Movie& dst) {
    for (auto& [from, to] : phi) {
        auto it = src.edge_names.find(from);
        if (it != src.edge_names.end() && !dst.edge_names.count(to)) dst.edge_names[to] = it->second;
    }
}

std::map<int, int> restrict_to(const std::map<int, int>& phi, const Web& w) {
    std::map<int, int> r;
    for (auto& [id, e] : w.edges) r[id] = lookup(phi, id);
    return r;
}

}  // namespace

MovieMap compose_mapped(const Movie& a, const Movie& b) {
    auto iso = web_isomorphism(b.input, output(a));
    if (!iso) throw Error(ErrorKind::BoundaryMismatch, "output of '" + a.name + "' does not match input of '" + b.name + "'");
    return compose_mapped(a, b, *iso);
}

MovieMap compose_mapped(const Movie& a, const Movie& b, const std::map<int, int>& boundary) {
    Slices sa = replay(a), sb = replay(b);
    auto iso = std::optional<std::map<int, int>>(boundary);
    MovieMap r;
    r.movie.name = a.name + "*" + b.name;
    r.movie.input = a.input;
    r.movie.moves = a.moves;
    r.movie.edge_names = a.edge_names;
    for (std::size_t l = 0; l < sa.webs.size(); ++l) {
        r.first.level.push_back(static_cast<int>(l));
        std::map<int, int> id;
        for (auto& [e, _] : sa.webs[l].edges) id[e] = e;
        r.first.edges.push_back(id);
    }
    std::map<int, int> phi = *iso;
    Web cur = sa.webs.back();
    int base = static_cast<int>(a.moves.size());
    r.second.level.push_back(base);
    r.second.edges.push_back(restrict_to(phi, sb.webs[0]));
    for (std::size_t k = 0; k < b.moves.size(); ++k) {
        BasicMove mv = translate(b.moves[k], phi);
        MoveResult res = apply_move(cur, mv);
        const MoveResult& orig = sb.results[k];
        for (std::size_t j = 0; j < orig.created.size(); ++j) phi[orig.created[j]] = res.created[j];
        r.movie.moves.push_back(mv);
        cur = res.web;
        r.second.level.push_back(base + static_cast<int>(k) + 1);
        r.second.edges.push_back(restrict_to(phi, sb.webs[k + 1]));
    }
    carry_names(b, phi, r.movie);
    return r;
}

MovieMap mirror_mapped(const Movie& m) {
    Slices s = replay(m);
    int K = static_cast<int>(m.moves.size());
    MovieMap r;
    r.movie.name = m.name + "'";
    r.movie.input = s.webs.back();
    r.movie.edge_names = m.edge_names;
    std::map<int, int> phi;
    for (auto& [e, _] : s.webs.back().edges) phi[e] = e;
    r.first.level.assign(K + 1, 0);
    r.first.edges.assign(K + 1, {});
    r.first.level[K] = 0;
    r.first.edges[K] = phi;
    Web cur = s.webs.back();
    for (int i = K; i >= 1; --i) {
        const BasicMove& orig = m.moves[i - 1];
        const MoveResult& res = s.results[i - 1];
        BasicMove inv;
        inv.kind = mirror_kind(orig.kind);
        inv.a = orig.a;
        inv.b = orig.b;
        const auto& cr = res.created;
        auto P = [&](int e) { return lookup(phi, e); };
        switch (orig.kind) {
            case MoveKind::Isotopy: break;
            case MoveKind::Decorate:
                inv.e1 = P(orig.e1);
                inv.poly = orig.poly;
                break;
            case MoveKind::Cup: inv.e1 = P(cr[0]); break;
            case MoveKind::Cap: inv.orient = s.webs[i - 1].edge(orig.e1).orient; break;
            case MoveKind::DigonCup:
                inv.e1 = P(cr[1]);
                inv.e2 = P(cr[2]);
                break;
            case MoveKind::DigonCap: inv.e1 = P(cr[0]); break;
            case MoveKind::Zip: inv.e1 = P(cr[2]); break;
            case MoveKind::Unzip:
                inv.e1 = P(cr[0]);
                inv.e2 = P(cr[1]);
                break;
            case MoveKind::Assoc:
            case MoveKind::Coassoc: inv.e1 = P(cr[0]); break;
            case MoveKind::Saddle:
                inv.e1 = P(cr[0]);
                inv.e2 = P(cr.size() > 1 ? cr[1] : cr[0]);
                break;
        }
        MoveResult back = apply_move(cur, inv);
        if (back.created.size() != res.consumed.size())
            throw Error(ErrorKind::PatternMismatch, "mirror of " + move_name(orig.kind) + " does not invert it");
        for (std::size_t j = 0; j < res.consumed.size(); ++j) phi[res.consumed[j]] = back.created[j];
        r.movie.moves.push_back(inv);
        cur = back.web;
        r.first.level[i - 1] = K - i + 1;
        r.first.edges[i - 1] = restrict_to(phi, s.webs[i - 1]);
    }
    carry_names(m, phi, r.movie);
    return r;
}

Movie compose(const Movie& a, const Movie& b) { return compose_mapped(a, b).movie; }

Movie sub_movie(const Movie& m, int from, int to) {
    int K = static_cast<int>(m.moves.size());
    if (from < 0 || to > K || from > to) throw Error(ErrorKind::IndexOutOfRange, "sub-movie range out of bounds");
    Slices s = replay(m);
    Movie r;
    r.name = m.name;
    r.input = s.webs[from];
    r.moves.assign(m.moves.begin() + from, m.moves.begin() + to);
    r.edge_names = m.edge_names;
    return r;
}
Movie mirror(const Movie& m) { return mirror_mapped(m).movie; }

bool same_movie(const Movie& a, const Movie& b) {
    if (!(a.input == b.input) || a.moves.size() != b.moves.size()) return false;
    for (std::size_t i = 0; i < a.moves.size(); ++i) {
        const BasicMove &x = a.moves[i], &y = b.moves[i];
        if (x.kind != y.kind || x.a != y.a || x.b != y.b || x.e1 != y.e1 || x.e2 != y.e2) return false;
        if (x.kind == MoveKind::Decorate && !(x.poly == y.poly)) return false;
    }
    return true;
}

}  // namespace foamlab

namespace foamlab {

namespace {
BasicMove mk(MoveKind k, int a, int b, int e1, int e2) {
    BasicMove m;
    m.kind = k;
    m.a = a;
    m.b = b;
    m.e1 = e1;
    m.e2 = e2;
    return m;
}
}  // namespace

BasicMove make_cup(int a, int orient) {
    BasicMove m = mk(MoveKind::Cup, a, 0, -1, -1);
    m.orient = orient;
    return m;
}
BasicMove make_cap(int a, int e) { return mk(MoveKind::Cap, a, 0, e, -1); }
BasicMove make_digon_cup(int a, int b, int e) { return mk(MoveKind::DigonCup, a, b, e, -1); }
BasicMove make_digon_cap(int a, int b, int e1, int e2) { return mk(MoveKind::DigonCap, a, b, e1, e2); }
BasicMove make_zip(int a, int b, int e1, int e2) { return mk(MoveKind::Zip, a, b, e1, e2); }
BasicMove make_unzip(int a, int b, int e) { return mk(MoveKind::Unzip, a, b, e, -1); }
BasicMove make_assoc(int e) { return mk(MoveKind::Assoc, 0, 0, e, -1); }
BasicMove make_coassoc(int e) { return mk(MoveKind::Coassoc, 0, 0, e, -1); }
BasicMove make_saddle(int a, int e1, int e2) { return mk(MoveKind::Saddle, a, 0, e1, e2); }
BasicMove make_decorate(int e, MultiPoly poly) {
    BasicMove m = mk(MoveKind::Decorate, 0, 0, e, -1);
    m.poly = std::move(poly);
    return m;
}

MovieBuilder::MovieBuilder(Web input, std::string name) : current_(input) {
    require_valid(input);
    movie_.input = std::move(input);
    movie_.name = std::move(name);
}

std::vector<int> MovieBuilder::push(const BasicMove& m) {
    MoveResult r = apply_move(current_, m);
    movie_.moves.push_back(m);
    current_ = std::move(r.web);
    return r.created;
}

}  // namespace foamlab
