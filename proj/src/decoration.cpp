#include "foamlab/decoration.hpp"

#include <cctype>
#include <set>

namespace foamlab {

namespace {

bool parse_int(const std::string& s, std::size_t& pos, int& out) {
    std::size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == start || pos - start > 6) return false;
    out = std::stoi(s.substr(start, pos - start));
    return true;
}

std::optional<SymKind> kind_of(char c) {
    switch (c) {
        case 'p': return SymKind::PowerSum;
        case 'e': return SymKind::Elementary;
        case 'h': return SymKind::Complete;
        default: return std::nullopt;
    }
}

char kind_char(SymKind k) {
    switch (k) {
        case SymKind::PowerSum: return 'p';
        case SymKind::Elementary: return 'e';
        case SymKind::Complete: return 'h';
    }
    return '?';
}

std::vector<std::string> vars_of(PigmentSet S) {
    std::vector<std::string> v;
    for (int i : pigments_of(S)) v.push_back(pigment_var(i));
    return v;
}

}  // namespace

std::optional<Generator> parse_generator(const std::string& var) {
    Generator g;
    std::size_t pos = 0;
    if (var.empty()) return std::nullopt;
    if (var[0] == 'X') {
        g.family = GenFamily::Pigment;
        pos = 1;
        if (!parse_int(var, pos, g.k) || g.k < 1 || pos != var.size()) return std::nullopt;
        return g;
    }
    char c = var[0];
    if (c == 'P' || c == 'E' || c == 'H') {
        g.family = GenFamily::Global;
        g.kind = *kind_of(static_cast<char>(std::tolower(c)));
        pos = 1;
        if (!parse_int(var, pos, g.k) || pos != var.size()) return std::nullopt;
        return g;
    }
    if (c == 'h' && var.size() > 1 && kind_of(var[1]) && !std::isdigit(static_cast<unsigned char>(var[1]))) {
        g.family = GenFamily::Hat;
        g.kind = *kind_of(var[1]);
        pos = 2;
    } else if (kind_of(c)) {
        g.family = GenFamily::Inner;
        g.kind = *kind_of(c);
        pos = 1;
    } else {
        return std::nullopt;
    }
    if (!parse_int(var, pos, g.k)) return std::nullopt;
    if (pos == var.size()) return g;
    if (var[pos] != '@') return std::nullopt;
    ++pos;
    Token t;
    if (!parse_int(var, pos, t.first) || pos >= var.size() || var[pos] != '.') return std::nullopt;
    ++pos;
    if (!parse_int(var, pos, t.second) || pos != var.size()) return std::nullopt;
    g.tag = t;
    return g;
}

std::string generator_name(const Generator& g) {
    std::string s;
    switch (g.family) {
        case GenFamily::Pigment: return pigment_var(g.k);
        case GenFamily::Global: s = std::string(1, static_cast<char>(std::toupper(kind_char(g.kind)))); break;
        case GenFamily::Hat: s = std::string("h") + kind_char(g.kind); break;
        case GenFamily::Inner: s = std::string(1, kind_char(g.kind)); break;
    }
    s += std::to_string(g.k);
    if (g.tag) s += "@" + std::to_string(g.tag->first) + "." + std::to_string(g.tag->second);
    return s;
}

MultiPoly generator_poly(CoefRing R, const Generator& g) {
    if (g.k == 0 && g.family != GenFamily::Pigment) {
        if (g.kind != SymKind::PowerSum) return MultiPoly::constant(R, 1);
    }
    return MultiPoly::variable(R, generator_name(g));
}

MultiPoly gen(CoefRing R, GenFamily fam, SymKind kind, int k) {
    Generator g;
    g.family = fam;
    g.kind = kind;
    g.k = k;
    return generator_poly(R, g);
}

bool is_decoration(const MultiPoly& q) {
    for (const auto& v : q.vars())
        if (!parse_generator(v)) return false;
    return true;
}

int decoration_degree(const MultiPoly& q) {
    std::vector<int> w;
    for (const auto& v : q.vars()) {
        auto g = parse_generator(v);
        if (!g) throw Error(ErrorKind::InvalidArgument, "not a decoration generator: " + v);
        w.push_back(g->family == GenFamily::Pigment ? 2 : 2 * g->k);
    }
    int deg = -1;
    for (const auto& [m, c] : q.terms()) {
        int d = 0;
        for (std::size_t i = 0; i < m.size(); ++i) d += m[i] * w[i];
        if (deg >= 0 && d != deg) throw Error(ErrorKind::NonHomogeneous, "decoration " + q.str() + " is not homogeneous");
        deg = d;
    }
    return std::max(deg, 0);
}

MultiPoly tag_decoration(const MultiPoly& q, Token t, int thickness) {
    std::map<std::string, MultiPoly> s;
    for (const auto& v : q.vars()) {
        auto g = parse_generator(v);
        if (!g) throw Error(ErrorKind::InvalidArgument, "not a decoration generator: " + v);
        if (g->family == GenFamily::Global || g->family == GenFamily::Pigment) continue;
        if (g->tag) throw Error(ErrorKind::InvalidArgument, "decoration already tagged: " + v);
        if (g->family == GenFamily::Inner && g->k == 0) {
            s[v] = MultiPoly::constant(q.ring(), g->kind == SymKind::PowerSum ? thickness : 1);
            continue;
        }
        Generator h = *g;
        h.tag = t;
        s[v] = generator_poly(q.ring(), h);
    }
    return s.empty() ? q : q.subst(s);
}

MultiPoly untag_decoration(const MultiPoly& z) {
    std::map<std::string, MultiPoly> s;
    std::set<Token> tags;
    for (const auto& v : z.vars()) {
        auto g = parse_generator(v);
        if (!g || !g->tag) continue;
        tags.insert(*g->tag);
        Generator h = *g;
        h.tag.reset();
        s[v] = generator_poly(z.ring(), h);
    }
    if (tags.size() > 1) throw Error(ErrorKind::InvalidArgument, "decoration spans several facets");
    return s.empty() ? z : z.subst(s);
}

MultiPoly retag(const MultiPoly& z, const std::function<Token(Token)>& f) {
    std::map<std::string, MultiPoly> s;
    for (const auto& v : z.vars()) {
        auto g = parse_generator(v);
        if (!g || !g->tag) continue;
        Generator h = *g;
        h.tag = f(*g->tag);
        if (h.tag != g->tag) s[v] = generator_poly(z.ring(), h);
    }
    return s.empty() ? z : z.subst(s);
}

namespace {

// Image of one generator under L_n, in generators of the same family and tag.
MultiPoly witt_generator(int n, const Generator& g, CoefRing R, int thickness) {
    auto G = [&](SymKind kind, int k) {
        Generator h = g;
        h.kind = kind;
        h.k = k;
        if (k == 0 && kind == SymKind::PowerSum && g.family == GenFamily::Inner) return MultiPoly::constant(R, thickness);
        return generator_poly(R, h);
    };
    if (g.family == GenFamily::Pigment) {
        Generator h = g;
        MultiPoly x = generator_poly(R, h);
        return -(x.pow(static_cast<unsigned>(n + 1)));
    }
    int k = g.k;
    MultiPoly out(R);
    switch (g.kind) {
        case SymKind::PowerSum:
            if (k == 0) return out;
            return G(SymKind::PowerSum, k + n).scaled(R.from_int(-k));
        case SymKind::Elementary:
            for (int r = 0; r < k; ++r) {
                MultiPoly t = G(SymKind::PowerSum, n + 1 + r) * G(SymKind::Elementary, k - 1 - r);
                out += r % 2 ? t : -t;
            }
            return out;
        case SymKind::Complete:
            for (int r = 0; r < k; ++r) out -= G(SymKind::PowerSum, n + 1 + r) * G(SymKind::Complete, k - 1 - r);
            return out;
    }
    return out;
}

}  // namespace

MultiPoly decoration_witt(int n, const MultiPoly& z, const std::function<int(std::optional<Token>)>& thickness) {
    if (n < -1) throw Error(ErrorKind::IndexOutOfRange, "L_n needs n >= -1");
    MultiPoly out(z.ring());
    for (const auto& v : z.vars()) {
        auto g = parse_generator(v);
        if (!g) throw Error(ErrorKind::InvalidArgument, "not a decoration generator: " + v);
        MultiPoly d = z.derivative(v);
        if (d.is_zero()) continue;
        int th = g->family == GenFamily::Inner ? thickness(g->tag) : 0;
        out += d * witt_generator(n, *g, z.ring(), th);
    }
    return out;
}

MultiPoly realize_generator(const Generator& g, PigmentSet S, int N, CoefRing R) {
    PigmentSet all = N == 0 ? 0u : ((PigmentSet(1) << N) - 1);
    switch (g.family) {
        case GenFamily::Pigment:
            if (g.k > N) throw Error(ErrorKind::InvalidArgument, "pigment X" + std::to_string(g.k) + " exceeds N");
            return MultiPoly::variable(R, pigment_var(g.k));
        case GenFamily::Global: return symmetric_basis(g.kind, g.k, pigment_vars(N), R);
        case GenFamily::Inner: return symmetric_basis(g.kind, g.k, vars_of(S), R);
        case GenFamily::Hat: return symmetric_basis(g.kind, g.k, vars_of(all & ~S), R);
    }
    return MultiPoly(R);
}

MultiPoly realize_on(const MultiPoly& q, PigmentSet S, int N) {
    std::map<std::string, MultiPoly> s;
    for (const auto& v : q.vars()) {
        auto g = parse_generator(v);
        if (!g) throw Error(ErrorKind::InvalidArgument, "not a decoration generator: " + v);
        s[v] = realize_generator(*g, S, N, q.ring());
    }
    MultiPoly r = s.empty() ? q : q.subst(s);
    return r.embed(make_alphabet(pigment_vars(N)));
}

MultiPoly Realizer::operator()(const MultiPoly& z) {
    std::map<std::string, MultiPoly> s;
    for (const auto& v : z.vars()) {
        auto it = cache_.find(v);
        if (it == cache_.end()) {
            auto g = parse_generator(v);
            if (!g) throw Error(ErrorKind::InvalidArgument, "not a decoration generator: " + v);
            PigmentSet S = 0;
            if (g->family == GenFamily::Inner || g->family == GenFamily::Hat) {
                if (!g->tag) throw Error(ErrorKind::InvalidArgument, "facet generator without a facet: " + v);
                S = c_[F_.facet_of(*g->tag)];
            }
            it = cache_.emplace(v, realize_generator(*g, S, N_, z.ring())).first;
        }
        s[v] = it->second;
    }
    MultiPoly r = s.empty() ? z : z.subst(s);
    return r.embed(make_alphabet(pigment_vars(N_)));
}

}  // namespace foamlab
