#include "foamlab/dsl.hpp"

#include <cctype>
#include <fstream>
#include <regex>
#include <set>
#include <sstream>

namespace foamlab {

const WebDecl* FoamFile::find_web(const std::string& n) const {
    for (const auto& d : webs)
        if (d.name == n) return &d;
    return nullptr;
}
const MovieDecl* FoamFile::find_movie(const std::string& n) const {
    for (const auto& d : movies)
        if (d.movie.name == n) return &d;
    return nullptr;
}
const DecorationDecl* FoamFile::find_decoration(const std::string& n) const {
    for (const auto& d : decorations)
        if (d.name == n) return &d;
    return nullptr;
}
const ParamsDecl* FoamFile::find_params(const std::string& n) const {
    for (const auto& d : params)
        if (d.name == n) return &d;
    return nullptr;
}
const SumDecl* FoamFile::find_sum(const std::string& n) const {
    for (const auto& d : sums)
        if (d.name == n) return &d;
    return nullptr;
}

namespace {

enum class Tok { Ident, Int, Sym, End };

struct Token_ {
    Tok kind = Tok::End;
    std::string text;
    int line = 1, col = 1;
};

std::vector<Token_> lex(const std::string& src) {
    std::vector<Token_> out;
    int line = 1, col = 1;
    std::size_t i = 0;
    auto adv = [&](std::size_t n) {
        for (std::size_t k = 0; k < n; ++k, ++i) {
            if (src[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
    };
    while (i < src.size()) {
        char c = src[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            adv(1);
            continue;
        }
        if (c == '#' || (c == '/' && i + 1 < src.size() && src[i + 1] == '/')) {
            while (i < src.size() && src[i] != '\n') adv(1);
            continue;
        }
        Token_ t;
        t.line = line;
        t.col = col;
        std::size_t j = i;
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            while (j < src.size() && (std::isalnum(static_cast<unsigned char>(src[j])) || src[j] == '_')) ++j;
            t.kind = Tok::Ident;
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
            while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) ++j;
            t.kind = Tok::Int;
        } else if (c == '-' && i + 1 < src.size() && src[i + 1] == '>') {
            j = i + 2;
            t.kind = Tok::Sym;
        } else if (std::string("{}();,=*+-^[]:").find(c) != std::string::npos) {
            j = i + 1;
            t.kind = Tok::Sym;
        } else {
            throw Error(ErrorKind::SyntaxError, std::to_string(line) + ":" + std::to_string(col) + ": unexpected character '" + std::string(1, c) + "'");
        }
        t.text = src.substr(i, j - i);
        adv(j - i);
        out.push_back(t);
    }
    Token_ end;
    end.line = line;
    end.col = col;
    out.push_back(end);
    return out;
}

std::string where(const Token_& t) { return std::to_string(t.line) + ":" + std::to_string(t.col); }

// p_3 / p3 / E_1 / X_2 -> generator variable name, or nullopt.
std::optional<std::string> generator_ident(const std::string& s) {
    static const std::regex re("^([pehPEHX])_?([0-9]+)$");
    std::smatch m;
    if (!std::regex_match(s, m, re)) return std::nullopt;
    std::string name = m[1].str() + m[2].str();
    auto g = parse_generator(name);
    if (!g || g->tag) return std::nullopt;
    if (g->family == GenFamily::Pigment && g->k < 1) return std::nullopt;
    return name;
}

std::optional<SymKind> kind_of(char c) {
    switch (c) {
        case 'p': return SymKind::PowerSum;
        case 'e': return SymKind::Elementary;
        case 'h': return SymKind::Complete;
    }
    return std::nullopt;
}

class Parser {
public:
    Parser(const std::string& src) : toks_(lex(src)) {}

    FoamFile file() {
        FoamFile f;
        while (peek().kind != Tok::End) {
            const Token_& t = peek();
            if (t.kind != Tok::Ident) fail(t, "expected a declaration");
            if (t.text == "web") {
                web(f);
            } else if (t.text == "movie") {
                movie(f);
            } else if (t.text == "decoration") {
                decoration(f);
            } else if (t.text == "params") {
                params(f);
            } else if (t.text == "sum") {
                sum(f);
            } else {
                fail(t, "unknown declaration '" + t.text + "'");
            }
        }
        return f;
    }

    MultiPoly poly_only() {
        FoamFile empty;
        file_ = &empty;
        MultiPoly q = poly();
        if (peek().kind != Tok::End) fail(peek(), "trailing input after polynomial");
        return q;
    }

private:
    std::vector<Token_> toks_;
    std::size_t pos_ = 0;
    const FoamFile* file_ = nullptr;

    const Token_& peek(std::size_t k = 0) const { return toks_[std::min(pos_ + k, toks_.size() - 1)]; }
    const Token_& next() {
        const Token_& t = peek();
        if (pos_ < toks_.size() - 1) ++pos_;
        return t;
    }
    [[noreturn]] void fail(const Token_& t, const std::string& msg, ErrorKind k = ErrorKind::SyntaxError) const {
        throw Error(k, where(t) + ": " + msg);
    }
    bool is_sym(const std::string& s, std::size_t k = 0) const { return peek(k).kind == Tok::Sym && peek(k).text == s; }
    bool is_word(const std::string& s) const { return peek().kind == Tok::Ident && peek().text == s; }
    void expect(const std::string& s) {
        if (!is_sym(s)) fail(peek(), "expected '" + s + "'" + found());
        next();
    }
    void expect_word(const std::string& s) {
        if (!is_word(s)) fail(peek(), "expected '" + s + "'" + found());
        next();
    }
    std::string found() const {
        const Token_& t = peek();
        return t.kind == Tok::End ? " at end of input" : " but found '" + t.text + "'";
    }
    std::string ident() {
        if (peek().kind != Tok::Ident) fail(peek(), "expected a name" + found());
        return next().text;
    }
    // Edge / vertex names may also be plain integers.
    std::string name() {
        if (peek().kind != Tok::Ident && peek().kind != Tok::Int) fail(peek(), "expected a name" + found());
        return next().text;
    }
    i64 integer() {
        bool neg = false;
        if (is_sym("-")) {
            next();
            neg = true;
        }
        if (peek().kind != Tok::Int) fail(peek(), "expected an integer" + found());
        const Token_& t = next();
        i64 v = 0;
        try {
            v = std::stoll(t.text);
        } catch (const std::exception&) {
            fail(t, "integer out of range");
        }
        return neg ? -v : v;
    }
    int small_int() {
        const Token_& t = peek();
        i64 v = integer();
        if (v < -1000000 || v > 1000000) fail(t, "integer out of range");
        return static_cast<int>(v);
    }

    // ---- polynomials
    MultiPoly poly() {
        CoefRing Z = CoefRing::integers();
        MultiPoly acc(Z);
        bool neg = false;
        if (is_sym("-")) {
            next();
            neg = true;
        } else if (is_sym("+")) {
            next();
        }
        while (true) {
            MultiPoly m = product();
            acc = neg ? acc - m : acc + m;
            if (is_sym("+")) {
                next();
                neg = false;
            } else if (is_sym("-")) {
                next();
                neg = true;
            } else {
                break;
            }
        }
        return acc;
    }
    MultiPoly product() {
        MultiPoly acc = power();
        while (is_sym("*")) {
            next();
            acc *= power();
        }
        return acc;
    }
    MultiPoly power() {
        MultiPoly b = atom();
        if (is_sym("^")) {
            next();
            const Token_& t = peek();
            i64 e = integer();
            if (e < 0 || e > 64) fail(t, "exponent must be in 0..64");
            b = b.pow(static_cast<unsigned>(e));
        }
        return b;
    }
    MultiPoly atom() {
        CoefRing Z = CoefRing::integers();
        const Token_& t = peek();
        if (t.kind == Tok::Int) return MultiPoly::constant(Z, integer());
        if (is_sym("(")) {
            next();
            MultiPoly q = poly();
            expect(")");
            return q;
        }
        if (is_sym("-")) {
            next();
            return -atom();
        }
        if (t.kind != Tok::Ident) fail(t, "expected a polynomial" + found());
        std::string s = next().text;
        if (s == "hat") {
            expect("(");
            const Token_& g = peek();
            std::string inner = ident();
            auto nm = generator_ident(inner);
            if (!nm || !kind_of((*nm)[0]) || !std::islower(static_cast<unsigned char>((*nm)[0])))
                fail(g, "hat() takes p_k, e_k or h_k");
            expect(")");
            auto gen = parse_generator("h" + *nm);
            return generator_poly(Z, *gen);
        }
        if (file_) {
            if (const auto* d = file_->find_decoration(s)) return d->poly;
        }
        auto nm = generator_ident(s);
        if (!nm) fail(t, "unknown decoration or generator '" + s + "'", ErrorKind::UnresolvedId);
        return generator_poly(Z, *parse_generator(*nm));
    }

    // ---- declarations
    void check_fresh(const FoamFile& f, const Token_& t, const std::string& n) {
        if (f.find_web(n) || f.find_movie(n) || f.find_decoration(n) || f.find_params(n) || f.find_sum(n) || n == "empty")
            fail(t, "name '" + n + "' is already declared");
    }

    void web(FoamFile& f) {
        next();
        const Token_& nt = peek();
        WebDecl d;
        d.name = ident();
        check_fresh(f, nt, d.name);
        expect("{");
        std::map<std::string, int> ids;
        std::set<std::string> vnames;
        struct V {
            Token_ at;
            Vertex v;
        };
        std::vector<V> verts;
        while (!is_sym("}")) {
            const Token_& t = peek();
            if (is_word("edge")) {
                next();
                const Token_& et = peek();
                std::string n = name();
                if (ids.count(n)) fail(et, "edge '" + n + "' declared twice");
                expect_word("thickness");
                const Token_& tt = peek();
                int th = small_int();
                if (th < 1) fail(tt, "thickness must be positive");
                Edge e;
                e.thickness = th;
                if (is_word("orient")) {
                    next();
                    const Token_& ot = peek();
                    std::string o = ident();
                    if (o == "ccw") e.orient = 1;
                    else if (o == "cw") e.orient = -1;
                    else fail(ot, "orient is ccw or cw");
                }
                expect(";");
                int id = static_cast<int>(ids.size());
                ids[n] = id;
                d.web.edges[id] = e;
                d.edge_names[id] = n;
            } else if (is_word("vertex")) {
                next();
                const Token_& vt = peek();
                std::string vn = name();
                if (!vnames.insert(vn).second) fail(vt, "vertex '" + vn + "' declared twice");
                const Token_& kt = peek();
                std::string k = ident();
                V v{vt, {}};
                if (k == "split") v.v.kind = VertexKind::Split;
                else if (k == "merge") v.v.kind = VertexKind::Merge;
                else fail(kt, "vertex kind is split or merge");
                expect("(");
                auto ref = [&]() {
                    const Token_& rt = peek();
                    std::string r = name();
                    auto it = ids.find(r);
                    if (it == ids.end()) fail(rt, "unknown edge '" + r + "'", ErrorKind::UnresolvedId);
                    return it->second;
                };
                v.v.thin1 = ref();
                expect(",");
                v.v.thin2 = ref();
                expect(";");
                v.v.thick = ref();
                expect(")");
                expect(";");
                verts.push_back(v);
            } else {
                fail(t, "expected 'edge' or 'vertex'" + found());
            }
        }
        expect("}");
        for (std::size_t k = 0; k < verts.size(); ++k) {
            int vid = static_cast<int>(k);
            const Vertex& v = verts[k].v;
            auto set_end = [&](int e, bool head) {
                Edge& E = d.web.edges.at(e);
                int& slot = head ? E.head : E.tail;
                if (slot >= 0) fail(verts[k].at, "edge '" + d.edge_names[e] + "' has two " + (head ? "heads" : "tails"), ErrorKind::InvalidWeb);
                slot = vid;
            };
            bool merge = v.kind == VertexKind::Merge;
            set_end(v.thin1, merge);
            set_end(v.thin2, merge);
            set_end(v.thick, !merge);
            d.web.vertices[vid] = v;
        }
        for (auto& [id, e] : d.web.edges)
            if ((e.tail < 0) != (e.head < 0)) fail(nt, "edge '" + d.edge_names[id] + "' has only one endpoint", ErrorKind::InvalidWeb);
        try {
            require_valid(d.web);
        } catch (const Error& e) {
            fail(nt, e.what(), e.kind());
        }
        f.webs.push_back(d);
    }

    void movie(FoamFile& f) {
        next();
        const Token_& nt = peek();
        MovieDecl d;
        d.movie.name = ident();
        check_fresh(f, nt, d.movie.name);
        expect_word("on");
        const Token_& wt = peek();
        d.on = ident();
        Web input;
        std::map<std::string, int> names;
        if (d.on != "empty") {
            const WebDecl* w = f.find_web(d.on);
            if (!w) fail(wt, "unknown web '" + d.on + "'", ErrorKind::UnresolvedId);
            input = w->web;
            for (const auto& [id, n] : w->edge_names) {
                names[n] = id;
                d.movie.edge_names[id] = n;
            }
        }
        d.movie.input = input;
        MovieBuilder B(input, d.movie.name);
        file_ = &f;
        expect("{");
        while (!is_sym("}")) {
            const Token_& mt = peek();
            if (mt.kind != Tok::Ident) fail(mt, "expected a move" + found());
            std::string kw = next().text;
            auto edge_ref = [&]() {
                const Token_& rt = peek();
                std::string r = name();
                auto it = names.find(r);
                if (it == names.end()) fail(rt, "unknown edge '" + r + "'", ErrorKind::UnresolvedId);
                return it->second;
            };
            auto pair_ref = [&](int& a, int& b) {
                expect("(");
                a = edge_ref();
                expect(",");
                b = edge_ref();
                expect(")");
            };
            auto args = [&](int n) {
                std::vector<int> v;
                expect("(");
                for (int k = 0; k < n; ++k) {
                    if (k) expect(",");
                    v.push_back(small_int());
                }
                expect(")");
                return v;
            };
            BasicMove mv;
            if (kw == "cup") {
                expect("(");
                int a = small_int();
                int orient = 1;
                if (is_sym(",")) {
                    next();
                    const Token_& ot = peek();
                    std::string o = ident();
                    if (o == "cw") orient = -1;
                    else if (o != "ccw") fail(ot, "orient is ccw or cw");
                }
                expect(")");
                mv = make_cup(a, orient);
            } else if (kw == "cap") {
                auto a = args(1);
                expect_word("on");
                mv = make_cap(a[0], edge_ref());
            } else if (kw == "digon_cup") {
                auto a = args(2);
                expect_word("on");
                mv = make_digon_cup(a[0], a[1], edge_ref());
            } else if (kw == "digon_cap" || kw == "zip") {
                auto a = args(2);
                expect_word("on");
                int e1, e2;
                pair_ref(e1, e2);
                mv = kw == "zip" ? make_zip(a[0], a[1], e1, e2) : make_digon_cap(a[0], a[1], e1, e2);
            } else if (kw == "unzip") {
                auto a = args(2);
                expect_word("on");
                mv = make_unzip(a[0], a[1], edge_ref());
            } else if (kw == "assoc" || kw == "coassoc") {
                expect_word("on");
                int e = edge_ref();
                mv = kw == "assoc" ? make_assoc(e) : make_coassoc(e);
            } else if (kw == "saddle") {
                auto a = args(1);
                expect_word("on");
                int e1, e2;
                pair_ref(e1, e2);
                mv = make_saddle(a[0], e1, e2);
            } else if (kw == "decorate") {
                int e = edge_ref();
                expect_word("with");
                mv = make_decorate(e, poly());
            } else if (kw == "isotopy") {
                mv = BasicMove{};
            } else {
                fail(mt, "unknown move '" + kw + "'");
            }
            std::vector<std::pair<Token_, std::string>> bind;
            bool tuple = false;
            if (is_sym("->")) {
                next();
                auto one = [&]() {
                    const Token_& bt = peek();
                    bind.push_back({bt, name()});
                };
                if (is_sym("(")) {
                    tuple = true;
                    next();
                    one();
                    while (is_sym(",")) {
                        next();
                        one();
                    }
                    expect(")");
                } else {
                    one();
                }
            }
            expect(";");
            std::vector<int> created;
            try {
                created = B.push(mv);
            } catch (const Error& e) {
                fail(mt, e.what(), e.kind());
            }
            std::vector<std::string> bound(created.size());
            if (!bind.empty()) {
                if (bind.size() != created.size())
                    fail(mt, kw + " creates " + std::to_string(created.size()) + " edge(s) but " + std::to_string(bind.size()) + " name(s) are bound" + (tuple ? "" : " (use a tuple)"),
                         ErrorKind::PatternMismatch);
                for (std::size_t k = 0; k < created.size(); ++k) {
                    const std::string& n = bind[k].second;
                    if (n == "_") continue;
                    auto it = names.find(n);
                    bool live = it != names.end() && B.current().edges.count(it->second) && it->second != created[k];
                    if (live) fail(bind[k].first, "name '" + n + "' is bound to a live edge");
                    names[n] = created[k];
                    bound[k] = n;
                    d.movie.edge_names[created[k]] = n;
                }
            }
            d.binds.push_back(bound);
        }
        expect("}");
        d.movie.moves = B.movie().moves;
        f.movies.push_back(d);
    }

    void decoration(FoamFile& f) {
        next();
        const Token_& nt = peek();
        DecorationDecl d;
        d.name = ident();
        check_fresh(f, nt, d.name);
        if (generator_ident(d.name) || d.name == "hat") fail(nt, "'" + d.name + "' is a generator name");
        expect("=");
        file_ = &f;
        d.poly = poly();
        expect(";");
        f.decorations.push_back(d);
    }

    WittSequence witt_value() {
        const Token_& t = peek();
        std::string tag = ident();
        expect(":");
        if (tag == "lin") return WittSequence::linear(integer());
        if (tag != "tab") fail(t, "Witt sequence is lin:<l> or tab:[...]");
        expect("[");
        std::vector<i64> v{integer()};
        while (is_sym(",")) {
            next();
            v.push_back(integer());
        }
        expect("]");
        return WittSequence::table(v);
    }

    void params(FoamFile& f) {
        next();
        const Token_& nt = peek();
        ParamsDecl d;
        d.name = ident();
        check_fresh(f, nt, d.name);
        expect("{");
        std::set<std::string> seen;
        struct Raw {
            std::optional<i64> s, t1, t2, t3;
        } raw;
        while (!is_sym("}")) {
            const Token_& kt = peek();
            std::string key = ident();
            if (!seen.insert(key).second) fail(kt, "key '" + key + "' given twice");
            expect("=");
            if (key == "ring") {
                const Token_& rt = peek();
                std::string r = ident();
                if (r == "Z") {
                    d.params.ring = CoefRing::integers();
                } else if (r.size() > 1 && r[0] == 'F' && std::all_of(r.begin() + 1, r.end(), ::isdigit)) {
                    try {
                        d.params.ring = CoefRing::prime(std::stoll(r.substr(1)));
                    } catch (const Error& e) {
                        fail(rt, e.what(), e.kind());
                    } catch (const std::exception&) {
                        fail(rt, "bad prime");
                    }
                } else {
                    fail(rt, "ring is Z or F<p>");
                }
            } else if (key == "s") {
                raw.s = integer();
            } else if (key == "t1") {
                raw.t1 = integer();
            } else if (key == "t2") {
                raw.t2 = integer();
            } else if (key == "t3") {
                raw.t3 = integer();
            } else if (key == "nu1") {
                d.params.nu1 = witt_value();
            } else if (key == "nu2") {
                d.params.nu2 = witt_value();
            } else if (key == "nu3") {
                d.params.nu3 = witt_value();
            } else if (key == "spherical") {
                const Token_& bt = peek();
                std::string b = ident();
                if (b != "true" && b != "false") fail(bt, "spherical is true or false");
                d.params.spherical = b == "true";
            } else {
                fail(kt, "unknown parameter '" + key + "'");
            }
            expect(";");
        }
        expect("}");
        const CoefRing& R = d.params.ring;
        if (raw.s) d.params.s = R.norm(*raw.s);
        if (raw.t1) d.params.t1 = R.norm(*raw.t1);
        if (raw.t2) d.params.t2 = R.norm(*raw.t2);
        if (raw.t3) d.params.t3 = R.norm(*raw.t3);
        f.params.push_back(d);
    }

    void sum(FoamFile& f) {
        next();
        const Token_& nt = peek();
        SumDecl d;
        d.name = ident();
        check_fresh(f, nt, d.name);
        expect("=");
        i64 sign = 1;
        if (is_sym("-")) {
            next();
            sign = -1;
        }
        while (true) {
            i64 c = 1;
            if (peek().kind == Tok::Int) {
                c = integer();
                expect("*");
            }
            const Token_& mt = peek();
            std::string m = ident();
            if (!f.find_movie(m)) fail(mt, "unknown movie '" + m + "'", ErrorKind::UnresolvedId);
            d.terms.push_back({sign * c, m});
            if (is_sym("+")) {
                next();
                sign = 1;
            } else if (is_sym("-")) {
                next();
                sign = -1;
            } else {
                break;
            }
        }
        expect(";");
        f.sums.push_back(d);
    }
};

std::string gen_to_dsl(const std::string& var) {
    auto g = parse_generator(var);
    if (!g) return var;
    if (g->tag) throw Error(ErrorKind::InvalidArgument, "tagged generator " + var + " has no DSL form");
    char k = g->kind == SymKind::PowerSum ? 'p' : g->kind == SymKind::Elementary ? 'e' : 'h';
    std::string n = std::to_string(g->k);
    switch (g->family) {
        case GenFamily::Inner: return std::string(1, k) + "_" + n;
        case GenFamily::Hat: return "hat(" + std::string(1, k) + "_" + n + ")";
        case GenFamily::Global: return std::string(1, static_cast<char>(std::toupper(k))) + "_" + n;
        case GenFamily::Pigment: return "X_" + n;
    }
    return var;
}

std::string ring_to_dsl(const CoefRing& R) { return R.is_field() ? "F" + std::to_string(R.p) : "Z"; }

}  // namespace

FoamFile parse_foam(const std::string& text) { return Parser(text).file(); }

FoamFile parse_foam_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::InvalidArgument, "cannot read " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    try {
        return parse_foam(ss.str());
    } catch (const Error& e) {
        throw Error(e.kind(), path + ":" + std::string(e.what()).substr(std::string(error_name(e.kind())).size() + 2));
    }
}

MultiPoly parse_poly(const std::string& text) { return Parser(text).poly_only(); }

std::string poly_to_dsl(const MultiPoly& q) {
    if (q.is_zero()) return "0";
    const CoefRing& R = q.ring();
    std::string out;
    bool first = true;
    for (const auto& [mono, c0] : q.terms()) {
        i64 c = R.is_field() ? R.signed_rep(c0) : c0;
        bool neg = c < 0;
        i64 a = neg ? -c : c;
        out += first ? (neg ? "-" : "") : (neg ? " - " : " + ");
        first = false;
        std::vector<std::string> fs;
        for (std::size_t i = 0; i < mono.size(); ++i) {
            if (!mono[i]) continue;
            std::string f = gen_to_dsl(q.vars()[i]);
            if (mono[i] > 1) f += "^" + std::to_string(mono[i]);
            fs.push_back(f);
        }
        if (fs.empty() || a != 1) fs.insert(fs.begin(), std::to_string(a));
        for (std::size_t k = 0; k < fs.size(); ++k) out += (k ? "*" : "") + fs[k];
    }
    return out;
}

WittSequence parse_witt_spec(const std::string& s) {
    Parser p("params _w { nu1 = " + s + "; }");
    try {
        FoamFile f = p.file();
        return f.params.at(0).params.nu1;
    } catch (const Error& e) {
        throw Error(ErrorKind::InvalidArgument, "bad Witt sequence '" + s + "' (lin:<l> or tab:[v_-1,v_0,...])");
    }
}

std::string print_foam(const FoamFile& f) {
    std::ostringstream os;
    for (const auto& d : f.decorations) os << "decoration " << d.name << " = " << poly_to_dsl(d.poly) << ";\n";
    if (!f.decorations.empty()) os << "\n";
    for (const auto& d : f.params) {
        const ActionParams& P = d.params;
        os << "params " << d.name << " {\n";
        os << "  ring = " << ring_to_dsl(P.ring) << ";\n";
        os << "  s = " << P.ring.signed_rep(P.s) << ";\n";
        os << "  nu1 = " << P.nu1.spec() << ";\n";
        os << "  nu2 = " << P.nu2.spec() << ";\n";
        os << "  nu3 = " << P.nu3.spec() << ";\n";
        if (P.t1) os << "  t1 = " << P.ring.signed_rep(*P.t1) << ";\n";
        if (P.t2) os << "  t2 = " << P.ring.signed_rep(*P.t2) << ";\n";
        if (P.t3) os << "  t3 = " << P.ring.signed_rep(*P.t3) << ";\n";
        os << "  spherical = " << (P.spherical ? "true" : "false") << ";\n";
        os << "}\n\n";
    }
    for (const auto& d : f.webs) {
        os << "web " << d.name << " {\n";
        for (const auto& [id, e] : d.web.edges) {
            os << "  edge " << d.edge_names.at(id) << " thickness " << e.thickness;
            if (e.is_circle()) os << " orient " << (e.orient > 0 ? "ccw" : "cw");
            os << ";\n";
        }
        for (const auto& [vid, v] : d.web.vertices)
            os << "  vertex v" << vid << " " << (v.kind == VertexKind::Merge ? "merge" : "split") << " (" << d.edge_names.at(v.thin1) << ", "
               << d.edge_names.at(v.thin2) << "; " << d.edge_names.at(v.thick) << ");\n";
        os << "}\n\n";
    }
    for (const auto& d : f.movies) {
        const Movie& m = d.movie;
        os << "movie " << m.name << " on " << d.on << " {\n";
        std::map<int, std::string> live;
        std::set<std::string> used;
        auto fresh = [&](int id) {
            std::string n = "_e" + std::to_string(id);
            while (used.count(n)) n += "_";
            return n;
        };
        for (const auto& [id, _] : m.input.edges) {
            auto it = m.edge_names.find(id);
            live[id] = it != m.edge_names.end() ? it->second : fresh(id);
            used.insert(live[id]);
        }
        Slices sl = replay(m);
        for (std::size_t k = 0; k < m.moves.size(); ++k) {
            const BasicMove& mv = m.moves[k];
            auto ref = [&](int e) { return live.at(e); };
            os << "  ";
            switch (mv.kind) {
                case MoveKind::Cup: os << "cup(" << mv.a << (mv.orient < 0 ? ", cw" : "") << ")"; break;
                case MoveKind::Cap: os << "cap(" << mv.a << ") on " << ref(mv.e1); break;
                case MoveKind::DigonCup: os << "digon_cup(" << mv.a << ", " << mv.b << ") on " << ref(mv.e1); break;
                case MoveKind::DigonCap: os << "digon_cap(" << mv.a << ", " << mv.b << ") on (" << ref(mv.e1) << ", " << ref(mv.e2) << ")"; break;
                case MoveKind::Zip: os << "zip(" << mv.a << ", " << mv.b << ") on (" << ref(mv.e1) << ", " << ref(mv.e2) << ")"; break;
                case MoveKind::Unzip: os << "unzip(" << mv.a << ", " << mv.b << ") on " << ref(mv.e1); break;
                case MoveKind::Assoc: os << "assoc on " << ref(mv.e1); break;
                case MoveKind::Coassoc: os << "coassoc on " << ref(mv.e1); break;
                case MoveKind::Saddle: os << "saddle(" << mv.a << ") on (" << ref(mv.e1) << ", " << ref(mv.e2) << ")"; break;
                case MoveKind::Decorate: os << "decorate " << ref(mv.e1) << " with " << poly_to_dsl(mv.poly); break;
                case MoveKind::Isotopy: os << "isotopy"; break;
            }
            const MoveResult& r = sl.results[k];
            for (int e : r.consumed) {
                used.erase(live[e]);
                live.erase(e);
            }
            std::vector<std::string> names;
            bool any = false;
            for (std::size_t i = 0; i < r.created.size(); ++i) {
                int id = r.created[i];
                std::string n;
                if (k < d.binds.size() && d.binds[k].size() == r.created.size()) {
                    n = d.binds[k][i];
                } else {
                    auto it = m.edge_names.find(id);
                    n = it != m.edge_names.end() && !used.count(it->second) ? it->second : fresh(id);
                }
                if (n.empty() && live.count(id)) n = live[id];  // a repeated id (zip of circles)
                if (!n.empty()) {
                    live[id] = n;
                    used.insert(n);
                    any = true;
                }
                names.push_back(n.empty() ? "_" : n);
            }
            if (any) {
                os << " -> ";
                if (names.size() == 1) {
                    os << names[0];
                } else {
                    os << "(";
                    for (std::size_t i = 0; i < names.size(); ++i) os << (i ? ", " : "") << names[i];
                    os << ")";
                }
            }
            os << ";\n";
        }
        os << "}\n\n";
    }
    for (const auto& d : f.sums) {
        os << "sum " << d.name << " =";
        for (std::size_t i = 0; i < d.terms.size(); ++i) {
            auto [c, n] = d.terms[i];
            i64 a = c < 0 ? -c : c;
            os << (i == 0 ? (c < 0 ? " -" : " ") : (c < 0 ? " - " : " + "));
            if (a != 1) os << a << "*";
            os << n;
        }
        os << ";\n";
    }
    std::string s = os.str();
    while (s.size() >= 2 && s[s.size() - 1] == '\n' && s[s.size() - 2] == '\n') s.pop_back();
    return s;
}

FoamFile foam_sum_file(const FoamSum& v, const std::string& name) {
    FoamFile f;
    std::string on = "empty";
    if (!v.shape.input.empty()) {
        WebDecl w;
        w.name = name + "_in";
        w.web = v.shape.input;
        for (const auto& [id, _] : w.web.edges) {
            auto it = v.shape.edge_names.find(id);
            w.edge_names[id] = it != v.shape.edge_names.end() ? it->second : "e" + std::to_string(id);
        }
        f.webs.push_back(w);
        on = w.name;
    }
    SumDecl s;
    s.name = name;
    const CoefRing& R = v.z.ring();
    int k = 0;
    for (auto& [c, m] : expand_terms(v)) {
        MovieDecl d;
        d.movie = m;
        d.movie.name = name + "_" + std::to_string(++k);
        d.movie.input = v.shape.input;
        d.movie.edge_names = v.shape.edge_names;
        if (on != "empty")
            for (const auto& [id, n] : f.webs[0].edge_names) d.movie.edge_names[id] = n;
        d.on = on;
        f.movies.push_back(d);
        s.terms.push_back({R.is_field() ? R.signed_rep(c) : c, d.movie.name});
    }
    if (!s.terms.empty()) f.sums.push_back(s);
    return f;
}

std::vector<std::pair<i64, Movie>> resolve_target(const FoamFile& f, const std::string& name) {
    if (const auto* m = f.find_movie(name)) return {{1, m->movie}};
    if (const auto* s = f.find_sum(name)) {
        std::vector<std::pair<i64, Movie>> out;
        for (const auto& [c, n] : s->terms) out.push_back({c, f.find_movie(n)->movie});
        return out;
    }
    throw Error(ErrorKind::UnresolvedId, "no movie or sum named '" + name + "'");
}

}  // namespace foamlab
