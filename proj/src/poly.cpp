#include "foamlab/poly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace foamlab {

bool natural_less(const std::string& a, const std::string& b) {
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        bool da = std::isdigit(static_cast<unsigned char>(a[i]));
        bool db = std::isdigit(static_cast<unsigned char>(b[j]));
        if (da && db) {
            std::size_t i2 = i, j2 = j;
            while (i2 < a.size() && std::isdigit(static_cast<unsigned char>(a[i2]))) ++i2;
            while (j2 < b.size() && std::isdigit(static_cast<unsigned char>(b[j2]))) ++j2;
            long long x = std::stoll(a.substr(i, i2 - i));
            long long y = std::stoll(b.substr(j, j2 - j));
            if (x != y) return x < y;
            i = i2;
            j = j2;
        } else {
            if (a[i] != b[j]) return a[i] < b[j];
            ++i;
            ++j;
        }
    }
    return (a.size() - i) < (b.size() - j);
}

bool GrlexGreater::operator()(const Mono& a, const Mono& b) const {
    int da = 0, db = 0;
    for (int e : a) da += e;
    for (int e : b) db += e;
    if (da != db) return da > db;
    return a > b;
}

Alphabet make_alphabet(std::vector<std::string> names) {
    std::sort(names.begin(), names.end(), natural_less);
    names.erase(std::unique(names.begin(), names.end()), names.end());
    return std::make_shared<const std::vector<std::string>>(std::move(names));
}

Alphabet alphabet_union(const Alphabet& a, const Alphabet& b) {
    if (a == b || *a == *b) return a;
    std::vector<std::string> out;
    out.reserve(a->size() + b->size());
    std::merge(a->begin(), a->end(), b->begin(), b->end(), std::back_inserter(out), natural_less);
    out.erase(std::unique(out.begin(), out.end()), out.end());
    if (out == *a) return a;
    if (out == *b) return b;
    return std::make_shared<const std::vector<std::string>>(std::move(out));
}

std::string scalar_str(const CoefRing& R, i64 c) { return std::to_string(R.signed_rep(c)); }

MultiPoly::MultiPoly() : MultiPoly(CoefRing::integers()) {}
MultiPoly::MultiPoly(CoefRing R) : ring_(R), vars_(make_alphabet({})) {}
MultiPoly::MultiPoly(CoefRing R, std::vector<std::string> vars) : ring_(R), vars_(make_alphabet(std::move(vars))) {}

MultiPoly MultiPoly::constant(CoefRing R, i64 c) {
    MultiPoly p(R);
    p.add_term({}, c);
    return p;
}

MultiPoly MultiPoly::variable(CoefRing R, const std::string& name) { return monomial(R, name, 1, 1); }

MultiPoly MultiPoly::monomial(CoefRing R, const std::string& name, int exp, i64 c) {
    MultiPoly p(R, {name});
    p.add_term({exp}, c);
    return p;
}

int MultiPoly::var_index(const std::string& name) const {
    auto it = std::lower_bound(vars_->begin(), vars_->end(), name, natural_less);
    if (it != vars_->end() && *it == name) return static_cast<int>(it - vars_->begin());
    return -1;
}

void MultiPoly::add_term(const Mono& m, i64 c) {
    c = ring_.norm(c);
    if (c == 0) return;
    Mono mm = m;
    mm.resize(vars_->size(), 0);
    auto it = terms_.find(mm);
    if (it == terms_.end()) {
        terms_.emplace(std::move(mm), c);
    } else {
        it->second = ring_.add(it->second, c);
        if (it->second == 0) terms_.erase(it);
    }
}

bool MultiPoly::is_constant() const {
    if (terms_.empty()) return true;
    if (terms_.size() > 1) return false;
    for (int e : terms_.begin()->first)
        if (e) return false;
    return true;
}

i64 MultiPoly::constant_term() const {
    Mono z(vars_->size(), 0);
    auto it = terms_.find(z);
    return it == terms_.end() ? 0 : it->second;
}

int MultiPoly::total_degree() const {
    if (terms_.empty()) return -1;
    int d = 0;
    for (int e : terms_.begin()->first) d += e;
    return d;
}

bool MultiPoly::is_homogeneous() const {
    if (terms_.empty()) return true;
    int d = total_degree();
    for (auto& [m, c] : terms_) {
        int s = 0;
        for (int e : m) s += e;
        if (s != d) return false;
    }
    return true;
}

int MultiPoly::degree_in(const std::string& var) const {
    int k = var_index(var);
    if (k < 0) return terms_.empty() ? -1 : 0;
    int d = -1;
    for (auto& [m, c] : terms_) d = std::max(d, m[k]);
    return d;
}

MultiPoly MultiPoly::embed(const Alphabet& bigger) const {
    if (bigger == vars_ || *bigger == *vars_) {
        MultiPoly r = *this;
        r.vars_ = bigger;
        return r;
    }
    std::vector<int> pos(vars_->size());
    for (std::size_t i = 0; i < vars_->size(); ++i) {
        auto it = std::lower_bound(bigger->begin(), bigger->end(), (*vars_)[i], natural_less);
        if (it == bigger->end() || *it != (*vars_)[i])
            throw Error(ErrorKind::InvalidArgument, "embed: alphabet is not a superset");
        pos[i] = static_cast<int>(it - bigger->begin());
    }
    MultiPoly r(ring_);
    r.vars_ = bigger;
    for (auto& [m, c] : terms_) {
        Mono mm(bigger->size(), 0);
        for (std::size_t i = 0; i < m.size(); ++i) mm[pos[i]] = m[i];
        r.terms_.emplace(std::move(mm), c);
    }
    return r;
}

MultiPoly MultiPoly::trimmed() const {
    std::vector<bool> used(vars_->size(), false);
    for (auto& [m, c] : terms_)
        for (std::size_t i = 0; i < m.size(); ++i)
            if (m[i]) used[i] = true;
    std::vector<std::string> names;
    for (std::size_t i = 0; i < used.size(); ++i)
        if (used[i]) names.push_back((*vars_)[i]);
    if (names.size() == vars_->size()) return *this;
    MultiPoly r(ring_, names);
    for (auto& [m, c] : terms_) {
        Mono mm;
        for (std::size_t i = 0; i < m.size(); ++i)
            if (used[i]) mm.push_back(m[i]);
        r.terms_.emplace(std::move(mm), c);
    }
    return r;
}

void MultiPoly::unify(const MultiPoly& o, MultiPoly& a, MultiPoly& b) const {
    if (ring_ != o.ring_)
        throw Error(ErrorKind::WrongRing, "mixing coefficient rings " + ring_.name() + " and " + o.ring_.name());
    Alphabet u = alphabet_union(vars_, o.vars_);
    a = embed(u);
    b = o.embed(u);
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
    MultiPoly r = *this;
    r += o;
    return r;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
    if (o.terms_.empty() && ring_ == o.ring_) return *this;
    MultiPoly a, b;
    unify(o, a, b);
    *this = std::move(a);
    for (auto& [m, c] : b.terms_) add_term(m, c);
    return *this;
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly r = *this;
    for (auto& [m, c] : r.terms_) c = ring_.neg(c);
    return r;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const { return *this + (-o); }
MultiPoly& MultiPoly::operator-=(const MultiPoly& o) { return *this += (-o); }

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
    MultiPoly a, b;
    unify(o, a, b);
    MultiPoly r(ring_);
    r.vars_ = a.vars_;
    std::size_t n = a.vars_->size();
    for (auto& [m1, c1] : a.terms_) {
        for (auto& [m2, c2] : b.terms_) {
            Mono m(n);
            for (std::size_t i = 0; i < n; ++i) m[i] = m1[i] + m2[i];
            r.add_term(m, ring_.mul(c1, c2));
        }
    }
    return r;
}

MultiPoly& MultiPoly::operator*=(const MultiPoly& o) { return *this = *this * o; }

MultiPoly MultiPoly::scaled(i64 c) const {
    MultiPoly r(ring_);
    r.vars_ = vars_;
    c = ring_.norm(c);
    if (c == 0) return r;
    for (auto& [m, x] : terms_) r.add_term(m, ring_.mul(x, c));
    return r;
}

MultiPoly MultiPoly::pow(unsigned e) const {
    MultiPoly r = constant(ring_, 1);
    MultiPoly b = *this;
    while (e > 0) {
        if (e & 1) r *= b;
        e >>= 1;
        if (e) b *= b;
    }
    return r;
}

bool MultiPoly::operator==(const MultiPoly& o) const {
    if (ring_ != o.ring_) return false;
    if (*vars_ == *o.vars_) return terms_ == o.terms_;
    return (*this - o).is_zero();
}

bool MultiPoly::divides_into(const MultiPoly& bb, MultiPoly& q) const {
    if (bb.is_zero()) throw Error(ErrorKind::DivisionNotExact, "division by zero polynomial");
    MultiPoly a, b;
    unify(bb, a, b);
    q = MultiPoly(ring_);
    q.vars_ = a.vars_;
    const auto& [lm, lc] = *b.terms_.begin();
    if (!ring_.invertible(lc) && ring_.kind == CoefRing::PrimeField) return false;
    std::size_t n = a.vars_->size();
    while (!a.terms_.empty()) {
        const auto& [am, ac] = *a.terms_.begin();
        Mono qm(n);
        for (std::size_t i = 0; i < n; ++i) {
            qm[i] = am[i] - lm[i];
            if (qm[i] < 0) return false;
        }
        i64 qc;
        if (ring_.kind == CoefRing::Integers) {
            if (ac % lc != 0) return false;
            qc = ac / lc;
        } else {
            qc = ring_.mul(ac, ring_.inv(lc));
        }
        MultiPoly t(ring_);
        t.vars_ = a.vars_;
        t.add_term(qm, qc);
        q.add_term(qm, qc);
        a -= t * b;
    }
    return true;
}

MultiPoly MultiPoly::exact_div(const MultiPoly& b) const {
    MultiPoly q;
    if (!divides_into(b, q)) throw Error(ErrorKind::DivisionNotExact, "(" + str() + ") / (" + b.str() + ")");
    return q;
}

MultiPoly MultiPoly::derivative(const std::string& var) const {
    int k = var_index(var);
    MultiPoly r(ring_);
    r.vars_ = vars_;
    if (k < 0) return r;
    for (auto& [m, c] : terms_) {
        if (m[k] == 0) continue;
        Mono mm = m;
        mm[k] -= 1;
        r.add_term(mm, ring_.mul(c, ring_.norm(m[k])));
    }
    return r;
}

MultiPoly MultiPoly::subst(const std::map<std::string, MultiPoly>& s) const {
    // powers cache per substituted variable
    std::vector<const MultiPoly*> img(vars_->size(), nullptr);
    std::vector<std::vector<MultiPoly>> powers(vars_->size());
    std::vector<std::string> kept;
    for (std::size_t i = 0; i < vars_->size(); ++i) {
        auto it = s.find((*vars_)[i]);
        if (it != s.end())
            img[i] = &it->second;
        else
            kept.push_back((*vars_)[i]);
    }
    auto power = [&](std::size_t i, int e) -> const MultiPoly& {
        auto& pv = powers[i];
        if (pv.empty()) pv.push_back(constant(ring_, 1));
        while (static_cast<int>(pv.size()) <= e) pv.push_back(pv.back() * *img[i]);
        return pv[e];
    };
    MultiPoly r(ring_, kept);
    for (auto& [m, c] : terms_) {
        MultiPoly t(ring_, kept);
        Mono km;
        for (std::size_t i = 0; i < m.size(); ++i)
            if (!img[i]) km.push_back(m[i]);
        t.add_term(km, c);
        for (std::size_t i = 0; i < m.size(); ++i)
            if (img[i] && m[i] > 0) t *= power(i, m[i]);
        r += t;
    }
    return r;
}

MultiPoly MultiPoly::swap_vars(const std::string& a, const std::string& b) const {
    int i = var_index(a), j = var_index(b);
    if (i < 0 && j < 0) return *this;
    std::map<std::string, MultiPoly> s;
    s.emplace(a, variable(ring_, b));
    s.emplace(b, variable(ring_, a));
    return subst(s);
}

MultiPoly MultiPoly::change_ring(CoefRing R) const {
    if (ring_.kind == CoefRing::PrimeField && !(R == ring_))
        throw Error(ErrorKind::WrongRing, "no ring map from " + ring_.name() + " to " + R.name());
    MultiPoly r(R);
    r.vars_ = vars_;
    for (auto& [m, c] : terms_) r.add_term(m, c);
    return r;
}

MultiPoly MultiPoly::homogeneous_part(int d) const {
    MultiPoly r(ring_);
    r.vars_ = vars_;
    for (auto& [m, c] : terms_) {
        int s = 0;
        for (int e : m) s += e;
        if (s == d) r.terms_.emplace(m, c);
    }
    return r;
}

MultiPoly MultiPoly::map_terms(const std::function<MultiPoly(const Mono&, i64)>& f) const {
    MultiPoly r(ring_);
    for (auto& [m, c] : terms_) r += f(m, c);
    return r;
}

std::string MultiPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [m, c] : terms_) {
        i64 v = ring_.signed_rep(c);
        bool neg = v < 0;
        i64 a = neg ? -v : v;
        if (first) {
            if (neg) os << "-";
        } else {
            os << (neg ? " - " : " + ");
        }
        first = false;
        bool any = false;
        for (int e : m) any = any || e;
        if (!any) {
            os << a;
            continue;
        }
        bool need_star = false;
        if (a != 1) {
            os << a;
            need_star = true;
        }
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (!m[i]) continue;
            if (need_star) os << "*";
            os << (*vars_)[i];
            if (m[i] > 1) os << "^" << m[i];
            need_star = true;
        }
    }
    return os.str();
}

}  // namespace foamlab
