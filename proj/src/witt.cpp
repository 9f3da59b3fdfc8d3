#include "foamlab/witt.hpp"

#include "foamlab/sym.hpp"

namespace foamlab {

MultiPoly witt_act(int n, const MultiPoly& q, const std::vector<std::string>& vars) {
    if (n < -1) throw Error(ErrorKind::IndexOutOfRange, "L_n needs n >= -1");
    const std::vector<std::string>& vs = vars.empty() ? q.vars() : vars;
    MultiPoly r(q.ring());
    for (const auto& z : vs) {
        MultiPoly d = q.derivative(z);
        if (d.is_zero()) continue;
        if (n + 1 > 0) d *= MultiPoly::monomial(q.ring(), z, n + 1);
        r -= d;
    }
    return r;
}

MultiPoly p_derivation(const MultiPoly& q, int iterate) {
    if (!q.ring().is_field()) throw Error(ErrorKind::WrongRing, "p-derivation needs coefficients in F_p");
    MultiPoly r = q;
    for (int k = 0; k < iterate; ++k) {
        MultiPoly s(q.ring());
        for (const auto& z : r.vars()) {
            MultiPoly d = r.derivative(z);
            if (!d.is_zero()) s += d * MultiPoly::monomial(q.ring(), z, 2);
        }
        r = s;
    }
    return r;
}

MultiPoly twisted_p_derivation(const MultiPoly& q, const MultiPoly& t, int iterate) {
    if (!q.ring().is_field()) throw Error(ErrorKind::WrongRing, "p-derivation needs coefficients in F_p");
    MultiPoly r = q;
    for (int k = 0; k < iterate; ++k) r = p_derivation(r, 1) + t * r;
    return r;
}

WittSequence WittSequence::linear(i64 lambda, int n_max) {
    WittSequence s;
    s.tag_ = Tag::Linear;
    s.lambda_ = lambda;
    s.n_max_ = n_max;
    return s;
}

WittSequence WittSequence::table(std::vector<i64> v) {
    if (v.empty()) throw Error(ErrorKind::InvalidArgument, "empty Witt table");
    WittSequence s;
    s.tag_ = Tag::Table;
    s.values_ = std::move(v);
    s.n_max_ = static_cast<int>(s.values_.size()) - 2;
    return s;
}

i64 WittSequence::at(int n, const CoefRing& R) const {
    if (n < -1 || n > n_max_)
        throw Error(ErrorKind::IndexOutOfRange, "Witt sequence index " + std::to_string(n) + " outside [-1, " + std::to_string(n_max_) + "]");
    if (tag_ == Tag::Linear) return R.mul(R.norm(lambda_), R.norm(n + 1));
    return R.norm(values_[n + 1]);
}

bool WittSequence::is_zero() const {
    if (tag_ == Tag::Linear) return lambda_ == 0;
    for (i64 v : values_)
        if (v) return false;
    return true;
}

std::string WittSequence::spec() const {
    if (tag_ == Tag::Linear) return "lin:" + std::to_string(lambda_);
    std::string s = "tab:[";
    for (std::size_t i = 0; i < values_.size(); ++i) s += (i ? "," : "") + std::to_string(values_[i]);
    return s + "]";
}

WittCheck witt_sequence_check(const WittSequence& s, const CoefRing& R) {
    WittCheck res;
    if (s.at(-1, R) != 0) {
        res.ok = false;
        res.n = -1;
        res.m = -1;
        return res;
    }
    int nm = s.n_max();
    auto rel = [&](int n, int m) {
        i64 lhs = R.sub(R.mul(R.norm(n), s.at(n, R)), R.mul(R.norm(m), s.at(m, R)));
        i64 rhs = R.mul(R.norm(n - m), s.at(n + m, R));
        return lhs == rhs;
    };
    for (int n = 1; n <= nm; ++n)
        for (int m = 0; m < n && n + m <= nm; ++m)
            if (!rel(n, m)) return {false, n, m};
    for (int n = 0; n <= nm; ++n)
        if (!rel(n, -1)) return {false, n, -1};
    return res;
}

const MultiPoly& FlatSequence::at(int n) const {
    if (n < -1 || n > n_max()) throw Error(ErrorKind::IndexOutOfRange, "flat sequence index " + std::to_string(n));
    return tau[n + 1];
}

MultiPoly twisted_witt_act(int n, const FlatSequence& tau, const MultiPoly& q) {
    return witt_act(n, q) + tau.at(n) * q;
}

std::vector<Curvature> flatness_check(const FlatSequence& tau) {
    std::vector<Curvature> out;
    int nm = tau.n_max();
    for (int n = -1; n <= nm; ++n)
        for (int m = -1; m < n; ++m) {
            if (n + m > nm || n + m < -1) continue;
            MultiPoly k = witt_act(n, tau.at(m)) - witt_act(m, tau.at(n)) - tau.at(n + m).scaled(n - m);
            out.push_back({n, m, k});
        }
    return out;
}

bool is_flat(const FlatSequence& tau) {
    for (auto& c : flatness_check(tau))
        if (!c.kappa.is_zero()) return false;
    return true;
}

MultiPoly base_change(const MultiPoly& q, BaseChange phi, i64 p, int N) {
    if (phi == BaseChange::ToPrimeField) return q.change_ring(CoefRing::prime(p));
    std::vector<std::string> xs = pigment_vars(N);
    for (const auto& v : q.vars()) {
        bool ok = false;
        for (const auto& x : xs) ok = ok || x == v;
        if (!ok && q.degree_in(v) > 0)
            throw Error(ErrorKind::NotInSymmetricSubring, "variable " + v + " is not one of X1..X" + std::to_string(N));
    }
    if (!is_symmetric_in(q, xs)) throw Error(ErrorKind::NotInSymmetricSubring, q.str() + " is not symmetric in X1..X" + std::to_string(N));
    return MultiPoly::constant(q.ring(), q.constant_term());
}

}  // namespace foamlab
