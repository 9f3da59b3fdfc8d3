#include "foamlab/ratfun.hpp"

#include "foamlab/sym.hpp"

namespace foamlab {

MultiPoly pigment_difference(CoefRing R, int i, int j) {
    return MultiPoly::variable(R, pigment_var(i)) - MultiPoly::variable(R, pigment_var(j));
}

std::string RatFun::str() const {
    if (den.empty()) return num.str();
    std::string s = "(" + num.str() + ")/(";
    bool first = true;
    for (auto& [ij, m] : den) {
        if (!first) s += "*";
        first = false;
        s += "(X" + std::to_string(ij.first) + " - X" + std::to_string(ij.second) + ")";
        if (m > 1) s += "^" + std::to_string(m);
    }
    return s + ")";
}

RatFun ratfun_normalize(const RatFun& r) {
    RatFun out = r;
    if (out.num.is_zero()) {
        out.den.clear();
        return out;
    }
    for (auto it = out.den.begin(); it != out.den.end();) {
        MultiPoly d = pigment_difference(out.num.ring(), it->first.first, it->first.second);
        while (it->second > 0) {
            MultiPoly q;
            if (!out.num.divides_into(d, q)) break;
            out.num = q;
            --it->second;
        }
        if (it->second == 0)
            it = out.den.erase(it);
        else
            ++it;
    }
    return out;
}

RatFun ratfun_times_difference(RatFun r, int i, int j, int e) {
    int sign = 1;
    if (i > j) {
        std::swap(i, j);
        if (e % 2) sign = -1;
    }
    if (e > 0) {
        r.num *= pigment_difference(r.num.ring(), i, j).pow(static_cast<unsigned>(e));
    } else if (e < 0) {
        r.den[{i, j}] += -e;
    }
    if (sign < 0) r.num = -r.num;
    return r;
}

RatFun ratfun_sum(const std::vector<RatFun>& rs) {
    if (rs.empty()) return RatFun();
    std::map<std::pair<int, int>, int> common;
    for (auto& r : rs)
        for (auto& [ij, m] : r.den) common[ij] = std::max(common[ij], m);
    RatFun out;
    out.num = MultiPoly(rs.front().num.ring());
    out.den = common;
    for (auto& r : rs) {
        MultiPoly t = r.num;
        for (auto& [ij, m] : common) {
            auto it = r.den.find(ij);
            int have = it == r.den.end() ? 0 : it->second;
            if (m > have) t *= pigment_difference(t.ring(), ij.first, ij.second).pow(static_cast<unsigned>(m - have));
        }
        out.num += t;
    }
    return ratfun_normalize(out);
}

}  // namespace foamlab
