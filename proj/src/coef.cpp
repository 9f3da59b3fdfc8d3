#include "foamlab/coef.hpp"

namespace foamlab {

const char* error_name(ErrorKind k) {
    switch (k) {
        case ErrorKind::DivisionNotExact: return "DivisionNotExact";
        case ErrorKind::WrongRing: return "WrongRing";
        case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
        case ErrorKind::NotInSymmetricSubring: return "NotInSymmetricSubring";
        case ErrorKind::TwoNotInvertible: return "TwoNotInvertible";
        case ErrorKind::Overflow: return "Overflow";
        case ErrorKind::FlowViolation: return "FlowViolation";
        case ErrorKind::InvalidWeb: return "InvalidWeb";
        case ErrorKind::PatternMismatch: return "PatternMismatch";
        case ErrorKind::BoundaryMismatch: return "BoundaryMismatch";
        case ErrorKind::BindingInconsistent: return "BindingInconsistent";
        case ErrorKind::SeamSignInconsistent: return "SeamSignInconsistent";
        case ErrorKind::OddEuler: return "OddEuler";
        case ErrorKind::NotPolynomial: return "NotPolynomial";
        case ErrorKind::NotSymmetric: return "NotSymmetric";
        case ErrorKind::NonHomogeneous: return "NonHomogeneous";
        case ErrorKind::NonSphericalWithNu3: return "NonSphericalWithNu3";
        case ErrorKind::CharTwoNonSpherical: return "CharTwoNonSpherical";
        case ErrorKind::RankUnstable: return "RankUnstable";
        case ErrorKind::NotWellDefined: return "NotWellDefined";
        case ErrorKind::SyntaxError: return "SyntaxError";
        case ErrorKind::UnresolvedId: return "UnresolvedId";
        case ErrorKind::InvalidArgument: return "InvalidArgument";
    }
    return "Error";
}

bool is_math_failure(ErrorKind k) {
    switch (k) {
        case ErrorKind::BindingInconsistent:
        case ErrorKind::SeamSignInconsistent:
        case ErrorKind::OddEuler:
        case ErrorKind::NotPolynomial:
        case ErrorKind::NotSymmetric:
        case ErrorKind::RankUnstable:
        case ErrorKind::NotWellDefined:
        case ErrorKind::DivisionNotExact:
            return true;
        default:
            return false;
    }
}

bool is_prime(i64 n) {
    if (n < 2) return false;
    for (i64 d : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        if (n % d == 0) return n == d;
    }
    // deterministic Miller-Rabin for 64-bit
    auto mulmod = [](unsigned __int128 a, unsigned __int128 b, unsigned __int128 m) {
        return static_cast<i64>((a * b) % m);
    };
    auto powmod = [&](i64 a, i64 e, i64 m) {
        i64 r = 1;
        a %= m;
        while (e > 0) {
            if (e & 1) r = mulmod(r, a, m);
            a = mulmod(a, a, m);
            e >>= 1;
        }
        return r;
    };
    i64 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (i64 a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        i64 x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool comp = true;
        for (int r = 1; r < s; ++r) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                comp = false;
                break;
            }
        }
        if (comp) return false;
    }
    return true;
}

CoefRing CoefRing::prime(i64 p) {
    if (!is_prime(p)) throw Error(ErrorKind::InvalidArgument, "modulus " + std::to_string(p) + " is not prime");
    CoefRing r;
    r.kind = PrimeField;
    r.p = p;
    return r;
}

i64 CoefRing::norm(i64 a) const {
    if (kind == Integers) return a;
    i64 r = a % p;
    return r < 0 ? r + p : r;
}

i64 CoefRing::add(i64 a, i64 b) const {
    if (kind == Integers) {
        i64 r;
        if (__builtin_add_overflow(a, b, &r)) throw Error(ErrorKind::Overflow, "integer coefficient overflow");
        return r;
    }
    unsigned __int128 s = static_cast<unsigned __int128>(a) + static_cast<unsigned __int128>(b);
    return static_cast<i64>(s % static_cast<unsigned __int128>(p));
}

i64 CoefRing::sub(i64 a, i64 b) const { return add(a, neg(b)); }

i64 CoefRing::neg(i64 a) const {
    if (kind == Integers) {
        if (a == INT64_MIN) throw Error(ErrorKind::Overflow, "integer coefficient overflow");
        return -a;
    }
    return a == 0 ? 0 : p - a;
}

i64 CoefRing::mul(i64 a, i64 b) const {
    if (kind == Integers) {
        i64 r;
        if (__builtin_mul_overflow(a, b, &r)) throw Error(ErrorKind::Overflow, "integer coefficient overflow");
        return r;
    }
    __int128 r = static_cast<__int128>(a) * static_cast<__int128>(b);
    return static_cast<i64>(r % p);
}

i64 CoefRing::pow(i64 a, unsigned e) const {
    i64 r = norm(1);
    i64 b = a;
    while (e > 0) {
        if (e & 1) r = mul(r, b);
        e >>= 1;
        if (e) b = mul(b, b);
    }
    return r;
}

bool CoefRing::invertible(i64 a) const {
    if (kind == Integers) return a == 1 || a == -1;
    return norm(a) != 0;
}

i64 CoefRing::inv(i64 a) const {
    if (!invertible(a)) throw Error(ErrorKind::DivisionNotExact, "element " + std::to_string(a) + " is not invertible in " + name());
    if (kind == Integers) return a;
    i64 r = 1, b = norm(a);
    i64 e = p - 2;
    while (e > 0) {
        if (e & 1) r = mul(r, b);
        b = mul(b, b);
        e >>= 1;
    }
    return r;
}

i64 CoefRing::half() const {
    if (kind == Integers || p == 2) throw Error(ErrorKind::TwoNotInvertible, "1/2 is not available over " + name());
    return (p + 1) / 2;
}

i64 CoefRing::signed_rep(i64 a) const {
    if (kind == Integers) return a;
    a = norm(a);
    return a > p / 2 ? a - p : a;
}

std::string CoefRing::name() const {
    if (kind == Integers) return "Z";
    return "F_" + std::to_string(p);
}

}  // namespace foamlab
