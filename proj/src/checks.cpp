#include "foamlab/checks.hpp"

#include "foamlab/statespace.hpp"

namespace foamlab {

void SuiteResult::fail(const std::string& msg) {
    ok = false;
    if (failures.size() < 10) failures.push_back(msg);
}

void SuiteResult::count(const std::string& what, long n) {
    checks += n;
    for (auto& [k, v] : counts)
        if (k == what) {
            v += n;
            return;
        }
    counts.push_back({what, n});
}

std::vector<std::string> suite_names() { return {"euler", "commutators", "compat", "pdg"}; }

ActionParams random_witt_pack(std::mt19937_64& rng, CoefRing R, bool spherical) {
    std::uniform_int_distribution<i64> d(-50, 50);
    ActionParams P;
    P.ring = R;
    P.s = R.norm(d(rng));
    P.nu1 = WittSequence::linear(d(rng));
    P.nu2 = WittSequence::linear(d(rng));
    P.nu3 = spherical ? WittSequence::linear(d(rng)) : WittSequence::zero();
    P.spherical = spherical;
    return P;
}

ActionParams random_sl2_pack(std::mt19937_64& rng, CoefRing R) {
    std::uniform_int_distribution<i64> d(-50, 50);
    ActionParams P;
    P.ring = R;
    P.t1 = R.norm(d(rng));
    P.t2 = R.norm(d(rng));
    P.t3 = R.norm(d(rng));
    return P;
}

namespace {

const CoefRing BIG = CoefRing::prime(kBigPrime);

void euler_suite(SuiteResult& res, const SuiteOptions& opt) {
    for (const auto& e : standard_corpus(opt.seed, opt.spherical, opt.with_saddles)) {
        Movie m = undecorated(e.movie);
        FoamComplex F = compile(m);
        int deg = shape_degree(F, e.N);
        for_each_coloring(F, e.N, [&](const Coloring& c) {
            int chi = 0;
            for (int i = 1; i <= e.N; ++i)
                for (int j = i + 1; j <= e.N; ++j) chi += bichrome_euler(F, c, i, j);
            res.count("degree identity");
            if (deg != -chi) res.fail(e.movie.name + ": degree " + std::to_string(deg) + " vs -chi " + std::to_string(-chi));
            LocalCounts lc = tally_counts(F, c, e.N);
            for (int i = 1; i <= e.N; ++i) {
                if (e.spherical) {
                    res.count("monochrome");
                    if (lc.cups[i - 1] != lc.caps[i - 1] || monochrome_euler(F, c, i) != lc.cups[i - 1] + lc.caps[i - 1])
                        res.fail(e.movie.name + ": monochrome Euler count for pigment " + std::to_string(i));
                }
                for (int j = 1; j <= e.N; ++j) {
                    if (i == j) continue;
                    const PairCounts &p = lc.at(i, j), &q = lc.at(j, i);
                    res.count("zip/unzip/merge/split");
                    if (p.Z + p.V != p.Y + p.Lambda) res.fail(e.movie.name + ": Z + V != Y + Lambda");
                    if (e.spherical) {
                        res.count("bichrome");
                        if (p.U + q.A != q.U + p.A) res.fail(e.movie.name + ": cup/cap balance");
                    }
                    if (i < j && bichrome_euler(F, c, i, j) != tally_euler(lc, i, j))
                        res.fail(e.movie.name + ": bichrome Euler characteristic disagrees with the tally");
                }
            }
        });
    }
}

void commutator_suite(SuiteResult& res, const SuiteOptions& opt) {
    std::mt19937_64 rng(opt.seed);
    auto spherical = basic_foams(3, false);
    auto all = basic_foams(2, true);
    for (int pack = 0; pack < opt.packs; ++pack) {
        ActionParams P = random_witt_pack(rng, BIG, true);
        ActionParams Q = random_witt_pack(rng, BIG, false);
        for (int n = -1; n <= opt.nmax; ++n)
            for (int m = -1; m <= opt.nmax; ++m) {
                for (const Movie& f : spherical) {
                    CheckReport r = commutator_check(n, m, P, f);
                    res.count("witt spherical");
                    if (!r.ok) res.fail(r.message);
                }
                for (const Movie& f : all) {
                    CheckReport r = commutator_check(n, m, Q, f);
                    res.count("witt non-spherical");
                    if (!r.ok) res.fail(r.message);
                }
            }
        ActionParams S = random_sl2_pack(rng, BIG);
        ActionParams Z = random_sl2_pack(rng, CoefRing::integers());
        for (const Movie& f : spherical) {
            for (const ActionParams* A : {&S, &Z}) {
                CheckReport r = sl2_check(*A, f);
                res.count(A == &S ? "sl2 F_p" : "sl2 Z");
                if (!r.ok) res.fail(r.message);
            }
        }
    }
}

void compat_suite(SuiteResult& res, const SuiteOptions& opt) {
    std::mt19937_64 rng(opt.seed + 1);
    for (const auto& e : standard_corpus(opt.seed, opt.spherical, opt.with_saddles)) {
        ActionParams P = random_witt_pack(rng, BIG, e.spherical);
        for (int n = -1; n <= opt.nmax; ++n) {
            CheckReport r = verify_compat(e.movie, n, P, e.N);
            if (!r.ok) res.fail(e.movie.name + ": " + r.message);
        }
        res.count(e.spherical ? "spherical foams" : "foams with saddles");
    }
}

void pdg_suite(SuiteResult& res, const SuiteOptions& opt) {
    std::mt19937_64 rng(opt.seed + 2);
    for (i64 p : {2, 3, 5}) {
        CoefRing R = CoefRing::prime(p);
        ActionParams P = random_sl2_pack(rng, R);
        for (const Movie& f : basic_foams(p == 2 ? 3 : 2, false)) {
            FoamSum v = act_pdg(f, P, static_cast<int>(p));
            res.count("basic foams");
            if (!vanishes_on_colorings(v, 4)) res.fail(f.name + ": d^" + std::to_string(p) + " = " + v.z.str());
        }
        if (p > 2) {
            ActionParams S = P;
            S.spherical = false;
            S.t3.reset();
            for (const Movie& f : basic_foams(2, true)) {
                FoamSum v = act_pdg(f, S, static_cast<int>(p));
                res.count("basic foams");
                if (!vanishes_on_colorings(v, 4)) res.fail(f.name + ": d^" + std::to_string(p) + " (non-spherical)");
            }
        }
    }
    for (i64 p : {3, 5}) {
        ActionParams P;
        P.ring = CoefRing::prime(p);
        for (int N = 2; N <= 4; ++N)
            for (int a = 1; a < N; ++a)
                for (Base base : {Base::Equivariant, Base::Phi0}) {
                    OperatorMatrix D = induced_action(parse_operator("d"), P, circle_presentation(a, N, 1), N, base);
                    res.count("state-space matrices");
                    if (!poly_is_zero(operator_power(D, static_cast<int>(p), P)))
                        res.fail("d^" + std::to_string(p) + " != 0 on circle(" + std::to_string(a) + "), N=" + std::to_string(N) + ", " + base_name(base));
                }
    }
    ActionParams P2;
    P2.ring = CoefRing::prime(2);
    P2.t3 = 1;
    for (int N = 2; N <= 4; ++N)
        for (int a = 1; a < N; ++a) {
            OperatorMatrix D = induced_action(parse_operator("d"), P2, circle_presentation(a, N, 1), N);
            res.count("state-space matrices");
            if (!poly_is_zero(operator_power(D, 2, P2))) res.fail("d^2 != 0 on circle(" + std::to_string(a) + "), N=" + std::to_string(N) + ", p=2");
        }
}

}  // namespace

SuiteResult run_suite(const std::string& name, const SuiteOptions& opt) {
    SuiteResult res;
    res.suite = name;
    try {
        if (name == "euler") euler_suite(res, opt);
        else if (name == "commutators") commutator_suite(res, opt);
        else if (name == "compat") compat_suite(res, opt);
        else if (name == "pdg") pdg_suite(res, opt);
        else throw Error(ErrorKind::InvalidArgument, "unknown suite '" + name + "' (euler, commutators, compat, pdg)");
    } catch (const Error& e) {
        if (!is_math_failure(e.kind())) throw;
        res.fail(e.what());
    }
    return res;
}

}  // namespace foamlab
