#include "foamlab/cli.hpp"

#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "foamlab/checks.hpp"
#include "foamlab/dsl.hpp"
#include "foamlab/statespace.hpp"

namespace foamlab {

namespace {

using json = nlohmann::ordered_json;

constexpr const char* kSchema = "foamlab.v1";

struct Output {
    json j = json::object();
    std::ostringstream text;
    int status = 0;
};

struct Target {
    FoamFile file;
    std::string name;
    std::vector<std::pair<i64, Movie>> terms;
};

Target load_target(const std::string& spec) {
    Target t;
    auto hash = spec.rfind('#');
    std::string path = hash == std::string::npos ? spec : spec.substr(0, hash);
    t.file = parse_foam_file(path);
    if (hash != std::string::npos) {
        t.name = spec.substr(hash + 1);
    } else if (t.file.movies.size() == 1 && t.file.sums.empty()) {
        t.name = t.file.movies[0].movie.name;
    } else {
        throw Error(ErrorKind::InvalidArgument, "name a movie or sum with " + path + "#<name>");
    }
    t.terms = resolve_target(t.file, t.name);
    return t;
}

std::string ring_label(const CoefRing& R) { return R.is_field() ? "F" + std::to_string(R.p) : "Z"; }

json laurent_json(const Laurent& L) {
    json j = json::object();
    for (const auto& [e, c] : L.coeffs()) j[std::to_string(e)] = c;
    return j;
}

json matrix_json(const PolyMatrix& M) {
    json rows = json::array();
    for (const auto& r : M) {
        json row = json::array();
        for (const auto& x : r) row.push_back(x.str());
        rows.push_back(row);
    }
    return rows;
}

void print_matrix(std::ostream& os, const PolyMatrix& M) {
    for (const auto& r : M) {
        os << "[";
        for (std::size_t k = 0; k < r.size(); ++k) os << (k ? ", " : "") << r[k].str();
        os << "]\n";
    }
}

// Operator parameters from a params declaration and flags.
struct ParamFlags {
    std::string params, nu1, nu2, nu3;
    i64 s = 0, t1 = 0, t2 = 0, t3 = 0, mod = 0;
    bool spherical = false, non_spherical = false;
    CLI::Option *o_s = nullptr, *o_t1 = nullptr, *o_t2 = nullptr, *o_t3 = nullptr, *o_mod = nullptr;

    void add(CLI::App* c) {
        c->add_option("--params", params, "parameter pack: <name> in the target file or <file>#<name>");
        o_s = c->add_option("--s", s, "scalar s");
        c->add_option("--nu1", nu1, "Witt sequence lin:<l> or tab:[...]");
        c->add_option("--nu2", nu2, "Witt sequence lin:<l> or tab:[...]");
        c->add_option("--nu3", nu3, "Witt sequence lin:<l> or tab:[...]");
        o_t1 = c->add_option("--t1", t1, "sl2 parameter t1");
        o_t2 = c->add_option("--t2", t2, "sl2 parameter t2");
        o_t3 = c->add_option("--t3", t3, "sl2 parameter t3");
        o_mod = c->add_option("--mod", mod, "work over F_p");
        auto* sp = c->add_flag("--spherical", spherical, "spherical parameters");
        c->add_flag("--non-spherical", non_spherical, "non-spherical parameters (nu3 = 0)")->excludes(sp);
    }

    ActionParams build(const Operator& op, const FoamFile* file, bool default_spherical) const {
        ActionParams P;
        bool from_file = false;
        if (!params.empty()) {
            auto hash = params.rfind('#');
            FoamFile other;
            const FoamFile* src = file;
            std::string name = params;
            if (hash != std::string::npos) {
                other = parse_foam_file(params.substr(0, hash));
                src = &other;
                name = params.substr(hash + 1);
            }
            const ParamsDecl* d = src ? src->find_params(name) : nullptr;
            if (!d) throw Error(ErrorKind::UnresolvedId, "no params named '" + name + "'");
            P = d->params;
            from_file = true;
        } else {
            P.spherical = default_spherical;
        }
        if (o_mod->count()) {
            P.ring = CoefRing::prime(mod);
        } else if (!from_file) {
            if (op.kind == OpKind::Witt) P.ring = CoefRing::prime(kBigPrime);
            if (op.kind == OpKind::D) throw Error(ErrorKind::WrongRing, "the differential needs --mod <p>");
        }
        const CoefRing& R = P.ring;
        if (o_s->count()) P.s = s;
        P.s = R.norm(P.s);
        if (!nu1.empty()) P.nu1 = parse_witt_spec(nu1);
        if (!nu2.empty()) P.nu2 = parse_witt_spec(nu2);
        if (!nu3.empty()) P.nu3 = parse_witt_spec(nu3);
        if (o_t1->count()) P.t1 = t1;
        if (o_t2->count()) P.t2 = t2;
        if (o_t3->count()) P.t3 = t3;
        for (auto* t : {&P.t1, &P.t2, &P.t3})
            if (*t) *t = R.norm(**t);
        if (spherical) P.spherical = true;
        if (non_spherical) P.spherical = false;
        return P;
    }
};

json params_json(const ActionParams& P) {
    json j;
    j["ring"] = ring_label(P.ring);
    j["s"] = P.ring.signed_rep(P.s);
    j["nu1"] = P.nu1.spec();
    j["nu2"] = P.nu2.spec();
    j["nu3"] = P.nu3.spec();
    for (auto [k, t] : {std::pair{"t1", &P.t1}, std::pair{"t2", &P.t2}, std::pair{"t3", &P.t3}})
        j[k] = *t ? json(P.ring.signed_rep(**t)) : json(nullptr);
    j["spherical"] = P.spherical;
    return j;
}

// Presentation flags shared by gram, rank and induced.
struct PresFlags {
    std::string web, gens, base = "equivariant";
    int N = 0, extra = 0;

    void add(CLI::App* c) {
        c->add_option("--web", web, "circle:a | digon:a,b | bad_digon:a,b | assoc:a,b,c | coassoc:a,b,c");
        c->add_option("--gens", gens, "generators <file>#<m1>,<m2>,... on one undecorated shape");
        c->add_option("--N", N, "number of pigments")->required();
        c->add_option("--base", base, "equivariant or phi0");
        c->add_option("--extra", extra, "extra decorated generators beyond the basis box");
    }

    Presentation build() const {
        if (N < 1) throw Error(ErrorKind::InvalidArgument, "--N must be positive");
        if (web.empty() == gens.empty()) throw Error(ErrorKind::InvalidArgument, "give exactly one of --web and --gens");
        if (!web.empty()) return standard_presentation(web, N, extra);
        auto hash = gens.rfind('#');
        if (hash == std::string::npos) throw Error(ErrorKind::InvalidArgument, "--gens needs <file>#<m1>,<m2>,...");
        FoamFile f = parse_foam_file(gens.substr(0, hash));
        std::vector<Movie> ms;
        std::stringstream ss(gens.substr(hash + 1));
        std::string n;
        while (std::getline(ss, n, ',')) {
            const MovieDecl* d = f.find_movie(n);
            if (!d) throw Error(ErrorKind::UnresolvedId, "no movie named '" + n + "'");
            ms.push_back(d->movie);
        }
        return presentation_from_movies(gens, ms, N);
    }
};

json header(const std::string& cmd) {
    json j;
    j["schema"] = kSchema;
    j["command"] = cmd;
    return j;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"foamlab: foam evaluation, Witt and sl2 actions, state spaces"};
    app.require_subcommand(1);
    bool as_json = false;
    app.add_flag("--json", as_json, "structured output (schema foamlab.v1)");
    Output o;
    std::string cmd;

    // eval
    auto* c_eval = app.add_subcommand("eval", "evaluate a closed movie or sum");
    int N = 0;
    i64 mod = 0;
    bool phi0 = false, breakdown = false;
    std::string target;
    c_eval->add_option("--N", N, "number of pigments")->required();
    auto* o_mod = c_eval->add_option("--mod", mod, "reduce coefficients mod p");
    c_eval->add_flag("--phi0", phi0, "kill equivariance")->excludes(o_mod);
    c_eval->add_flag("--breakdown", breakdown, "list the colored terms");
    c_eval->add_option("target", target, "<file>#<movie-or-sum>")->required();

    // degree
    auto* c_deg = app.add_subcommand("degree", "degree of a movie or sum");
    c_deg->add_option("--N", N, "number of pigments")->required();
    c_deg->add_option("target", target, "<file>#<movie-or-sum>")->required();

    // act
    auto* c_act = app.add_subcommand("act", "apply L_n, e, h, f or d to a movie or sum");
    std::string op_text;
    int iterate = 1;
    ParamFlags act_flags;
    c_act->add_option("--op", op_text, "L:<n> | e | h | f | d")->required();
    c_act->add_option("--iterate", iterate, "apply the operator this many times");
    act_flags.add(c_act);
    c_act->add_option("target", target, "<file>#<movie-or-sum>")->required();

    // gram / rank / induced
    PresFlags pres;
    auto* c_gram = app.add_subcommand("gram", "Gram matrix of a presentation");
    pres.add(c_gram);
    auto* o_gram_mod = c_gram->add_option("--mod", mod, "coefficients mod p");
    auto* c_rank = app.add_subcommand("rank", "graded rank of a state space");
    PresFlags pres_rank;
    pres_rank.add(c_rank);
    int specs = 3;
    std::uint64_t seed = 7;
    c_rank->add_option("--specializations", specs, "random specialisations that must agree");
    c_rank->add_option("--seed", seed, "seed for the specialisations");
    auto* c_ind = app.add_subcommand("induced", "matrix of an operator on a state space");
    PresFlags pres_ind;
    pres_ind.add(c_ind);
    ParamFlags ind_flags;
    int power = 1;
    c_ind->add_option("--op", op_text, "L:<n> | e | h | f | d")->required();
    c_ind->add_option("--power", power, "matrix of op^k");
    ind_flags.add(c_ind);

    // moy-check
    auto* c_moy = app.add_subcommand("moy-check", "compare graded ranks across a MOY relation");
    std::string relation;
    int ma = 1, mb = 1, mc = 1, extra = 0;
    std::string base = "equivariant";
    c_moy->add_option("--relation", relation, "circle | digon | bad_digon | assoc")->required();
    c_moy->add_option("--a", ma, "first thickness");
    c_moy->add_option("--b", mb, "second thickness");
    c_moy->add_option("--c", mc, "third thickness (assoc)");
    c_moy->add_option("--N", N, "number of pigments")->required();
    c_moy->add_option("--base", base, "equivariant or phi0");
    c_moy->add_option("--extra", extra, "extra decorated generators");

    // check
    auto* c_check = app.add_subcommand("check", "run a property suite");
    std::string suite;
    SuiteOptions sopt;
    c_check->add_option("--suite", suite, "euler | commutators | compat | pdg")->required();
    c_check->add_option("--nmax", sopt.nmax, "largest Witt index");
    c_check->add_option("--seed", sopt.seed, "corpus / parameter seed");
    c_check->add_option("--spherical", sopt.spherical, "spherical corpus size");
    c_check->add_option("--saddles", sopt.with_saddles, "corpus size with saddles");
    c_check->add_option("--packs", sopt.packs, "random parameter packs");

    std::vector<const char*> argv{"foamlab"};
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    auto emit_error = [&](const std::string& kind, const std::string& msg, int status) {
        if (as_json) {
            json j = header(cmd);
            j["status"] = status;
            j["error"] = {{"kind", kind}, {"message", msg}};
            out << j.dump(2) << "\n";
        }
        err << "error: " << msg << "\n";
        return status;
    };

    try {
        if (c_eval->parsed()) {
            cmd = "eval";
            if (N < 1) throw Error(ErrorKind::InvalidArgument, "--N must be positive");
            Target t = load_target(target);
            CoefRing R = o_mod->count() ? CoefRing::prime(mod) : CoefRing::integers();
            MultiPoly total(R);
            json terms = json::array();
            for (const auto& [c, m] : t.terms) {
                if (!is_closed(m)) throw Error(ErrorKind::InvalidArgument, "'" + m.name + "' is not closed");
                FoamComplex F = compile(m);
                EvalResult r = evaluate(F, N, R, breakdown);
                total += r.value.scaled(c);
                if (breakdown) {
                    for (const auto& term : r.terms) {
                        json col = json::array();
                        for (PigmentSet s : term.coloring) col.push_back(pigments_of(s));
                        terms.push_back({{"movie", m.name}, {"coloring", col}, {"value", term.value.str()}});
                        o.text << m.name << " " << col.dump() << ": " << term.value.str() << "\n";
                    }
                }
            }
            if (phi0) total = base_change(total, BaseChange::KillEquivariance, 0, N);
            o.j = header(cmd);
            o.j["target"] = t.name;
            o.j["N"] = N;
            o.j["ring"] = ring_label(R);
            o.j["base"] = phi0 ? "phi0" : "equivariant";
            o.j["value"] = total.str();
            if (breakdown) o.j["terms"] = terms;
            o.text << total.str() << "\n";
        } else if (c_deg->parsed()) {
            cmd = "degree";
            Target t = load_target(target);
            std::optional<int> deg;
            for (const auto& [c, m] : t.terms) {
                int d = movie_degree(m, N);
                if (deg && *deg != d) throw Error(ErrorKind::NonHomogeneous, "terms of '" + t.name + "' have degrees " + std::to_string(*deg) + " and " + std::to_string(d));
                deg = d;
            }
            o.j = header(cmd);
            o.j["target"] = t.name;
            o.j["N"] = N;
            o.j["degree"] = *deg;
            o.text << *deg << "\n";
        } else if (c_act->parsed()) {
            cmd = "act";
            Operator op = parse_operator(op_text);
            Target t = load_target(target);
            if (iterate < 1) throw Error(ErrorKind::InvalidArgument, "--iterate must be positive");
            bool saddle = false;
            for (const auto& [c, m] : t.terms) saddle = saddle || has_saddle(m);
            ActionParams P = act_flags.build(op, &t.file, !saddle);
            std::optional<FoamSum> v;
            for (const auto& [c, m] : t.terms) {
                FoamSum s = scaled(to_foam_sum(m, P.ring), c);
                if (v && !same_movie(v->shape, s.shape))
                    throw Error(ErrorKind::InvalidArgument, "terms of '" + t.name + "' have different undecorated shapes");
                v = v ? *v + s : s;
            }
            std::vector<int> iso = isotopy_levels(v->shape);
            for (int k = 0; k < iterate; ++k) v = act(op, P, *v);
            std::string name = t.name + "_" + (op.kind == OpKind::Witt ? "L" + std::string(op.n < 0 ? "m" : "") + std::to_string(std::abs(op.n)) : op.str());
            FoamFile outf = foam_sum_file(*v, name);
            std::string dsl = v->is_zero() ? "" : print_foam(outf);
            o.j = header(cmd);
            o.j["target"] = t.name;
            o.j["op"] = op.str();
            o.j["iterate"] = iterate;
            o.j["params"] = params_json(P);
            json terms = json::array();
            for (const auto& s : outf.sums)
                for (const auto& [c, n] : s.terms) terms.push_back({{"coefficient", c}, {"movie", n}});
            o.j["terms"] = terms;
            o.j["isotopy_levels"] = iso;
            o.j["dsl"] = dsl;
            if (v->is_zero()) o.text << "0\n";
            else o.text << dsl << "\n";
            if (!iso.empty()) err << "note: isotopy slices at levels act by 0\n";
        } else if (c_gram->parsed()) {
            cmd = "gram";
            Presentation P = pres.build();
            CoefRing R = o_gram_mod->count() ? CoefRing::prime(mod) : CoefRing::integers();
            GramMatrix G = gram_matrix(P, pres.N, parse_base(pres.base), R);
            o.j = header(cmd);
            o.j["presentation"] = P.label;
            o.j["N"] = pres.N;
            o.j["base"] = pres.base;
            o.j["ring"] = ring_label(R);
            o.j["degrees"] = G.degrees;
            o.j["matrix"] = matrix_json(G.entries);
            o.text << "degrees:";
            for (int d : G.degrees) o.text << " " << d;
            o.text << "\n";
            print_matrix(o.text, G.entries);
        } else if (c_rank->parsed()) {
            cmd = "rank";
            Presentation P = pres_rank.build();
            GramMatrix G = gram_matrix(P, pres_rank.N, parse_base(pres_rank.base));
            RankResult r = graded_rank(G, specs, seed);
            o.j = header(cmd);
            o.j["presentation"] = P.label;
            o.j["N"] = pres_rank.N;
            o.j["base"] = pres_rank.base;
            o.j["generators"] = P.size();
            o.j["rank"] = r.rank;
            o.j["graded_rank"] = laurent_json(r.graded);
            o.j["text"] = r.graded.str();
            o.j["basis"] = r.basis;
            o.text << r.graded.str() << "\n";
        } else if (c_ind->parsed()) {
            cmd = "induced";
            Operator op = parse_operator(op_text);
            Presentation Pr = pres_ind.build();
            ActionParams P = ind_flags.build(op, nullptr, Pr.spherical);
            Base b = parse_base(pres_ind.base);
            OperatorMatrix M = induced_action(op, P, Pr, pres_ind.N, b);
            PolyMatrix shown = power == 1 ? M.M : operator_power(M, power, P);
            o.j = header(cmd);
            o.j["presentation"] = Pr.label;
            o.j["N"] = pres_ind.N;
            o.j["base"] = pres_ind.base;
            o.j["op"] = op.str();
            o.j["power"] = power;
            o.j["params"] = params_json(P);
            o.j["basis"] = M.basis;
            o.j["degrees"] = M.degrees;
            o.j["kernel_vectors"] = M.kernel_vectors;
            o.j["matrix"] = matrix_json(shown);
            o.j["zero"] = poly_is_zero(shown);
            o.text << "basis degrees:";
            for (int d : M.degrees) o.text << " " << d;
            o.text << "\n";
            print_matrix(o.text, shown);
        } else if (c_moy->parsed()) {
            cmd = "moy-check";
            MoyReport r = moy_check(parse_moy_relation(relation), ma, mb, mc, N, parse_base(base), extra);
            o.j = header(cmd);
            o.j["relation"] = moy_relation_name(r.relation);
            o.j["N"] = N;
            o.j["base"] = base;
            o.j["lhs"] = {{"presentation", r.lhs_label}, {"graded_rank", laurent_json(r.lhs)}, {"text", r.lhs.str()}};
            o.j["rhs"] = {{"presentation", r.rhs_label}, {"graded_rank", laurent_json(r.rhs)}, {"text", r.rhs.str()}};
            o.j["factor"] = r.factor.str();
            o.j["expected"] = r.expected.str();
            o.j["ok"] = r.ok;
            o.text << moy_relation_name(r.relation) << ": " << r.lhs_label << " has rank " << r.lhs.str() << ", expected " << r.expected.str() << " -> "
                   << (r.ok ? "pass" : "FAIL") << "\n";
            o.status = r.ok ? 0 : 1;
        } else if (c_check->parsed()) {
            cmd = "check";
            SuiteResult r = run_suite(suite, sopt);
            o.j = header(cmd);
            o.j["suite"] = r.suite;
            o.j["ok"] = r.ok;
            o.j["checks"] = r.checks;
            json counts = json::object();
            for (const auto& [k, n] : r.counts) counts[k] = n;
            o.j["counts"] = counts;
            o.j["failures"] = r.failures;
            for (const auto& [k, n] : r.counts) o.text << k << ": " << n << "\n";
            for (const auto& f : r.failures) o.text << "failure: " << f << "\n";
            o.text << r.suite << ": " << (r.ok ? "pass" : "FAIL") << "\n";
            o.status = r.ok ? 0 : 1;
        }
    } catch (const Error& e) {
        return emit_error(error_name(e.kind()), e.what(), is_math_failure(e.kind()) ? 1 : 2);
    } catch (const std::exception& e) {
        return emit_error("InvalidArgument", e.what(), 2);
    }
    if (as_json) {
        o.j["status"] = o.status;
        out << o.j.dump(2) << "\n";
    } else {
        out << o.text.str();
    }
    return o.status;
}

}  // namespace foamlab
