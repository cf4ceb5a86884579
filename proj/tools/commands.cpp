#include "commands.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <cmath>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>

#include "mstate/mstate.hpp"
#include "suite.hpp"

namespace mst::cli {

namespace {

constexpr int kOk = 0;
constexpr int kCheckFailed = 1;
constexpr int kInvalid = 2;
constexpr int kUnknownCommand = 64;
constexpr int kResource = 69;
constexpr int kInternal = 70;

const std::vector<std::string> kCommands{"ghz-decide", "ghz-protocol", "catalysis",   "pmax",   "lu-enumerate",
                                         "lu-construct", "lu-check", "source-ent", "simulate", "paper-suite"};

struct Outcome {
    json body;
    int code = kOk;
    std::string text;  // human rendering, printed instead of JSON under --pretty when set
};

json error_json(const std::string& kind, const std::string& message) { return {{"error", message}, {"kind", kind}}; }

int fail(const std::string& kind, const std::string& message, int code) {
    std::cerr << error_json(kind, message).dump() << "\n";
    return code;
}

SchmidtTuple tuple_arg(const std::string& text) { return SchmidtTuple(parse_rational_list(text)); }

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open " + path);
    try {
        return json::parse(in);
    } catch (const json::exception& e) {
        throw std::invalid_argument(path + ": " + e.what());
    }
}

// A named state ("ghz:3:2", "w", ...) or a JSON file holding one.
PureState state_arg(const std::string& text) {
    try {
        return named_state(text);
    } catch (const std::invalid_argument&) {
        std::ifstream probe(text);
        if (!probe) throw std::invalid_argument("not a named state or readable file: " + text);
    }
    return state_from_json(read_json_file(text));
}

json leaves_json(const std::vector<Leaf>& leaves) {
    json out = json::array();
    for (const auto& l : leaves) out.push_back(to_json(l));
    return out;
}

json validation_json(const ValidationReport& rep) {
    json v = json::array();
    for (const auto& x : rep.violations) {
        json e = {{"round", x.round}, {"kind", x.kind}, {"magnitude", x.magnitude}};
        e["outcome"] = x.outcome ? json(*x.outcome) : json(nullptr);
        v.push_back(e);
    }
    return {{"ok", rep.ok()}, {"violations", v}};
}

json rational_value(const Rational& q) { return {{"exact", to_string(q)}, {"value", to_double(q)}}; }

// ghz ------------------------------------------------------------------------------------

struct GhzArgs {
    int n = 3, d = 2;
    std::string src, dst;
    bool emit_json = false;
};

void add_ghz_options(CLI::App* sc, GhzArgs& a) {
    sc->add_option("--n", a.n, "number of parties")->required();
    sc->add_option("--d", a.d, "local dimension")->required();
    sc->add_option("--src", a.src, "diagonal of g^dagger g, comma separated")->required();
    sc->add_option("--dst", a.dst, "diagonal of h^dagger h, comma separated")->required();
}

Outcome ghz_decide(const GhzArgs& a) {
    GhzLikeState s{a.n, a.d, tuple_arg(a.src)}, t{a.n, a.d, tuple_arg(a.dst)};
    return {{{"possible", decide_ghz_transform(s, t)}}};
}

Outcome ghz_protocol(const GhzArgs& a) {
    GhzLikeState s{a.n, a.d, tuple_arg(a.src)}, t{a.n, a.d, tuple_arg(a.dst)};
    const auto p = synthesize_ghz_protocol(s, t);
    const auto leaves = simulate(p, ghz_like_state(s));
    json out = {{"possible", true},
                {"certificate", to_json(rado_decompose(s.diag, t.diag))},
                {"branches", p.rounds.front().ops.size()},
                {"validation", validation_json(validate(p))},
                {"success_probability", success_probability(leaves)}};
    if (a.emit_json) out["protocol"] = to_json(p);
    return {out};
}

// catalysis ------------------------------------------------------------------------------

struct CatalysisArgs {
    std::string src, dst, cat;
    unsigned k = 0;
    bool find = false;
    int cat_dim = 4;
    long grid = 100;
};

Outcome catalysis(const CatalysisArgs& a) {
    const auto src = tuple_arg(a.src), dst = tuple_arg(a.dst);
    json out = {{"direct", majorizes(dst, src)}, {"reverse", majorizes(src, dst)}};
    if (!a.cat.empty()) {
        const auto cat = tuple_arg(a.cat);
        const bool ok = catalyzes(src, dst, cat);
        out["catalyzes"] = ok;
        if (ok) out["certificate"] = to_json(rado_decompose(tensor(src, cat), tensor(dst, cat)));
    }
    if (a.k > 0) out["k_copy"] = {{"k", a.k}, {"comparable", k_copy_comparable(src, dst, a.k)}};
    if (a.find) {
        const auto c = find_catalyst(src, dst, a.cat_dim, a.grid);
        out["catalyst"] = c ? to_json(*c) : json(nullptr);
    }
    return {out};
}

// pmax -----------------------------------------------------------------------------------

struct PmaxArgs {
    std::string mode = "joint";
    std::string eps = "0.414";
    std::string state = "psi5";
    std::string g;
    std::string norm_sq = "1";
    bool emit_json = false;
};

CMatrix diag2(double a, double b) {
    CMatrix m = CMatrix::Zero(2, 2);
    m(0, 0) = a;
    m(1, 1) = b;
    return m;
}

Outcome pmax(const PmaxArgs& a) {
    if (a.mode == "seed") {
        if (a.g.empty()) throw std::invalid_argument("--mode seed needs --g");
        const Rational p = pmax_to_seed(parse_rational_list(a.g), parse_rational(a.norm_sq));
        return {{{"mode", "seed"}, {"p_max", to_double(p)}, {"exact", to_string(p)}}};
    }
    const Rational eps_q = parse_rational(a.eps);
    const double eps = to_double(eps_q);
    if (!(eps > 0 && eps <= 1)) throw std::invalid_argument("--eps must lie in (0, 1]");
    const PureState seed = state_arg(a.state);
    if (seed.dims.empty() || seed.dims.back() != 2) throw std::invalid_argument("the last party of --state must be a qubit");
    const PureState unit = seed.normalized();
    const double n1 = apply_at(diag2(1.0, std::sqrt(eps)), seed.num_parties() - 1, unit).norm_sq();
    const double n2 = apply_at(diag2(std::sqrt(eps), 1.0), seed.num_parties() - 1, unit).norm_sq();

    if (a.mode == "joint") {
        const CMatrix H1 = diag2(1.0, eps), H2 = diag2(eps, 1.0), id2 = CMatrix::Identity(2, 2);
        const std::vector<LocalOperator> trivial{LocalOperator{{id2}}};
        const double s1 = pmax_sep_unitary_stabilizer(id2, H1, trivial, n1);
        const double s2 = pmax_sep_unitary_stabilizer(id2, H2, trivial, n2);
        json out = {{"mode", "joint"},
                    {"eps", to_string(eps_q)},
                    {"p_max", pmax_joint_two_state(H1, H2, n1, n2)},
                    {"singles", {s1, s2}},
                    {"product", s1 * s2}};
        if (a.state == "psi5") out["exact"] = to_string(joint_closed_form(eps_q));
        return {out};
    }
    if (a.mode == "protocol") {
        const auto setup = build_three_branch_protocol(seed, eps);
        const auto leaves = simulate(setup.protocol, setup.input);
        json out = {{"mode", "protocol"},
                    {"eps", to_string(eps_q)},
                    {"p_max", success_probability(leaves)},
                    {"joint", pmax_joint_two_state(diag2(1.0, eps), diag2(eps, 1.0), n1, n2)},
                    {"validation", validation_json(validate(setup.protocol))},
                    {"leaves", leaves_json(leaves)}};
        if (a.emit_json) out["protocol"] = to_json(setup.protocol);
        return {out};
    }
    throw std::invalid_argument("--mode must be seed, joint, or protocol");
}

// lu -------------------------------------------------------------------------------------

struct EnumerateArgs {
    int dmu = 2, dlam = 3;
    long max_den = 0;
    bool direct_sum = false, trivial = false;
    unsigned threads = 0;
};

Outcome lu_enumerate(const EnumerateArgs& a) {
    EnumOptions o;
    o.include_direct_sum = a.direct_sum;
    o.include_trivial = a.trivial;
    o.threads = a.threads;
    o.max_denominator = a.max_den;
    json out = json::array();
    for (const auto& s : enumerate_solutions(a.dmu, a.dlam, o)) out.push_back(to_json(s));
    return {out};
}

struct DirectSumArgs {
    std::string a = "1/2", b = "1/3", c = "1/4", bp = "1/5", cp = "1/6";

    DirectSumParams params() const {
        return {parse_rational(a), parse_rational(b), parse_rational(c), parse_rational(bp), parse_rational(cp)};
    }
};

void add_direct_sum_options(CLI::App* sc, DirectSumArgs& p) {
    sc->add_option("--a", p.a, "a in (0,1)")->capture_default_str();
    sc->add_option("--b", p.b, "b in (0,1)")->capture_default_str();
    sc->add_option("--c", p.c, "c in (0,1)")->capture_default_str();
    sc->add_option("--bp", p.bp, "b' in (0,1)")->capture_default_str();
    sc->add_option("--cp", p.cp, "c' in (0,1)")->capture_default_str();
}

struct ConstructArgs {
    int d = 0, d1 = 0, d2 = 0;
    int homogeneous = 0;
    bool nonhomogeneous = false;
    int dmu = 0, dlam = 0;
    DirectSumArgs ds;
};

json tuples_json(const std::array<SchmidtTuple, 4>& t) {
    return {{"mu", to_json(t[0])}, {"lam", to_json(t[1])}, {"mu_bar", to_json(t[2])}, {"lam_bar", to_json(t[3])}};
}

Outcome lu_construct(const ConstructArgs& a) {
    if (a.homogeneous > 0) {
        const auto h = homogeneous_solution(a.homogeneous, a.ds.params());
        json out = {{"kind", h.kind}};
        if (h.family) out["family"] = to_json(*h.family);
        if (h.tuples) {
            out["tuples"] = tuples_json(*h.tuples);
            const auto& t = *h.tuples;
            out["lu_equivalent"] = lu_equivalent(t[0], t[1], t[2], t[3]);
        }
        return {out};
    }
    if (a.nonhomogeneous) return {{{"family", to_json(nonhomogeneous_solution(a.dmu, a.dlam))}}};
    if (a.d == 0) throw std::invalid_argument("lu-construct needs --d/--d1/--d2, --homogeneous, or --nonhomogeneous");
    const auto f = construct_qubit_solution(a.d, a.d1, a.d2);
    json out = {{"family", to_json(f)}};
    if (a.d1 == a.d) {
        json cycles = json::array();
        for (const auto& c : gap_cycles(f)) cycles.push_back(to_json(c));
        out["cycles"] = cycles;
    }
    return {out};
}

struct CheckArgs {
    std::string mu, lam, mu_bar, lam_bar;
};

Outcome lu_check(const CheckArgs& a) {
    const auto mu = tuple_arg(a.mu), lam = tuple_arg(a.lam), mb = tuple_arg(a.mu_bar), lb = tuple_arg(a.lam_bar);
    return {{{"lu_equivalent", lu_equivalent(mu, lam, mb, lb)}, {"trivial", tuple_pair_trivial(mu, lam, mb, lb)}}};
}

// source entanglement ---------------------------------------------------------------------

Outcome source_ent(const std::string& coeffs, long max_den) {
    std::vector<Rational> v;
    for (const auto& x : parse_rational_list(coeffs)) v.push_back(max_den > 0 ? rational_from_double(to_double(x), max_den) : x);
    return {{{"E_s", rational_value(source_entanglement(SchmidtTuple(v)))}}};
}

Outcome nonadditivity(const DirectSumArgs& a) {
    const auto r = nonadditivity_experiment(a.params());
    return {{{"lu_equivalent", r.lu_equivalent},
             {"E_s",
              {{"mu", rational_value(r.es_mu)},
               {"lam", rational_value(r.es_lam)},
               {"mu_bar", rational_value(r.es_mu_bar)},
               {"lam_bar", rational_value(r.es_lam_bar)}}},
             {"gap", rational_value(r.gap)},
             {"tuples", tuples_json(r.tuples)}}};
}

// simulate and suite ------------------------------------------------------------------------

Outcome simulate_cmd(const std::string& protocol_path, const std::string& state) {
    const auto p = protocol_from_json(read_json_file(protocol_path));
    const auto leaves = simulate(p, state_arg(state));
    return {{{"validation", validation_json(validate(p))},
             {"success_probability", success_probability(leaves)},
             {"leaves", leaves_json(leaves)}}};
}

Outcome run_suite() {
    auto checks = suite::acceptance_criteria();
    for (auto& c : suite::published_examples()) checks.push_back(std::move(c));
    json rows = json::array();
    std::size_t failed = 0;
    std::size_t width = 0;
    for (const auto& c : checks) width = std::max(width, c.name.size());
    std::ostringstream table;
    for (const auto& c : checks) {
        rows.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
        failed += !c.pass;
        table << (c.pass ? "PASS  " : "FAIL  ") << std::left << std::setw(static_cast<int>(width)) << c.name << "  "
              << c.detail << "\n";
    }
    table << checks.size() - failed << " passed, " << failed << " failed\n";
    json out = {{"checks", rows}, {"passed", checks.size() - failed}, {"failed", failed}};
    return {out, failed ? kCheckFailed : kOk, table.str()};
}

}  // namespace

int run(int argc, char** argv) {
    if (argc >= 2) {
        const std::string first = argv[1];
        if (!first.empty() && first[0] != '-' && std::find(kCommands.begin(), kCommands.end(), first) == kCommands.end())
            return fail("unknown_subcommand", "unknown subcommand: " + first, kUnknownCommand);
    }

    CLI::App app{"Multi-state LOCC and LU transformation toolkit", "mstate"};
    app.require_subcommand(1);
    app.set_config("--config", "", "TOML or INI file with option defaults; flags given on the command line win");
    bool pretty = false;
    app.add_flag("--pretty", pretty, "indented JSON; paper-suite prints a table");

    std::function<Outcome()> action;

    GhzArgs ghz;
    auto* decide = app.add_subcommand("ghz-decide", "decide a GHZ-like transformation");
    add_ghz_options(decide, ghz);
    decide->callback([&] { action = [&] { return ghz_decide(ghz); }; });
    auto* gp = app.add_subcommand("ghz-protocol", "synthesize and simulate the one-round protocol");
    add_ghz_options(gp, ghz);
    gp->add_flag("--emit-json", ghz.emit_json, "include the protocol in the output");
    gp->callback([&] { action = [&] { return ghz_protocol(ghz); }; });

    CatalysisArgs cat;
    auto* cs = app.add_subcommand("catalysis", "catalysis, k-copy, and catalyst search");
    cs->add_option("--src", cat.src, "source diagonal")->required();
    cs->add_option("--dst", cat.dst, "target diagonal")->required();
    cs->add_option("--cat", cat.cat, "catalyst diagonal");
    cs->add_option("--k", cat.k, "compare k copies");
    cs->add_flag("--find", cat.find, "search the grid for a catalyst");
    cs->add_option("--cat-dim", cat.cat_dim, "catalyst dimension for --find")->capture_default_str();
    cs->add_option("--grid", cat.grid, "grid denominator for --find")->capture_default_str();
    cs->callback([&] { action = [&] { return catalysis(cat); }; });

    PmaxArgs pm;
    auto* ps = app.add_subcommand("pmax", "optimal success probabilities");
    ps->add_option("--mode", pm.mode, "seed, joint, or protocol")->capture_default_str();
    ps->add_option("--eps", pm.eps, "epsilon in (0, 1]")->capture_default_str();
    ps->add_option("--state", pm.state, "named state or JSON file")->capture_default_str();
    ps->add_option("--g", pm.g, "diagonal of G for --mode seed");
    ps->add_option("--norm-sq", pm.norm_sq, "||g psi||^2 for --mode seed")->capture_default_str();
    ps->add_flag("--emit-json", pm.emit_json, "include the protocol for --mode protocol");
    ps->callback([&] { action = [&] { return pmax(pm); }; });

    EnumerateArgs en;
    auto* es = app.add_subcommand("lu-enumerate", "enumerate two-state LU families");
    es->add_option("--dmu", en.dmu, "d_mu")->required();
    es->add_option("--dlam", en.dlam, "d_lambda")->required();
    es->add_option("--max-denominator", en.max_den, "drop families needing a larger exponent denominator");
    es->add_flag("--include-direct-sum", en.direct_sum, "keep direct_sum families");
    es->add_flag("--include-trivial", en.trivial, "keep identity and swap families");
    es->add_option("--threads", en.threads, "worker threads (0: hardware)");
    es->callback([&] { action = [&] { return lu_enumerate(en); }; });

    ConstructArgs co;
    auto* cn = app.add_subcommand("lu-construct", "explicit LU families");
    cn->add_option("--d", co.d, "d_lambda for the qubit construction");
    cn->add_option("--d1", co.d1, "numerator of the a_bar exponent");
    cn->add_option("--d2", co.d2, "denominator of the a_bar exponent");
    cn->add_option("--homogeneous", co.homogeneous, "homogeneous construction for d_mu = d_lambda = D");
    cn->add_flag("--nonhomogeneous", co.nonhomogeneous, "ramp construction for --dmu < --dlam");
    cn->add_option("--dmu", co.dmu, "d_mu for --nonhomogeneous");
    cn->add_option("--dlam", co.dlam, "d_lambda for --nonhomogeneous");
    add_direct_sum_options(cn, co.ds);
    cn->callback([&] { action = [&] { return lu_construct(co); }; });

    CheckArgs ck;
    auto* cc = app.add_subcommand("lu-check", "check a pair of bipartite pairs");
    cc->add_option("--mu", ck.mu)->required();
    cc->add_option("--lam", ck.lam)->required();
    cc->add_option("--mu-bar", ck.mu_bar)->required();
    cc->add_option("--lam-bar", ck.lam_bar)->required();
    cc->callback([&] { action = [&] { return lu_check(ck); }; });

    std::string coeffs;
    long max_den = 0;
    auto* se = app.add_subcommand("source-ent", "source entanglement");
    se->add_option("--coeffs", coeffs, "squared Schmidt coefficients");
    se->add_option("--max-denominator", max_den, "round decimal input to this denominator first");
    DirectSumArgs na{"0.3", "0.01", "0.01", "0.3", "0.8"};
    auto* nas = se->add_subcommand("nonadditivity", "E_s of the d = 7 direct-sum construction");
    add_direct_sum_options(nas, na);
    nas->callback([&] { action = [&] { return nonadditivity(na); }; });
    se->callback([&] {
        if (!action) action = [&] {
            if (coeffs.empty()) throw std::invalid_argument("source-ent needs --coeffs");
            return source_ent(coeffs, max_den);
        };
    });

    std::string protocol_path, state;
    auto* sm = app.add_subcommand("simulate", "validate and simulate a protocol");
    sm->add_option("--protocol", protocol_path, "protocol JSON file")->required();
    sm->add_option("--state", state, "named state or JSON file")->required();
    sm->callback([&] { action = [&] { return simulate_cmd(protocol_path, state); }; });

    auto* suite_cmd = app.add_subcommand("paper-suite", "run the published-example regressions");
    suite_cmd->callback([&] { action = [] { return run_suite(); }; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        return fail("usage", e.what(), kInvalid);
    }

    try {
        Outcome r = action();
        if (pretty && !r.text.empty())
            std::cout << r.text;
        else
            std::cout << (pretty ? r.body.dump(2) : r.body.dump()) << "\n";
        return r.code;
    } catch (const resource_error& e) {
        return fail("resource", e.what(), kResource);
    } catch (const no_certificate_error& e) {
        std::cerr << json{{"error", e.what()}, {"kind", "no_certificate"}, {"prefix_index", e.prefix_index}}.dump() << "\n";
        return kInvalid;
    } catch (const unsupported_error& e) {
        return fail("unsupported", e.what(), kInvalid);
    } catch (const std::invalid_argument& e) {
        return fail("invalid_argument", e.what(), kInvalid);
    } catch (const json::exception& e) {
        return fail("invalid_json", e.what(), kInvalid);
    } catch (const std::exception& e) {
        return fail("internal", e.what(), kInternal);
    }
}

}  // namespace mst::cli
