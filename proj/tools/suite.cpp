#include "suite.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <iomanip>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

#include "mstate/mstate.hpp"

namespace mst::suite {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

std::string fmt(double x, int digits = 6) {
    std::ostringstream os;
    os << std::setprecision(digits) << x;
    return os.str();
}

std::string seq(const std::vector<Rational>& v) {
    std::string out = "(";
    for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + to_string(v[i]);
    return out + ")";
}

std::string show(const ExponentFamily& f) {
    return seq(f.mu) + seq(f.lam) + "->" + seq(f.mu_bar) + seq(f.lam_bar);
}

// Runs `body`, turning an escaped exception into a failed check.
Check guarded(const std::string& name, const std::function<Check()>& body) {
    try {
        Check c = body();
        c.name = name;
        return c;
    } catch (const std::exception& e) {
        return {name, false, std::string("exception: ") + e.what()};
    }
}

std::vector<Rational> ints(std::initializer_list<long> v) {
    std::vector<Rational> out;
    for (long x : v) out.emplace_back(x);
    return out;
}

ExponentFamily family(std::initializer_list<long> mu, std::initializer_list<long> lam, std::initializer_list<long> mu_bar,
                      std::initializer_list<long> lam_bar) {
    return {ints(mu), ints(lam), ints(mu_bar), ints(lam_bar)};
}

ExponentFamily reversed(const ExponentFamily& f) { return {f.mu_bar, f.lam_bar, f.mu, f.lam}; }

// Equal as families: same exponents, possibly with the two sides exchanged.
bool same_family(const ExponentFamily& a, const ExponentFamily& b) { return a == b || a == reversed(b); }

const std::vector<LuSolution>& enumeration(int d_mu, int d_lam) {
    static std::map<std::pair<int, int>, std::vector<LuSolution>> cache;
    auto key = std::make_pair(d_mu, d_lam);
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(key, enumerate_solutions(d_mu, d_lam)).first;
    return it->second;
}

std::size_t count_class(const std::vector<LuSolution>& sols, LuClass c) {
    return static_cast<std::size_t>(
        std::count_if(sols.begin(), sols.end(), [c](const LuSolution& s) { return s.classification == c; }));
}

bool contains_family(const std::vector<LuSolution>& sols, const ExponentFamily& f, bool nontrivial_only = true) {
    return std::any_of(sols.begin(), sols.end(), [&](const LuSolution& s) {
        return (!nontrivial_only || s.classification == LuClass::nontrivial) && same_family(s.integral, f);
    });
}

std::string class_counts(const std::vector<LuSolution>& sols) {
    std::ostringstream os;
    os << "nontrivial=" << count_class(sols, LuClass::nontrivial) << " direct_sum=" << count_class(sols, LuClass::direct_sum)
       << " sub_swap=" << count_class(sols, LuClass::sub_swap);
    return os.str();
}

SchmidtTuple catalysis_src() { return from_decimals({"0.45", "0.35", "0.12", "0.08"}); }
SchmidtTuple catalysis_dst() { return from_decimals({"0.56", "0.21", "0.17", "0.06"}); }
SchmidtTuple catalysis_cat() { return from_decimals({"0.63", "0.27", "0.07", "0.03"}); }

CMatrix diag2(double a, double b) {
    CMatrix m = CMatrix::Zero(2, 2);
    m(0, 0) = a;
    m(1, 1) = b;
    return m;
}

// ||(1 x ... x 1 x diag(1, sqrt eps)) psi5||^2
double psi5_norm_sq(double eps) { return apply_at(diag2(1.0, std::sqrt(eps)), 4, psi5()).norm_sq(); }

std::vector<Rational> grid_tenths() {
    std::vector<Rational> g;
    for (int i = 0; i < 5; ++i) g.push_back(ratio(i, 10));
    return g;
}

Rational random_rational(std::mt19937_64& rng, long lo, long hi, long den) {
    std::uniform_int_distribution<long> num(lo, hi);
    return ratio(num(rng), den);
}

std::vector<Rational> random_positive(std::mt19937_64& rng, std::size_t d, long hi) {
    std::vector<Rational> v;
    for (std::size_t i = 0; i < d; ++i) v.push_back(random_rational(rng, 1, hi, 1));
    return v;
}

std::vector<Rational> normalized(std::vector<Rational> v) {
    Rational t = std::accumulate(v.begin(), v.end(), Rational(0));
    for (auto& x : v) x /= t;
    return v;
}

Permutation random_permutation(std::mt19937_64& rng, std::size_t d) {
    Permutation p = identity_permutation(d);
    std::shuffle(p.begin(), p.end(), rng);
    return p;
}

std::size_t random_size(std::mt19937_64& rng, std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

// Criteria -------------------------------------------------------------------------------

Check criterion1() {
    const auto t0 = Clock::now();
    const auto src = catalysis_src(), dst = catalysis_dst(), cat = catalysis_cat();
    const bool fwd = majorizes(dst, src), back = majorizes(src, dst);
    const bool cat_ok = catalyzes(src, dst, cat);
    const double t = seconds_since(t0);
    return {"", !fwd && !back && cat_ok && t < 1.0,
            "dst>src " + std::to_string(fwd) + ", src>dst " + std::to_string(back) + ", catalyzes " +
                std::to_string(cat_ok) + ", " + fmt(t, 3) + " s"};
}

Check criterion2() {
    // 0.414 is the two-digit rounding of sqrt(2) - 1, the maximizer of the advantage
    // (1 + eps) / (1 + eps^2); the regression targets are quoted at that point.
    const double eps = std::sqrt(2.0) - 1.0;
    const double n_sq = psi5_norm_sq(eps);
    const CMatrix H1 = diag2(1.0, eps), H2 = diag2(eps, 1.0);
    const double joint = pmax_joint_two_state(H1, H2, n_sq, n_sq);
    const CMatrix id2 = CMatrix::Identity(2, 2);
    const std::vector<LocalOperator> trivial{LocalOperator{{id2}}};
    const double s1 = pmax_sep_unitary_stabilizer(id2, H1, trivial, n_sq);
    const double s2 = pmax_sep_unitary_stabilizer(id2, H2, trivial, n_sq);
    const auto setup = build_three_branch_protocol(psi5(), eps);
    const double simulated = success_probability(simulate(setup.protocol, setup.input));
    const double closed = joint_closed_form(eps);
    const double literal = pmax_joint_two_state(diag2(1.0, 0.414), diag2(0.414, 1.0), psi5_norm_sq(0.414), psi5_norm_sq(0.414));
    const bool ok = std::abs(joint - 0.854) <= 5e-4 && std::abs(s1 - 0.707) <= 5e-4 && std::abs(s2 - 0.707) <= 5e-4 &&
                    std::abs(s1 * s2 - 0.5) <= 5e-4 && std::abs(simulated - closed) <= 1e-10;
    return {"", ok,
            "eps=sqrt2-1: joint " + fmt(joint) + ", singles " + fmt(s1) + "/" + fmt(s2) + ", product " + fmt(s1 * s2) +
                ", simulated-closed " + fmt(std::abs(simulated - closed), 3) + "; at eps=0.414 joint " + fmt(literal)};
}

Check criterion3() {
    double worst = 0;
    for (double eps : {0.1, 0.414, 0.9}) worst = std::max(worst, std::abs(psi5_norm_sq(eps) - (1 + eps) / 2));
    return {"", worst <= 1e-12, "max deviation " + fmt(worst, 3)};
}

Check criterion4() {
    const auto t0 = Clock::now();
    int agree = 0, total = 0;
    const auto g = grid_tenths();
    for (const auto& delta : g)
        for (const auto& a1 : g)
            for (const auto& a2 : g) {
                GhzLikeState src{3, 4, SchmidtTuple(two_copy_diag(delta, delta))};
                GhzLikeState dst{3, 4, SchmidtTuple(two_copy_diag(a1, a2))};
                agree += decide_ghz_transform(src, dst) == two_copy_closed_form(delta, a1, a2);
                ++total;
            }
    const double t = seconds_since(t0);
    return {"", agree == total && t < 1.0,
            std::to_string(agree) + "/" + std::to_string(total) + " agree, " + fmt(t, 3) + " s"};
}

Check criterion5() {
    int agree = 0, total = 0, feasible = 0;
    const auto g = grid_tenths();
    for (const auto& delta : g)
        for (const auto& a1 : g)
            for (const auto& a2 : g) {
                const bool lp = trivial_subgroup_feasible(delta, a1, a2);
                feasible += lp;
                agree += lp == trivial_subgroup_bound(a1, a2).geq(delta);
                ++total;
            }
    return {"", agree == total,
            std::to_string(agree) + "/" + std::to_string(total) + " agree, " + std::to_string(feasible) + " feasible"};
}

const std::vector<ExponentFamily>& listed_3x4() {
    static const std::vector<ExponentFamily> v{
        family({0, 1, 2}, {0, 3, 6, 9}, {0, 4, 8}, {0, 1, 2, 3}),
        family({0, 2, 4}, {0, 3, 5, 6}, {0, 4, 5}, {0, 2, 3, 5}),
        family({0, 1, 5}, {0, 3, 5, 6}, {0, 4, 5}, {0, 1, 3, 6}),
        family({0, 1, 5}, {0, 2, 3, 5}, {0, 2, 4}, {0, 1, 3, 6}),
    };
    return v;
}

ExponentFamily family_a5() { return family({0, 1}, {0, 2, 4, 6, 8}, {0, 5}, {0, 1, 2, 3, 4}); }
ExponentFamily family_kb() { return family({0, 1}, {0, 4, 6, 8, 12}, {0, 5}, {0, 1, 4, 7, 8}); }
ExponentFamily family_2x3() { return family({0, 1}, {0, 2, 4}, {0, 3}, {0, 1, 2}); }

Check criterion6() {
    const auto t0 = Clock::now();
    std::vector<std::string> failures;
    std::ostringstream detail;

    for (auto [dm, dl] : {std::pair{2, 2}, std::pair{3, 3}}) {
        const auto& s = enumeration(dm, dl);
        if (count_class(s, LuClass::nontrivial) != 0) failures.push_back(std::to_string(dm) + "x" + std::to_string(dl));
    }
    {
        const auto& s = enumeration(2, 4);
        const bool only = !s.empty() && count_class(s, LuClass::sub_swap) == s.size();
        if (!only) failures.push_back("2x4 (" + class_counts(s) + ")");
    }
    {
        const auto& s = enumeration(2, 3);
        if (count_class(s, LuClass::nontrivial) != 1 || !contains_family(s, family_2x3()))
            failures.push_back("2x3 (" + class_counts(s) + ")");
    }
    {
        const auto& s = enumeration(2, 5);
        if (!contains_family(s, family_a5()) || !contains_family(s, family_kb())) failures.push_back("2x5");
    }
    {
        const auto& s = enumeration(3, 4);
        const std::size_t n = count_class(s, LuClass::nontrivial);
        std::size_t present = 0;
        for (const auto& f : listed_3x4()) present += contains_family(s, f);
        detail << "3x4: " << n << " nontrivial non-direct_sum, " << present << " of 4 listed present; ";
        if (n != 4 || present != 4) failures.push_back("3x4");
    }
    const double t = seconds_since(t0);
    if (t >= 60) failures.push_back("runtime");
    detail << fmt(t, 3) << " s";
    if (!failures.empty()) {
        detail << "; failed:";
        for (const auto& f : failures) detail << " " << f;
    }
    return {"", failures.empty(), detail.str()};
}

Check criterion7() {
    std::ostringstream detail;
    bool ok = true;
    for (int d : {3, 5, 7}) {
        std::set<Rational> expected, found;
        for (int d1 = 3; d1 <= d; d1 += 2)
            for (int d2 = 1; d2 < d1; d2 += 2) expected.insert(ratio(d1, d2));
        bool missing_ratio = false;
        for (const auto& s : enumeration(2, d)) {
            if (s.classification != LuClass::nontrivial) continue;
            if (s.a_bar_ratio)
                found.insert(*s.a_bar_ratio);
            else
                missing_ratio = true;
        }
        const bool match = found == expected && !missing_ratio;
        ok = ok && match;
        detail << "d=" << d << " {";
        bool first = true;
        for (const auto& r : found) {
            detail << (first ? "" : ",") << to_string(r);
            first = false;
        }
        detail << "}" << (match ? "" : " (mismatch)") << " ";
    }
    return {"", ok, detail.str()};
}

Check criterion8() {
    const Rational t(1, 3);
    std::vector<std::string> bad;
    if (!(construct_qubit_solution(5, 5, 1) == family_a5())) bad.push_back("(5,5,1)");
    ExponentFamily f773;
    f773.mu = ints({0, 1});
    f773.lam = {0, 4 * t, 2, 8 * t, 10 * t, 4, 16 * t};
    f773.mu_bar = {0, 7 * t};
    f773.lam_bar = {0, 1, 4 * t, 2, 8 * t, 3, 4};
    if (!(construct_qubit_solution(7, 7, 3) == f773)) bad.push_back("(7,7,3)");
    ExponentFamily f5;
    f5.mu = {0, 1, 4 * t, 2, 8 * t};
    f5.lam = {0, t, 2 * t, 1, 4 * t};
    f5.mu_bar = {0, t, 4 * t, 5 * t, 2};
    f5.lam_bar = {0, 2 * t, 1, 4 * t, 2};
    const auto h5 = homogeneous_solution(5);
    if (!h5.family || !(*h5.family == f5) || !exponents_valid(f5)) bad.push_back("homogeneous(5)");
    std::string detail = bad.empty() ? "all three displays reproduced" : "mismatch:";
    for (const auto& b : bad) detail += " " + b;
    return {"", bad.empty(), detail};
}

Check criterion9() {
    const auto t0 = Clock::now();
    DirectSumParams p{parse_rational("0.3"), parse_rational("0.01"), parse_rational("0.01"), parse_rational("0.3"),
                      parse_rational("0.8")};
    const auto r = nonadditivity_experiment(p);
    const double gap = to_double(r.gap), mu = to_double(r.es_mu), lam = to_double(r.es_lam),
                 lam_bar = to_double(r.es_lam_bar);
    const bool e2 = source_entanglement(SchmidtTuple({Rational(1, 2), Rational(1, 2)})) == 1;
    const bool e1 = source_entanglement(SchmidtTuple({Rational(1), Rational(0)})) == 0;
    const double t = seconds_since(t0);
    const bool ok = r.lu_equivalent && std::abs(gap - 0.56) <= 0.01 && std::abs(mu - 0.005) <= 0.01 &&
                    std::abs(lam - 0.11) <= 0.01 && std::abs(lam_bar - 0.68) <= 0.01 && e2 && e1 && t < 10;
    return {"", ok,
            "gap " + fmt(gap, 4) + ", E(mu) " + fmt(mu, 3) + ", E(lam) " + fmt(lam, 3) + ", E(lam_bar) " +
                fmt(lam_bar, 3) + ", E(1/2,1/2)=1 " + std::to_string(e2) + ", E(1,0)=0 " + std::to_string(e1) + ", " +
                fmt(t, 3) + " s"};
}

bool deterministic(const LoccProtocol& p, const PureState& input, double tol) {
    if (!validate(p).ok()) return false;
    double mass = 0;
    for (const auto& leaf : simulate(p, input)) {
        mass += leaf.probability;
        if (leaf.probability > 1e-14 && (leaf.failed || !leaf.fidelity || *leaf.fidelity < 1 - tol)) return false;
    }
    return std::abs(mass - 1) <= 1e-12;
}

Check criterion10() {
    std::mt19937_64 rng(20240611);
    std::uniform_real_distribution<double> mag(0.5, 2.0), phase(0.0, 2 * M_PI);
    int sym_ok = 0;
    for (int trial = 0; trial < 200; ++trial) {
        GhzSymmetry s;
        s.n = static_cast<int>(random_size(rng, 2, 4));
        s.d = static_cast<int>(random_size(rng, 2, s.n == 4 ? 3 : 4));
        s.sigma = random_permutation(rng, static_cast<std::size_t>(s.d));
        s.gammas.assign(static_cast<std::size_t>(s.n - 1), {});
        for (auto& row : s.gammas)
            for (int j = 0; j < s.d; ++j) row.push_back(std::polar(mag(rng), phase(rng)));
        const PureState ghz = make_ghz(s.n, s.d);
        const PureState out = apply_local(symmetry_as_operator(s), ghz);
        sym_ok += fidelity(out, ghz) >= 1 - 1e-12 && (out.amps - ghz.amps).norm() <= 1e-10;
    }

    bool two_round = true;
    for (auto [a1, a2, dl] : {std::tuple{Rational(1, 16), Rational(1, 4), Rational(1, 8)},
                              std::tuple{Rational(1, 9), Rational(1, 4), Rational(1, 6)},
                              std::tuple{Rational(1, 4), Rational(1, 4), Rational(1, 4)}}) {
        const auto setup = two_round_protocol(a1, a2, dl);
        two_round = two_round && deterministic(setup.protocol, setup.input, 1e-10);
    }

    SubswapSpec spec;
    spec.target_factors = {make_ghz(3, 2), make_ghz(3, 2)};
    spec.aux_factors = {make_w(), make_w()};
    spec.swaps = {{1, 0}};
    spec.expected_target = {make_ghz(3, 2), make_w()};
    spec.expected_aux = {make_ghz(3, 2), make_w()};
    const auto rep = verify_subswap(spec);
    const bool subswap = rep.verified && rep.critical_before && !rep.critical_after;

    int factor_ok = 0;
    for (int trial = 0; trial < 100; ++trial) {
        const auto g1 = random_positive(rng, random_size(rng, 2, 4), 20);
        const auto g2 = random_positive(rng, random_size(rng, 2, 4), 20);
        const Rational n1 = random_rational(rng, 1, 40, 7), n2 = random_rational(rng, 1, 40, 11);
        std::vector<Rational> g12;
        for (const auto& x : g1)
            for (const auto& y : g2) g12.push_back(x * y);
        factor_ok += pmax_to_seed(g12, n1 * n2) == pmax_to_seed(g1, n1) * pmax_to_seed(g2, n2);
    }
    const bool ok = sym_ok == 200 && two_round && subswap && factor_ok == 100;
    return {"", ok,
            "symmetries " + std::to_string(sym_ok) + "/200, two-round " + (two_round ? "ok" : "FAIL") + ", sub-SWAP " +
                (subswap ? "ok" : "FAIL") + ", factorization " + std::to_string(factor_ok) + "/100"};
}

Check criterion11() {
    std::mt19937_64 rng(7);
    constexpr int kTrials = 500;
    std::ostringstream detail;
    bool ok = true;
    auto record = [&](const std::string& name, int passed, int total, const std::string& extra = "") {
        ok = ok && passed == total;
        detail << name << " " << passed << "/" << total << extra << "; ";
    };

    {
        int passed = 0;
        for (int t = 0; t < kTrials; ++t) {
            const std::size_t d = random_size(rng, 2, 5);
            const auto x = normalized(random_positive(rng, d, 9));
            std::vector<Rational> target(d, Rational(0));
            const auto weights = normalized(random_positive(rng, random_size(rng, 1, 3), 5));
            for (const auto& w : weights) {
                const auto px = permute(x, random_permutation(rng, d));
                for (std::size_t i = 0; i < d; ++i) target[i] += w * px[i];
            }
            const SchmidtTuple src(x), dst(target);
            const auto cert = rado_decompose(dst, src);
            Rational mass = 0;
            bool nonneg = true;
            for (const auto& term : cert.terms) {
                mass += term.probability;
                nonneg = nonneg && term.probability >= 0;
            }
            passed += apply_certificate(cert, src.coeffs) == dst.coeffs && mass == 1 && nonneg &&
                      cert.terms.size() <= d * d - 2 * d + 2;
        }
        record("rado", passed, kTrials);
    }
    {
        int passed = 0, equal = 0;
        for (int t = 0; t < kTrials; ++t) {
            const std::size_t p = random_size(rng, 1, 3), q = random_size(rng, 1, 3);
            SchmidtTuple a(random_positive(rng, p, 4)), b(random_positive(rng, q, 4)), c, e;
            switch (t % 3) {
                case 0: c = b; e = a; break;
                case 1: {
                    const Rational s = random_rational(rng, 1, 3, 2);
                    std::vector<Rational> as = a.coeffs, bs = b.coeffs;
                    for (auto& x : as) x *= s;
                    for (auto& x : bs) x /= s;
                    c = SchmidtTuple(as);
                    e = SchmidtTuple(bs);
                    break;
                }
                default:
                    c = SchmidtTuple(random_positive(rng, p, 4));
                    e = SchmidtTuple(random_positive(rng, q, 4));
            }
            const auto l = tensor(a, b), r = tensor(c, e);
            const bool ms = multiset_equal(l, r);
            equal += ms;
            passed += (all_esps(l.coeffs) == all_esps(r.coeffs)) == ms;
        }
        record("esp-multiset", passed, kTrials, " (" + std::to_string(equal) + " equal)");
    }
    {
        int passed = 0;
        for (int t = 0; t < kTrials; ++t) {
            std::vector<Rational> x;
            for (std::size_t i = 0, n = random_size(rng, 1, 6); i < n; ++i) x.push_back(random_rational(rng, -9, 9, 4));
            std::vector<Rational> ps;
            for (unsigned k = 1; k <= x.size(); ++k) ps.push_back(power_sum(x, k));
            auto e = all_esps(x);
            e.erase(e.begin());
            passed += esps_from_power_sums(ps) == e;
        }
        record("newton", passed, kTrials);
    }
    {
        int passed = 0;
        for (int t = 0; t < kTrials; ++t) {
            SchmidtTuple x(random_positive(rng, random_size(rng, 1, 4), 9)), y(random_positive(rng, random_size(rng, 1, 4), 9));
            const unsigned k = static_cast<unsigned>(random_size(rng, 0, 6));
            passed += power_sum(tensor(x, y).coeffs, k) == power_sum(x.coeffs, k) * power_sum(y.coeffs, k);
        }
        record("power-sum", passed, kTrials);
    }
    {
        int passed = 0, trivial = 0;
        for (int t = 0; t < kTrials; ++t) {
            const std::size_t p = random_size(rng, 1, 3), q = random_size(rng, 1, 3);
            SchmidtTuple mu(random_positive(rng, p, 3)), lam(random_positive(rng, q, 3)), mb, lb;
            switch (t % 4) {
                case 0: mb = lam; lb = mu; break;
                case 1: mb = mu; lb = lam; break;
                case 2: {
                    // the qubit-qutrit family at a random a: same tensor, different pair
                    const Rational a = random_rational(rng, 1, 9, 10);
                    auto pw = [&](std::initializer_list<unsigned> e) {
                        std::vector<Rational> v;
                        for (unsigned k : e) v.push_back(rational_pow(a, k));
                        return SchmidtTuple(v);
                    };
                    mu = pw({0, 1});
                    lam = pw({0, 2, 4});
                    mb = pw({0, 3});
                    lb = pw({0, 1, 2});
                    break;
                }
                default:
                    mb = SchmidtTuple(random_positive(rng, p, 3));
                    lb = SchmidtTuple(random_positive(rng, q, 3));
            }
            const bool brute = (mu == mb && lam == lb) || (mu == lb && lam == mb);
            trivial += brute;
            passed += tuple_pair_trivial(mu, lam, mb, lb) == brute;
        }
        record("tuple-pair", passed, kTrials, " (" + std::to_string(trivial) + " trivial)");
    }
    return {"", ok, detail.str()};
}

// Examples -------------------------------------------------------------------------------

bool amps_close(const PureState& s, const std::vector<std::pair<int, double>>& nonzero, double tol = 1e-12) {
    CVector expect = CVector::Zero(s.amps.size());
    for (auto [i, v] : nonzero) expect(i) = v;
    return (s.amps - expect).norm() <= tol;
}

Check ex_named_states() {
    const double r2 = 1 / std::sqrt(2.0), r3 = 1 / std::sqrt(3.0);
    const bool ghz = amps_close(make_ghz(3, 2), {{0, r2}, {7, r2}});
    const bool w = amps_close(make_w(), {{1, r3}, {2, r3}, {4, r3}});
    const bool chi = amps_close(make_chi(), {{0, 0.5}, {15, 0.5}, {6, 0.5}, {3, 0.5}});
    return {"", ghz && w && chi, "ghz " + std::to_string(ghz) + ", w " + std::to_string(w) + ", chi " + std::to_string(chi)};
}

Check ex_critical() {
    const auto ghz = make_ghz(3, 2);
    const auto merged = merge_copies({ghz, ghz});
    const double f = fidelity(merged, make_ghz(3, 4));
    const bool ok = is_critical(ghz) && is_critical(merged) && f >= 1 - 1e-12;
    return {"", ok, "GHZ and GHZ^2 critical, GHZ^2 vs GHZ_4^3 fidelity " + fmt(f, 15)};
}

Check ex_chi_limit() {
    auto seq = [](double alpha) {
        CMatrix down = diag2(std::exp(-alpha), std::exp(alpha)), up = diag2(std::exp(alpha), std::exp(-alpha));
        const CMatrix id = CMatrix::Identity(2, 2);
        return LocalOperator{{down, id, up, id}};
    };
    const std::vector<double> alphas{1, 2, 4, 8, 16};
    const auto norms = null_limit_check(make_chi(), seq, alphas);
    std::vector<double> fids;
    for (double a : alphas) fids.push_back(fidelity(apply_local(seq(a), make_chi()), make_ghz(4, 2)));
    const bool rising = std::is_sorted(fids.begin(), fids.end());
    const bool ok = rising && fids.back() >= 1 - 1e-12 && std::abs(norms.back() - 1 / std::sqrt(2.0)) <= 1e-12;
    return {"", ok, "fidelity to GHZ " + fmt(fids.front()) + " -> " + fmt(fids.back(), 15) + ", norm -> " + fmt(norms.back())};
}

Check ex_appendix_a_subswap() {
    const auto ghz = make_ghz(4, 2), chi = make_chi();
    SubswapSpec spec;
    spec.target_factors = {ghz, ghz};
    spec.aux_factors = {chi, chi};
    spec.swaps = {{1, 0}};
    spec.expected_target = {ghz, chi};
    spec.expected_aux = {ghz, chi};
    const auto rep = verify_subswap(spec);
    return {"", rep.verified && rep.critical_before, "fidelity " + fmt(rep.fidelity, 15)};
}

Check ex_incomparable() {
    const auto src = catalysis_src(), dst = catalysis_dst();
    const bool a = k_copy_comparable(src, dst, 1), b = k_copy_comparable(dst, src, 1);
    const bool norm = src.normalized && dst.normalized && catalysis_cat().normalized;
    return {"", !a && !b && norm, "k=1 forward " + std::to_string(a) + ", reverse " + std::to_string(b)};
}

Check ex_multiset() {
    const bool a = multiset_equal(SchmidtTuple(ints({1, 2, 2, 3})), SchmidtTuple(ints({2, 3, 1, 2})));
    const auto [mu, lam, mb, lb] = realize(family_a5(), Rational(1, 2));
    const bool b = multiset_equal(tensor(mu, lam), tensor(mb, lb));
    const auto [m2, l2, mb2, lb2] = realize(family_2x3(), Rational(1, 3));
    const bool c = lu_equivalent(m2, l2, mb2, lb2);
    return {"", a && b && c,
            "(1,2,2,3)~(2,3,1,2) " + std::to_string(a) + ", a^5 family at 1/2 " + std::to_string(b) +
                ", 2x3 family at 1/3 " + std::to_string(c)};
}

Check ex_catalysis_certificate() {
    const auto src = catalysis_src(), dst = catalysis_dst(), cat = catalysis_cat();
    const auto target = tensor(src, cat), source = tensor(dst, cat);
    const auto cert = rado_decompose(target, source);
    const bool exact = apply_certificate(cert, source.coeffs) == target.coeffs;
    const auto protocol = synthesize_ghz_protocol({3, 16, target}, {3, 16, source});
    const bool sim = deterministic(protocol, ghz_like_state(GhzLikeState{3, 16, target}), 1e-10);
    return {"", exact && cert.terms.size() <= 226 && sim,
            std::to_string(cert.terms.size()) + " terms, exact " + std::to_string(exact) + ", protocol simulated " +
                std::to_string(sim)};
}

Check ex_find_catalyst() {
    const auto src = catalysis_src(), dst = catalysis_dst();
    const auto c = find_catalyst(src, dst, 4, 100);
    const bool ok = c && catalyzes(src, dst, *c);
    return {"", ok, c ? "catalyst " + seq(c->coeffs) : std::string("none found")};
}

Check ex_pauli_symmetry() {
    GhzSymmetry s{3, 2, {1, 0}, {{1.0, 1.0}, {1.0, 1.0}}};
    const auto op = symmetry_as_operator(s);
    bool ok = op.factors.size() == 3;
    for (const auto& f : op.factors) ok = ok && (f - pauli_x()).norm() <= 1e-15;
    return {"", ok, "X (x) X (x) X"};
}

Check ex_reach_ghz() {
    int agree = 0, total = 0;
    for (const auto& delta : grid_tenths())
        for (const auto& a2 : grid_tenths()) {
            const Rational half(1, 2);
            // delta <= sqrt(a2/2 + 1/4) - 1/2
            const bool expect = (delta + half) * (delta + half) <= a2 / 2 + Rational(1, 4);
            GhzLikeState src{3, 4, SchmidtTuple(two_copy_diag(delta, delta))};
            GhzLikeState dst{3, 4, SchmidtTuple(two_copy_diag(0, a2))};
            bool built = false;
            try {
                built = deterministic(synthesize_ghz_protocol(src, dst), ghz_like_state(src), 1e-10);
            } catch (const no_certificate_error&) {
            }
            agree += built == expect;
            ++total;
        }
    return {"", agree == total, std::to_string(agree) + "/" + std::to_string(total) + " agree"};
}

Check ex_trivial_bound_zero() {
    bool ok = true;
    for (const auto& a2 : grid_tenths()) {
        const auto b = trivial_subgroup_bound(0, a2);
        ok = ok && b.is_square && b.root == 0 && !trivial_subgroup_feasible(Rational(1, 10), 0, a2) &&
             trivial_subgroup_feasible(0, 0, a2);
    }
    return {"", ok, "bound 0 for alpha1 = 0"};
}

Check ex_esp_conventions() {
    const bool ok = esp(ints({5, 7}), 0) == 1 && esp({}, 0) == 1 && esp(ints({1, 1, 1}), 4) == 0;
    return {"", ok, "e_0 = 1, e_4(1,1,1) = 0"};
}

Check ex_pmax_chain() {
    const double eps = std::sqrt(2.0) - 1.0;
    const double n_sq = (1 + eps) / 2;
    const CMatrix H = kron(diag2(1.0, eps), diag2(eps, 1.0));
    const CMatrix id4 = CMatrix::Identity(4, 4);
    const std::vector<LocalOperator> stab{LocalOperator{{id4}}, LocalOperator{{permutation_matrix({0, 2, 1, 3})}}};
    const double via_stab = pmax_sep_unitary_stabilizer(id4, H, stab, n_sq * n_sq);
    const double joint = pmax_joint_two_state(diag2(1.0, eps), diag2(eps, 1.0), n_sq, n_sq);
    const Rational q = parse_rational("0.414");
    const Rational exact = pmax_joint_two_state(h1_diag(q), h2_diag(q), (1 + q) / 2, (1 + q) / 2);
    const bool ok = std::abs(via_stab - joint) <= 1e-12 && std::abs(joint - joint_closed_form(eps)) <= 1e-12 &&
                    exact == joint_closed_form(q);
    return {"", ok, "stabilizer route " + fmt(via_stab, 12) + ", joint " + fmt(joint, 12)};
}

Check ex_three_branch() {
    bool ok = true;
    std::string detail;
    for (double eps : {0.414, 1.0}) {
        const auto setup = build_three_branch_protocol(psi5(), eps);
        const bool clean = validate(setup.protocol).ok();
        const double succ = success_probability(simulate(setup.protocol, setup.input));
        ok = ok && clean && std::abs(succ - joint_closed_form(eps)) <= 1e-10;
        detail += "eps=" + fmt(eps) + " success " + fmt(succ) + "; ";
    }
    const auto at_one = build_three_branch_protocol(psi5(), 1.0);
    const double m3 = at_one.protocol.rounds.front().ops.at(2).norm();
    ok = ok && m3 <= 1e-12 && deterministic(at_one.protocol, at_one.input, 1e-10);
    return {"", ok, detail + "M3 at eps=1: " + fmt(m3, 3)};
}

Check ex_two_round_leaves() {
    const auto setup = two_round_protocol(Rational(1, 16), Rational(1, 4), Rational(1, 8));
    const auto leaves = simulate(setup.protocol, setup.input);
    bool ok = leaves.size() == 4;
    for (const auto& l : leaves) ok = ok && !l.failed && l.fidelity && *l.fidelity >= 1 - 1e-10;
    return {"", ok, std::to_string(leaves.size()) + " leaves"};
}

Check ex_qubit_constructions() {
    const bool c331 = construct_qubit_solution(3, 3, 1) == family_2x3();
    const bool nh25 = same_family(nonhomogeneous_solution(2, 5), construct_qubit_solution(5, 5, 1));
    const bool nh34 = same_family(nonhomogeneous_solution(3, 4), listed_3x4().front());
    const auto h4 = homogeneous_solution(4);
    const bool sub4 = h4.kind == "sub_swap" && h4.family && exponents_valid(*h4.family);
    return {"", c331 && nh25 && nh34 && sub4,
            "(3,3,1) " + std::to_string(c331) + ", nonhomogeneous(2,5) " + std::to_string(nh25) + ", nonhomogeneous(3,4) " +
                std::to_string(nh34) + ", homogeneous(4) sub_swap " + std::to_string(sub4)};
}

std::string labels(const GapCycle& c) {
    std::string out;
    for (auto g : c.edges) out += std::string(out.empty() ? "" : " ") + to_string(g);
    return out;
}

Check ex_cycles() {
    const auto ka = gap_cycles(construct_qubit_solution(5, 5, 1));
    const bool fig4 = ka.size() == 1 && ka[0].nodes.size() == 5 &&
                      std::count(ka[0].edges.begin(), ka[0].edges.end(), Gap::g_plus) == 4 &&
                      std::count(ka[0].edges.begin(), ka[0].edges.end(), Gap::g_minus) == 1;
    const auto kb = gap_cycles(family_kb());
    const std::vector<Gap> fig6_edges{Gap::g_plus, Gap::g_plus_plus, Gap::g_plus, Gap::g_minus, Gap::g_minus};
    const bool fig6 = kb.size() == 1 && kb[0].edges == fig6_edges;

    const Rational t(1, 3);
    ExponentFamily second;
    second.mu = ints({0, 1});
    second.lam = {0, 2 * t, 4 * t, 2, 8 * t, 10 * t, 4};
    second.mu_bar = {0, 7 * t};
    second.lam_bar = {0, 2 * t, 1, 4 * t, 5 * t, 2, 8 * t};
    const auto k7 = gap_cycles(second);
    bool fig7 = k7.size() == 1 && k7[0].nodes.size() == 7;
    if (fig7) {
        const auto& e = k7[0].edges;
        fig7 = std::count(e.begin(), e.end(), Gap::g_plus) == 4 && std::count(e.begin(), e.end(), Gap::g_minus) == 3;
        // interleaved: more than one change of sign around the cycle
        int changes = 0;
        for (std::size_t i = 0; i < e.size(); ++i) changes += (e[i] == Gap::g_minus) != (e[(i + 1) % e.size()] == Gap::g_minus);
        fig7 = fig7 && changes > 2;
    }
    return {"", fig4 && fig6 && fig7,
            "k_a: " + (ka.empty() ? std::string() : labels(ka[0])) + " | k_b: " + (kb.empty() ? std::string() : labels(kb[0])) +
                " | 7/3: " + (k7.empty() ? std::string() : labels(k7[0]))};
}

Check ex_enumeration_shape() {
    bool ok = true;
    std::string detail;
    for (int d : {3, 5, 7}) {
        for (const auto& s : enumeration(2, d)) {
            if (s.classification != LuClass::nontrivial) continue;
            if (std::all_of(s.family.mu.begin(), s.family.mu.end(), [](const Rational& x) { return x == 0; })) ok = false;
        }
    }
    detail += "no degenerate mu among odd-d qubit families; ";
    const auto& s24 = enumeration(2, 4);
    const bool even_subswap = count_class(s24, LuClass::sub_swap) > 0;
    ok = ok && even_subswap;
    detail += "2x4 sub_swap present " + std::to_string(even_subswap) + "; 3x4 families:";
    for (const auto& f : enumeration(3, 4))
        if (f.classification == LuClass::nontrivial) detail += " " + show(f.integral);
    return {"", ok, detail};
}

Check ex_nonadditivity_default() {
    const auto r = nonadditivity_experiment(DirectSumParams{});
    const Rational frozen("-9019988368242379190507/79637975153171415171072");
    return {"", r.lu_equivalent && r.gap == frozen, "gap " + to_string(r.gap)};
}

}  // namespace

std::vector<Check> acceptance_criteria() {
    const std::vector<std::pair<std::string, std::function<Check()>>> items{
        {"1 catalysis regression", criterion1},
        {"2 probability regression", criterion2},
        {"3 norm check", criterion3},
        {"4 GHZ decision closed form", criterion4},
        {"5 trivial-subgroup bound", criterion5},
        {"6 enumeration regressions", criterion6},
        {"7 qubit ratio sweep", criterion7},
        {"8 construction regressions", criterion8},
        {"9 source entanglement", criterion9},
        {"10 symmetry and simulation suites", criterion10},
        {"11 property suites", criterion11},
    };
    std::vector<Check> out;
    for (const auto& [name, fn] : items) out.push_back(guarded(name, fn));
    return out;
}

std::vector<Check> published_examples() {
    const std::vector<std::pair<std::string, std::function<Check()>>> items{
        {"named states", ex_named_states},
        {"critical GHZ and merged copies", ex_critical},
        {"chi semistable limit", ex_chi_limit},
        {"chi/GHZ sub-SWAP", ex_appendix_a_subswap},
        {"incomparable catalysis pair", ex_incomparable},
        {"multiset and LU examples", ex_multiset},
        {"catalysis certificate and protocol", ex_catalysis_certificate},
        {"catalyst search", ex_find_catalyst},
        {"Pauli X symmetry", ex_pauli_symmetry},
        {"GHZ target reachability", ex_reach_ghz},
        {"trivial bound at alpha1 = 0", ex_trivial_bound_zero},
        {"ESP conventions", ex_esp_conventions},
        {"stabilizer route to joint p_max", ex_pmax_chain},
        {"three-branch protocol", ex_three_branch},
        {"two-round leaves", ex_two_round_leaves},
        {"qubit and nonhomogeneous constructions", ex_qubit_constructions},
        {"gap cycles", ex_cycles},
        {"enumeration shape", ex_enumeration_shape},
        {"nonadditivity at default parameters", ex_nonadditivity_default},
    };
    std::vector<Check> out;
    for (const auto& [name, fn] : items) out.push_back(guarded(name, fn));
    return out;
}

}  // namespace mst::suite
