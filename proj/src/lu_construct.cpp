#include <algorithm>
#include <map>
#include <stdexcept>

#include "mstate/bipartite_lu.hpp"

namespace mst {

namespace {

bool odd(int x) { return x > 0 && x % 2 == 1; }

std::vector<Rational> sorted(std::vector<Rational> v) {
    std::sort(v.begin(), v.end());
    return v;
}

void require_valid(const ExponentFamily& f, const char* who) {
    if (!exponents_valid(f)) throw std::logic_error(std::string(who) + ": construction failed its own check");
}

std::vector<Rational> ramp(int n, const Rational& step) {
    std::vector<Rational> v;
    for (int i = 0; i < n; ++i) v.push_back(step * i);
    return v;
}

}  // namespace

ExponentFamily construct_qubit_solution(int d, int d1, int d2) {
    if (!odd(d) || !odd(d1) || !odd(d2)) throw std::invalid_argument("construct_qubit_solution: d, d1, d2 must be odd");
    if (!(d >= d1 && d1 > d2 && d2 >= 1)) throw std::invalid_argument("construct_qubit_solution: need d >= d1 > d2 >= 1");
    const Rational r = ratio(d1, d2);
    ExponentFamily f;
    f.mu = {0, 1};
    f.mu_bar = {0, r};
    if (d1 == d) {
        const Rational beta = r - 1;
        for (int i = 0; i <= d - d2 - 2; i += 2) f.lam.push_back(i);
        for (int i = 2; i <= d - d2 - 2; i += 2) f.lam.push_back(beta + i);
        for (int i = 1; i <= d2 + 1; ++i) f.lam.push_back(beta * i);
        for (int i = 0; i <= d - d2 - 1; ++i) f.lam_bar.push_back(i);
        for (int i = 1; i <= d2; ++i) f.lam_bar.push_back(beta * i);
    } else {
        // Embed the (d1, d1, d2) solution and fill the remaining levels with blocks that
        // trade mu_bar for mu.
        ExponentFamily core = construct_qubit_solution(d1, d1, d2);
        f.lam = core.lam;
        f.lam_bar = core.lam_bar;
        for (int k = 0; k < (d - d1) / 2; ++k) {
            f.lam.insert(f.lam.end(), {Rational(0), r});
            f.lam_bar.insert(f.lam_bar.end(), {Rational(0), Rational(1)});
        }
    }
    f.lam = sorted(f.lam);
    f.lam_bar = sorted(f.lam_bar);
    require_valid(f, "construct_qubit_solution");
    return f;
}

ExponentFamily nonhomogeneous_solution(int d_mu, int d_lam) {
    if (d_mu < 2 || d_mu >= d_lam) throw std::invalid_argument("nonhomogeneous_solution: need 2 <= d_mu < d_lam");
    ExponentFamily f;
    f.mu = ramp(d_mu, d_lam);
    f.lam = ramp(d_lam, 1);
    f.mu_bar = ramp(d_mu, 1);
    f.lam_bar = ramp(d_lam, d_mu);
    require_valid(f, "nonhomogeneous_solution");
    return f;
}

namespace {

int smallest_factor(int d) {
    for (int p = 2; p * p <= d; ++p)
        if (d % p == 0) return p;
    return d;
}

std::vector<Rational> sums(const std::vector<Rational>& a, const std::vector<Rational>& b) {
    std::vector<Rational> out;
    for (const auto& x : a)
        for (const auto& y : b) out.push_back(x + y);
    return sorted(out);
}

std::vector<Rational> scaled(const std::vector<Rational>& v, const Rational& w) {
    Rational t = 0;
    for (const auto& x : v) t += x;
    std::vector<Rational> out;
    for (const auto& x : v) out.push_back(w * x / t);
    return out;
}

std::vector<Rational> outer(const std::vector<Rational>& a, const std::vector<Rational>& b) {
    std::vector<Rational> out;
    for (const auto& x : a)
        for (const auto& y : b) out.push_back(x * y);
    return out;
}

std::vector<Rational> powers(const Rational& a, std::initializer_list<unsigned> exps) {
    std::vector<Rational> out;
    for (unsigned e : exps) out.push_back(rational_pow(a, e));
    return out;
}

}  // namespace

std::array<SchmidtTuple, 4> direct_sum_construction(int d, const DirectSumParams& p) {
    if (d < 7 || d % 2 == 0) throw std::invalid_argument("direct_sum_construction: d must be odd and at least 7");
    for (const auto* x : {&p.a, &p.b, &p.c, &p.b_prime, &p.c_prime})
        if (*x <= 0 || *x >= 1) throw std::invalid_argument("direct_sum_construction: parameters must lie in (0,1)");
    const int m = (d - 3) / 2;
    std::vector<Rational> B, Bp;
    for (int i = 0; i < m; ++i) {
        B.push_back(rational_pow(p.b, static_cast<unsigned>(i)));
        Bp.push_back(rational_pow(p.b_prime, static_cast<unsigned>(i)));
    }
    const auto q1 = powers(p.a, {0, 1}), q3 = powers(p.a, {0, 3});
    const auto t1 = powers(p.a, {0, 1, 2}), t2 = powers(p.a, {0, 2, 4});
    auto block = [](const std::vector<Rational>& two, const std::vector<Rational>& rest, const Rational& w,
                    const std::vector<Rational>& three) {
        auto v = scaled(outer(scaled(two, 1), scaled(rest, 1)), w);
        auto t = scaled(three, 1 - w);
        v.insert(v.end(), t.begin(), t.end());
        return SchmidtTuple(std::move(v));
    };
    return {block(q1, B, p.c, t1), block(q3, Bp, p.c_prime, t2), block(q3, B, p.c, t2), block(q1, Bp, p.c_prime, t1)};
}

HomogeneousSolution homogeneous_solution(int d, const DirectSumParams& params) {
    if (d < 4) throw std::invalid_argument("homogeneous_solution: d must be at least 4");
    HomogeneousSolution h;
    const int p = smallest_factor(d);
    if (p < d) {
        // mu = P + Q, lam = R + S  ->  mu_bar = R + Q, lam_bar = P + S.
        const int q = d / p;
        auto P = ramp(p, 1), R = ramp(p, 2), Q = ramp(q, 3), S = ramp(q, 5);
        ExponentFamily f{sums(P, Q), sums(R, S), sums(R, Q), sums(P, S)};
        require_valid(f, "homogeneous_solution");
        h.kind = "sub_swap";
        h.family = f;
        return h;
    }
    if (d == 5) {
        const Rational t(1, 3);
        ExponentFamily f;
        f.mu = {0, 1, 4 * t, 2, 8 * t};
        f.lam = {0, t, 2 * t, 1, 4 * t};
        f.mu_bar = {0, t, 4 * t, 5 * t, 2};
        f.lam_bar = {0, 2 * t, 1, 4 * t, 2};
        require_valid(f, "homogeneous_solution");
        h.kind = "explicit";
        h.family = f;
        return h;
    }
    h.kind = "direct_sum_construction";
    h.tuples = direct_sum_construction(d, params);
    return h;
}

const char* to_string(Gap g) {
    switch (g) {
        case Gap::g_plus_plus: return "g_plus_plus";
        case Gap::g_plus: return "g_plus";
        case Gap::g_minus: return "g_minus";
    }
    return "?";
}

Rational gap_exponent(Gap g, const Rational& ratio) {
    switch (g) {
        case Gap::g_plus_plus: return 1 + ratio;
        case Gap::g_plus: return 1;
        case Gap::g_minus: return 1 - ratio;
    }
    return 0;
}

std::vector<GapCycle> gap_cycles(const ExponentFamily& f, const std::optional<TableauPair>& pair) {
    if (f.mu.size() != 2 || f.mu_bar.size() != 2) throw std::invalid_argument("gap_cycles: needs a qubit target");
    if (f.lam.size() != f.lam_bar.size()) throw std::invalid_argument("gap_cycles: auxiliary dimensions differ");
    if (!exponents_valid(f)) throw std::invalid_argument("gap_cycles: not a valid family");
    if (f.mu[1] <= 0) throw std::invalid_argument("gap_cycles: mu must be non-degenerate");
    const int d = static_cast<int>(f.lam.size());
    const Rational ratio = f.mu_bar[1] / f.mu[1];
    if (ratio <= 1) throw std::invalid_argument("gap_cycles: expected a_bar < a");
    {
        // ratio = d / d2 with odd d2 < d
        Rational d2 = Rational(d) / ratio;
        if (d % 2 == 0 || d2.get_den() != 1 || d2.get_num() % 2 == 0)
            throw std::invalid_argument("gap_cycles: ratio is not d / d2 with odd d2");
    }
    TableauPair tp = pair ? *pair : canonical_pair(f);
    if (tp.t_in.size() != static_cast<std::size_t>(2 * d) || tp.t_out.size() != tp.t_in.size())
        throw std::invalid_argument("gap_cycles: tableau pair has the wrong size");

    std::vector<std::pair<int, int>> out_cell(tp.t_out.size());
    for (std::size_t idx = 0; idx < tp.t_out.size(); ++idx)
        out_cell[static_cast<std::size_t>(tp.t_out[idx])] = {static_cast<int>(idx) / d, static_cast<int>(idx) % d};

    std::vector<int> succ(static_cast<std::size_t>(d), -1), indeg(static_cast<std::size_t>(d), 0);
    std::vector<Gap> label(static_cast<std::size_t>(d));
    for (int i = 0; i < d; ++i) {
        auto [k0, l0] = out_cell[static_cast<std::size_t>(tp.t_in[static_cast<std::size_t>(i)])];
        auto [k1, l1] = out_cell[static_cast<std::size_t>(tp.t_in[static_cast<std::size_t>(d + i)])];
        Gap g;
        switch (k1 - k0) {
            case 0: g = Gap::g_plus; break;
            case 1: g = Gap::g_minus; break;
            default: g = Gap::g_plus_plus; break;
        }
        if (succ[static_cast<std::size_t>(l0)] != -1) throw std::invalid_argument("gap_cycles: relations do not form cycles");
        if ((f.lam_bar[static_cast<std::size_t>(l1)] - f.lam_bar[static_cast<std::size_t>(l0)]) != gap_exponent(g, ratio) * f.mu[1])
            throw std::invalid_argument("gap_cycles: tableau pair does not realize the family");
        succ[static_cast<std::size_t>(l0)] = l1;
        label[static_cast<std::size_t>(l0)] = g;
        ++indeg[static_cast<std::size_t>(l1)];
    }
    for (int l = 0; l < d; ++l)
        if (indeg[static_cast<std::size_t>(l)] != 1) throw std::invalid_argument("gap_cycles: relations do not form cycles");

    std::vector<GapCycle> cycles;
    std::vector<bool> seen(static_cast<std::size_t>(d), false);
    for (int start = 0; start < d; ++start) {
        if (seen[static_cast<std::size_t>(start)]) continue;
        GapCycle c;
        int x = start;
        while (!seen[static_cast<std::size_t>(x)]) {
            seen[static_cast<std::size_t>(x)] = true;
            c.nodes.push_back(x);
            c.edges.push_back(label[static_cast<std::size_t>(x)]);
            x = succ[static_cast<std::size_t>(x)];
        }
        Rational total = 0;
        for (auto g : c.edges) total += gap_exponent(g, ratio);
        if (total != 0) throw std::logic_error("gap_cycles: cycle exponents do not cancel");
        cycles.push_back(std::move(c));
    }
    return cycles;
}

}  // namespace mst
