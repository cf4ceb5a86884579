#include "mstate/symmetric.hpp"

#include <algorithm>
#include <stdexcept>

namespace mst {

std::vector<Rational> all_esps(const std::vector<Rational>& x) {
    std::vector<Rational> e(x.size() + 1, Rational(0));
    e[0] = 1;
    for (std::size_t i = 0; i < x.size(); ++i)
        for (std::size_t k = i + 1; k >= 1; --k) e[k] += e[k - 1] * x[i];
    return e;
}

Rational esp(const std::vector<Rational>& x, std::size_t k) {
    if (k > x.size()) return 0;
    return all_esps(x)[k];
}

Rational power_sum(const std::vector<Rational>& x, unsigned k) {
    Rational s = 0;
    for (const auto& v : x) s += rational_pow(v, k);
    return s;
}

std::vector<Rational> esps_from_power_sums(const std::vector<Rational>& psums) {
    const std::size_t n = psums.size();
    std::vector<Rational> e(n + 1, Rational(0));
    e[0] = 1;
    for (std::size_t k = 1; k <= n; ++k) {
        Rational acc = 0;
        for (std::size_t i = 1; i <= k; ++i) {
            Rational term = e[k - i] * psums[i - 1];
            if (i % 2 == 1)
                acc += term;
            else
                acc -= term;
        }
        e[k] = acc / static_cast<long>(k);
    }
    return {e.begin() + 1, e.end()};
}

bool lu_equivalent(const SchmidtTuple& mu, const SchmidtTuple& lam, const SchmidtTuple& mu_bar,
                   const SchmidtTuple& lam_bar) {
    if (mu.size() * lam.size() != mu_bar.size() * lam_bar.size())
        throw std::invalid_argument("lu_equivalent: tensor dimensions differ");
    SchmidtTuple left = tensor(mu, lam), right = tensor(mu_bar, lam_bar);
    bool by_esp = all_esps(left.coeffs) == all_esps(right.coeffs);
    bool by_multiset = multiset_equal(left, right);
    if (by_esp != by_multiset) throw std::logic_error("lu_equivalent: ESP and multiset checks disagree");
    return by_esp;
}

bool tuple_pair_trivial(const SchmidtTuple& mu, const SchmidtTuple& lam, const SchmidtTuple& mu_bar,
                        const SchmidtTuple& lam_bar) {
    const std::size_t top = std::max({mu.size(), lam.size(), mu_bar.size(), lam_bar.size()});
    auto padded = [top](const SchmidtTuple& t) {
        auto e = all_esps(t.coeffs);
        e.resize(top + 1, Rational(0));
        return e;
    };
    auto s = padded(mu), t = padded(lam), sb = padded(mu_bar), tb = padded(lam_bar);
    for (std::size_t i = 1; i <= top; ++i)
        if (s[i] + t[i] != sb[i] + tb[i]) return false;
    for (std::size_t k = 1; k <= 2 * top; ++k) {
        Rational lhs = 0, rhs = 0;
        for (std::size_t i = 0; i <= std::min(k, top); ++i) {
            if (k - i > top) continue;
            lhs += s[i] * t[k - i];
            rhs += sb[i] * tb[k - i];
        }
        if (lhs != rhs) return false;
    }
    return true;
}

}  // namespace mst
