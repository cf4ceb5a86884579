#include <doctest.h>

#include <algorithm>
#include <random>

#include "mstate/symmetric.hpp"
#include "support.hpp"

using namespace mst;
using test::q;

namespace {

// Sum over k-subsets, enumerated by bitmask.
Rational esp_oracle(const std::vector<Rational>& x, std::size_t k) {
    Rational s = 0;
    for (unsigned mask = 0; mask < (1u << x.size()); ++mask) {
        if (static_cast<std::size_t>(__builtin_popcount(mask)) != k) continue;
        Rational p = 1;
        for (std::size_t i = 0; i < x.size(); ++i)
            if (mask & (1u << i)) p *= x[i];
        s += p;
    }
    return s;
}

std::vector<Rational> random_entries(std::mt19937_64& rng, std::size_t n) {
    std::vector<Rational> v;
    for (std::size_t i = 0; i < n; ++i) v.push_back(q(static_cast<long>(rng() % 19) - 9, 4));
    return v;
}

bool same_multiset(std::vector<Rational> a, std::vector<Rational> b) {
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    return a == b;
}

// Nonzero entries only, as sorted vectors.
std::vector<Rational> support(const SchmidtTuple& t) {
    std::vector<Rational> v;
    for (const auto& x : t.coeffs)
        if (x != 0) v.push_back(x);
    return v;
}

bool unordered_pair_equal(const SchmidtTuple& a, const SchmidtTuple& b, const SchmidtTuple& c, const SchmidtTuple& d) {
    return (support(a) == support(c) && support(b) == support(d)) || (support(a) == support(d) && support(b) == support(c));
}

SchmidtTuple random_tuple(std::mt19937_64& rng, std::size_t n) {
    std::vector<Rational> v;
    for (std::size_t i = 0; i < n; ++i) v.push_back(q(static_cast<long>(rng() % 4) + 1, 4));
    return SchmidtTuple(v);
}

}  // namespace

TEST_CASE("ESP conventions") {
    const std::vector<Rational> x = {1, 2, 3};
    CHECK(esp(x, 0) == 1);
    CHECK(esp(x, 1) == 6);
    CHECK(esp(x, 2) == 11);
    CHECK(esp(x, 3) == 6);
    CHECK(esp(x, 4) == 0);
    CHECK(all_esps(x) == std::vector<Rational>{1, 6, 11, 6});
    CHECK(esp({}, 0) == 1);
    CHECK(power_sum(x, 2) == 14);
    CHECK(power_sum(x, 0) == 3);
}

TEST_CASE("property: ESPs match subset enumeration") {
    std::mt19937_64 rng(701);
    for (int t = 0; t < 200; ++t) {
        auto x = random_entries(rng, 1 + rng() % 6);
        for (std::size_t k = 0; k <= x.size() + 1; ++k) CHECK(esp(x, k) == esp_oracle(x, k));
    }
}

TEST_CASE("property: Newton identities recover the ESPs") {
    std::mt19937_64 rng(702);
    for (int t = 0; t < 300; ++t) {
        auto x = random_entries(rng, 1 + rng() % 6);
        std::vector<Rational> p;
        for (unsigned k = 1; k <= x.size(); ++k) p.push_back(power_sum(x, k));
        auto e = esps_from_power_sums(p);
        auto all = all_esps(x);
        CHECK(std::vector<Rational>(all.begin() + 1, all.end()) == e);
    }
}

TEST_CASE("property: power sums are multiplicative over tensor products") {
    std::mt19937_64 rng(703);
    for (int t = 0; t < 200; ++t) {
        auto a = random_entries(rng, 1 + rng() % 4), b = random_entries(rng, 1 + rng() % 4);
        const unsigned k = static_cast<unsigned>(rng() % 6);
        CHECK(power_sum(test::kron_oracle(a, b), k) == power_sum(a, k) * power_sum(b, k));
    }
}

TEST_CASE("lu_equivalent on simple cases") {
    auto a = SchmidtTuple(test::qs({{1, 2}, {1, 2}})), b = SchmidtTuple(test::qs({{2, 3}, {1, 3}}));
    CHECK(lu_equivalent(a, b, b, a));
    CHECK(lu_equivalent(a, b, a, b));
    CHECK_FALSE(lu_equivalent(a, a, b, b));
    CHECK_THROWS_AS(lu_equivalent(a, b, a, SchmidtTuple(test::qs({{1, 3}, {1, 3}, {1, 3}}))), std::invalid_argument);
}

TEST_CASE("property: lu_equivalent equals tensor multiset equality") {
    std::mt19937_64 rng(704);
    for (int t = 0; t < 300; ++t) {
        auto m = random_tuple(rng, 2), l = random_tuple(rng, 3);
        auto mb = random_tuple(rng, 2), lb = random_tuple(rng, 3);
        if (rng() % 3 == 0) {
            mb = m;
            lb = l;
        }
        CHECK(lu_equivalent(m, l, mb, lb) ==
              same_multiset(test::kron_oracle(m.coeffs, l.coeffs), test::kron_oracle(mb.coeffs, lb.coeffs)));
    }
}

TEST_CASE("tuple_pair_trivial ignores zero entries") {
    auto a = SchmidtTuple(test::qs({{1, 2}, {1, 2}, {0, 1}})), b = SchmidtTuple(test::qs({{1, 2}, {1, 2}}));
    auto c = SchmidtTuple(test::qs({{1, 3}, {2, 3}}));
    CHECK(tuple_pair_trivial(a, c, c, b));
    CHECK(tuple_pair_trivial(a, c, b, c));
    CHECK_FALSE(tuple_pair_trivial(a, c, c, c));
}

TEST_CASE("property: tuple_pair_trivial matches unordered pair equality") {
    std::mt19937_64 rng(705);
    int positives = 0;
    for (int t = 0; t < 500; ++t) {
        const std::size_t n = 2 + rng() % 2;
        auto m = random_tuple(rng, n), l = random_tuple(rng, n), mb = random_tuple(rng, n), lb = random_tuple(rng, n);
        switch (rng() % 3) {
            case 0:
                mb = l;
                lb = m;
                break;
            case 1:
                mb = m;
                lb = l;
                break;
            default:
                break;
        }
        const bool expect = unordered_pair_equal(m, l, mb, lb);
        positives += expect;
        CHECK(tuple_pair_trivial(m, l, mb, lb) == expect);
    }
    CHECK(positives > 100);
}
