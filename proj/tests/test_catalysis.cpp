#include <doctest.h>

#include <cstdlib>
#include <random>

#include "mstate/catalysis.hpp"
#include "mstate/errors.hpp"
#include "support.hpp"

using namespace mst;
using test::q;

namespace {

SchmidtTuple t(std::initializer_list<std::pair<long, long>> xs) { return SchmidtTuple(test::qs(xs)); }

std::vector<Rational> power_oracle(const std::vector<Rational>& x, unsigned k) {
    std::vector<Rational> out{Rational(1)};
    for (unsigned i = 0; i < k; ++i) out = test::kron_oracle(out, x);
    return out;
}

}  // namespace

TEST_CASE("decimal catalysis example") {
    auto src = from_decimals({"0.45", "0.35", "0.12", "0.08"});
    auto dst = from_decimals({"0.56", "0.21", "0.17", "0.06"});
    auto cat = from_decimals({"0.63", "0.27", "0.07", "0.03"});
    CHECK_FALSE(majorizes(dst, src));
    CHECK_FALSE(majorizes(src, dst));
    CHECK(catalyzes(src, dst, cat));
    CHECK(test::majorizes_oracle(test::kron_oracle(dst.coeffs, cat.coeffs), test::kron_oracle(src.coeffs, cat.coeffs)));
}

TEST_CASE("two-level catalyst with a vanishing target entry") {
    auto src = t({{2, 5}, {2, 5}, {1, 10}, {1, 10}});
    auto dst = t({{1, 2}, {1, 4}, {1, 4}, {0, 1}});
    auto cat = t({{3, 5}, {2, 5}});
    CHECK_FALSE(majorizes(dst, src));
    CHECK(catalyzes(src, dst, cat));
    auto found = find_catalyst(src, dst, 2, 10);
    REQUIRE(found.has_value());
    CHECK(*found == cat);
}

TEST_CASE("catalysis argument checks") {
    auto a = t({{1, 2}, {1, 2}});
    CHECK_THROWS_AS(catalyzes(a, t({{1, 1}, {0, 1}, {0, 1}}), a), std::invalid_argument);
    CHECK_THROWS_AS(k_copy_comparable(a, a, 0), std::invalid_argument);
    CHECK_THROWS_AS(k_copy_comparable(a, t({{1, 1}, {0, 1}, {0, 1}}), 2), std::invalid_argument);
    CHECK_THROWS_AS(find_catalyst(a, t({{3, 4}, {1, 4}}), 0, 10), std::invalid_argument);
    CHECK_THROWS_AS(find_catalyst(a, t({{3, 4}, {1, 4}}), 4, 3), std::invalid_argument);
    // dst already majorizes src
    CHECK_THROWS_AS(find_catalyst(a, t({{3, 4}, {1, 4}}), 2, 10), std::invalid_argument);
}

TEST_CASE("k_copy_comparable respects the amplitude cap") {
    setenv("MSTATE_MAX_AMPLITUDES", "100", 1);
    auto a = t({{1, 2}, {1, 3}, {1, 6}});
    CHECK_NOTHROW(k_copy_comparable(a, a, 4));
    CHECK_THROWS_AS(k_copy_comparable(a, a, 5), resource_error);
    unsetenv("MSTATE_MAX_AMPLITUDES");
}

// Found by a grid search over 4-level tuples with denominator 24; no 3-level pair on a
// 1/60 grid has this property.
TEST_CASE("pair that becomes comparable with two copies") {
    auto src = t({{1, 2}, {1, 3}, {1, 12}, {1, 12}});
    auto dst = t({{5, 8}, {1, 6}, {1, 6}, {1, 24}});
    CHECK_FALSE(test::majorizes_oracle(dst.coeffs, src.coeffs));
    CHECK_FALSE(test::majorizes_oracle(src.coeffs, dst.coeffs));
    CHECK(test::majorizes_oracle(power_oracle(dst.coeffs, 2), power_oracle(src.coeffs, 2)));
    CHECK_FALSE(k_copy_comparable(src, dst, 1));
    CHECK(k_copy_comparable(src, dst, 2));
}

TEST_CASE("property: k-copy comparability matches the oracle") {
    std::mt19937_64 rng(501);
    for (int i = 0; i < 150; ++i) {
        const std::size_t d = 2 + rng() % 3;
        auto x = test::random_simplex(rng, d, 20), y = test::random_simplex(rng, d, 20);
        const unsigned k = 1 + static_cast<unsigned>(rng() % 3);
        CHECK(k_copy_comparable(SchmidtTuple(x), SchmidtTuple(y), k) ==
              test::majorizes_oracle(power_oracle(y, k), power_oracle(x, k)));
    }
}

TEST_CASE("property: two-level pairs are always comparable") {
    std::mt19937_64 rng(502);
    for (int i = 0; i < 100; ++i) {
        SchmidtTuple x(test::random_simplex(rng, 2, 50)), y(test::random_simplex(rng, 2, 50));
        CHECK((majorizes(x, y) || majorizes(y, x)));
    }
}

TEST_CASE("property: a uniform catalyst never helps") {
    std::mt19937_64 rng(503);
    const auto u = t({{1, 3}, {1, 3}, {1, 3}});
    for (int i = 0; i < 100; ++i) {
        SchmidtTuple x(test::random_simplex(rng, 4, 20)), y(test::random_simplex(rng, 4, 20));
        CHECK(catalyzes(x, y, u) == majorizes(y, x));
    }
}

TEST_CASE("find_catalyst returns a verified catalyst or nothing") {
    auto src = t({{2, 5}, {2, 5}, {1, 10}, {1, 10}});
    auto dst = t({{1, 2}, {1, 4}, {1, 4}, {0, 1}});
    for (long den : {5L, 10L, 20L}) {
        auto c = find_catalyst(src, dst, 2, den);
        if (c) CHECK(catalyzes(src, dst, *c));
    }
    // the cat_dim = 1 catalyst is trivial and cannot help an incomparable pair
    CHECK_FALSE(find_catalyst(src, dst, 1, 10).has_value());
}
