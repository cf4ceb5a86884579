#include <doctest.h>

#include <cmath>
#include <random>

#include "mstate/errors.hpp"
#include "mstate/ghz.hpp"
#include "mstate/protocol.hpp"
#include "support.hpp"

using namespace mst;
using test::q;

namespace {

CMatrix diag_c(const std::vector<cplx>& v) {
    CMatrix m = CMatrix::Zero(static_cast<Eigen::Index>(v.size()), static_cast<Eigen::Index>(v.size()));
    for (std::size_t i = 0; i < v.size(); ++i) m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i)) = v[i];
    return m;
}

GhzLikeState like(int n, std::vector<Rational> diag) {
    SchmidtTuple t(std::move(diag));
    return {n, static_cast<int>(t.size()), t};
}

}  // namespace

TEST_CASE("property: random monomial symmetries fix GHZ") {
    std::mt19937_64 rng(301);
    std::uniform_real_distribution<double> mag(0.3, 3.0), ph(0, 2 * M_PI);
    for (int t = 0; t < 60; ++t) {
        const int n = 2 + static_cast<int>(rng() % 3), d = 2 + static_cast<int>(rng() % 3);
        GhzSymmetry s{n, d, test::random_perm(rng, static_cast<std::size_t>(d)), {}};
        for (int i = 0; i < n - 1; ++i) {
            std::vector<cplx> row;
            for (int j = 0; j < d; ++j) row.push_back(std::polar(mag(rng), ph(rng)));
            s.gammas.push_back(row);
        }
        const PureState ghz = make_ghz(n, d);
        const PureState out = apply_local(symmetry_as_operator(s), ghz);
        CHECK((out.amps - ghz.amps).cwiseAbs().maxCoeff() < 1e-10);
    }
}

// Every choice of three qubit diagonals from a small grid, all three parties free: the
// state is fixed exactly when the per-column products are 1.
TEST_CASE("monomial operators fix GHZ iff every column product is 1") {
    const std::vector<double> grid = {0.5, 1.0, 2.0, -1.0};
    const PureState ghz = make_ghz(3, 2);
    int fixed = 0;
    for (const Permutation& sigma : {Permutation{0, 1}, Permutation{1, 0}}) {
        const CMatrix x = permutation_matrix(sigma);
        for (int code = 0; code < 4096; ++code) {
            std::vector<std::vector<cplx>> g(3, std::vector<cplx>(2));
            int c = code;
            for (int i = 0; i < 3; ++i)
                for (int j = 0; j < 2; ++j, c /= 4) g[i][j] = grid[static_cast<std::size_t>(c % 4)];
            bool predicate = true;
            for (int j = 0; j < 2; ++j)
                if (std::abs(g[0][j] * g[1][j] * g[2][j] - cplx(1)) > 1e-12) predicate = false;
            LocalOperator op{{diag_c(g[0]) * x, diag_c(g[1]) * x, diag_c(g[2]) * x}};
            const bool same = (apply_local(op, ghz).amps - ghz.amps).cwiseAbs().maxCoeff() < 1e-12;
            CHECK(same == predicate);
            fixed += same;
        }
    }
    // per column: ordered triples from the grid with product 1
    CHECK(fixed == 2 * 10 * 10);
}

TEST_CASE("symmetry_as_operator validation") {
    GhzSymmetry s{3, 2, {0, 1}, {{1.0, 1.0}, {1.0, 1.0}}};
    CHECK_NOTHROW(symmetry_as_operator(s));
    auto bad = s;
    bad.sigma = {0, 0};
    CHECK_THROWS_AS(symmetry_as_operator(bad), std::invalid_argument);
    bad = s;
    bad.gammas.pop_back();
    CHECK_THROWS_AS(symmetry_as_operator(bad), std::invalid_argument);
    bad = s;
    bad.gammas[0][1] = 0.0;
    CHECK_THROWS_AS(symmetry_as_operator(bad), std::invalid_argument);
}

TEST_CASE("GHZ-like decision examples") {
    auto src = like(3, test::qs({{1, 2}, {1, 2}})), dst = like(3, test::qs({{3, 4}, {1, 4}}));
    CHECK(decide_ghz_transform(src, dst));
    CHECK_FALSE(decide_ghz_transform(dst, src));
    CHECK_THROWS_AS(decide_ghz_transform(src, like(4, test::qs({{3, 4}, {1, 4}}))), std::invalid_argument);
    CHECK_THROWS_AS(decide_ghz_transform(src, like(3, test::qs({{1, 3}, {1, 3}, {1, 3}}))), std::invalid_argument);
    CHECK_THROWS_AS(decide_ghz_transform(src, like(3, test::qs({{1, 1}, {1, 1}}))), std::invalid_argument);
    CHECK_THROWS_AS(synthesize_ghz_protocol(dst, src), no_certificate_error);
}

TEST_CASE("property: synthesized GHZ protocols are deterministic") {
    std::mt19937_64 rng(302);
    int built = 0;
    for (int t = 0; t < 200 && built < 40; ++t) {
        const int n = 2 + static_cast<int>(rng() % 2);
        const std::size_t d = 2 + rng() % 3;
        auto a = test::random_simplex(rng, d, 30), b = test::random_simplex(rng, d, 30);
        auto src = like(n, a), dst = like(n, b);
        CHECK(decide_ghz_transform(src, dst) == test::majorizes_oracle(b, a));
        if (!decide_ghz_transform(src, dst)) continue;
        ++built;
        auto p = synthesize_ghz_protocol(src, dst);
        CHECK(validate(p).ok());
        auto leaves = simulate(p, ghz_like_state(src).normalized());
        double mass = 0;
        for (const auto& l : leaves) mass += l.probability;
        CHECK(mass == doctest::Approx(1).epsilon(1e-12));
        CHECK(success_probability(leaves, 1e-10) == doctest::Approx(1).epsilon(1e-10));
    }
    CHECK(built >= 20);
}

TEST_CASE("trivial subgroup is a group of order 8") {
    auto g = trivial_subgroup();
    REQUIRE(g.size() == 8);
    for (const auto& a : g)
        for (const auto& b : g) CHECK(std::find(g.begin(), g.end(), compose(a, b)) != g.end());
}

TEST_CASE("two_copy_diag ordering") {
    auto v = two_copy_diag(q(1, 4), q(1, 8));
    CHECK(v == std::vector<Rational>{q(3, 4) * q(5, 8), q(3, 4) * q(3, 8), q(1, 4) * q(5, 8), q(1, 4) * q(3, 8)});
}

TEST_CASE("trivial subgroup bound") {
    auto b = trivial_subgroup_bound(q(1, 8), q(2, 9));
    CHECK(b.is_square);
    CHECK(b.root == q(1, 6));
    auto c = trivial_subgroup_bound(q(1, 8), q(1, 4));
    CHECK_FALSE(c.is_square);
    CHECK(c.radicand == q(1, 32));
    CHECK_THROWS_AS(trivial_subgroup_bound(q(1, 2), q(1, 4)), std::invalid_argument);
    CHECK_THROWS_AS(trivial_subgroup_bound(q(-1, 4), q(1, 4)), std::invalid_argument);
}

TEST_CASE("property: restricted feasibility implies the two-copy closed form") {
    std::mt19937_64 rng(303);
    for (int t = 0; t < 150; ++t) {
        const Rational a1 = q(static_cast<long>(rng() % 10), 20), a2 = q(static_cast<long>(rng() % 10), 20);
        const Rational delta = q(static_cast<long>(rng() % 10), 20);
        if (trivial_subgroup_feasible(delta, a1, a2)) CHECK(two_copy_closed_form(delta, a1, a2));
    }
}

TEST_CASE("restricted_decision weights reproduce the target diagonal") {
    const auto g = two_copy_diag(q(1, 8), q(1, 8)), h = two_copy_diag(q(1, 4), q(1, 4));
    auto group = trivial_subgroup();
    auto w = restricted_decision(g, h, group);
    REQUIRE(w.has_value());
    std::vector<Rational> acc(4, 0);
    for (std::size_t k = 0; k < group.size(); ++k)
        for (std::size_t l = 0; l < 4; ++l) acc[l] += (*w)[k] * h[static_cast<std::size_t>(group[k][l])];
    CHECK(acc == g);
    CHECK_FALSE(restricted_decision(h, g, group).has_value());
    CHECK_THROWS_AS(restricted_decision(g, {1, 2}, group), std::invalid_argument);
}

TEST_CASE("two-round protocol rejects non-saturating delta") {
    CHECK_THROWS_AS(two_round_protocol(q(1, 16), q(1, 4), q(1, 9)), unsupported_error);
    CHECK_THROWS_AS(two_round_protocol(q(0), q(1, 4), q(0)), std::invalid_argument);
    auto setup = two_round_protocol(q(1, 9), q(1, 4), q(1, 6));
    CHECK(validate(setup.protocol).ok());
    CHECK(success_probability(simulate(setup.protocol, setup.input), 1e-10) == doctest::Approx(1));
}
