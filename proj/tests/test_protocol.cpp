#include <doctest.h>

#include <cmath>
#include <random>

#include "mstate/ghz.hpp"
#include "mstate/protocol.hpp"
#include "support.hpp"

using namespace mst;
using test::q;

namespace {

CMatrix diag2(double a, double b) {
    CMatrix m = CMatrix::Zero(2, 2);
    m(0, 0) = a;
    m(1, 1) = b;
    return m;
}

CMatrix random_unitary(std::mt19937_64& rng, int d) {
    std::normal_distribution<double> g;
    CMatrix m(d, d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) m(i, j) = cplx(g(rng), g(rng));
    Eigen::HouseholderQR<CMatrix> qr(m);
    return qr.householderQ();
}

LoccProtocol computational_measurement() {
    Round r;
    r.party = 0;
    r.ops = {diag2(1, 0), diag2(0, 1)};
    LoccProtocol p;
    p.rounds.push_back(r);
    return p;
}

}  // namespace

TEST_CASE("validate flags an incomplete measurement with its magnitude") {
    auto p = computational_measurement();
    CHECK(validate(p).ok());
    p.rounds[0].ops[0] *= 1.01;
    auto rep = validate(p);
    REQUIRE(rep.violations.size() == 1);
    CHECK(rep.violations[0].kind == "completeness");
    CHECK(rep.violations[0].round == 0);
    CHECK(rep.violations[0].magnitude == doctest::Approx(0.0201));
}

TEST_CASE("validate flags non-unitary corrections") {
    auto p = computational_measurement();
    p.rounds[0].corrections[1] = LocalOperator{{diag2(2, 1), diag2(1, 1)}};
    auto rep = validate(p);
    REQUIRE(rep.violations.size() == 1);
    CHECK(rep.violations[0].kind == "unitarity");
    CHECK(rep.violations[0].outcome == std::optional<std::size_t>(1));
    CHECK(rep.violations[0].magnitude == doctest::Approx(3));
}

TEST_CASE("validate flags empty rounds and mismatched shapes") {
    LoccProtocol p;
    p.rounds.emplace_back();
    CHECK_FALSE(validate(p).ok());
    auto m = computational_measurement();
    m.rounds[0].ops.push_back(CMatrix::Identity(3, 3));
    CHECK_FALSE(validate(m).ok());
}

TEST_CASE("simulate expands every outcome in order") {
    auto p = computational_measurement();
    p.target = basis_state({2, 2}, {0, 0});
    const PureState bell = make_ghz(2, 2);
    auto leaves = simulate(p, bell);
    REQUIRE(leaves.size() == 2);
    CHECK(leaves[0].outcomes == std::vector<std::size_t>{0});
    CHECK(leaves[0].probability == doctest::Approx(0.5));
    CHECK(*leaves[0].fidelity == doctest::Approx(1));
    CHECK(*leaves[1].fidelity == doctest::Approx(0));
    CHECK(success_probability(leaves) == doctest::Approx(0.5));
}

TEST_CASE("failed outcomes and zero-probability branches") {
    auto p = computational_measurement();
    p.rounds[0].fail = {1};
    p.rounds.push_back(computational_measurement().rounds[0]);
    auto leaves = simulate(p, basis_state({2, 2}, {0, 1}));
    // outcome 0 continues into two leaves, outcome 1 is a zero-weight failure
    REQUIRE(leaves.size() == 3);
    CHECK(leaves[2].failed);
    CHECK(leaves[2].probability == 0);
    CHECK(leaves[0].probability == doctest::Approx(1));
    CHECK(leaves[1].probability == 0);
}

TEST_CASE("simulate input checks") {
    auto p = computational_measurement();
    CHECK_THROWS_AS(simulate(p, make_ghz(2, 3)), std::invalid_argument);
    p.rounds[0].party = 5;
    CHECK_THROWS_AS(simulate(p, make_ghz(2, 2)), std::invalid_argument);
    auto t = computational_measurement();
    t.target = make_ghz(3, 2);
    CHECK_THROWS_AS(simulate(t, make_ghz(2, 2)), std::invalid_argument);
    CHECK_THROWS_AS(simulate(computational_measurement(), PureState({2, 2}, CVector::Zero(4))), std::invalid_argument);
}

TEST_CASE("property: simulate ignores input scale") {
    GhzLikeState src{3, 3, SchmidtTuple(test::qs({{1, 3}, {1, 3}, {1, 3}}))};
    GhzLikeState dst{3, 3, SchmidtTuple(test::qs({{1, 2}, {1, 3}, {1, 6}}))};
    auto p = synthesize_ghz_protocol(src, dst);
    const PureState in = ghz_like_state(src);
    PureState scaled(in.dims, in.amps * cplx(0, 3.5));
    auto a = simulate(p, in), b = simulate(p, scaled);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].probability == doctest::Approx(b[i].probability));
        CHECK(*a[i].fidelity == doctest::Approx(*b[i].fidelity));
    }
}

// Conjugating the measured party's basis by U and rotating input and target to match
// leaves every branch probability and fidelity unchanged.
TEST_CASE("property: simulate is basis independent") {
    std::mt19937_64 rng(401);
    GhzLikeState src{3, 2, SchmidtTuple(test::qs({{3, 5}, {2, 5}}))};
    GhzLikeState dst{3, 2, SchmidtTuple(test::qs({{4, 5}, {1, 5}}))};
    auto p = synthesize_ghz_protocol(src, dst);
    const PureState in = ghz_like_state(src);
    auto base = simulate(p, in);
    for (int t = 0; t < 10; ++t) {
        const CMatrix u = random_unitary(rng, 2), v = random_unitary(rng, 2);
        LoccProtocol rot = p;
        const std::size_t last = rot.rounds[0].party;
        for (auto& m : rot.rounds[0].ops) m = v * m * u.adjoint();
        for (auto& [k, op] : rot.rounds[0].corrections) op.factors[last] = v * op.factors[last] * v.adjoint();
        rot.target = apply_at(v, last, *p.target);
        auto leaves = simulate(rot, apply_at(u, last, in));
        REQUIRE(leaves.size() == base.size());
        for (std::size_t i = 0; i < leaves.size(); ++i) {
            CHECK(leaves[i].probability == doctest::Approx(base[i].probability).epsilon(1e-10));
            CHECK(*leaves[i].fidelity == doctest::Approx(*base[i].fidelity).epsilon(1e-10));
        }
    }
}

TEST_CASE("verify_subswap exchanges whole factors") {
    SubswapSpec s;
    s.target_factors = {make_ghz(3, 2), make_w()};
    s.aux_factors = {make_ghz(3, 2), make_ghz(3, 2)};
    s.swaps = {{1, 0}};
    s.expected_target = {make_ghz(3, 2), make_ghz(3, 2)};
    s.expected_aux = {make_w(), make_ghz(3, 2)};
    auto rep = verify_subswap(s);
    CHECK(rep.verified);
    CHECK(rep.fidelity == doctest::Approx(1));
    CHECK_FALSE(rep.critical_before);
    CHECK(rep.critical_after);

    s.swaps.clear();
    CHECK_FALSE(verify_subswap(s).verified);
    s.swaps = {{2, 0}};
    CHECK_THROWS_AS(verify_subswap(s), std::invalid_argument);
    s.swaps = {{0, 0}};
    s.aux_factors[0] = make_ghz(3, 3);
    CHECK_THROWS_AS(verify_subswap(s), std::invalid_argument);
}
