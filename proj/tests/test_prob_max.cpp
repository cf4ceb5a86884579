#include <doctest.h>

#include <cmath>
#include <random>

#include "mstate/errors.hpp"
#include "mstate/prob_max.hpp"
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

double seeded_norm_sq(double eps) {
    return apply_at(diag2(1.0, std::sqrt(eps)), 4, psi5()).norm_sq();
}

}  // namespace

TEST_CASE("psi5 is normalized and critical") {
    CHECK(psi5().norm_sq() == doctest::Approx(1));
    CHECK(is_critical(psi5()));
}

TEST_CASE("property: seeded psi5 norm is (1 + eps) / 2") {
    std::mt19937_64 rng(601);
    std::uniform_real_distribution<double> u(0.001, 1.0);
    for (int t = 0; t < 50; ++t) {
        const double eps = u(rng);
        CHECK(std::abs(seeded_norm_sq(eps) - (1 + eps) / 2) < 1e-12);
    }
}

TEST_CASE("pmax_to_seed") {
    CHECK(pmax_to_seed(diag2(0.5, 2.0), 0.5) == doctest::Approx(1.0));
    CHECK(pmax_to_seed(std::vector<Rational>{q(1, 2), q(2)}, q(1, 2)) == 1);
    CHECK(pmax_to_seed(std::vector<Rational>{q(1, 3), q(1)}, q(2, 3)) == q(1, 2));
    CMatrix herm(2, 2);
    herm << 2.0, cplx(0, 1), cplx(0, -1), 2.0;
    CHECK(pmax_to_seed(herm, 1.0) == doctest::Approx(1.0));
    CHECK_THROWS_AS(pmax_to_seed(diag2(0.0, 1.0), 1.0), std::invalid_argument);
    CHECK_THROWS_AS(pmax_to_seed(diag2(1.0, 1.0), 0.0), std::invalid_argument);
    CMatrix nonherm = diag2(1.0, 1.0);
    nonherm(0, 1) = 0.5;
    CHECK_THROWS_AS(pmax_to_seed(nonherm, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(pmax_to_seed(std::vector<Rational>{}, q(1)), std::invalid_argument);
}

TEST_CASE("exact joint probability equals the closed form") {
    for (const Rational& eps : {q(207, 500), q(1, 2), q(1, 10), q(1)}) {
        const Rational n_sq = (1 + eps) / 2;
        CHECK(pmax_joint_two_state(h1_diag(eps), h2_diag(eps), n_sq, n_sq) == joint_closed_form(eps));
    }
    CHECK(joint_closed_form(q(1, 2)) == q(9, 10));
    CHECK(joint_closed_form(q(1)) == 1);
}

TEST_CASE("joint probability near the optimal eps") {
    const double eps = std::sqrt(2.0) - 1.0;
    const double n_sq = seeded_norm_sq(eps);
    const double joint = pmax_joint_two_state(diag2(1, eps), diag2(eps, 1), n_sq, n_sq);
    CHECK(joint == doctest::Approx(joint_closed_form(eps)).epsilon(1e-12));
    CHECK(std::abs(joint - 0.854) <= 5e-4);
}

TEST_CASE("property: joint probability dominates the product of singles") {
    std::mt19937_64 rng(602);
    std::uniform_real_distribution<double> u(0.01, 1.0);
    const CMatrix id2 = CMatrix::Identity(2, 2);
    const std::vector<LocalOperator> trivial{LocalOperator{{id2}}};
    for (int t = 0; t < 40; ++t) {
        const double eps = u(rng), n_sq = (1 + eps) / 2;
        const CMatrix H1 = diag2(1, eps), H2 = diag2(eps, 1);
        const double s1 = pmax_sep_unitary_stabilizer(id2, H1, trivial, n_sq);
        const double s2 = pmax_sep_unitary_stabilizer(id2, H2, trivial, n_sq);
        CHECK(s1 == doctest::Approx(n_sq));
        CHECK(s2 == doctest::Approx(n_sq));
        CHECK(pmax_joint_two_state(H1, H2, n_sq, n_sq) >= s1 * s2 - 1e-12);
    }
}

TEST_CASE("property: the swap stabilizer reproduces the joint probability") {
    std::mt19937_64 rng(603);
    std::uniform_real_distribution<double> u(0.01, 1.0);
    const CMatrix id4 = CMatrix::Identity(4, 4), swap = permutation_matrix({0, 2, 1, 3});
    const std::vector<LocalOperator> stab{LocalOperator{{id4}}, LocalOperator{{swap}}};
    for (int t = 0; t < 30; ++t) {
        const double eps = u(rng), n_sq = (1 + eps) / 2;
        const CMatrix H1 = diag2(1, eps), H2 = diag2(eps, 1);
        const double via_stab = pmax_sep_unitary_stabilizer(id4, kron(H1, H2), stab, n_sq * n_sq);
        CHECK(via_stab == doctest::Approx(pmax_joint_two_state(H1, H2, n_sq, n_sq)).epsilon(1e-10));
    }
}

TEST_CASE("stabilizer argument checks") {
    const CMatrix id2 = CMatrix::Identity(2, 2);
    CHECK_THROWS_AS(pmax_sep_unitary_stabilizer(id2, id2, {}, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(pmax_sep_unitary_stabilizer(id2, id2, {LocalOperator{{id2}}}, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(pmax_sep_unitary_stabilizer(id2, id2, {LocalOperator{{diag2(2, 1)}}}, 1.0), unsupported_error);
    CHECK_THROWS_AS(pmax_sep_unitary_stabilizer(id2, CMatrix::Identity(3, 3), {LocalOperator{{id2}}}, 1.0),
                    std::invalid_argument);
}

TEST_CASE("three-branch residual is exact and vanishes at eps = 1") {
    for (const auto& r : three_branch_residual(q(1))) CHECK(r == 0);
    auto r = three_branch_residual(q(1, 2));
    // 1 - c (a_i b_j + b_i a_j) with c = 4/5
    CHECK(r == std::vector<Rational>{q(1, 5), 0, 0, q(1, 5)});
    CHECK_THROWS_AS(three_branch_residual(q(0)), std::invalid_argument);
    CHECK_THROWS_AS(three_branch_residual(q(3, 2)), std::invalid_argument);
}

TEST_CASE("property: three-branch protocol achieves the closed form") {
    std::mt19937_64 rng(604);
    std::uniform_real_distribution<double> u(0.01, 1.0);
    std::vector<double> eps_values{0.5};
    for (int t = 0; t < 20; ++t) eps_values.push_back(u(rng));
    for (double eps : eps_values) {
        auto setup = build_three_branch_protocol(psi5(), eps);
        CHECK(validate(setup.protocol).ok());
        auto leaves = simulate(setup.protocol, setup.input);
        CHECK(success_probability(leaves) == doctest::Approx(joint_closed_form(eps)).epsilon(1e-10));
    }
    CHECK(success_probability(simulate(build_three_branch_protocol(psi5(), 0.5).protocol,
                                       build_three_branch_protocol(psi5(), 0.5).input)) == doctest::Approx(0.9));
    CHECK_THROWS_AS(build_three_branch_protocol(psi5(), 0.0), std::invalid_argument);
    CHECK_THROWS_AS(build_three_branch_protocol(make_ghz(3, 3), 0.5), std::invalid_argument);
}
