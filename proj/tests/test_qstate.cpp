#include <doctest.h>

#include <cmath>
#include <cstdlib>
#include <random>

#include "mstate/errors.hpp"
#include "mstate/qstate.hpp"

using namespace mst;

namespace {

PureState random_state(std::mt19937_64& rng, std::vector<int> dims) {
    std::normal_distribution<double> g;
    CVector a(static_cast<Eigen::Index>(total_dimension(dims)));
    for (Eigen::Index i = 0; i < a.size(); ++i) a(i) = cplx(g(rng), g(rng));
    return PureState(std::move(dims), a).normalized();
}

CMatrix random_matrix(std::mt19937_64& rng, int d) {
    std::normal_distribution<double> g;
    CMatrix m(d, d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) m(i, j) = cplx(g(rng), g(rng));
    return m;
}

CMatrix diag2(double a, double b) {
    CMatrix m = CMatrix::Zero(2, 2);
    m(0, 0) = a;
    m(1, 1) = b;
    return m;
}

struct EnvGuard {
    const char* name;
    explicit EnvGuard(const char* n, const char* v) : name(n) { setenv(n, v, 1); }
    ~EnvGuard() { unsetenv(name); }
};

}  // namespace

TEST_CASE("named states are normalized") {
    for (const auto& s : {make_ghz(3, 2), make_ghz(4, 3), make_w(), make_chi()}) CHECK(s.norm_sq() == doctest::Approx(1));
    CHECK(make_ghz(3, 2).amps(7).real() == doctest::Approx(1 / std::sqrt(2.0)));
    CHECK_THROWS_AS(make_ghz(1, 2), std::invalid_argument);
    CHECK_THROWS_AS(make_ghz(3, 1), std::invalid_argument);
}

TEST_CASE("constructor validation") {
    CHECK_THROWS_AS(PureState({}, CVector::Zero(1)), std::invalid_argument);
    CHECK_THROWS_AS(PureState({2, 2}, CVector::Zero(3)), std::invalid_argument);
    CHECK_THROWS_AS(PureState({2, 0}, CVector::Zero(0)), std::invalid_argument);
    CHECK_THROWS_AS(PureState({2}, CVector::Zero(2)).normalized(), std::invalid_argument);
}

TEST_CASE("amplitude cap is read from the environment") {
    EnvGuard g("MSTATE_MAX_AMPLITUDES", "16");
    CHECK(max_amplitudes() == 16);
    CHECK_NOTHROW(make_ghz(4, 2));
    CHECK_THROWS_AS(make_ghz(5, 2), resource_error);
}

TEST_CASE("unparsable cap falls back to the default") {
    EnvGuard g("MSTATE_MAX_AMPLITUDES", "lots");
    CHECK(max_amplitudes() == (std::size_t{1} << 24));
}

TEST_CASE("basis_state digits") {
    auto s = basis_state({2, 3}, {1, 2});
    CHECK(s.amps(5) == cplx(1));
    CHECK_THROWS_AS(basis_state({2, 3}, {1, 3}), std::invalid_argument);
    CHECK_THROWS_AS(basis_state({2, 3}, {1}), std::invalid_argument);
}

TEST_CASE("GHZ states are critical") {
    for (int n : {3, 4})
        for (int d : {2, 3, 4}) CHECK(is_critical(make_ghz(n, d)));
    CHECK_FALSE(is_critical(make_chi()));  // party 0 holds diag(3/4, 1/4)
    CHECK_FALSE(is_critical(make_w()));
}

TEST_CASE("property: reduced density matrices are PSD with unit trace") {
    std::mt19937_64 rng(201);
    for (int t = 0; t < 40; ++t) {
        auto s = random_state(rng, {2, 3, 2});
        for (std::size_t p = 0; p < 3; ++p) {
            CMatrix rho = reduced_density(s, p);
            CHECK(rho.trace().real() == doctest::Approx(1).epsilon(1e-12));
            CHECK(std::abs(rho.trace().imag()) < 1e-12);
            CHECK((rho - rho.adjoint()).norm() < 1e-12);
            Eigen::SelfAdjointEigenSolver<CMatrix> es(rho);
            CHECK(es.eigenvalues().minCoeff() > -1e-12);
        }
    }
}

TEST_CASE("property: apply_local equals successive apply_at") {
    std::mt19937_64 rng(202);
    for (int t = 0; t < 20; ++t) {
        auto s = random_state(rng, {2, 3, 2});
        LocalOperator op{{random_matrix(rng, 2), random_matrix(rng, 3), random_matrix(rng, 2)}};
        auto a = apply_local(op, s);
        auto b = apply_at(op.factors[2], 2, apply_at(op.factors[1], 1, apply_at(op.factors[0], 0, s)));
        CHECK((a.amps - b.amps).norm() < 1e-10);
    }
}

TEST_CASE("apply errors") {
    auto s = make_ghz(3, 2);
    CHECK_THROWS_AS(apply_at(CMatrix::Identity(3, 3), 0, s), std::invalid_argument);
    CHECK_THROWS_AS(apply_at(CMatrix::Identity(2, 2), 3, s), std::out_of_range);
    CHECK_THROWS_AS(apply_local(LocalOperator{{CMatrix::Identity(2, 2)}}, s), std::invalid_argument);
}

TEST_CASE("merge_copies orders the first copy most significant") {
    auto a = basis_state({2, 2}, {1, 0}), b = basis_state({2, 2}, {0, 1});
    auto m = merge_copies({a, b});
    CHECK(m.dims == std::vector<int>{4, 4});
    // party 0 local index 2*1+0 = 2, party 1 local index 2*0+1 = 1
    CHECK(m.amps(2 * 4 + 1) == cplx(1));
    CHECK_THROWS_AS(merge_copies({}), std::invalid_argument);
    CHECK_THROWS_AS(merge_copies({a, make_ghz(3, 2)}), std::invalid_argument);
}

TEST_CASE("merged GHZ copies are a larger GHZ up to relabeling") {
    auto m = merge_copies({make_ghz(3, 2), make_ghz(3, 2)});
    CHECK(fidelity(m, make_ghz(3, 4)) == doctest::Approx(1));
}

TEST_CASE("fidelity") {
    CHECK(fidelity(make_ghz(3, 2), make_w()) == doctest::Approx(0));
    CHECK(fidelity(make_w(), make_w()) == doctest::Approx(1));
    PureState zero({2, 2, 2}, CVector::Zero(8));
    CHECK(fidelity(zero, make_w()) == 0);
    CHECK_THROWS_AS(fidelity(make_w(), make_chi()), std::invalid_argument);
}

TEST_CASE("W lies in the null cone") {
    auto seq = [](double alpha) {
        CMatrix g = diag2(std::exp(-alpha), std::exp(alpha));
        return LocalOperator{{g, g, g}};
    };
    auto norms = null_limit_check(make_w(), seq, {0, 1, 2, 4, 8});
    for (std::size_t i = 1; i < norms.size(); ++i) CHECK(norms[i] < norms[i - 1]);
    CHECK(norms.back() == doctest::Approx(std::exp(-8.0)).epsilon(1e-9));
}

TEST_CASE("null_limit_check rejects non-SL factors") {
    auto seq = [](double) { return LocalOperator{{diag2(2, 1), diag2(1, 1), diag2(1, 1)}}; };
    CHECK_THROWS_AS(null_limit_check(make_w(), seq, {0.0}), std::invalid_argument);
}

TEST_CASE("kron and permutation matrices") {
    CHECK(kron(pauli_x(), CMatrix::Identity(2, 2))(2, 0) == cplx(1));
    CMatrix p = permutation_matrix({1, 2, 0});
    CHECK(p(1, 0) == cplx(1));
    CHECK((p.adjoint() * p - CMatrix::Identity(3, 3)).norm() < 1e-15);
    CHECK_THROWS_AS(permutation_matrix({0, 3, 1}), std::invalid_argument);
}
