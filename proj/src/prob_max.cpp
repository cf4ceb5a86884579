#include "mstate/prob_max.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "mstate/errors.hpp"

namespace mst {

namespace {

constexpr double kTol = 1e-10;

bool is_diagonal(const CMatrix& m) {
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        for (Eigen::Index j = 0; j < m.cols(); ++j)
            if (i != j && std::abs(m(i, j)) > kTol) return false;
    return true;
}

Eigen::VectorXd hermitian_eigenvalues(const CMatrix& m, const char* who) {
    if (m.rows() != m.cols() || m.rows() == 0) throw std::invalid_argument(std::string(who) + ": matrix must be square");
    if ((m - m.adjoint()).cwiseAbs().maxCoeff() > kTol) throw std::invalid_argument(std::string(who) + ": not Hermitian");
    if (is_diagonal(m)) {
        Eigen::VectorXd v(m.rows());
        for (Eigen::Index i = 0; i < m.rows(); ++i) v(i) = m(i, i).real();
        return v;
    }
    Eigen::SelfAdjointEigenSolver<CMatrix> es(m, Eigen::EigenvaluesOnly);
    return es.eigenvalues();
}

void require_positive(const Eigen::VectorXd& ev, const char* who) {
    if (ev.minCoeff() <= kTol) throw std::invalid_argument(std::string(who) + ": operator is not positive definite");
}

CMatrix diag_of(const std::vector<double>& v) {
    CMatrix m = CMatrix::Zero(static_cast<Eigen::Index>(v.size()), static_cast<Eigen::Index>(v.size()));
    for (std::size_t i = 0; i < v.size(); ++i) m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i)) = v[i];
    return m;
}

std::vector<Rational> symmetrized(const std::vector<Rational>& h1, const std::vector<Rational>& h2) {
    if (h1.size() != h2.size()) throw std::invalid_argument("pmax_joint_two_state: dimensions differ");
    std::vector<Rational> out;
    for (std::size_t i = 0; i < h1.size(); ++i)
        for (std::size_t j = 0; j < h2.size(); ++j) out.push_back((h1[i] * h2[j] + h2[i] * h1[j]) / 2);
    return out;
}

}  // namespace

double pmax_to_seed(const CMatrix& G, double norm_sq) {
    if (!(norm_sq > 0)) throw std::invalid_argument("pmax_to_seed: norm_sq must be positive");
    auto ev = hermitian_eigenvalues(G, "pmax_to_seed");
    require_positive(ev, "pmax_to_seed");
    return ev.minCoeff() / norm_sq;
}

Rational pmax_to_seed(const std::vector<Rational>& g_diag, const Rational& norm_sq) {
    if (g_diag.empty()) throw std::invalid_argument("pmax_to_seed: empty operator");
    if (norm_sq <= 0) throw std::invalid_argument("pmax_to_seed: norm_sq must be positive");
    Rational lo = *std::min_element(g_diag.begin(), g_diag.end());
    if (lo <= 0) throw std::invalid_argument("pmax_to_seed: operator is not positive definite");
    return lo / norm_sq;
}

double pmax_joint_two_state(const CMatrix& H1, const CMatrix& H2, double n1_sq, double n2_sq) {
    if (!(n1_sq > 0 && n2_sq > 0)) throw std::invalid_argument("pmax_joint_two_state: norms must be positive");
    require_positive(hermitian_eigenvalues(H1, "pmax_joint_two_state"), "pmax_joint_two_state");
    require_positive(hermitian_eigenvalues(H2, "pmax_joint_two_state"), "pmax_joint_two_state");
    if (H1.rows() != H2.rows()) throw std::invalid_argument("pmax_joint_two_state: dimensions differ");
    const CMatrix sym = (kron(H1, H2) + kron(H2, H1)) / (2.0 * n1_sq * n2_sq);
    return 1.0 / hermitian_eigenvalues(sym, "pmax_joint_two_state").maxCoeff();
}

Rational pmax_joint_two_state(const std::vector<Rational>& h1, const std::vector<Rational>& h2, const Rational& n1_sq,
                              const Rational& n2_sq) {
    if (n1_sq <= 0 || n2_sq <= 0) throw std::invalid_argument("pmax_joint_two_state: norms must be positive");
    for (const auto* h : {&h1, &h2})
        for (const auto& x : *h)
            if (x <= 0) throw std::invalid_argument("pmax_joint_two_state: operator is not positive definite");
    auto s = symmetrized(h1, h2);
    if (s.empty()) throw std::invalid_argument("pmax_joint_two_state: empty operator");
    return n1_sq * n2_sq / *std::max_element(s.begin(), s.end());
}

double pmax_sep_unitary_stabilizer(const CMatrix& G, const CMatrix& H, const std::vector<LocalOperator>& stabilizer,
                                   double r) {
    if (stabilizer.empty()) throw std::invalid_argument("pmax_sep_unitary_stabilizer: empty stabilizer");
    if (!(r > 0)) throw std::invalid_argument("pmax_sep_unitary_stabilizer: r must be positive");
    if (G.rows() != H.rows()) throw std::invalid_argument("pmax_sep_unitary_stabilizer: G and H differ in size");
    require_positive(hermitian_eigenvalues(G, "pmax_sep_unitary_stabilizer"), "pmax_sep_unitary_stabilizer");
    hermitian_eigenvalues(H, "pmax_sep_unitary_stabilizer");
    CMatrix avg = CMatrix::Zero(H.rows(), H.cols());
    for (const auto& s : stabilizer) {
        if (s.factors.empty()) throw std::invalid_argument("pmax_sep_unitary_stabilizer: empty stabilizer element");
        for (const auto& f : s.factors) {
            if (f.rows() != f.cols() ||
                (f.adjoint() * f - CMatrix::Identity(f.rows(), f.cols())).cwiseAbs().maxCoeff() > kTol)
                throw unsupported_error("pmax_sep_unitary_stabilizer: stabilizer element is not unitary");
        }
        const CMatrix& last = s.factors.back();
        if (last.rows() != H.rows()) throw std::invalid_argument("pmax_sep_unitary_stabilizer: factor size mismatch");
        avg += last.adjoint() * H * last;
    }
    avg /= static_cast<double>(stabilizer.size());
    // p_max = 1 / lambda_max[(r G)^{-1} avg]
    Eigen::GeneralizedSelfAdjointEigenSolver<CMatrix> es(avg, r * G, Eigen::EigenvaluesOnly);
    const double top = es.eigenvalues().maxCoeff();
    if (!(top > 0)) throw std::invalid_argument("pmax_sep_unitary_stabilizer: H has no positive part");
    return 1.0 / top;
}

double joint_closed_form(double eps) {
    const double half = (1 + eps) / 2;
    return 2 / (1 + eps * eps) * half * half;
}

Rational joint_closed_form(const Rational& eps) {
    const Rational half = (1 + eps) / 2;
    return 2 / (1 + eps * eps) * half * half;
}

PureState psi5() {
    CVector amps = CVector::Zero(32);
    const double s = 1.0 / std::sqrt(22.0);
    amps(0) = std::sqrt(7.0) * s;
    amps(31) = std::sqrt(5.0) * s;
    for (int k = 0; k < 32; ++k)
        if (__builtin_popcount(static_cast<unsigned>(k)) == 3) amps(k) = s;
    return PureState({2, 2, 2, 2, 2}, amps);
}

std::vector<Rational> h1_diag(const Rational& eps) { return {Rational(1), eps}; }
std::vector<Rational> h2_diag(const Rational& eps) { return {eps, Rational(1)}; }

std::vector<Rational> three_branch_residual(const Rational& eps) {
    if (eps <= 0 || eps > 1) throw std::invalid_argument("three_branch_residual: eps must lie in (0, 1]");
    const Rational c = 1 / (1 + eps * eps);
    const auto a = h1_diag(eps), b = h2_diag(eps);
    std::vector<Rational> out;
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j) {
            Rational r = 1 - c * (a[i] * b[j] + b[i] * a[j]);
            if (r < 0) throw std::logic_error("three_branch_residual: residual is not positive semidefinite");
            out.push_back(r);
        }
    return out;
}

ThreeBranchSetup build_three_branch_protocol(const PureState& seed, double eps) {
    if (!(eps > 0 && eps <= 1)) throw std::invalid_argument("build_three_branch_protocol: eps must lie in (0, 1]");
    const std::size_t n = seed.num_parties();
    if (n == 0 || seed.dims.back() != 2) throw std::invalid_argument("build_three_branch_protocol: last party must be a qubit");
    const double se = std::sqrt(eps);
    const CMatrix h1 = diag_of({1.0, se}), h2 = diag_of({se, 1.0});
    const double c = std::sqrt(1.0 / (1.0 + eps * eps));

    Round r;
    r.party = n - 1;
    const CMatrix m1 = c * kron(h1, h2), m2 = c * kron(h2, h1);
    const CMatrix rest = CMatrix::Identity(4, 4) - m1.adjoint() * m1 - m2.adjoint() * m2;
    CMatrix m3 = CMatrix::Zero(4, 4);
    for (Eigen::Index i = 0; i < 4; ++i) {
        const double v = rest(i, i).real();
        if (v < -kTol) throw std::logic_error("build_three_branch_protocol: residual is not positive semidefinite");
        m3(i, i) = std::sqrt(std::max(v, 0.0));
    }
    r.ops = {m1, m2, m3};
    LocalOperator swap_all;
    for (std::size_t p = 0; p < n; ++p) {
        const int d = seed.dims[p];
        std::vector<int> sigma(static_cast<std::size_t>(d * d));
        for (int a = 0; a < d; ++a)
            for (int b = 0; b < d; ++b) sigma[static_cast<std::size_t>(a * d + b)] = b * d + a;
        swap_all.factors.push_back(permutation_matrix(sigma));
    }
    r.corrections[1] = swap_all;
    r.fail = {2};

    const PureState norm_seed = seed.normalized();
    ThreeBranchSetup out;
    out.input = merge_copies({norm_seed, norm_seed});
    out.protocol.rounds.push_back(std::move(r));
    out.protocol.target = merge_copies({apply_at(h1, n - 1, norm_seed), apply_at(h2, n - 1, norm_seed)}).normalized();
    return out;
}

}  // namespace mst
