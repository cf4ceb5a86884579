#include "mstate/ghz.hpp"

#include <cmath>
#include <stdexcept>

#include "mstate/errors.hpp"
#include "mstate/exact_lp.hpp"

namespace mst {

std::vector<cplx> GhzSymmetry::last_gamma() const {
    std::vector<cplx> g(static_cast<std::size_t>(d), cplx(1.0));
    for (const auto& row : gammas)
        for (int j = 0; j < d; ++j) g[static_cast<std::size_t>(j)] *= row[static_cast<std::size_t>(j)];
    for (auto& x : g) {
        if (x == cplx(0.0)) throw std::invalid_argument("GhzSymmetry: zero gamma entry");
        x = cplx(1.0) / x;
    }
    return g;
}

namespace {

void check_permutation(const Permutation& sigma, int d) {
    if (static_cast<int>(sigma.size()) != d) throw std::invalid_argument("permutation has the wrong size");
    std::vector<bool> seen(static_cast<std::size_t>(d), false);
    for (int v : sigma) {
        if (v < 0 || v >= d || seen[static_cast<std::size_t>(v)]) throw std::invalid_argument("not a permutation");
        seen[static_cast<std::size_t>(v)] = true;
    }
}

CMatrix diag_matrix(const std::vector<cplx>& v) {
    CMatrix m = CMatrix::Zero(static_cast<Eigen::Index>(v.size()), static_cast<Eigen::Index>(v.size()));
    for (std::size_t i = 0; i < v.size(); ++i) m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i)) = v[i];
    return m;
}

CMatrix sqrt_diag(const std::vector<Rational>& d) {
    std::vector<cplx> v;
    for (const auto& x : d) {
        if (x < 0) throw std::invalid_argument("negative diagonal entry");
        v.emplace_back(std::sqrt(to_double(x)));
    }
    return diag_matrix(v);
}

CMatrix inverse_diag(const CMatrix& m) {
    CMatrix r = CMatrix::Zero(m.rows(), m.cols());
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        if (m(i, i) == cplx(0.0)) throw std::invalid_argument("singular diagonal operator");
        r(i, i) = cplx(1.0) / m(i, i);
    }
    return r;
}

void check_pair(const GhzLikeState& src, const GhzLikeState& dst) {
    if (src.n != dst.n || src.d != dst.d) throw std::invalid_argument("GHZ-like states differ in n or d");
    if (src.n < 2 || src.d < 2) throw std::invalid_argument("GHZ-like state needs n >= 2 and d >= 2");
    if (static_cast<int>(src.diag.size()) != src.d || static_cast<int>(dst.diag.size()) != dst.d)
        throw std::invalid_argument("diagonal length differs from d");
    if (src.diag.total() != dst.diag.total())
        throw std::invalid_argument("traces of g^dagger g and h^dagger h differ");
}

}  // namespace

LocalOperator symmetry_as_operator(const GhzSymmetry& s) {
    if (s.n < 2 || s.d < 2) throw std::invalid_argument("GhzSymmetry: need n >= 2 and d >= 2");
    check_permutation(s.sigma, s.d);
    if (static_cast<int>(s.gammas.size()) != s.n - 1) throw std::invalid_argument("GhzSymmetry: need n-1 gamma rows");
    for (const auto& row : s.gammas) {
        if (static_cast<int>(row.size()) != s.d) throw std::invalid_argument("GhzSymmetry: gamma row length");
        for (const auto& x : row)
            if (x == cplx(0.0)) throw std::invalid_argument("GhzSymmetry: zero gamma entry");
    }
    const CMatrix x = permutation_matrix(s.sigma);
    LocalOperator op;
    for (const auto& row : s.gammas) op.factors.push_back(diag_matrix(row) * x);
    op.factors.push_back(diag_matrix(s.last_gamma()) * x);
    return op;
}

PureState ghz_like_state(int n, const std::vector<Rational>& diag_sq) {
    const int d = static_cast<int>(diag_sq.size());
    PureState ghz = make_ghz(n, d);
    return apply_at(sqrt_diag(diag_sq), static_cast<std::size_t>(n - 1), ghz);
}

PureState ghz_like_state(const GhzLikeState& s) {
    if (static_cast<int>(s.diag.size()) != s.d) throw std::invalid_argument("diagonal length differs from d");
    return ghz_like_state(s.n, s.diag.coeffs);
}

bool decide_ghz_transform(const GhzLikeState& src, const GhzLikeState& dst) {
    check_pair(src, dst);
    return majorizes(dst.diag, src.diag);
}

LoccProtocol synthesize_ghz_protocol(const GhzLikeState& src, const GhzLikeState& dst) {
    check_pair(src, dst);
    // sum_k p_k permute(H, tau_k) = G; the measurement uses sigma_k = tau_k^{-1}.
    RadoCertificate cert = rado_decompose(src.diag, dst.diag);
    const CMatrix g = sqrt_diag(src.diag.coeffs), h = sqrt_diag(dst.diag.coeffs);
    const CMatrix g_inv = inverse_diag(g);
    Round r;
    r.party = static_cast<std::size_t>(src.n - 1);
    for (std::size_t k = 0; k < cert.terms.size(); ++k) {
        const Permutation sigma = inverse(cert.terms[k].sigma);
        const CMatrix xs = permutation_matrix(sigma);
        r.ops.push_back(std::sqrt(to_double(cert.terms[k].probability)) * h * xs * g_inv);
        LocalOperator corr;
        for (int p = 0; p < src.n - 1; ++p) corr.factors.push_back(xs);
        corr.factors.push_back(CMatrix::Identity(src.d, src.d));
        r.corrections[k] = corr;
    }
    LoccProtocol p;
    p.rounds.push_back(std::move(r));
    p.target = ghz_like_state(dst);
    return p;
}

SqrtRational trivial_subgroup_bound(const Rational& alpha1, const Rational& alpha2) {
    for (const auto* a : {&alpha1, &alpha2})
        if (*a < 0 || *a >= Rational(1, 2)) throw std::invalid_argument("alpha must lie in [0, 1/2)");
    return SqrtRational::of(alpha1 * alpha2);
}

std::vector<Permutation> trivial_subgroup() {
    auto flip = [](int mask) {
        Permutation p(4);
        for (int l = 0; l < 4; ++l) p[static_cast<std::size_t>(l)] = l ^ mask;
        return p;
    };
    const Permutation swap{0, 2, 1, 3};
    std::vector<Permutation> out;
    for (int mask : {0, 2, 1, 3}) out.push_back(flip(mask));
    for (int mask : {0, 2, 1, 3}) out.push_back(compose(swap, flip(mask)));
    return out;
}

std::vector<Rational> two_copy_diag(const Rational& x1, const Rational& x2) {
    const Rational half(1, 2);
    const std::vector<Rational> a{half + x1, half - x1}, b{half + x2, half - x2};
    std::vector<Rational> out;
    for (const auto& u : a)
        for (const auto& v : b) out.push_back(u * v);
    return out;
}

std::optional<std::vector<Rational>> restricted_decision(const std::vector<Rational>& g_diag,
                                                         const std::vector<Rational>& h_diag,
                                                         const std::vector<Permutation>& group) {
    const std::size_t d = g_diag.size();
    if (h_diag.size() != d) throw std::invalid_argument("restricted_decision: dimension mismatch");
    for (const auto& s : group) check_permutation(s, static_cast<int>(d));
    std::vector<std::vector<Rational>> A(d + 1, std::vector<Rational>(group.size()));
    std::vector<Rational> b(d + 1);
    for (std::size_t l = 0; l < d; ++l) {
        for (std::size_t k = 0; k < group.size(); ++k) A[l][k] = h_diag[static_cast<std::size_t>(group[k][l])];
        b[l] = g_diag[l];
    }
    for (std::size_t k = 0; k < group.size(); ++k) A[d][k] = 1;
    b[d] = 1;
    auto res = lp::solve_standard<Rational>(A, b, std::vector<Rational>(group.size(), Rational(0)));
    if (res.status != lp::Status::optimal) return std::nullopt;
    return res.x;
}

bool trivial_subgroup_feasible(const Rational& delta, const Rational& alpha1, const Rational& alpha2) {
    return restricted_decision(two_copy_diag(delta, delta), two_copy_diag(alpha1, alpha2), trivial_subgroup())
        .has_value();
}

bool two_copy_closed_form(const Rational& delta, const Rational& alpha1, const Rational& alpha2) {
    const Rational half(1, 2);
    const Rational lhs = (delta + half) * (delta + half);
    const Rational rhs = (alpha1 + half) * (alpha2 + half);
    return lhs <= rhs;
}

TwoRoundSetup two_round_protocol(const Rational& alpha1, const Rational& alpha2, const Rational& delta) {
    const Rational half(1, 2);
    for (const auto* a : {&alpha1, &alpha2})
        if (*a <= 0 || *a >= half) throw std::invalid_argument("two_round_protocol: alpha must lie in (0, 1/2)");
    if (delta < 0 || delta * delta != alpha1 * alpha2)
        throw unsupported_error("two_round_protocol: only defined for delta = sqrt(alpha1 alpha2)");

    const double lambda = std::sqrt(to_double(alpha1 * alpha2)) / to_double(alpha1 + alpha2);
    const CMatrix x = pauli_x();
    const CMatrix xx = kron(x, x);
    const CMatrix swap = permutation_matrix({0, 2, 1, 3});
    const CMatrix id4 = CMatrix::Identity(4, 4);

    auto qubit = [&](const Rational& a) { return sqrt_diag({half + a, half - a}); };
    const CMatrix gt = qubit(delta), h1 = qubit(alpha1), h2 = qubit(alpha2);
    const CMatrix g = kron(gt, gt), g_inv = inverse_diag(g);
    const CMatrix H1 = h1 * h1, H2 = h2 * h2;
    const CMatrix Hp = (0.5 + lambda) * kron(H1, H2) + (0.5 - lambda) * kron(x * H1 * x, x * H2 * x);
    CMatrix hp = Hp;
    for (Eigen::Index i = 0; i < 4; ++i) hp(i, i) = std::sqrt(Hp(i, i).real());
    const CMatrix hp_inv = inverse_diag(hp);
    const CMatrix h = kron(h1, h2);

    Round first;
    first.party = 2;
    first.ops = {std::sqrt(0.5) * hp * g_inv, std::sqrt(0.5) * hp * swap * g_inv};
    first.corrections[1] = LocalOperator{{swap, swap, id4}};

    Round second;
    second.party = 2;
    second.ops.push_back(std::sqrt(0.5 + lambda) * h * hp_inv);
    if (alpha1 != alpha2) {  // lambda = 1/2 exactly when the alphas agree
        second.ops.push_back(std::sqrt(0.5 - lambda) * h * xx * hp_inv);
        second.corrections[1] = LocalOperator{{xx, xx, id4}};
    }

    const PureState ghz4 = make_ghz(3, 4);
    TwoRoundSetup out;
    out.protocol.rounds = {first, second};
    out.protocol.target = apply_at(h, 2, ghz4).normalized();
    out.input = apply_at(g, 2, ghz4).normalized();
    return out;
}

}  // namespace mst
