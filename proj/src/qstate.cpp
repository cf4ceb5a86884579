#include "mstate/qstate.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "mstate/errors.hpp"

namespace mst {

std::size_t total_dimension(const std::vector<int>& dims) {
    std::size_t total = 1;
    const std::size_t cap = max_amplitudes();
    for (int d : dims) {
        if (d < 1) throw std::invalid_argument("local dimension must be positive");
        total *= static_cast<std::size_t>(d);
        if (total > cap) throw resource_error("state exceeds amplitude cap of " + std::to_string(cap));
    }
    return total;
}

PureState::PureState(std::vector<int> d, CVector a) : dims(std::move(d)), amps(std::move(a)) {
    if (dims.empty()) throw std::invalid_argument("state needs at least one party");
    if (static_cast<std::size_t>(amps.size()) != total_dimension(dims))
        throw std::invalid_argument("amplitude count does not match local dimensions");
}

PureState PureState::normalized() const {
    double n = amps.norm();
    if (n == 0) throw std::invalid_argument("cannot normalize the zero vector");
    return PureState(dims, amps / n);
}

PureState make_ghz(int n, int d) {
    if (n < 2 || d < 2) throw std::invalid_argument("GHZ needs n >= 2 and d >= 2");
    std::vector<int> dims(static_cast<std::size_t>(n), d);
    CVector a = CVector::Zero(static_cast<Eigen::Index>(total_dimension(dims)));
    double amp = 1.0 / std::sqrt(static_cast<double>(d));
    for (int i = 0; i < d; ++i) {
        std::size_t idx = 0;
        for (int p = 0; p < n; ++p) idx = idx * static_cast<std::size_t>(d) + static_cast<std::size_t>(i);
        a[static_cast<Eigen::Index>(idx)] = amp;
    }
    return PureState(std::move(dims), std::move(a));
}

PureState make_w() {
    CVector a = CVector::Zero(8);
    double amp = 1.0 / std::sqrt(3.0);
    a[1] = a[2] = a[4] = amp;
    return PureState({2, 2, 2}, a);
}

PureState make_chi() {
    CVector a = CVector::Zero(16);
    a[0b0000] = a[0b1111] = a[0b0110] = a[0b0011] = 0.5;
    return PureState({2, 2, 2, 2}, a);
}

PureState basis_state(const std::vector<int>& dims, const std::vector<int>& digits) {
    if (digits.size() != dims.size()) throw std::invalid_argument("basis_state: digit count mismatch");
    CVector a = CVector::Zero(static_cast<Eigen::Index>(total_dimension(dims)));
    std::size_t idx = 0;
    for (std::size_t p = 0; p < dims.size(); ++p) {
        if (digits[p] < 0 || digits[p] >= dims[p]) throw std::invalid_argument("basis_state: digit out of range");
        idx = idx * static_cast<std::size_t>(dims[p]) + static_cast<std::size_t>(digits[p]);
    }
    a[static_cast<Eigen::Index>(idx)] = 1.0;
    return PureState(dims, a);
}

PureState apply_at(const CMatrix& m, std::size_t party, const PureState& state) {
    if (party >= state.dims.size()) throw std::out_of_range("party index out of range");
    const auto din = static_cast<Eigen::Index>(state.dims[party]);
    if (m.cols() != din) throw std::invalid_argument("operator columns do not match local dimension");
    std::size_t left = 1, right = 1;
    for (std::size_t p = 0; p < party; ++p) left *= static_cast<std::size_t>(state.dims[p]);
    for (std::size_t p = party + 1; p < state.dims.size(); ++p) right *= static_cast<std::size_t>(state.dims[p]);
    std::vector<int> out_dims = state.dims;
    out_dims[party] = static_cast<int>(m.rows());
    CVector out = CVector::Zero(static_cast<Eigen::Index>(total_dimension(out_dims)));
    const auto dout = m.rows();
    const auto R = static_cast<Eigen::Index>(right);
    for (std::size_t l = 0; l < left; ++l) {
        const auto L = static_cast<Eigen::Index>(l);
        // Block of the input viewed as din x right, mapped to dout x right.
        Eigen::Map<const Eigen::Matrix<cplx, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>> in(
            state.amps.data() + L * din * R, din, R);
        Eigen::Map<Eigen::Matrix<cplx, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>> dst(
            out.data() + L * dout * R, dout, R);
        dst.noalias() = m * in;
    }
    return PureState(std::move(out_dims), std::move(out));
}

PureState apply_local(const LocalOperator& op, const PureState& state) {
    if (op.factors.size() != state.dims.size())
        throw std::invalid_argument("operator factor count does not match party count");
    PureState cur = state;
    for (std::size_t p = 0; p < op.factors.size(); ++p) cur = apply_at(op.factors[p], p, cur);
    return cur;
}

CMatrix reduced_density(const PureState& state, std::size_t party) {
    if (party >= state.dims.size()) throw std::out_of_range("party index out of range");
    std::size_t left = 1, right = 1;
    for (std::size_t p = 0; p < party; ++p) left *= static_cast<std::size_t>(state.dims[p]);
    for (std::size_t p = party + 1; p < state.dims.size(); ++p) right *= static_cast<std::size_t>(state.dims[p]);
    const auto d = static_cast<Eigen::Index>(state.dims[party]);
    const auto R = static_cast<Eigen::Index>(right);
    CMatrix rho = CMatrix::Zero(d, d);
    for (std::size_t l = 0; l < left; ++l) {
        Eigen::Map<const Eigen::Matrix<cplx, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>> blk(
            state.amps.data() + static_cast<Eigen::Index>(l) * d * R, d, R);
        rho.noalias() += blk * blk.adjoint();
    }
    return rho;
}

bool is_critical(const PureState& state, double tol) {
    for (std::size_t p = 0; p < state.dims.size(); ++p) {
        const auto d = state.dims[p];
        CMatrix rho = reduced_density(state, p);
        CMatrix target = CMatrix::Identity(d, d) / static_cast<double>(d);
        if ((rho - target).cwiseAbs().maxCoeff() > tol) return false;
    }
    return true;
}

PureState merge_copies(const std::vector<PureState>& states) {
    if (states.empty()) throw std::invalid_argument("merge_copies: no states");
    const std::size_t n = states.front().dims.size();
    for (const auto& s : states)
        if (s.dims.size() != n) throw std::invalid_argument("merge_copies: party counts differ");
    if (states.size() == 1) return states.front();
    const std::size_t k = states.size();
    std::vector<int> dims(n, 1);
    for (std::size_t i = 0; i < n; ++i)
        for (const auto& s : states) dims[i] *= s.dims[i];
    const std::size_t total = total_dimension(dims);
    CVector out(static_cast<Eigen::Index>(total));
    // Decode the merged index into per-party groups, then per-copy digits.
    std::vector<int> digit(n);
    for (std::size_t idx = 0; idx < total; ++idx) {
        std::size_t rem = idx;
        for (std::size_t i = n; i-- > 0;) {
            digit[i] = static_cast<int>(rem % static_cast<std::size_t>(dims[i]));
            rem /= static_cast<std::size_t>(dims[i]);
        }
        cplx amp = 1.0;
        std::vector<int> group = digit;
        for (std::size_t c = k; c-- > 0;) {
            const auto& s = states[c];
            std::size_t sub = 0;
            for (std::size_t i = 0; i < n; ++i) {
                int di = group[i] % s.dims[i];
                group[i] /= s.dims[i];
                sub = sub * static_cast<std::size_t>(s.dims[i]) + static_cast<std::size_t>(di);
            }
            amp *= s.amps[static_cast<Eigen::Index>(sub)];
        }
        out[static_cast<Eigen::Index>(idx)] = amp;
    }
    return PureState(std::move(dims), std::move(out));
}

double fidelity(const PureState& a, const PureState& b) {
    if (a.dims != b.dims) throw std::invalid_argument("fidelity: dimension mismatch");
    double na = a.amps.squaredNorm(), nb = b.amps.squaredNorm();
    if (na == 0 || nb == 0) return 0.0;
    return std::norm(a.amps.dot(b.amps)) / (na * nb);
}

std::vector<double> null_limit_check(const PureState& state, const std::function<LocalOperator(double)>& sequence,
                                     const std::vector<double>& alphas, double tol) {
    std::vector<double> norms;
    norms.reserve(alphas.size());
    for (double alpha : alphas) {
        LocalOperator op = sequence(alpha);
        for (const auto& f : op.factors) {
            if (f.rows() != f.cols()) throw std::invalid_argument("null_limit_check: factors must be square");
            if (std::abs(f.determinant() - cplx(1.0)) > tol)
                throw std::invalid_argument("null_limit_check: factor determinant is not 1");
        }
        norms.push_back(apply_local(op, state).amps.norm());
    }
    return norms;
}

CMatrix kron(const CMatrix& a, const CMatrix& b) {
    CMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j) out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    return out;
}

CMatrix pauli_x() {
    CMatrix x = CMatrix::Zero(2, 2);
    x(0, 1) = x(1, 0) = 1.0;
    return x;
}

CMatrix permutation_matrix(const std::vector<int>& sigma) {
    const auto d = static_cast<Eigen::Index>(sigma.size());
    CMatrix m = CMatrix::Zero(d, d);
    for (Eigen::Index k = 0; k < d; ++k) {
        if (sigma[static_cast<std::size_t>(k)] < 0 || sigma[static_cast<std::size_t>(k)] >= d)
            throw std::invalid_argument("permutation entry out of range");
        m(sigma[static_cast<std::size_t>(k)], k) = 1.0;
    }
    return m;
}

}  // namespace mst
