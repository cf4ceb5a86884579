#pragma once

#include <Eigen/Dense>
#include <complex>
#include <functional>
#include <vector>

namespace mst {

using cplx = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;

// Basis order is row-major over parties, party 0 most significant.
struct PureState {
    std::vector<int> dims;
    CVector amps;

    PureState() = default;
    // Validates dims (all >= 1), amplitude count, and the amplitude cap.
    PureState(std::vector<int> dims, CVector amps);

    std::size_t num_parties() const { return dims.size(); }
    double norm_sq() const { return amps.squaredNorm(); }
    PureState normalized() const;
};

struct LocalOperator {
    std::vector<CMatrix> factors;
};

std::size_t total_dimension(const std::vector<int>& dims);

PureState make_ghz(int n, int d);
PureState make_w();
// (|0000> + |1111> + |0110> + |0011>) / 2
PureState make_chi();
PureState basis_state(const std::vector<int>& dims, const std::vector<int>& digits);

// Applies the tensor product of the factors; result is not renormalized.
PureState apply_local(const LocalOperator& op, const PureState& state);
// Applies m to one party only.
PureState apply_at(const CMatrix& m, std::size_t party, const PureState& state);

CMatrix reduced_density(const PureState& state, std::size_t party);

// Every single-party reduced state within tol (entrywise) of the maximally mixed state.
bool is_critical(const PureState& state, double tol = 1e-10);

// Party i of the result groups party i of every input; the local index is the
// mixed-radix number (i_1,...,i_k) with the first input most significant.
PureState merge_copies(const std::vector<PureState>& states);

// |<a|b>|^2 / (|a|^2 |b|^2); 0 when either vector vanishes.
double fidelity(const PureState& a, const PureState& b);

// Norms ||S_alpha |state>|| for each alpha. Each factor must have unit determinant
// (within tol) at every sampled alpha.
std::vector<double> null_limit_check(const PureState& state, const std::function<LocalOperator(double)>& sequence,
                                     const std::vector<double>& alphas, double tol = 1e-9);

CMatrix kron(const CMatrix& a, const CMatrix& b);
CMatrix pauli_x();
// Permutation operator X_sigma |k> = |sigma(k)>.
CMatrix permutation_matrix(const std::vector<int>& sigma);

}  // namespace mst
