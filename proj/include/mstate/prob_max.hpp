#pragma once

#include <vector>

#include "mstate/protocol.hpp"
#include "mstate/qstate.hpp"
#include "mstate/rational.hpp"

namespace mst {

// lambda_min[G / norm_sq]. Throws std::invalid_argument unless G is Hermitian positive
// definite and norm_sq > 0.
double pmax_to_seed(const CMatrix& G, double norm_sq);
Rational pmax_to_seed(const std::vector<Rational>& g_diag, const Rational& norm_sq);

// 1 / lambda_max[(H1 (x) H2 + H2 (x) H1) / (2 n1_sq n2_sq)].
double pmax_joint_two_state(const CMatrix& H1, const CMatrix& H2, double n1_sq, double n2_sq);
Rational pmax_joint_two_state(const std::vector<Rational>& h1, const std::vector<Rational>& h2, const Rational& n1_sq,
                              const Rational& n2_sq);

// Largest p with r G - (p / |S|) sum_S S^dagger H S positive semidefinite, where G and H act
// on the last party only. Every stabilizer factor must be unitary so that the residual stays
// of the form 1 (x) ... (x) 1 (x) D; otherwise throws unsupported_error.
double pmax_sep_unitary_stabilizer(const CMatrix& G, const CMatrix& H, const std::vector<LocalOperator>& stabilizer,
                                   double r);

// 2 / (1 + eps^2) * ((1 + eps) / 2)^2
double joint_closed_form(double eps);
Rational joint_closed_form(const Rational& eps);

// (sqrt7 |00000> + sqrt5 |11111> + the ten weight-3 basis states) / sqrt22
PureState psi5();

// diag(1, eps) and diag(eps, 1)
std::vector<Rational> h1_diag(const Rational& eps);
std::vector<Rational> h2_diag(const Rational& eps);

// Diagonal of 1 - M1^dagger M1 - M2^dagger M2 on the merged two-qubit site, exact.
std::vector<Rational> three_branch_residual(const Rational& eps);

// Party n measures M1, M2 (coefficient sqrt(1/(1+eps^2))) and M3 on the merged copy of
// `seed` (x) `seed`; outcome 2 applies SWAP on every party, outcome 3 fails. The target is
// psi_1 (x) psi_2 with psi_i = h_i on the last party. Requires eps in (0, 1].
struct ThreeBranchSetup {
    LoccProtocol protocol;
    PureState input;
};
ThreeBranchSetup build_three_branch_protocol(const PureState& seed, double eps);

}  // namespace mst
