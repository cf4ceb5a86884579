#pragma once

#include <optional>
#include <vector>

#include "mstate/protocol.hpp"
#include "mstate/qstate.hpp"
#include "mstate/rational.hpp"
#include "mstate/schmidt.hpp"

namespace mst {

// D(gamma^(1)) X_sigma (x) ... (x) D(gamma^(n)) X_sigma. Only the first n-1 diagonals are
// stored; party n's is fixed by prod_i gamma^(i)_j = 1.
struct GhzSymmetry {
    int n = 0;
    int d = 0;
    Permutation sigma;
    std::vector<std::vector<cplx>> gammas;  // (n-1) x d

    std::vector<cplx> last_gamma() const;
};

// Throws std::invalid_argument on shape errors or a zero gamma entry.
LocalOperator symmetry_as_operator(const GhzSymmetry& s);

// 1 (x) ... (x) 1 (x) g |GHZ_d^n>, g = diag(sqrt(diag)), with diag in sorted order.
struct GhzLikeState {
    int n = 0;
    int d = 0;
    SchmidtTuple diag;
};

PureState ghz_like_state(int n, const std::vector<Rational>& diag_sq);
PureState ghz_like_state(const GhzLikeState& s);

// True iff dst.diag majorizes src.diag. Throws std::invalid_argument when n, d, or the
// traces differ.
bool decide_ghz_transform(const GhzLikeState& src, const GhzLikeState& dst);

// One round on party n: operators sqrt(p_k) h X_sigma_k g^{-1}, then X_sigma_k on all
// other parties. Throws no_certificate_error when the decision is false.
LoccProtocol synthesize_ghz_protocol(const GhzLikeState& src, const GhzLikeState& dst);

// sqrt(alpha1 alpha2), the largest delta reachable with the order-8 subgroup below.
// Requires alpha_i in [0, 1/2).
SqrtRational trivial_subgroup_bound(const Rational& alpha1, const Rational& alpha2);

// The order-8 subgroup {1, X1, X2, X1X2, SWAP, SWAP X1, SWAP X2, SWAP X1X2} acting on the
// merged two-qubit index 2 i_1 + i_2.
std::vector<Permutation> trivial_subgroup();

// Diagonal of G~ (x) G~ or H~_1 (x) H~_2 with G~ = 1/2 + delta sigma_z, in merged index order.
std::vector<Rational> two_copy_diag(const Rational& x1, const Rational& x2);

// Exact LP: probabilities p_k >= 0, sum 1, with sum_k p_k X_k^dagger H X_k = G over the
// given permutations, or nullopt when infeasible. Entry l of X^dagger H X is h[sigma[l]].
std::optional<std::vector<Rational>> restricted_decision(const std::vector<Rational>& g_diag,
                                                         const std::vector<Rational>& h_diag,
                                                         const std::vector<Permutation>& group);

// Two copies of G~ to H~_1 (x) H~_2 using only the trivial subgroup.
bool trivial_subgroup_feasible(const Rational& delta, const Rational& alpha1, const Rational& alpha2);

// Two-copy closed form: (delta + 1/2)^2 <= (alpha1 + 1/2)(alpha2 + 1/2).
bool two_copy_closed_form(const Rational& delta, const Rational& alpha1, const Rational& alpha2);

// The two-round protocol for delta = sqrt(alpha1 alpha2), alpha_i in (0, 1/2), on
// 1 (x) 1 (x) (g~ (x) g~) |GHZ_4^3>. Throws unsupported_error when delta does not saturate.
struct TwoRoundSetup {
    LoccProtocol protocol;
    PureState input;
};
TwoRoundSetup two_round_protocol(const Rational& alpha1, const Rational& alpha2, const Rational& delta);

}  // namespace mst
