#pragma once

#include <vector>

#include "mstate/rational.hpp"
#include "mstate/schmidt.hpp"

namespace mst {

// e_k(x); e_0 = 1 and e_k = 0 for k > len(x).
Rational esp(const std::vector<Rational>& x, std::size_t k);
// (e_0, ..., e_n) with n = len(x).
std::vector<Rational> all_esps(const std::vector<Rational>& x);

// psi_k(x) = sum_i x_i^k.
Rational power_sum(const std::vector<Rational>& x, unsigned k);

// Newton's identities: given (psi_1..psi_n) returns (e_1..e_n).
std::vector<Rational> esps_from_power_sums(const std::vector<Rational>& psums);

// e_i(mu (x) lam) == e_i(mu_bar (x) lam_bar) for all i. Cross-checked against
// multiset equality; throws std::logic_error if the two paths ever disagree.
bool lu_equivalent(const SchmidtTuple& mu, const SchmidtTuple& lam, const SchmidtTuple& mu_bar,
                   const SchmidtTuple& lam_bar);

// True iff {mu, lam} and {mu_bar, lam_bar} agree as unordered pairs of ESP vectors,
// tested through the sum and product conditions on e_i. Zero entries do not
// contribute to any e_i with i >= 1.
bool tuple_pair_trivial(const SchmidtTuple& mu, const SchmidtTuple& lam, const SchmidtTuple& mu_bar,
                        const SchmidtTuple& lam_bar);

}  // namespace mst
