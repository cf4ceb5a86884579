#pragma once

#include "mstate/bipartite_lu.hpp"
#include "mstate/schmidt.hpp"

namespace mst {

// 1 - sum_{sigma in S_d} (sum_k sigma(k) lam_k)^{d-1} / prod_{k<d} (sigma(k) - sigma(k+1)),
// with lam sorted descending and sigma(k) in 1..d. Exact. Throws resource_error for d > 9
// and std::invalid_argument for unnormalized input.
Rational source_entanglement(const SchmidtTuple& lam);

struct NonadditivityResult {
    std::array<SchmidtTuple, 4> tuples;  // mu, lam, mu_bar, lam_bar
    bool lu_equivalent = false;
    Rational es_mu, es_lam, es_mu_bar, es_lam_bar;
    Rational gap;  // (E(lam_bar) + E(mu_bar)) - (E(lam) + E(mu))
};

// The d = 7 direct-sum construction at the given parameters.
NonadditivityResult nonadditivity_experiment(const DirectSumParams& p);

}  // namespace mst
