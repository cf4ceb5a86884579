#include "mstate/source_ent.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "mstate/errors.hpp"
#include "mstate/symmetric.hpp"

namespace mst {

Rational source_entanglement(const SchmidtTuple& lam) {
    const std::size_t d = lam.size();
    if (d == 0) throw std::invalid_argument("source_entanglement: empty tuple");
    if (d > 9) throw resource_error("source_entanglement: d! terms beyond the d <= 9 cap");
    if (lam.total() != 1) throw std::invalid_argument("source_entanglement: tuple is not normalized");

    std::vector<int> sigma(d);
    std::iota(sigma.begin(), sigma.end(), 1);
    Rational sum = 0;
    do {
        Rational lin = 0;
        for (std::size_t k = 0; k < d; ++k) lin += lam[k] * sigma[k];
        long den = 1;
        for (std::size_t k = 0; k + 1 < d; ++k) den *= sigma[k] - sigma[k + 1];
        sum += rational_pow(lin, static_cast<unsigned>(d - 1)) / den;
    } while (std::next_permutation(sigma.begin(), sigma.end()));
    return 1 - sum;
}

NonadditivityResult nonadditivity_experiment(const DirectSumParams& p) {
    NonadditivityResult r;
    r.tuples = direct_sum_construction(7, p);
    const auto& [mu, lam, mu_bar, lam_bar] = r.tuples;
    r.lu_equivalent = lu_equivalent(mu, lam, mu_bar, lam_bar);
    r.es_mu = source_entanglement(mu);
    r.es_lam = source_entanglement(lam);
    r.es_mu_bar = source_entanglement(mu_bar);
    r.es_lam_bar = source_entanglement(lam_bar);
    r.gap = (r.es_lam_bar + r.es_mu_bar) - (r.es_lam + r.es_mu);
    return r;
}

}  // namespace mst
