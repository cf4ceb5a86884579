#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "mstate/qstate.hpp"

namespace mst {

// One measurement round on a single party. Outcome k applies ops[k] on `party`,
// then corrections[k] (one factor per party) if present. Outcomes in `fail` end the branch.
struct Round {
    std::size_t party = 0;
    std::vector<CMatrix> ops;
    std::map<std::size_t, LocalOperator> corrections;
    std::set<std::size_t> fail;
};

struct LoccProtocol {
    std::vector<Round> rounds;
    std::optional<PureState> target;
};

struct Violation {
    std::size_t round;
    std::string kind;  // "completeness" or "unitarity"
    std::optional<std::size_t> outcome;
    double magnitude;
};

struct ValidationReport {
    std::vector<Violation> violations;
    bool ok() const { return violations.empty(); }
};

ValidationReport validate(const LoccProtocol& p, double tol = 1e-10);

struct Leaf {
    std::vector<std::size_t> outcomes;
    double probability = 0;
    bool failed = false;
    PureState state;                  // normalized; the residual state for failed leaves
    std::optional<double> fidelity;  // against the protocol target, when one is set
};

// Full branch expansion in outcome order. Branches of probability zero are kept.
std::vector<Leaf> simulate(const LoccProtocol& p, const PureState& input);

// Total probability of non-failed leaves whose fidelity to the target is at least 1 - tol.
double success_probability(const std::vector<Leaf>& leaves, double tol = 1e-10);

// Exchange of whole tensor factors between a target and an auxiliary state held by the
// same parties. Each side is the merge of its factor list.
struct SubswapSpec {
    std::vector<PureState> target_factors;
    std::vector<PureState> aux_factors;
    std::vector<std::pair<std::size_t, std::size_t>> swaps;  // (target factor, aux factor)
    std::vector<PureState> expected_target;
    std::vector<PureState> expected_aux;
};

struct SubswapReport {
    bool verified = false;
    double fidelity = 0;
    bool critical_before = false;  // target as given
    bool critical_after = false;   // declared output target
};

SubswapReport verify_subswap(const SubswapSpec& spec, double tol = 1e-10);

}  // namespace mst
