#include "mstate/protocol.hpp"

#include <numeric>
#include <stdexcept>

namespace mst {

ValidationReport validate(const LoccProtocol& p, double tol) {
    ValidationReport rep;
    for (std::size_t r = 0; r < p.rounds.size(); ++r) {
        const auto& round = p.rounds[r];
        if (round.ops.empty()) {
            rep.violations.push_back({r, "completeness", std::nullopt, 1.0});
            continue;
        }
        const auto d = round.ops.front().cols();
        CMatrix sum = CMatrix::Zero(d, d);
        bool shapes_ok = true;
        for (const auto& m : round.ops) {
            if (m.cols() != d) {
                shapes_ok = false;
                break;
            }
            sum += m.adjoint() * m;
        }
        if (!shapes_ok) {
            rep.violations.push_back({r, "completeness", std::nullopt, 1.0});
            continue;
        }
        double dev = (sum - CMatrix::Identity(d, d)).cwiseAbs().maxCoeff();
        if (dev > tol) rep.violations.push_back({r, "completeness", std::nullopt, dev});
        for (const auto& [k, op] : round.corrections)
            for (const auto& f : op.factors) {
                if (f.rows() != f.cols()) {
                    rep.violations.push_back({r, "unitarity", k, 1.0});
                    continue;
                }
                double u = (f.adjoint() * f - CMatrix::Identity(f.cols(), f.cols())).cwiseAbs().maxCoeff();
                if (u > tol) rep.violations.push_back({r, "unitarity", k, u});
            }
    }
    return rep;
}

namespace {

void expand(const LoccProtocol& p, std::size_t r, const PureState& state, double prob,
            std::vector<std::size_t>& path, std::vector<Leaf>& out) {
    if (r == p.rounds.size()) {
        Leaf leaf{path, prob, false, state, std::nullopt};
        if (p.target) leaf.fidelity = fidelity(state, *p.target);
        out.push_back(std::move(leaf));
        return;
    }
    const auto& round = p.rounds[r];
    for (std::size_t k = 0; k < round.ops.size(); ++k) {
        PureState next = apply_at(round.ops[k], round.party, state);
        double w = next.norm_sq();
        path.push_back(k);
        if (w > 0) {
            next = next.normalized();
            auto it = round.corrections.find(k);
            if (it != round.corrections.end()) next = apply_local(it->second, next);
        }
        if (round.fail.count(k)) {
            out.push_back(Leaf{path, prob * w, true, next, std::nullopt});
        } else if (w > 0) {
            expand(p, r + 1, next, prob * w, path, out);
        } else {
            out.push_back(Leaf{path, 0.0, false, next, std::nullopt});
        }
        path.pop_back();
    }
}

}  // namespace

std::vector<Leaf> simulate(const LoccProtocol& p, const PureState& input) {
    for (const auto& round : p.rounds) {
        if (round.party >= input.dims.size()) throw std::invalid_argument("simulate: party index out of range");
        for (const auto& m : round.ops)
            if (m.cols() != input.dims[round.party])
                throw std::invalid_argument("simulate: operator does not match local dimension");
    }
    if (p.target && p.target->dims != input.dims) throw std::invalid_argument("simulate: target dimension mismatch");
    std::vector<Leaf> out;
    std::vector<std::size_t> path;
    double n = input.norm_sq();
    if (n == 0) throw std::invalid_argument("simulate: zero input state");
    expand(p, 0, input.normalized(), 1.0, path, out);
    return out;
}

double success_probability(const std::vector<Leaf>& leaves, double tol) {
    double s = 0;
    for (const auto& l : leaves)
        if (!l.failed && l.probability > 0 && l.fidelity && *l.fidelity >= 1 - tol) s += l.probability;
    return s;
}

namespace {

// Per-party operator that reorders tensor factors: output position q holds input factor perm[q].
CMatrix factor_permutation(const std::vector<int>& fdims, const std::vector<std::size_t>& perm) {
    const std::size_t k = fdims.size();
    std::size_t D = 1;
    for (int d : fdims) D *= static_cast<std::size_t>(d);
    std::vector<int> out_dims(k);
    for (std::size_t q = 0; q < k; ++q) out_dims[q] = fdims[perm[q]];
    CMatrix m = CMatrix::Zero(static_cast<Eigen::Index>(D), static_cast<Eigen::Index>(D));
    std::vector<int> digit(k);
    for (std::size_t idx = 0; idx < D; ++idx) {
        std::size_t rem = idx;
        for (std::size_t f = k; f-- > 0;) {
            digit[f] = static_cast<int>(rem % static_cast<std::size_t>(fdims[f]));
            rem /= static_cast<std::size_t>(fdims[f]);
        }
        std::size_t o = 0;
        for (std::size_t q = 0; q < k; ++q) o = o * static_cast<std::size_t>(out_dims[q]) + static_cast<std::size_t>(digit[perm[q]]);
        m(static_cast<Eigen::Index>(o), static_cast<Eigen::Index>(idx)) = 1.0;
    }
    return m;
}

}  // namespace

SubswapReport verify_subswap(const SubswapSpec& spec, double tol) {
    if (spec.target_factors.empty() || spec.aux_factors.empty())
        throw std::invalid_argument("verify_subswap: both sides need at least one factor");
    if (spec.expected_target.size() != spec.target_factors.size() || spec.expected_aux.size() != spec.aux_factors.size())
        throw std::invalid_argument("verify_subswap: declared outputs have the wrong factor count");
    std::vector<PureState> all = spec.target_factors;
    all.insert(all.end(), spec.aux_factors.begin(), spec.aux_factors.end());
    const std::size_t nt = spec.target_factors.size();
    const std::size_t n = all.front().dims.size();
    for (const auto& s : all)
        if (s.dims.size() != n) throw std::invalid_argument("verify_subswap: party counts differ");

    std::vector<std::size_t> perm(all.size());
    std::iota(perm.begin(), perm.end(), 0);
    for (auto [t, a] : spec.swaps) {
        if (t >= nt || a >= spec.aux_factors.size()) throw std::invalid_argument("verify_subswap: wiring index out of range");
        if (all[t].dims != all[nt + a].dims) throw std::invalid_argument("verify_subswap: swapped factors differ in shape");
        std::swap(perm[t], perm[nt + a]);
    }
    PureState joint = merge_copies(all);
    LocalOperator op;
    for (std::size_t party = 0; party < n; ++party) {
        std::vector<int> fdims;
        for (const auto& s : all) fdims.push_back(s.dims[party]);
        op.factors.push_back(factor_permutation(fdims, perm));
    }
    PureState moved = apply_local(op, joint);

    std::vector<PureState> expect = spec.expected_target;
    expect.insert(expect.end(), spec.expected_aux.begin(), spec.expected_aux.end());
    PureState declared = merge_copies(expect);

    SubswapReport rep;
    if (moved.dims != declared.dims) return rep;
    rep.fidelity = fidelity(moved, declared);
    rep.verified = rep.fidelity >= 1 - tol;
    rep.critical_before = is_critical(merge_copies(spec.target_factors).normalized());
    rep.critical_after = is_critical(merge_copies(spec.expected_target).normalized());
    return rep;
}

}  // namespace mst
