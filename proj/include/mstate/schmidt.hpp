#pragma once

#include <string>
#include <vector>

#include "mstate/rational.hpp"

namespace mst {

// Squared Schmidt coefficients, exact, sorted descending.
struct SchmidtTuple {
    std::vector<Rational> coeffs;
    bool normalized = false;

    SchmidtTuple() = default;
    // Sorts descending (stable on the input index), rejects negatives, sets `normalized`.
    explicit SchmidtTuple(std::vector<Rational> values);

    std::size_t size() const { return coeffs.size(); }
    Rational total() const;
    bool fully_entangled() const;
    const Rational& operator[](std::size_t i) const { return coeffs[i]; }
    friend bool operator==(const SchmidtTuple& a, const SchmidtTuple& b) { return a.coeffs == b.coeffs; }
};

// sigma[k] is the image of position k. permute(x, sigma)[sigma[k]] = x[k],
// matching X_sigma diag(x) X_sigma^dagger with X_sigma|k> = |sigma(k)>.
using Permutation = std::vector<int>;

Permutation identity_permutation(std::size_t d);
Permutation inverse(const Permutation& sigma);
Permutation compose(const Permutation& a, const Permutation& b);  // a after b
std::vector<Rational> permute(const std::vector<Rational>& x, const Permutation& sigma);

struct RadoTerm {
    Rational probability;
    Permutation sigma;
};

struct RadoCertificate {
    std::vector<RadoTerm> terms;
};

// sum_k p_k permute(source, sigma_k).
std::vector<Rational> apply_certificate(const RadoCertificate& cert, const std::vector<Rational>& source);

// True iff every prefix sum of a dominates that of b, with equal totals.
// Throws std::invalid_argument on length mismatch or unequal totals.
bool majorizes(const SchmidtTuple& a, const SchmidtTuple& b);

SchmidtTuple tensor(const SchmidtTuple& a, const SchmidtTuple& b);
SchmidtTuple tensor_power(const SchmidtTuple& a, unsigned k);

bool multiset_equal(const SchmidtTuple& a, const SchmidtTuple& b);

// Certificate with sum_k p_k permute(source.coeffs, sigma_k) == target.coeffs, at most
// d^2-2d+2 terms. Throws no_certificate_error when source does not majorize target.
RadoCertificate rado_decompose(const SchmidtTuple& target, const SchmidtTuple& source);

SchmidtTuple from_decimals(const std::vector<std::string>& values);

}  // namespace mst
