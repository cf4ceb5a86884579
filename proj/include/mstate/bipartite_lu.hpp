#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "mstate/rational.hpp"
#include "mstate/schmidt.hpp"

namespace mst {

// Schmidt tuples written as powers of a in (0,1): entry i of a tuple is a^{e_i}.
// Every tuple starts at exponent 0 and is weakly increasing.
struct ExponentFamily {
    std::vector<Rational> mu, lam, mu_bar, lam_bar;

    friend bool operator==(const ExponentFamily&, const ExponentFamily&) = default;
};

// Anchors, weak increase, and the multiset identity {mu_i + lam_j} = {mu_bar_k + lam_bar_l}.
bool exponents_valid(const ExponentFamily& f);
bool exponent_sums_match(const ExponentFamily& f);

// Least common multiple of all exponent denominators.
Rational exponent_denominator(const ExponentFamily& f);

// Unnormalized tuples (a^{L e_i}) with L = exponent_denominator(f), so that a rational
// a gives exact values. The return order is mu, lam, mu_bar, lam_bar.
std::array<SchmidtTuple, 4> realize(const ExponentFamily& f, const Rational& a);

// Exponent-multiset check plus exact multiset equality of the realized tensors at each a.
bool family_valid_at(const ExponentFamily& f, const std::vector<Rational>& as);

// Rank labels of a linear extension of the product order on a rows x cols grid:
// label[i * cols + j] is the position of cell (i, j) in ascending exponent order.
using Tableau = std::vector<int>;

struct TableauPair {
    Tableau t_in, t_out;
};

std::vector<Tableau> linear_extensions(int rows, int cols);

// Hook length formula for the rows x cols rectangle.
unsigned long long linear_extension_count(int rows, int cols);

enum class LuClass { identity, swap, sub_swap, direct_sum, nontrivial };
const char* to_string(LuClass c);

struct LuSolution {
    // A generic member of the family, scaled so that mu[1] = 1 when d_mu >= 2 and mu[1] > 0.
    ExponentFamily family;
    // The same member as a primitive integer vector.
    ExponentFamily integral;
    // Dimension of the solution subspace after ordering ties are imposed.
    int nullspace_dim = 0;
    // Rational basis of that subspace (integer rows in reduced echelon form); one entry for rays.
    std::vector<ExponentFamily> basis;
    std::vector<TableauPair> tableaux;
    LuClass classification = LuClass::nontrivial;
    // has_block_embedding(family); informational, not part of the classification.
    bool block_embedding = false;
    // For d_mu = 2 when constant on the family: a_bar = a^{ratio}.
    std::optional<Rational> a_bar_ratio;
    std::string key;
};

struct EnumOptions {
    bool include_direct_sum = true;
    bool include_trivial = false;  // identity and swap
    unsigned threads = 0;          // 0: hardware concurrency
    long max_denominator = 0;      // 0: unlimited; otherwise drop families whose display form needs more
};

// Exhaustive search over tableau pairs of the d_mu x d_lam grid. Results are sorted by key.
// Throws std::invalid_argument unless 2 <= d_mu <= d_lam and d_mu * d_lam <= 16, and
// resource_error when the number of tableau pairs exceeds the configured cap.
std::vector<LuSolution> enumerate_solutions(int d_mu, int d_lam, const EnumOptions& opts = {});

// Classification of a concrete member, in order identity, swap, sub_swap, direct_sum.
// direct_sum: some realizing pair has a disconnected coupling graph.
LuClass classify(const ExponentFamily& f, const std::vector<TableauPair>& pairs);

// Some proper block A of lam indices and block B of lam_bar indices with
// {mu + lam_A} = {mu_bar + lam_bar_B}. Independent of how tied entries are labeled, so it
// also catches embeddings whose coupling graphs are connected through ties.
bool has_block_embedding(const ExponentFamily& f);

// Coupling graph of a single pair: lambda index j joined to lambda_bar index l whenever
// the cell at some rank of t_in has column j and the cell at that rank of t_out has column l.
bool coupling_connected(const TableauPair& pair, int d_mu, int d_lam);

// Sorted matching of a family: the pair obtained by ranking cells by exponent with ties
// broken by cell index. Always a realizing pair of the family.
TableauPair canonical_pair(const ExponentFamily& f);

// Constructions.

// Qubit target (d_mu = 2) with a_bar = a^{d1/d2}.
ExponentFamily construct_qubit_solution(int d, int d1, int d2);

// mu = (0, d_lam, 2 d_lam, ...), lam = (0..d_lam-1), mu_bar = (0..d_mu-1), lam_bar = (0, d_mu, ...).
ExponentFamily nonhomogeneous_solution(int d_mu, int d_lam);

struct HomogeneousSolution {
    std::string kind;  // "sub_swap", "explicit", or "direct_sum_construction"
    std::optional<ExponentFamily> family;
    // Realized tuples for the direct-sum construction, order mu, lam, mu_bar, lam_bar.
    std::optional<std::array<SchmidtTuple, 4>> tuples;
};

struct DirectSumParams {
    Rational a{1, 2}, b{1, 3}, c{1, 4}, b_prime{1, 5}, c_prime{1, 6};
};

// Composite d: factor sub-swap. d = 5: explicit family. Odd d >= 7: direct-sum construction
// evaluated at `params`.
HomogeneousSolution homogeneous_solution(int d, const DirectSumParams& params = {});

// Normalized tuples of the odd-d direct-sum construction: a 2 x (d-3)/2 product block with
// weight c (c') next to a qutrit block with weight 1-c (1-c'). The second factor of the
// product block is the geometric tuple (1, b, b^2, ...) normalized.
std::array<SchmidtTuple, 4> direct_sum_construction(int d, const DirectSumParams& p);

enum class Gap { g_plus_plus, g_plus, g_minus };
const char* to_string(Gap g);

struct GapCycle {
    std::vector<int> nodes;  // lam_bar indices in traversal order
    std::vector<Gap> edges;  // edges[i] joins nodes[i] to nodes[(i+1) % size]
};

// Requires d_mu = 2 and mu_bar[1] / mu[1] = d / d2 for odd d2 < d = d_lam. Edge weights are
// g_++ = a^{1 + d/d2}, g_+ = a, g_- = a^{1 - d/d2}. Uses `pair` when given, otherwise the
// canonical pair. Throws std::invalid_argument when the family has the wrong shape.
std::vector<GapCycle> gap_cycles(const ExponentFamily& f, const std::optional<TableauPair>& pair = std::nullopt);

// Exponent of an edge in units of the a-exponent.
Rational gap_exponent(Gap g, const Rational& ratio);

}  // namespace mst
