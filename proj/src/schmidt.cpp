#include "mstate/schmidt.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "mstate/errors.hpp"
#include "mstate/exact_linalg.hpp"

namespace mst {

SchmidtTuple::SchmidtTuple(std::vector<Rational> values) {
    for (const auto& v : values)
        if (v < 0) throw std::invalid_argument("negative Schmidt coefficient " + to_string(v));
    std::stable_sort(values.begin(), values.end(), [](const Rational& a, const Rational& b) { return a > b; });
    coeffs = std::move(values);
    normalized = total() == 1;
}

Rational SchmidtTuple::total() const {
    Rational s = 0;
    for (const auto& c : coeffs) s += c;
    return s;
}

bool SchmidtTuple::fully_entangled() const {
    return std::all_of(coeffs.begin(), coeffs.end(), [](const Rational& c) { return c > 0; });
}

Permutation identity_permutation(std::size_t d) {
    Permutation p(d);
    std::iota(p.begin(), p.end(), 0);
    return p;
}

Permutation inverse(const Permutation& sigma) {
    Permutation inv(sigma.size());
    for (std::size_t k = 0; k < sigma.size(); ++k) inv[static_cast<std::size_t>(sigma[k])] = static_cast<int>(k);
    return inv;
}

Permutation compose(const Permutation& a, const Permutation& b) {
    Permutation c(b.size());
    for (std::size_t k = 0; k < b.size(); ++k) c[k] = a[static_cast<std::size_t>(b[k])];
    return c;
}

std::vector<Rational> permute(const std::vector<Rational>& x, const Permutation& sigma) {
    if (sigma.size() != x.size()) throw std::invalid_argument("permutation size mismatch");
    std::vector<Rational> out(x.size());
    for (std::size_t k = 0; k < x.size(); ++k) out[static_cast<std::size_t>(sigma[k])] = x[k];
    return out;
}

std::vector<Rational> apply_certificate(const RadoCertificate& cert, const std::vector<Rational>& source) {
    std::vector<Rational> out(source.size(), Rational(0));
    for (const auto& t : cert.terms) {
        auto p = permute(source, t.sigma);
        for (std::size_t i = 0; i < out.size(); ++i) out[i] += t.probability * p[i];
    }
    return out;
}

namespace {

// Index of the first prefix where a fails to dominate b, or size() if none.
std::size_t first_violation(const std::vector<Rational>& a, const std::vector<Rational>& b) {
    Rational sa = 0, sb = 0;
    for (std::size_t k = 0; k < a.size(); ++k) {
        sa += a[k];
        sb += b[k];
        if (sa < sb) return k;
    }
    return a.size();
}

}  // namespace

bool majorizes(const SchmidtTuple& a, const SchmidtTuple& b) {
    if (a.size() != b.size()) throw std::invalid_argument("majorizes: length mismatch");
    if (a.total() != b.total()) throw std::invalid_argument("majorizes: totals differ");
    return first_violation(a.coeffs, b.coeffs) == a.size();
}

SchmidtTuple tensor(const SchmidtTuple& a, const SchmidtTuple& b) {
    std::vector<Rational> out;
    out.reserve(a.size() * b.size());
    for (const auto& x : a.coeffs)
        for (const auto& y : b.coeffs) out.push_back(x * y);
    return SchmidtTuple(std::move(out));
}

SchmidtTuple tensor_power(const SchmidtTuple& a, unsigned k) {
    if (k == 0) throw std::invalid_argument("tensor_power: k must be >= 1");
    SchmidtTuple r = a;
    for (unsigned i = 1; i < k; ++i) r = tensor(r, a);
    return r;
}

bool multiset_equal(const SchmidtTuple& a, const SchmidtTuple& b) { return a.coeffs == b.coeffs; }

namespace {

using Matrix = std::vector<std::vector<Rational>>;

// Kuhn's augmenting-path matching on the bipartite graph {(i,j) : allowed[i][j]}.
bool perfect_matching(const std::vector<std::vector<bool>>& allowed, std::vector<int>& row_to_col) {
    const std::size_t d = allowed.size();
    std::vector<int> col_to_row(d, -1);
    row_to_col.assign(d, -1);
    for (std::size_t r = 0; r < d; ++r) {
        std::vector<bool> seen(d, false);
        auto augment = [&](auto&& self, std::size_t u) -> bool {
            for (std::size_t c = 0; c < d; ++c) {
                if (!allowed[u][c] || seen[c]) continue;
                seen[c] = true;
                if (col_to_row[c] < 0 || self(self, static_cast<std::size_t>(col_to_row[c]))) {
                    col_to_row[c] = static_cast<int>(u);
                    row_to_col[u] = static_cast<int>(c);
                    return true;
                }
            }
            return false;
        };
        if (!augment(augment, r)) return false;
    }
    return true;
}

// Greedy bottleneck Birkhoff decomposition: D = sum p_m P_m with (P_m)[i][pi_m(i)] = 1.
std::vector<std::pair<Rational, std::vector<int>>> birkhoff(Matrix D) {
    const std::size_t d = D.size();
    std::vector<std::pair<Rational, std::vector<int>>> out;
    for (;;) {
        std::vector<Rational> vals;
        for (const auto& row : D)
            for (const auto& v : row)
                if (v > 0) vals.push_back(v);
        if (vals.empty()) break;
        std::sort(vals.begin(), vals.end(), [](const Rational& a, const Rational& b) { return a > b; });
        vals.erase(std::unique(vals.begin(), vals.end()), vals.end());
        std::vector<int> match;
        bool found = false;
        for (const auto& t : vals) {
            std::vector<std::vector<bool>> allowed(d, std::vector<bool>(d));
            for (std::size_t i = 0; i < d; ++i)
                for (std::size_t j = 0; j < d; ++j) allowed[i][j] = D[i][j] >= t;
            if (perfect_matching(allowed, match)) {
                found = true;
                break;
            }
        }
        if (!found) throw std::logic_error("birkhoff: support has no perfect matching");
        Rational p = D[0][static_cast<std::size_t>(match[0])];
        for (std::size_t i = 1; i < d; ++i) p = std::min(p, D[i][static_cast<std::size_t>(match[i])]);
        for (std::size_t i = 0; i < d; ++i) D[i][static_cast<std::size_t>(match[i])] -= p;
        out.emplace_back(p, match);
    }
    return out;
}

// Caratheodory reduction: drop terms along affine dependencies until at most max_terms remain.
void reduce_terms(std::vector<std::pair<Rational, std::vector<int>>>& terms, std::size_t d, std::size_t max_terms) {
    while (terms.size() > max_terms) {
        const std::size_t m = terms.size();
        // Rows: d*d matrix entries plus the all-ones row; columns: terms.
        Matrix rows(d * d + 1, std::vector<Rational>(m, Rational(0)));
        for (std::size_t t = 0; t < m; ++t) {
            for (std::size_t i = 0; i < d; ++i) rows[i * d + static_cast<std::size_t>(terms[t].second[i])][t] = 1;
            rows[d * d][t] = 1;
        }
        auto ns = nullspace(rows, m);
        if (ns.empty()) throw std::logic_error("rado: no affine dependency among terms");
        auto& lam = ns.front();
        Rational alpha;
        bool have = false;
        for (std::size_t t = 0; t < m; ++t)
            if (lam[t] > 0) {
                Rational r = terms[t].first / lam[t];
                if (!have || r < alpha) {
                    alpha = r;
                    have = true;
                }
            }
        std::vector<std::pair<Rational, std::vector<int>>> next;
        for (std::size_t t = 0; t < m; ++t) {
            Rational p = terms[t].first - alpha * lam[t];
            if (p > 0) next.emplace_back(p, terms[t].second);
        }
        terms = std::move(next);
    }
}

}  // namespace

RadoCertificate rado_decompose(const SchmidtTuple& target, const SchmidtTuple& source) {
    const std::size_t d = source.size();
    if (target.size() != d) throw std::invalid_argument("rado_decompose: length mismatch");
    if (d == 0) throw std::invalid_argument("rado_decompose: empty tuples");
    if (source.total() != target.total())
        throw no_certificate_error("rado_decompose: totals differ", d - 1);
    std::size_t bad = first_violation(source.coeffs, target.coeffs);
    if (bad != d)
        throw no_certificate_error("rado_decompose: source does not majorize target at prefix " + std::to_string(bad + 1),
                                   bad);

    const auto& y = target.coeffs;
    std::vector<Rational> x = source.coeffs;
    Matrix D(d, std::vector<Rational>(d, Rational(0)));
    for (std::size_t i = 0; i < d; ++i) D[i][i] = 1;

    // T-transforms: k is the first index with x_k < y_k, j the last index before k with x_j > y_j.
    for (;;) {
        std::size_t k = 0;
        while (k < d && x[k] >= y[k]) ++k;
        if (k == d) break;
        std::size_t j = k;
        while (j > 0 && x[j - 1] == y[j - 1]) --j;
        if (j == 0) throw std::logic_error("rado_decompose: inconsistent T-transform step");
        --j;
        Rational delta = std::min(x[j] - y[j], y[k] - x[k]);
        Rational s = delta / (x[j] - x[k]);  // weight moved between j and k
        Matrix T(d, std::vector<Rational>(d, Rational(0)));
        for (std::size_t i = 0; i < d; ++i) T[i][i] = 1;
        T[j][j] = 1 - s;
        T[k][k] = 1 - s;
        T[j][k] = s;
        T[k][j] = s;
        Matrix N(d, std::vector<Rational>(d, Rational(0)));
        for (std::size_t r = 0; r < d; ++r)
            for (std::size_t m = 0; m < d; ++m) {
                if (T[r][m] == 0) continue;
                for (std::size_t c = 0; c < d; ++c)
                    if (D[m][c] != 0) N[r][c] += T[r][m] * D[m][c];
            }
        D = std::move(N);
        x[j] -= delta;
        x[k] += delta;
    }

    auto terms = birkhoff(D);
    reduce_terms(terms, d, d * d - 2 * d + 2);

    RadoCertificate cert;
    for (auto& [p, pi] : terms) {
        // (P x)_i = x_{pi(i)}, so sigma = pi^{-1}.
        Permutation sigma(d);
        for (std::size_t i = 0; i < d; ++i) sigma[static_cast<std::size_t>(pi[i])] = static_cast<int>(i);
        cert.terms.push_back({p, std::move(sigma)});
    }
    if (apply_certificate(cert, source.coeffs) != target.coeffs)
        throw std::logic_error("rado_decompose: certificate does not reproduce target");
    return cert;
}

SchmidtTuple from_decimals(const std::vector<std::string>& values) {
    std::vector<Rational> q;
    q.reserve(values.size());
    for (const auto& v : values) q.push_back(parse_rational(v));
    return SchmidtTuple(std::move(q));
}

}  // namespace mst
