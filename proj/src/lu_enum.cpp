#include <algorithm>
#include <atomic>
#include <map>
#include <mutex>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "mstate/bipartite_lu.hpp"
#include "mstate/errors.hpp"
#include "mstate/exact_linalg.hpp"
#include "mstate/exact_lp.hpp"
#include "mstate/symmetric.hpp"

namespace mst {

bool exponent_sums_match(const ExponentFamily& f) {
    std::vector<Rational> lhs, rhs;
    for (const auto& m : f.mu)
        for (const auto& l : f.lam) lhs.push_back(m + l);
    for (const auto& m : f.mu_bar)
        for (const auto& l : f.lam_bar) rhs.push_back(m + l);
    if (lhs.size() != rhs.size()) return false;
    std::sort(lhs.begin(), lhs.end());
    std::sort(rhs.begin(), rhs.end());
    return lhs == rhs;
}

bool exponents_valid(const ExponentFamily& f) {
    for (const auto* t : {&f.mu, &f.lam, &f.mu_bar, &f.lam_bar}) {
        if (t->empty() || t->front() != 0) return false;
        if (!std::is_sorted(t->begin(), t->end())) return false;
    }
    return exponent_sums_match(f);
}

Rational exponent_denominator(const ExponentFamily& f) {
    mpz_class l = 1;
    for (const auto* t : {&f.mu, &f.lam, &f.mu_bar, &f.lam_bar})
        for (const auto& e : *t) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), e.get_den_mpz_t());
    return Rational(l);
}

std::array<SchmidtTuple, 4> realize(const ExponentFamily& f, const Rational& a) {
    if (a <= 0) throw std::invalid_argument("realize: a must be positive");
    const Rational L = exponent_denominator(f);
    auto one = [&](const std::vector<Rational>& e) {
        std::vector<Rational> v;
        for (const auto& x : e) {
            Rational k = x * L;
            if (k < 0) throw std::invalid_argument("realize: negative exponent");
            v.push_back(rational_pow(a, static_cast<unsigned>(k.get_num().get_ui())));
        }
        return SchmidtTuple(std::move(v));
    };
    return {one(f.mu), one(f.lam), one(f.mu_bar), one(f.lam_bar)};
}

bool family_valid_at(const ExponentFamily& f, const std::vector<Rational>& as) {
    if (!exponent_sums_match(f)) return false;
    for (const auto& a : as) {
        auto t = realize(f, a);
        if (!multiset_equal(tensor(t[0], t[1]), tensor(t[2], t[3]))) return false;
    }
    return true;
}

namespace {

using Cell = std::pair<int, int>;

// Cell orders (rank -> cell) of all linear extensions, in backtracking order.
void extend(int rows, int cols, std::vector<int>& filled, std::vector<Cell>& order,
            std::vector<std::vector<Cell>>& out) {
    if (static_cast<int>(order.size()) == rows * cols) {
        out.push_back(order);
        return;
    }
    for (int k = 0; k < rows; ++k) {
        int l = filled[static_cast<std::size_t>(k)];
        if (l >= cols) continue;
        if (k > 0 && filled[static_cast<std::size_t>(k - 1)] <= l) continue;
        ++filled[static_cast<std::size_t>(k)];
        order.emplace_back(k, l);
        extend(rows, cols, filled, order, out);
        order.pop_back();
        --filled[static_cast<std::size_t>(k)];
    }
}

std::vector<std::vector<Cell>> cell_orders(int rows, int cols) {
    std::vector<std::vector<Cell>> out;
    std::vector<int> filled(static_cast<std::size_t>(rows), 0);
    std::vector<Cell> order;
    extend(rows, cols, filled, order, out);
    return out;
}

Tableau labels_of(const std::vector<Cell>& order, int cols) {
    Tableau t(order.size());
    for (std::size_t r = 0; r < order.size(); ++r)
        t[static_cast<std::size_t>(order[r].first * cols + order[r].second)] = static_cast<int>(r);
    return t;
}

std::vector<Cell> order_of(const Tableau& t, int cols) {
    std::vector<Cell> order(t.size());
    for (std::size_t idx = 0; idx < t.size(); ++idx)
        order[static_cast<std::size_t>(t[idx])] = {static_cast<int>(idx) / cols, static_cast<int>(idx) % cols};
    return order;
}

}  // namespace

std::vector<Tableau> linear_extensions(int rows, int cols) {
    if (rows < 1 || cols < 1) throw std::invalid_argument("linear_extensions: empty grid");
    std::vector<Tableau> out;
    for (const auto& o : cell_orders(rows, cols)) out.push_back(labels_of(o, cols));
    return out;
}

unsigned long long linear_extension_count(int rows, int cols) {
    if (rows < 1 || cols < 1) throw std::invalid_argument("linear_extension_count: empty grid");
    mpz_class num = 1, den = 1;
    for (int k = 2; k <= rows * cols; ++k) num *= k;
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) den *= (rows - i) + (cols - j) - 1;
    mpz_class q = num / den;
    if (!q.fits_ulong_p()) throw resource_error("linear_extension_count: count does not fit");
    return q.get_ui();
}

const char* to_string(LuClass c) {
    switch (c) {
        case LuClass::identity: return "identity";
        case LuClass::swap: return "swap";
        case LuClass::sub_swap: return "sub_swap";
        case LuClass::direct_sum: return "direct_sum";
        case LuClass::nontrivial: return "nontrivial";
    }
    return "?";
}

bool coupling_connected(const TableauPair& pair, int d_mu, int d_lam) {
    const std::size_t n = static_cast<std::size_t>(d_mu * d_lam);
    if (pair.t_in.size() != n || pair.t_out.size() != n) throw std::invalid_argument("coupling_connected: bad tableau size");
    auto in = order_of(pair.t_in, d_lam), out = order_of(pair.t_out, d_lam);
    std::vector<int> parent(static_cast<std::size_t>(2 * d_lam));
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
        return x;
    };
    for (std::size_t r = 0; r < n; ++r) {
        int a = find(in[r].second), b = find(d_lam + out[r].second);
        if (a != b) parent[static_cast<std::size_t>(a)] = b;
    }
    int root = find(0);
    for (int x = 1; x < 2 * d_lam; ++x)
        if (find(x) != root) return false;
    return true;
}

TableauPair canonical_pair(const ExponentFamily& f) {
    const int dm = static_cast<int>(f.mu.size()), dl = static_cast<int>(f.lam.size());
    if (static_cast<int>(f.mu_bar.size()) != dm || static_cast<int>(f.lam_bar.size()) != dl)
        throw std::invalid_argument("canonical_pair: sides have different shapes");
    auto rank = [&](const std::vector<Rational>& a, const std::vector<Rational>& b) {
        std::vector<int> idx(static_cast<std::size_t>(dm * dl));
        std::iota(idx.begin(), idx.end(), 0);
        std::stable_sort(idx.begin(), idx.end(), [&](int x, int y) {
            return a[static_cast<std::size_t>(x / dl)] + b[static_cast<std::size_t>(x % dl)] <
                   a[static_cast<std::size_t>(y / dl)] + b[static_cast<std::size_t>(y % dl)];
        });
        Tableau t(idx.size());
        for (std::size_t r = 0; r < idx.size(); ++r) t[static_cast<std::size_t>(idx[r])] = static_cast<int>(r);
        return t;
    };
    return {rank(f.mu, f.lam), rank(f.mu_bar, f.lam_bar)};
}

namespace {

using Multiset = std::vector<Rational>;  // sorted

Multiset minkowski(const Multiset& p, const Multiset& q) {
    Multiset out;
    for (const auto& a : p)
        for (const auto& b : q) out.push_back(a + b);
    std::sort(out.begin(), out.end());
    return out;
}

// Q with x = p + q as multisets, given p anchored at its minimum 0.
std::optional<Multiset> divide(const Multiset& x, const Multiset& p) {
    std::multiset<Rational> rest(x.begin(), x.end());
    Multiset q;
    while (!rest.empty()) {
        Rational base = *rest.begin();
        for (const auto& e : p) {
            auto it = rest.find(base + e);
            if (it == rest.end()) return std::nullopt;
            rest.erase(it);
        }
        q.push_back(base);
    }
    return q;
}

// All factorizations x = p + q with |p| = size, p containing x's minimum 0.
std::vector<std::pair<Multiset, Multiset>> factorizations(const Multiset& x, std::size_t size) {
    std::vector<std::pair<Multiset, Multiset>> out;
    const std::size_t n = x.size();
    if (size == 0 || n % size != 0) return out;
    std::set<Multiset> seen;
    std::vector<bool> pick(n - 1, false);
    std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(size - 1), true);
    do {
        Multiset p{x[0]};
        for (std::size_t i = 0; i + 1 < n; ++i)
            if (pick[i]) p.push_back(x[i + 1]);
        if (!seen.insert(p).second) continue;
        if (auto q = divide(x, p)) out.emplace_back(p, *q);
    } while (std::prev_permutation(pick.begin(), pick.end()));
    return out;
}

bool is_sub_swap(const ExponentFamily& f) {
    const std::size_t dm = f.mu.size(), dl = f.lam.size();
    for (std::size_t s = 2; s <= std::min(dm, dl); ++s) {
        if (dm % s || dl % s) continue;
        auto fm = factorizations(f.mu, s);
        auto fl = factorizations(f.lam, s);
        for (const auto& [p, q] : fm)
            for (const auto& [r, t] : fl) {
                if (minkowski(r, q) == f.mu_bar && minkowski(p, t) == f.lam_bar) return true;
            }
    }
    return false;
}

}  // namespace

bool has_block_embedding(const ExponentFamily& f) {
    const std::size_t dl = f.lam.size();
    std::set<Multiset> targets_seen;
    for (std::uint32_t a = 1; a < (1u << dl); a += 2) {  // blocks containing index 0
        if (a == (1u << dl) - 1) continue;
        Multiset part;
        std::size_t size = 0;
        for (std::size_t j = 0; j < dl; ++j)
            if (a >> j & 1u) {
                ++size;
                for (const auto& m : f.mu) part.push_back(m + f.lam[j]);
            }
        std::sort(part.begin(), part.end());
        if (!targets_seen.insert(part).second) continue;
        for (std::uint32_t b = 1; b < (1u << dl); ++b) {
            if (static_cast<std::size_t>(__builtin_popcount(b)) != size) continue;
            Multiset other;
            for (std::size_t l = 0; l < dl; ++l)
                if (b >> l & 1u)
                    for (const auto& m : f.mu_bar) other.push_back(m + f.lam_bar[l]);
            std::sort(other.begin(), other.end());
            if (other == part) return true;
        }
    }
    return false;
}

LuClass classify(const ExponentFamily& f, const std::vector<TableauPair>& pairs) {
    if (f.mu == f.mu_bar && f.lam == f.lam_bar) return LuClass::identity;
    if (f.mu.size() == f.lam.size() && f.mu == f.lam_bar && f.lam == f.mu_bar) return LuClass::swap;
    if (is_sub_swap(f)) return LuClass::sub_swap;
    const int dm = static_cast<int>(f.mu.size()), dl = static_cast<int>(f.lam.size());
    for (const auto& p : pairs)
        if (!coupling_connected(p, dm, dl)) return LuClass::direct_sum;
    return LuClass::nontrivial;
}

namespace {

constexpr int kMaxVars = 16;
using IVec = std::array<std::int64_t, kMaxVars>;

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("lu_enum: integer overflow");
    return r;
}

std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_sub_overflow(a, b, &r)) throw std::overflow_error("lu_enum: integer overflow");
    return r;
}

void normalize(IVec& v, int nv) {
    std::int64_t g = 0;
    for (int i = 0; i < nv; ++i) g = std::gcd(g, v[static_cast<std::size_t>(i)]);
    if (g > 1)
        for (int i = 0; i < nv; ++i) v[static_cast<std::size_t>(i)] /= g;
}

// Fully reduced integer row echelon form; pivots are positive.
struct Echelon {
    int nv = 0;
    int rank = 0;
    std::array<IVec, kMaxVars> rows{};
    std::array<int, kMaxVars> piv{};

    // v := v reduced against all rows. Returns whether the remainder is nonzero.
    bool reduce(IVec& v) const {
        for (int i = 0; i < rank; ++i) {
            const auto& row = rows[static_cast<std::size_t>(i)];
            const auto p = static_cast<std::size_t>(piv[static_cast<std::size_t>(i)]);
            std::int64_t c = v[p];
            if (c == 0) continue;
            std::int64_t a = row[p];
            std::int64_t g = std::gcd(a, c);
            std::int64_t fa = a / g, fc = c / g;
            for (int j = 0; j < nv; ++j) {
                auto jj = static_cast<std::size_t>(j);
                v[jj] = checked_sub(checked_mul(v[jj], fa), checked_mul(row[jj], fc));
            }
            normalize(v, nv);
        }
        for (int j = 0; j < nv; ++j)
            if (v[static_cast<std::size_t>(j)] != 0) return true;
        return false;
    }

    void insert(IVec v) {
        int p = 0;
        while (v[static_cast<std::size_t>(p)] == 0) ++p;
        if (v[static_cast<std::size_t>(p)] < 0)
            for (int j = 0; j < nv; ++j) v[static_cast<std::size_t>(j)] = -v[static_cast<std::size_t>(j)];
        const auto pp = static_cast<std::size_t>(p);
        for (int i = 0; i < rank; ++i) {
            auto& row = rows[static_cast<std::size_t>(i)];
            std::int64_t c = row[pp];
            if (c == 0) continue;
            std::int64_t g = std::gcd(v[pp], c);
            std::int64_t fa = v[pp] / g, fc = c / g;
            for (int j = 0; j < nv; ++j) {
                auto jj = static_cast<std::size_t>(j);
                row[jj] = checked_sub(checked_mul(row[jj], fa), checked_mul(v[jj], fc));
            }
            normalize(row, nv);
        }
        rows[static_cast<std::size_t>(rank)] = v;
        piv[static_cast<std::size_t>(rank)] = p;
        ++rank;
    }

    bool spans(const std::vector<IVec>& fs) const {
        for (auto f : fs)
            if (reduce(f)) return false;
        return true;
    }
};

// Variable layout: mu_1.., lam_1.., mu_bar_1.., lam_bar_1..; anchors are not variables.
struct Layout {
    int dm, dl, nv;
    int mu(int i) const { return i - 1; }
    int lam(int j) const { return (dm - 1) + j - 1; }
    int mub(int k) const { return (dm - 1) + (dl - 1) + k - 1; }
    int lamb(int l) const { return 2 * (dm - 1) + (dl - 1) + l - 1; }

    IVec in_cell(int i, int j) const {
        IVec v{};
        if (i > 0) v[static_cast<std::size_t>(mu(i))] += 1;
        if (j > 0) v[static_cast<std::size_t>(lam(j))] += 1;
        return v;
    }
    IVec out_cell(int k, int l) const {
        IVec v{};
        if (k > 0) v[static_cast<std::size_t>(mub(k))] += 1;
        if (l > 0) v[static_cast<std::size_t>(lamb(l))] += 1;
        return v;
    }

    ExponentFamily unpack(const std::vector<Rational>& v) const {
        ExponentFamily f;
        f.mu.push_back(0);
        f.lam.push_back(0);
        f.mu_bar.push_back(0);
        f.lam_bar.push_back(0);
        for (int i = 1; i < dm; ++i) f.mu.push_back(v[static_cast<std::size_t>(mu(i))]);
        for (int j = 1; j < dl; ++j) f.lam.push_back(v[static_cast<std::size_t>(lam(j))]);
        for (int k = 1; k < dm; ++k) f.mu_bar.push_back(v[static_cast<std::size_t>(mub(k))]);
        for (int l = 1; l < dl; ++l) f.lam_bar.push_back(v[static_cast<std::size_t>(lamb(l))]);
        return f;
    }

    std::vector<Rational> reversed(const std::vector<Rational>& v) const {
        std::vector<Rational> r(v.size());
        for (int i = 1; i < dm; ++i) {
            r[static_cast<std::size_t>(mu(i))] = v[static_cast<std::size_t>(mub(i))];
            r[static_cast<std::size_t>(mub(i))] = v[static_cast<std::size_t>(mu(i))];
        }
        for (int j = 1; j < dl; ++j) {
            r[static_cast<std::size_t>(lam(j))] = v[static_cast<std::size_t>(lamb(j))];
            r[static_cast<std::size_t>(lamb(j))] = v[static_cast<std::size_t>(lam(j))];
        }
        return r;
    }
};

std::vector<Rational> primitive(std::vector<Rational> v) {
    mpz_class l = 1, g = 0;
    for (const auto& x : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
    for (auto& x : v) {
        x *= l;
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_num_mpz_t());
    }
    if (g > 1)
        for (auto& x : v) x /= Rational(g);
    return v;
}

RMatrix subspace_key(RMatrix basis, std::size_t n) {
    rref(basis, n);
    for (auto& row : basis) row = primitive(row);
    return basis;
}

std::string key_string(const RMatrix& rows) {
    std::ostringstream os;
    os << rows.size() << '|';
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (i) os << ';';
        for (std::size_t j = 0; j < rows[i].size(); ++j) {
            if (j) os << ',';
            os << rows[i][j].get_str();
        }
    }
    return os.str();
}

template <class T>
T to_field(const Rational& q);
template <>
Rational to_field<Rational>(const Rational& q) {
    return q;
}
template <>
lp::Frac64 to_field<lp::Frac64>(const Rational& q) {
    if (!q.get_num().fits_slong_p() || !q.get_den().fits_slong_p()) throw lp::Frac64::overflow();
    return lp::Frac64::make(q.get_num().get_si(), q.get_den().get_si());
}
Rational from_field(const Rational& q) { return q; }
Rational from_field(const lp::Frac64& q) { return Rational(q.n) / Rational(q.d); }

// Maximize sum s subject to M y - s >= 0, 0 <= s <= 1, y free. Returns (y, s).
template <class T>
std::pair<std::vector<Rational>, std::vector<Rational>> positive_rows_lp(const RMatrix& M, std::size_t m) {
    const std::size_t R = M.size();
    // Columns: y+ (m), y- (m), s (R), w (R), t (R).
    const std::size_t n = 2 * m + 3 * R;
    std::vector<std::vector<T>> A;
    std::vector<T> b;
    for (std::size_t r = 0; r < R; ++r) {
        std::vector<T> row(n, T(0));
        for (std::size_t c = 0; c < m; ++c) {
            T v = to_field<T>(M[r][c]);
            row[c] = v;
            row[m + c] = -v;
        }
        row[2 * m + r] = T(-1);
        row[2 * m + R + r] = T(-1);
        A.push_back(std::move(row));
        b.push_back(T(0));
    }
    for (std::size_t r = 0; r < R; ++r) {
        std::vector<T> row(n, T(0));
        row[2 * m + r] = T(1);
        row[2 * m + 2 * R + r] = T(1);
        A.push_back(std::move(row));
        b.push_back(T(1));
    }
    std::vector<T> c(n, T(0));
    for (std::size_t r = 0; r < R; ++r) c[2 * m + r] = T(1);
    auto res = lp::solve_standard<T>(std::move(A), std::move(b), c);
    if (res.status != lp::Status::optimal) throw std::logic_error("lu_enum: cone LP did not reach an optimum");
    std::vector<Rational> y(m), s(R);
    for (std::size_t i = 0; i < m; ++i) y[i] = from_field(res.x[i]) - from_field(res.x[m + i]);
    for (std::size_t r = 0; r < R; ++r) s[r] = from_field(res.x[2 * m + r]);
    return {y, s};
}

std::pair<std::vector<Rational>, std::vector<Rational>> cone_lp(const RMatrix& M, std::size_t m) {
    try {
        return positive_rows_lp<lp::Frac64>(M, m);
    } catch (const lp::Frac64::overflow&) {
        return positive_rows_lp<Rational>(M, m);
    }
}

struct Candidate {
    std::vector<Rational> point;  // generic member, primitive integer, canonical orientation
    RMatrix basis;                // subspace key rows
    TableauPair pair;             // realizing pair in the same orientation
};

struct Found {
    Candidate rep;
    std::vector<TableauPair> pairs;
};

bool pair_less(const TableauPair& a, const TableauPair& b) {
    return std::tie(a.t_in, a.t_out) < std::tie(b.t_in, b.t_out);
}

class Enumerator {
public:
    Enumerator(int dm, int dl, const EnumOptions& opts) : L_{dm, dl, 2 * (dm - 1) + 2 * (dl - 1)}, opts_(opts) {
        for (int k = 1; k < dm; ++k) {
            IVec f{};
            f[static_cast<std::size_t>(L_.mub(k))] = 1;
            f[static_cast<std::size_t>(L_.mu(k))] = -1;
            identity_.push_back(f);
        }
        for (int l = 1; l < dl; ++l) {
            IVec f{};
            f[static_cast<std::size_t>(L_.lamb(l))] = 1;
            f[static_cast<std::size_t>(L_.lam(l))] = -1;
            identity_.push_back(f);
        }
        if (dm == dl) {
            for (int k = 1; k < dm; ++k) {
                IVec f{};
                f[static_cast<std::size_t>(L_.mub(k))] = 1;
                f[static_cast<std::size_t>(L_.lam(k))] = -1;
                swap_.push_back(f);
                IVec h{};
                h[static_cast<std::size_t>(L_.lamb(k))] = 1;
                h[static_cast<std::size_t>(L_.mu(k))] = -1;
                swap_.push_back(h);
            }
        }
    }

    void run_tin(const std::vector<Cell>& tin, std::map<std::string, Found>& found) {
        tin_ = &tin;
        found_ = &found;
        Echelon e;
        e.nv = L_.nv;
        std::vector<int> filled(static_cast<std::size_t>(L_.dm), 0);
        tout_.clear();
        dfs(e, filled);
    }

private:
    Layout L_;
    EnumOptions opts_;
    std::vector<IVec> identity_, swap_;
    const std::vector<Cell>* tin_ = nullptr;
    std::vector<Cell> tout_;
    std::map<std::string, Found>* found_ = nullptr;

    bool trivial_forced(const Echelon& e) const {
        if (opts_.include_trivial) return false;
        if (e.spans(identity_)) return true;
        if (!swap_.empty() && e.spans(swap_)) return true;
        return false;
    }

    void dfs(const Echelon& e, std::vector<int>& filled) {
        const std::size_t r = tout_.size();
        const std::size_t N = static_cast<std::size_t>(L_.dm * L_.dl);
        if (r == N) {
            leaf(e);
            return;
        }
        const Cell in = (*tin_)[r];
        for (int k = 0; k < L_.dm; ++k) {
            int l = filled[static_cast<std::size_t>(k)];
            if (l >= L_.dl) continue;
            if (k > 0 && filled[static_cast<std::size_t>(k - 1)] <= l) continue;
            IVec eq = L_.in_cell(in.first, in.second);
            IVec out = L_.out_cell(k, l);
            for (int j = 0; j < L_.nv; ++j) eq[static_cast<std::size_t>(j)] -= out[static_cast<std::size_t>(j)];
            ++filled[static_cast<std::size_t>(k)];
            tout_.emplace_back(k, l);
            if (e.reduce(eq)) {
                Echelon next = e;
                next.insert(eq);
                if (next.rank < L_.nv && !trivial_forced(next)) dfs(next, filled);
            } else {
                dfs(e, filled);
            }
            tout_.pop_back();
            --filled[static_cast<std::size_t>(k)];
        }
    }

    void leaf(const Echelon& e) {
        const std::size_t nv = static_cast<std::size_t>(L_.nv);
        RMatrix eqs;
        for (int i = 0; i < e.rank; ++i) {
            std::vector<Rational> row(nv);
            for (std::size_t j = 0; j < nv; ++j) row[j] = Rational(static_cast<long>(e.rows[static_cast<std::size_t>(i)][j]));
            eqs.push_back(std::move(row));
        }
        RMatrix N = nullspace(eqs, nv);
        const std::size_t m = N.size();
        if (m == 0) return;

        // Ordering rows along t_in: exponent(rank r+1) - exponent(rank r) >= 0.
        const auto& tin = *tin_;
        RMatrix GN;
        for (std::size_t r = 0; r + 1 < tin.size(); ++r) {
            IVec a = L_.in_cell(tin[r + 1].first, tin[r + 1].second);
            IVec b = L_.in_cell(tin[r].first, tin[r].second);
            std::vector<Rational> row(m, Rational(0));
            for (std::size_t c = 0; c < m; ++c)
                for (std::size_t j = 0; j < nv; ++j) {
                    auto g = a[j] - b[j];
                    if (g) row[c] += N[c][j] * static_cast<long>(g);
                }
            GN.push_back(std::move(row));
        }

        std::vector<Rational> y;
        std::vector<bool> implicit(GN.size(), false);
        if (m == 1) {
            bool pos = false, neg = false;
            for (const auto& row : GN) {
                if (row[0] > 0) pos = true;
                if (row[0] < 0) neg = true;
            }
            if (pos && neg) return;
            if (!pos && !neg) return;
            y = {Rational(pos ? 1 : -1)};
            for (std::size_t r = 0; r < GN.size(); ++r) implicit[r] = GN[r][0] == 0;
        } else {
            auto [ys, s] = cone_lp(GN, m);
            bool any = false;
            for (std::size_t r = 0; r < s.size(); ++r) {
                implicit[r] = s[r] == 0;
                if (!implicit[r]) any = true;
            }
            if (!any) return;
            y = std::move(ys);
        }

        // Family subspace inside the null space: implicit ordering rows become equalities.
        RMatrix imp;
        for (std::size_t r = 0; r < GN.size(); ++r)
            if (implicit[r]) imp.push_back(GN[r]);
        RMatrix ny = imp.empty() ? RMatrix{} : nullspace(imp, m);
        if (imp.empty()) {
            for (std::size_t c = 0; c < m; ++c) {
                std::vector<Rational> u(m, Rational(0));
                u[c] = 1;
                ny.push_back(std::move(u));
            }
        }
        auto lift = [&](const std::vector<Rational>& yy) {
            std::vector<Rational> v(nv, Rational(0));
            for (std::size_t c = 0; c < m; ++c)
                if (yy[c] != 0)
                    for (std::size_t j = 0; j < nv; ++j) v[j] += yy[c] * N[c][j];
            return v;
        };
        RMatrix basis;
        for (const auto& u : ny) basis.push_back(lift(u));
        std::vector<Rational> point = lift(y);

        if (basis.size() >= 2) {
            // Move off special subspaces: add a small combination of basis vectors with
            // distinct weights while keeping every non-implicit ordering row positive.
            std::vector<Rational> dir(nv, Rational(0));
            static const int weights[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53};
            RMatrix bk = subspace_key(basis, nv);
            for (std::size_t i = 0; i < bk.size(); ++i)
                for (std::size_t j = 0; j < nv; ++j) dir[j] += bk[i][j] * weights[i % 16];
            Rational eta = 1;
            for (std::size_t r = 0; r + 1 < tin.size(); ++r) {
                if (implicit[r]) continue;
                IVec a = L_.in_cell(tin[r + 1].first, tin[r + 1].second);
                IVec b = L_.in_cell(tin[r].first, tin[r].second);
                Rational gp = 0, gd = 0;
                for (std::size_t j = 0; j < nv; ++j) {
                    auto g = a[j] - b[j];
                    if (!g) continue;
                    gp += point[j] * static_cast<long>(g);
                    gd += dir[j] * static_cast<long>(g);
                }
                Rational bound = gp / (2 * (abs(gd) + 1));
                if (bound < eta) eta = bound;
            }
            eta /= 7;
            for (std::size_t j = 0; j < nv; ++j) point[j] += eta * dir[j];
        }
        point = primitive(point);

        TableauPair pair{labels_of(tin, L_.dl), labels_of(tout_, L_.dl)};
        RMatrix key_rows = basis.size() == 1 ? RMatrix{point} : subspace_key(basis, nv);

        // Orientation: the reversed transformation is the same family.
        auto rpoint = L_.reversed(point);
        bool flip;
        if (key_rows.size() == 1) {
            ExponentFamily f = L_.unpack(point);
            flip = std::tie(f.mu_bar, f.lam_bar) < std::tie(f.mu, f.lam);
        } else {
            RMatrix rb;
            for (const auto& row : key_rows) rb.push_back(L_.reversed(row));
            rb = subspace_key(rb, nv);
            flip = rb < key_rows;
            if (flip) key_rows = rb;
        }
        if (flip) {
            point = rpoint;
            if (key_rows.size() == 1) key_rows = RMatrix{point};
            std::swap(pair.t_in, pair.t_out);
        }
        std::string key = key_string(key_rows);
        auto it = found_->find(key);
        if (it == found_->end()) {
            found_->emplace(key, Found{Candidate{point, key_rows, pair}, {pair}});
        } else {
            it->second.pairs.push_back(pair);
            if (pair_less(pair, it->second.rep.pair)) it->second.rep = Candidate{point, key_rows, pair};
        }
    }
};

}  // namespace

std::vector<LuSolution> enumerate_solutions(int d_mu, int d_lam, const EnumOptions& opts) {
    if (d_mu < 2 || d_mu > d_lam) throw std::invalid_argument("enumerate_solutions: need 2 <= d_mu <= d_lam");
    if (d_mu * d_lam > 16) throw std::invalid_argument("enumerate_solutions: d_mu * d_lam must be at most 16");
    const unsigned long long count = linear_extension_count(d_mu, d_lam);
    if (count > max_tableau_pairs() / count)
        throw resource_error("enumerate_solutions: " + std::to_string(count) + "^2 tableau pairs exceed the cap");

    const auto tins = cell_orders(d_mu, d_lam);
    unsigned nthreads = opts.threads ? opts.threads : std::max(1u, std::thread::hardware_concurrency());
    nthreads = std::min<unsigned>(nthreads, static_cast<unsigned>(tins.size()));
    std::atomic<std::size_t> next{0};
    std::vector<std::map<std::string, Found>> local(nthreads);
    std::vector<std::exception_ptr> errors(nthreads);
    auto work = [&](unsigned w) {
        try {
            Enumerator en(d_mu, d_lam, opts);
            for (;;) {
                std::size_t i = next.fetch_add(1);
                if (i >= tins.size()) break;
                en.run_tin(tins[i], local[w]);
            }
        } catch (...) {
            errors[w] = std::current_exception();
        }
    };
    std::vector<std::thread> pool;
    for (unsigned w = 1; w < nthreads; ++w) pool.emplace_back(work, w);
    work(0);
    for (auto& t : pool) t.join();
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);

    std::map<std::string, Found> merged;
    for (auto& m : local)
        for (auto& [k, f] : m) {
            auto it = merged.find(k);
            if (it == merged.end()) {
                merged.emplace(k, std::move(f));
                continue;
            }
            auto& g = it->second;
            g.pairs.insert(g.pairs.end(), f.pairs.begin(), f.pairs.end());
            if (pair_less(f.rep.pair, g.rep.pair)) g.rep = std::move(f.rep);
        }

    const Layout L{d_mu, d_lam, 2 * (d_mu - 1) + 2 * (d_lam - 1)};
    const std::vector<Rational> checks{Rational(1, 2), Rational(1, 3), Rational(9, 10)};
    std::vector<LuSolution> out;
    for (auto& [key, f] : merged) {
        std::sort(f.pairs.begin(), f.pairs.end(), pair_less);
        // a pair and its reverse can land on the same orientation
        f.pairs.erase(std::unique(f.pairs.begin(), f.pairs.end(),
                                  [](const TableauPair& x, const TableauPair& y) {
                                      return x.t_in == y.t_in && x.t_out == y.t_out;
                                  }),
                      f.pairs.end());
        LuSolution s;
        s.key = key;
        s.integral = L.unpack(f.rep.point);
        if (!exponents_valid(s.integral) || !family_valid_at(s.integral, checks))
            throw std::logic_error("enumerate_solutions: family failed validation");
        s.family = s.integral;
        if (s.family.mu[1] > 0) {
            Rational scale = s.family.mu[1];
            for (auto* t : {&s.family.mu, &s.family.lam, &s.family.mu_bar, &s.family.lam_bar})
                for (auto& x : *t) x /= scale;
        }
        s.nullspace_dim = static_cast<int>(f.rep.basis.size());
        for (const auto& row : f.rep.basis) s.basis.push_back(L.unpack(row));
        s.tableaux = std::move(f.pairs);
        s.classification = classify(s.integral, s.tableaux);
        s.block_embedding = has_block_embedding(s.integral);
        if (d_mu == 2 && s.integral.mu[1] != 0) {
            Rational ratio = s.integral.mu_bar[1] / s.integral.mu[1];
            bool constant = true;
            for (const auto& b : s.basis)
                if (b.mu_bar[1] != ratio * b.mu[1]) constant = false;
            if (constant) s.a_bar_ratio = ratio;
        }
        if (!opts.include_trivial && (s.classification == LuClass::identity || s.classification == LuClass::swap))
            continue;
        if (!opts.include_direct_sum && s.classification == LuClass::direct_sum) continue;
        if (opts.max_denominator > 0 && exponent_denominator(s.family) > opts.max_denominator) continue;
        out.push_back(std::move(s));
    }
    return out;
}

}  // namespace mst
