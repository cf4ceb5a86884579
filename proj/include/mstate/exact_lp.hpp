#pragma once

// Dense two-phase simplex with Bland's rule over an exact field type.
// Used for small feasibility problems (restricted Rado decisions, cone analysis).

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace mst::lp {

// int64 fraction that throws on overflow; the caller retries with GMP rationals.
struct Frac64 {
    std::int64_t n = 0, d = 1;

    struct overflow : std::overflow_error {
        overflow() : std::overflow_error("Frac64 overflow") {}
    };

    Frac64() = default;
    Frac64(std::int64_t v) : n(v), d(1) {}  // NOLINT(google-explicit-constructor)

    static Frac64 make(__int128 num, __int128 den) {
        if (den == 0) throw std::domain_error("division by zero");
        if (den < 0) {
            num = -num;
            den = -den;
        }
        __int128 a = num < 0 ? -num : num, b = den;
        while (b) {
            __int128 t = a % b;
            a = b;
            b = t;
        }
        if (a > 1) {
            num /= a;
            den /= a;
        }
        constexpr __int128 lim = static_cast<__int128>(INT64_MAX);
        if (num > lim || num < -lim || den > lim) throw overflow();
        Frac64 f;
        f.n = static_cast<std::int64_t>(num);
        f.d = static_cast<std::int64_t>(den);
        return f;
    }

    friend Frac64 operator+(const Frac64& a, const Frac64& b) {
        return make(static_cast<__int128>(a.n) * b.d + static_cast<__int128>(b.n) * a.d,
                    static_cast<__int128>(a.d) * b.d);
    }
    friend Frac64 operator-(const Frac64& a, const Frac64& b) {
        return make(static_cast<__int128>(a.n) * b.d - static_cast<__int128>(b.n) * a.d,
                    static_cast<__int128>(a.d) * b.d);
    }
    friend Frac64 operator*(const Frac64& a, const Frac64& b) {
        return make(static_cast<__int128>(a.n) * b.n, static_cast<__int128>(a.d) * b.d);
    }
    friend Frac64 operator/(const Frac64& a, const Frac64& b) {
        return make(static_cast<__int128>(a.n) * b.d, static_cast<__int128>(a.d) * b.n);
    }
    Frac64 operator-() const {
        Frac64 f = *this;
        f.n = -f.n;
        return f;
    }
    Frac64& operator+=(const Frac64& o) { return *this = *this + o; }
    Frac64& operator-=(const Frac64& o) { return *this = *this - o; }
    friend bool operator==(const Frac64& a, const Frac64& b) { return a.n == b.n && a.d == b.d; }
    friend bool operator!=(const Frac64& a, const Frac64& b) { return !(a == b); }
    friend bool operator<(const Frac64& a, const Frac64& b) {
        return static_cast<__int128>(a.n) * b.d < static_cast<__int128>(b.n) * a.d;
    }
    friend bool operator>(const Frac64& a, const Frac64& b) { return b < a; }
    friend bool operator<=(const Frac64& a, const Frac64& b) { return !(b < a); }
    friend bool operator>=(const Frac64& a, const Frac64& b) { return !(a < b); }
};

enum class Status { optimal, infeasible, unbounded };

template <class T>
struct Result {
    Status status = Status::infeasible;
    std::vector<T> x;
    T value{};
};

// maximize c.x subject to A x = b, x >= 0.
template <class T>
Result<T> solve_standard(std::vector<std::vector<T>> A, std::vector<T> b, const std::vector<T>& c) {
    const std::size_t m = A.size();
    const std::size_t n = c.size();
    for (auto& row : A)
        if (row.size() != n) throw std::invalid_argument("lp: row width mismatch");
    if (b.size() != m) throw std::invalid_argument("lp: rhs size mismatch");
    const T zero(0);
    for (std::size_t i = 0; i < m; ++i)
        if (b[i] < zero) {
            for (auto& v : A[i]) v = -v;
            b[i] = -b[i];
        }

    // Columns: n structural, m artificial, then rhs.
    const std::size_t W = n + m;
    std::vector<std::vector<T>> tab(m, std::vector<T>(W + 1, zero));
    std::vector<std::size_t> basis(m);
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < n; ++j) tab[i][j] = A[i][j];
        tab[i][n + i] = T(1);
        tab[i][W] = b[i];
        basis[i] = n + i;
    }
    std::vector<bool> active(W, true);

    auto pivot = [&](std::size_t r, std::size_t col) {
        T pv = tab[r][col];
        for (auto& v : tab[r])
            if (v != zero) v = v / pv;
        for (std::size_t i = 0; i < tab.size(); ++i) {
            if (i == r || tab[i][col] == zero) continue;
            T f = tab[i][col];
            for (std::size_t j = 0; j <= W; ++j)
                if (tab[r][j] != zero) tab[i][j] -= f * tab[r][j];
        }
        basis[r] = col;
    };

    // Returns false when unbounded.
    auto run = [&](const std::vector<T>& cost) {
        for (;;) {
            std::size_t enter = W;
            for (std::size_t j = 0; j < W && enter == W; ++j) {
                if (!active[j]) continue;
                bool basic = false;
                for (auto bv : basis)
                    if (bv == j) basic = true;
                if (basic) continue;
                T rc = cost[j];
                for (std::size_t i = 0; i < tab.size(); ++i)
                    if (tab[i][j] != zero && cost[basis[i]] != zero) rc -= cost[basis[i]] * tab[i][j];
                if (rc > zero) enter = j;
            }
            if (enter == W) return true;
            std::size_t leave = tab.size();
            T best{};
            for (std::size_t i = 0; i < tab.size(); ++i) {
                if (!(tab[i][enter] > zero)) continue;
                T ratio = tab[i][W] / tab[i][enter];
                if (leave == tab.size() || ratio < best || (ratio == best && basis[i] < basis[leave])) {
                    leave = i;
                    best = ratio;
                }
            }
            if (leave == tab.size()) return false;
            pivot(leave, enter);
        }
    };

    Result<T> res;
    std::vector<T> phase1(W, zero);
    for (std::size_t i = 0; i < m; ++i) phase1[n + i] = T(-1);
    run(phase1);
    for (std::size_t i = 0; i < tab.size(); ++i)
        if (basis[i] >= n && tab[i][W] != zero) {
            res.status = Status::infeasible;
            return res;
        }
    // Drive remaining artificials out of the basis; drop redundant rows.
    for (std::size_t i = 0; i < tab.size();) {
        if (basis[i] < n) {
            ++i;
            continue;
        }
        std::size_t col = n;
        for (std::size_t j = 0; j < n; ++j)
            if (tab[i][j] != zero) {
                col = j;
                break;
            }
        if (col == n) {
            tab.erase(tab.begin() + static_cast<std::ptrdiff_t>(i));
            basis.erase(basis.begin() + static_cast<std::ptrdiff_t>(i));
            continue;
        }
        pivot(i, col);
        ++i;
    }
    for (std::size_t j = n; j < W; ++j) active[j] = false;

    std::vector<T> cost(W, zero);
    for (std::size_t j = 0; j < n; ++j) cost[j] = c[j];
    if (!run(cost)) {
        res.status = Status::unbounded;
        return res;
    }
    res.status = Status::optimal;
    res.x.assign(n, zero);
    for (std::size_t i = 0; i < tab.size(); ++i)
        if (basis[i] < n) res.x[basis[i]] = tab[i][W];
    res.value = zero;
    for (std::size_t j = 0; j < n; ++j)
        if (c[j] != zero) res.value += c[j] * res.x[j];
    return res;
}

}  // namespace mst::lp
