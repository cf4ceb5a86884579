#pragma once

#include <algorithm>
#include <random>
#include <vector>

#include "mstate/rational.hpp"
#include "mstate/schmidt.hpp"

namespace test {

using mst::Rational;

inline Rational q(long n, long d = 1) { return mst::ratio(n, d); }

inline std::vector<Rational> qs(std::initializer_list<std::pair<long, long>> xs) {
    std::vector<Rational> out;
    for (auto [n, d] : xs) out.push_back(q(n, d));
    return out;
}

// d positive entries with denominator den summing to 1.
inline std::vector<Rational> random_simplex(std::mt19937_64& rng, std::size_t d, long den) {
    std::uniform_int_distribution<long> cut(1, den - 1);
    std::vector<long> cuts;
    while (cuts.size() + 1 < d) {
        long c = cut(rng);
        if (std::find(cuts.begin(), cuts.end(), c) == cuts.end()) cuts.push_back(c);
    }
    std::sort(cuts.begin(), cuts.end());
    std::vector<Rational> out;
    long prev = 0;
    for (long c : cuts) {
        out.push_back(q(c - prev, den));
        prev = c;
    }
    out.push_back(q(den - prev, den));
    return out;
}

inline mst::Permutation random_perm(std::mt19937_64& rng, std::size_t d) {
    mst::Permutation p = mst::identity_permutation(d);
    std::shuffle(p.begin(), p.end(), rng);
    return p;
}

// Prefix-sum majorization on descending-sorted copies; independent of the library.
inline bool majorizes_oracle(std::vector<Rational> a, std::vector<Rational> b) {
    std::sort(a.rbegin(), a.rend());
    std::sort(b.rbegin(), b.rend());
    Rational sa = 0, sb = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        sa += a[i];
        sb += b[i];
        if (sa < sb) return false;
    }
    return sa == sb;
}

inline std::vector<Rational> kron_oracle(const std::vector<Rational>& a, const std::vector<Rational>& b) {
    std::vector<Rational> out;
    for (const auto& x : a)
        for (const auto& y : b) out.push_back(x * y);
    return out;
}

}  // namespace test
