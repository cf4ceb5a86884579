#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace mst {

using Rational = mpq_class;

// num/den in canonical form. Prefer this over Rational(num, den), which GMP leaves
// unreduced and which then compares unequal to its reduced value.
Rational ratio(long num, long den);

// Accepts "p/q", integers, and decimals with an optional exponent ("0.45", "-2.5e-3").
Rational parse_rational(const std::string& text);

// Canonical text: "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& q);

double to_double(const Rational& q);

// Closest rational with denominator <= max_den (continued fractions).
Rational rational_from_double(double x, long max_den);

bool is_perfect_square(const Rational& q);

// Exact square root; only valid when is_perfect_square(q).
Rational exact_sqrt(const Rational& q);

// sqrt(radicand), carried exactly. When the radicand is a rational square the
// root is stored in `root`.
struct SqrtRational {
    Rational radicand;
    bool is_square = false;
    Rational root;

    static SqrtRational of(const Rational& radicand);
    double value() const;
    std::string to_string() const;
    // Exact comparisons against a non-negative rational.
    bool geq(const Rational& x) const;
    bool leq(const Rational& x) const;
};

Rational rational_pow(const Rational& base, unsigned exponent);

std::vector<Rational> parse_rational_list(const std::string& csv);

}  // namespace mst
