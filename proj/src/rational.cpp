#include "mstate/rational.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace mst {

namespace {

bool all_digits(const std::string& s) {
    if (s.empty()) return false;
    for (char c : s)
        if (c < '0' || c > '9') return false;
    return true;
}

std::string trim(const std::string& s) {
    auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

Rational parse_decimal(std::string s) {
    bool neg = false;
    if (!s.empty() && (s[0] == '+' || s[0] == '-')) {
        neg = s[0] == '-';
        s = s.substr(1);
    }
    long exp10 = 0;
    auto epos = s.find_first_of("eE");
    if (epos != std::string::npos) {
        std::string e = s.substr(epos + 1);
        s = s.substr(0, epos);
        bool eneg = false;
        if (!e.empty() && (e[0] == '+' || e[0] == '-')) {
            eneg = e[0] == '-';
            e = e.substr(1);
        }
        if (!all_digits(e) || e.size() > 6) throw std::invalid_argument("bad exponent in number");
        exp10 = std::stol(e) * (eneg ? -1 : 1);
    }
    std::string intpart = s, frac;
    auto dot = s.find('.');
    if (dot != std::string::npos) {
        intpart = s.substr(0, dot);
        frac = s.substr(dot + 1);
    }
    if (intpart.empty() && frac.empty()) throw std::invalid_argument("not a number");
    if ((!intpart.empty() && !all_digits(intpart)) || (!frac.empty() && !all_digits(frac)))
        throw std::invalid_argument("not a number");
    std::string digits = intpart + frac;
    exp10 -= static_cast<long>(frac.size());
    mpz_class num(digits.empty() ? "0" : digits, 10);
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(std::labs(exp10)));
    Rational q;
    if (exp10 >= 0)
        q = Rational(num * scale);
    else
        q = Rational(num, scale);
    q.canonicalize();
    return neg ? Rational(-q) : q;
}

}  // namespace

Rational ratio(long num, long den) {
    if (den == 0) throw std::invalid_argument("ratio: zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

Rational parse_rational(const std::string& raw) {
    std::string s = trim(raw);
    if (s.empty()) throw std::invalid_argument("empty number");
    auto slash = s.find('/');
    if (slash != std::string::npos) {
        Rational n = parse_decimal(trim(s.substr(0, slash)));
        Rational d = parse_decimal(trim(s.substr(slash + 1)));
        if (d == 0) throw std::invalid_argument("zero denominator in '" + s + "'");
        Rational q = n / d;
        q.canonicalize();
        return q;
    }
    return parse_decimal(s);
}

std::string to_string(const Rational& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

double to_double(const Rational& q) { return q.get_d(); }

Rational rational_from_double(double x, long max_den) {
    if (!std::isfinite(x)) throw std::invalid_argument("non-finite value");
    if (max_den < 1) throw std::invalid_argument("max_den must be positive");
    bool neg = x < 0;
    double v = std::fabs(x);
    // Convergents h/k of the continued fraction, stopping at the denominator cap.
    mpz_class h0 = 0, h1 = 1, k0 = 1, k1 = 0;
    double r = v;
    for (int it = 0; it < 64; ++it) {
        double a = std::floor(r);
        mpz_class ai(a);
        mpz_class h2 = ai * h1 + h0, k2 = ai * k1 + k0;
        if (k2 > max_den) {
            // Best semiconvergent within the cap.
            mpz_class t = (mpz_class(max_den) - k0) / k1;
            mpz_class hs = t * h1 + h0, ks = t * k1 + k0;
            Rational c1(h1, k1), c2(hs, ks);
            c1.canonicalize();
            c2.canonicalize();
            Rational target(v);  // exact binary value of the double
            Rational best = (abs(c2 - target) < abs(c1 - target)) ? c2 : c1;
            best.canonicalize();
            return neg ? Rational(-best) : best;
        }
        h0 = h1;
        h1 = h2;
        k0 = k1;
        k1 = k2;
        double frac = r - a;
        if (frac < 1e-15) break;
        r = 1.0 / frac;
    }
    Rational q(h1, k1);
    q.canonicalize();
    return neg ? Rational(-q) : q;
}

bool is_perfect_square(const Rational& q) {
    if (q < 0) return false;
    return mpz_perfect_square_p(q.get_num().get_mpz_t()) && mpz_perfect_square_p(q.get_den().get_mpz_t());
}

Rational exact_sqrt(const Rational& q) {
    if (!is_perfect_square(q)) throw std::invalid_argument("not a rational square");
    mpz_class n, d;
    mpz_sqrt(n.get_mpz_t(), q.get_num().get_mpz_t());
    mpz_sqrt(d.get_mpz_t(), q.get_den().get_mpz_t());
    Rational r(n, d);
    r.canonicalize();
    return r;
}

SqrtRational SqrtRational::of(const Rational& radicand) {
    if (radicand < 0) throw std::invalid_argument("negative radicand");
    SqrtRational s;
    s.radicand = radicand;
    s.is_square = is_perfect_square(radicand);
    if (s.is_square) s.root = exact_sqrt(radicand);
    return s;
}

double SqrtRational::value() const { return is_square ? root.get_d() : std::sqrt(radicand.get_d()); }

std::string SqrtRational::to_string() const {
    if (is_square) return mst::to_string(root);
    return "sqrt(" + mst::to_string(radicand) + ")";
}

bool SqrtRational::geq(const Rational& x) const {
    if (x <= 0) return true;
    return radicand >= x * x;
}

bool SqrtRational::leq(const Rational& x) const {
    if (x < 0) return false;
    return radicand <= x * x;
}

Rational rational_pow(const Rational& base, unsigned exponent) {
    mpz_class n, d;
    mpz_pow_ui(n.get_mpz_t(), base.get_num().get_mpz_t(), exponent);
    mpz_pow_ui(d.get_mpz_t(), base.get_den().get_mpz_t(), exponent);
    Rational r(n, d);
    r.canonicalize();
    return r;
}

std::vector<Rational> parse_rational_list(const std::string& csv) {
    std::vector<Rational> out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(parse_rational(item));
    if (out.empty()) throw std::invalid_argument("empty list");
    return out;
}

}  // namespace mst
