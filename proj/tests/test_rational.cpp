#include <doctest.h>

#include <cmath>
#include <random>
#include <stdexcept>

#include "mstate/rational.hpp"
#include "support.hpp"

using namespace mst;

TEST_CASE("ratio reduces to canonical form") {
    CHECK(ratio(5, 10) == Rational(1, 2));
    CHECK(ratio(-4, -6) == Rational(2, 3));
    CHECK(ratio(3, -9) == Rational(-1, 3));
    CHECK(to_string(ratio(20, 5)) == "4");
    CHECK_THROWS_AS(ratio(1, 0), std::invalid_argument);
}

TEST_CASE("parse_rational accepts fractions, integers and decimals") {
    CHECK(parse_rational("3/4") == Rational(3, 4));
    CHECK(parse_rational(" 6/8 ") == Rational(3, 4));
    CHECK(parse_rational("7") == 7);
    CHECK(parse_rational("0.45") == Rational(9, 20));
    CHECK(parse_rational("-2.5e-3") == Rational(-1, 400));
    CHECK(parse_rational("1e2") == 100);
    CHECK(parse_rational(".5") == Rational(1, 2));
    CHECK(to_string(parse_rational("0.414")) == "207/500");
}

TEST_CASE("parse_rational rejects malformed text") {
    for (const char* bad : {"", "abc", "1/0", "1.2.3", "--1", "1e", "/"})
        CHECK_THROWS_AS(parse_rational(bad), std::invalid_argument);
}

TEST_CASE("parse_rational_list splits on commas") {
    auto v = parse_rational_list("1/2, 0.25,1/4");
    REQUIRE(v.size() == 3);
    CHECK(v[0] == Rational(1, 2));
    CHECK(v[1] == v[2]);
}

TEST_CASE("rational_from_double finds small denominators") {
    CHECK(rational_from_double(0.333333333333, 100) == Rational(1, 3));
    CHECK(rational_from_double(-0.75, 10) == Rational(-3, 4));
    CHECK(rational_from_double(M_PI, 1000) == Rational(355, 113));
    CHECK(rational_from_double(2.0, 5) == 2);
    CHECK_THROWS_AS(rational_from_double(NAN, 10), std::invalid_argument);
    CHECK_THROWS_AS(rational_from_double(0.5, 0), std::invalid_argument);
}

TEST_CASE("rational_from_double stays within 1/den^2 of the input") {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> u(-3, 3);
    for (int t = 0; t < 200; ++t) {
        const double x = u(rng);
        const long den = 1 + static_cast<long>(rng() % 500);
        Rational r = rational_from_double(x, den);
        CHECK(r.get_den() <= den);
        CHECK(std::fabs(r.get_d() - x) <= 1.0 / static_cast<double>(den) + 1e-12);
        CHECK(r == ratio(r.get_num().get_si(), r.get_den().get_si()));
    }
}

TEST_CASE("exact square roots") {
    CHECK(is_perfect_square(Rational(9, 16)));
    CHECK_FALSE(is_perfect_square(Rational(1, 2)));
    CHECK_FALSE(is_perfect_square(Rational(-1)));
    CHECK(exact_sqrt(Rational(9, 16)) == Rational(3, 4));
    CHECK_THROWS_AS(exact_sqrt(Rational(2)), std::invalid_argument);
}

TEST_CASE("SqrtRational compares exactly") {
    auto s = SqrtRational::of(Rational(1, 2));
    CHECK_FALSE(s.is_square);
    CHECK(s.value() == doctest::Approx(std::sqrt(0.5)));
    CHECK(s.geq(Rational(7, 10)));
    CHECK_FALSE(s.geq(Rational(71, 100)));
    CHECK(s.leq(Rational(71, 100)));
    auto t = SqrtRational::of(Rational(1, 4));
    CHECK(t.is_square);
    CHECK(t.root == Rational(1, 2));
    CHECK(t.geq(Rational(1, 2)));
    CHECK(t.leq(Rational(1, 2)));
}

TEST_CASE("rational_pow") {
    CHECK(rational_pow(Rational(2, 3), 3) == Rational(8, 27));
    CHECK(rational_pow(Rational(5), 0) == 1);
}
