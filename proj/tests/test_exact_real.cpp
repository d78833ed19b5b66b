#include <doctest.h>

#include <boost/multiprecision/cpp_bin_float.hpp>

#include "cfkit/cfe.hpp"
#include "cfkit/exact_real.hpp"
#include "helpers.hpp"

using namespace cfkit;
using testutil::golden;
using testutil::rand_long;

TEST_CASE("rational arithmetic is exact and reduced") {
    ExactReal a = ExactReal::rational(1, 3);
    ExactReal b = ExactReal::rational(1, 6);
    CHECK(a + b == ExactReal::rational(1, 2));
    CHECK((a + b).numerator() == 1);
    CHECK((a + b).denominator() == 2);
    CHECK(ExactReal::rational(2, 4) == ExactReal::rational(1, 2));
}

TEST_CASE("sqrt(d) * sqrt(d) collapses to an integer") {
    ExactReal s5 = ExactReal::sqrt_of(5);
    CHECK(s5 * s5 == ExactReal(5));
    CHECK((s5 * s5).is_rational());
}

TEST_CASE("reciprocal of the golden base") {
    ExactReal g = golden(); // (-1+sqrt(5))/2
    ExactReal r = g.reciprocal();
    CHECK(r * g == ExactReal(1));
    CHECK(r == ExactReal::quadratic(Rat(1, 2), Rat(1, 2), 5)); // (1+sqrt(5))/2
}

TEST_CASE("floor, ceil_minus_one and frac") {
    CHECK(ExactReal::quadratic(Rat(1, 2), Rat(1, 2), 5).floor() == 1); // (1+sqrt(5))/2
    CHECK(ExactReal(3).ceil_minus_one() == 2);
    CHECK(ExactReal::rational(9, 4).frac() == ExactReal::rational(1, 4));
    CHECK(ExactReal::rational(-9, 4).floor() == -3);
    CHECK(golden().floor() == 0);
    CHECK((-golden()).floor() == -1);
}

TEST_CASE("division by zero and incompatible fields are errors") {
    CHECK_THROWS_AS(ExactReal(1) / ExactReal(0), DivisionByZero);
    CHECK_THROWS_AS(ExactReal(0).reciprocal(), DivisionByZero);
    CHECK_THROWS_AS(ExactReal::sqrt_of(2) + ExactReal::sqrt_of(3), IncompatibleFields);
}

TEST_CASE("quadratic normalization collapses b = 0 and square radicands") {
    CHECK(ExactReal::quadratic(1, 0, 5).is_rational());
    CHECK(ExactReal::quadratic(0, 1, 9) == ExactReal(3));
    CHECK(ExactReal::quadratic(0, 1, 8) == ExactReal(2) * ExactReal::sqrt_of(2));
    CHECK(ExactReal::sqrt_of(12).radicand() == 3); // 2 sqrt(3)
}

TEST_CASE("extended Gauss maps") {
    CHECK(gauss_a1(ExactReal(0)).is_infinite());
    CHECK(gauss_t1(ExactReal(0)) == ExactReal(0));
    CHECK(gauss_t1(ExactReal::rational(1, 3)) == ExactReal(1));
    CHECK(gauss_a1(ExactReal::rational(1, 3)) == ExtDigit(Int(2)));
    CHECK(gauss_a1(ExactReal::rational(2, 5)) == ExtDigit(Int(2)));
    CHECK(gauss_t1(ExactReal::rational(2, 5)) == ExactReal::rational(1, 2));
    CHECK(gauss_t1(ExactReal(1)) == ExactReal(0));
    CHECK(gauss_a1(ExactReal(1)) == ExtDigit(Int(1)));
    CHECK_THROWS_AS(gauss_t1(ExactReal(2)), DomainError);
    CHECK_THROWS_AS(gauss_a1(-ExactReal::rational(1, 2)), DomainError);
}

TEST_CASE("floor + frac reassembles the value") {
    for (int i = 0; i < 500; ++i) {
        long num = rand_long(-5000, 5000);
        long den = rand_long(1, 200);
        ExactReal x = ExactReal::rational(num, den);
        if (i % 2) x = x + ExactReal::sqrt_of(2 + (i % 7));
        ExactReal f = x.frac();
        CHECK(f.sign() >= 0);
        CHECK(f < ExactReal(1));
        CHECK(ExactReal(x.floor()) + f == x);
    }
}

TEST_CASE("text form round-trips exactly") {
    CHECK(ExactReal::parse("9/4").str() == "9/4");
    CHECK(ExactReal::parse("5").str() == "5");
    CHECK(ExactReal::parse("(-1+1*sqrt(5))/2") == golden());
    CHECK(ExactReal::parse("sqrt(2)") == ExactReal::sqrt_of(2));
    CHECK_THROWS_AS(ExactReal::parse("1/0"), DivisionByZero);
    CHECK_THROWS_AS(ExactReal::parse("abc"), ParseError);
    for (int i = 0; i < 500; ++i) {
        ExactReal x = ExactReal::rational(rand_long(-10000, 10000), rand_long(1, 999));
        if (i % 3 == 0)
            x = x + ExactReal::quadratic(0, Rat(rand_long(-20, 20), rand_long(1, 30)), 2 + (i % 13));
        CHECK(ExactReal::parse(x.str()) == x);
    }
}

TEST_CASE("quadratic sign agrees with a 256-bit float evaluation") {
    using Big = boost::multiprecision::number<
        boost::multiprecision::backends::cpp_bin_float<256, boost::multiprecision::digit_base_2>>;
    for (int i = 0; i < 10000; ++i) {
        Rat a(rand_long(-1000, 1000), rand_long(1, 100));
        Rat b(rand_long(-1000, 1000), rand_long(1, 100));
        long d = 2 + (i % 97);
        ExactReal x = ExactReal::quadratic(a, b, d);
        Big approx = Big(numerator(a)) / Big(denominator(a)) +
                     Big(numerator(b)) / Big(denominator(b)) * sqrt(Big(d));
        int float_sign = approx == 0 ? 0 : (approx > 0 ? 1 : -1);
        CHECK(x.sign() == float_sign);
    }
}
