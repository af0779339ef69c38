#include <doctest.h>

#include "geomexp/rational.hpp"

using namespace geomexp;

TEST_CASE("rational parsing round trips") {
    CHECK(parse_rational("3/4") == Rational(3, 4));
    CHECK(parse_rational("-7") == Rational(-7));
    CHECK(parse_rational("0.25") == Rational(1, 4));
    CHECK(parse_rational("-1.5") == Rational(-3, 2));
    CHECK(rational_to_string(Rational(6, 4)) == "3/2");
    CHECK(rational_to_string(Rational(8, 4)) == "2");
    CHECK_THROWS(parse_rational("1/0"));
    CHECK_THROWS(parse_rational(""));
}

TEST_CASE("doubles convert exactly") {
    CHECK(rational_from_double(0.5) == Rational(1, 2));
    CHECK(rational_from_double(-0.75) == Rational(-3, 4));
    CHECK(rational_from_double(3.0) == Rational(3));
    double x = 0.1;
    Rational r = rational_from_double(x);
    CHECK(rational_to_double(r) == x);
}

TEST_CASE("cross_sign handles 128-bit magnitudes") {
    Int128 big = (Int128(1) << 120);
    CHECK(cross_sign(big, Int128(1), Int128(1), big) == 1);   // big*big - 1 > 0
    CHECK(cross_sign(Int128(1), big, big, Int128(1)) == -1);  // 1 - big*big < 0
    CHECK(cross_sign(big, big, big, big) == 0);
}

TEST_CASE("binomial") {
    CHECK(binomial(6, 3) == 20);
    CHECK(binomial(60, 3) == 34220);
    CHECK(binomial(3, 5) == 0);
}
