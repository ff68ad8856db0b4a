#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ideals/errors.hpp"
#include "ideals/rational.hpp"

using namespace ideals;

TEST_CASE("floor and ceil") {
  CHECK(rational_floor(Rational(7, 2)) == 3);
  CHECK(rational_floor(Rational(-7, 2)) == -4);
  CHECK(rational_floor(Rational(4)) == 4);
  CHECK(rational_ceil(Rational(7, 2)) == 4);
  CHECK(rational_ceil(Rational(-7, 2)) == -3);
  CHECK(rational_ceil(Rational(0)) == 0);
}

TEST_CASE("parse_rational") {
  CHECK(parse_rational("3/6") == Rational(1, 2));
  CHECK(parse_rational(" -4 ") == Rational(-4));
  CHECK(parse_rational("-3/6") == Rational(-1, 2));
  CHECK(parse_rational("314159/100000") == Rational(314159, 100000));
  CHECK_THROWS_AS(parse_rational(""), ParseError);
  CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
  CHECK_THROWS_AS(parse_rational("a/b"), ParseError);
  CHECK_THROWS_AS(parse_rational("1.5"), ParseError);
}

TEST_CASE("exact rendering round-trips") {
  for (const char* s : {"0", "1", "-7", "5/6", "-22/7", "144/25"}) {
    Rational r = parse_rational(s);
    CHECK(to_string(r) == s);
    CHECK(parse_rational(to_string(r)) == r);
  }
}

TEST_CASE("decimal rendering, 12 significant digits") {
  CHECK(to_decimal_string(Rational(0)) == "0");
  CHECK(to_decimal_string(Rational(5, 7)) == "0.714285714286");
  CHECK(to_decimal_string(Rational(144, 25)) == "5.76000000000");
  CHECK(to_decimal_string(Rational(1, 3)) == "0.333333333333");
  CHECK(to_decimal_string(Rational(2, 3)) == "0.666666666667");
  CHECK(to_decimal_string(Rational(-5, 6)) == "-0.833333333333");
  CHECK(to_decimal_string(Rational(1000000)) == "1000000.00000");
  Int big{"1000000000000000"};
  CHECK(to_decimal_string(Rational(big)) == "1000000000000000");
}

TEST_CASE("decimal rendering rounds half to even") {
  CHECK(to_decimal_string(Rational(25, 10), 1) == "2");
  CHECK(to_decimal_string(Rational(35, 10), 1) == "4");
  CHECK(to_decimal_string(Rational(125, 100), 2) == "1.2");
  CHECK(to_decimal_string(Rational(135, 100), 2) == "1.4");
  // carry into a new digit: 0.999... rounds upward
  CHECK(to_decimal_string(Rational(9995, 10000), 3) == "1.00");
}

TEST_CASE("rational_pow") {
  CHECK(rational_pow(Rational(2, 3), 3) == Rational(8, 27));
  CHECK(rational_pow(Rational(5), 0) == Rational(1));
  CHECK(rational_pow(Rational(1, 2), -2) == Rational(4));
  CHECK_THROWS_AS(rational_pow(Rational(0), -1), DomainError);
}

TEST_CASE("nth_root_floor") {
  CHECK(nth_root_floor(Int(0), 3) == 0);
  CHECK(nth_root_floor(Int(26), 3) == 2);
  CHECK(nth_root_floor(Int(27), 3) == 3);
  CHECK(nth_root_floor(Int(28), 3) == 3);
  Int big = boost::multiprecision::pow(Int(12345), 7);
  CHECK(nth_root_floor(big, 7) == 12345);
  CHECK(nth_root_floor(big - 1, 7) == 12344);
}

TEST_CASE("nth_root_bounds bracket the true root") {
  RootBounds b = nth_root_bounds(Rational(2), 2);
  CHECK_FALSE(b.exact);
  CHECK(b.lower * b.lower < 2);
  CHECK(b.upper * b.upper > 2);
  CHECK(b.upper - b.lower == Rational(1, Int("1000000000000")));

  RootBounds exact = nth_root_bounds(Rational(27, 8), 3);
  CHECK(exact.exact);
  CHECK(exact.lower == Rational(3, 2));
  CHECK(exact.upper == Rational(3, 2));

  CHECK_THROWS_AS(nth_root_bounds(Rational(-1), 2), DomainError);
}
