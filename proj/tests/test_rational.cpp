#include "stareig/rational.hpp"

#include <catch2/catch_amalgamated.hpp>

using stareig::parse_rational;
using stareig::Rational;
using stareig::to_string;

TEST_CASE("parse accepts integers and fractions") {
  CHECK(parse_rational("3") == Rational(3));
  CHECK(parse_rational("-7") == Rational(-7));
  CHECK(parse_rational("0") == Rational(0));
  CHECK(parse_rational("1/2") == Rational(1, 2));
  CHECK(parse_rational("-3/4") == Rational(-3, 4));
  CHECK(parse_rational("2/4") == Rational(1, 2));
}

TEST_CASE("values are kept reduced with positive denominator") {
  Rational r(-4, 8);
  CHECK(numerator(r) == -1);
  CHECK(denominator(r) == 2);
  CHECK(to_string(r) == "-1/2");
  CHECK(to_string(Rational(6, 3)) == "2");
  CHECK(to_string(Rational(0, 5)) == "0");
}

TEST_CASE("formatting round-trips") {
  const char* samples[] = {"0", "5", "-5", "1/2", "-22/7", "100000000000000000001/3"};
  for (const char* s : samples) {
    Rational r = parse_rational(s);
    CHECK(to_string(r) == s);
    CHECK(parse_rational(to_string(r)) == r);
  }
}

TEST_CASE("malformed input is rejected") {
  CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("abc"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("1/-2"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("1/"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("/2"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("1.5"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("1/2/3"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("+3"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("- 3"), std::invalid_argument);
}

TEST_CASE("arithmetic is exact") {
  Rational a(1, 3), b(1, 6);
  Rational sum = a + b;
  CHECK(sum == Rational(1, 2));
  Rational prod = a * b;
  CHECK(to_string(prod) == "1/18");
  CHECK(a - a == 0);
}
