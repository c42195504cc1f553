#include <doctest.h>

#include "basekit/numeric.hpp"

using namespace basekit;

TEST_CASE("parse_rational accepts a/b and plain integers") {
  CHECK(parse_rational("3/10") == Rational(3, 10));
  CHECK(parse_rational("7") == Rational(7));
  CHECK(parse_rational("-5/3") == Rational(-5, 3));
  CHECK(parse_rational("0/9") == Rational(0));
  CHECK(parse_rational("13571955000/1") == Rational(BigInt("13571955000"), 1));
}

TEST_CASE("parse_rational rejects malformed input") {
  CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("abc"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("1/"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("1/2/3"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("1.5"), std::invalid_argument);
}

TEST_CASE("format_rational round-trips and normalizes") {
  CHECK(format_rational(Rational(7, 8)) == "7/8");
  CHECK(format_rational(Rational(4, 2)) == "2");
  CHECK(format_rational(Rational(0)) == "0");
  CHECK(format_rational(Rational(-1, 3)) == "-1/3");
  CHECK(parse_rational(format_rational(Rational(355, 113))) == Rational(355, 113));
}

TEST_CASE("isqrt_floor on exact squares and in-between values") {
  CHECK(isqrt_floor(0) == 0);
  CHECK(isqrt_floor(1) == 1);
  CHECK(isqrt_floor(2) == 1);
  CHECK(isqrt_floor(144) == 12);
  CHECK(isqrt_floor(145) == 12);
  const BigInt big = BigInt("13571955000") * BigInt("13571955000");
  CHECK(isqrt_floor(big) == BigInt("13571955000"));
  CHECK(isqrt_floor(big - 1) == BigInt("13571955000") - 1);
  CHECK_THROWS_AS(isqrt_floor(BigInt(-1)), std::domain_error);
}
