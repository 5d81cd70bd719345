#include "doctest.h"
#include "mkp/error.hpp"
#include "mkp/rational.hpp"

using namespace mkp;

TEST_CASE("parse_rational accepts fractions, decimals and exponents") {
  CHECK(parse_rational("3") == 3);
  CHECK(parse_rational("-3/10") == Rational(-3, 10));
  CHECK(parse_rational("0.3") == Rational(3, 10));
  CHECK(parse_rational(".25") == Rational(1, 4));
  CHECK(parse_rational("2.") == 2);
  CHECK(parse_rational("1e-1") == Rational(1, 10));
  CHECK(parse_rational("+1.5E2") == 150);
  CHECK(parse_rational("6/4") == Rational(3, 2));
}

TEST_CASE("parse_rational rejects garbage") {
  for (const char* bad : {"", "-", "abc", "1/0", "1/", "1.2.3", "1e", "0x10", "1 2", "."})
    CHECK_THROWS_AS(parse_rational(bad), ArgumentError);
}

TEST_CASE("formatting") {
  CHECK(to_string(Rational(31, 2)) == "31/2");
  CHECK(to_string(Rational(4)) == "4");
  CHECK(to_decimal(Rational(31, 2)) == "15.500000");
  CHECK(to_decimal(Rational(2, 3), 3) == "0.667");
  CHECK(to_decimal(Rational(-1, 3), 2) == "-0.33");
  CHECK(to_decimal(Rational(-1, 1000), 2) == "0.00");
  CHECK(to_decimal(Rational(5), 0) == "5");
  CHECK(ceil_to_int64(Rational(7, 2)) == 4);
  CHECK(ceil_to_int64(Rational(-7, 2)) == -3);
  CHECK(from_int64(-9000000000000LL) == parse_rational("-9000000000000"));
}
