#include "doctest.h"
#include "moment/rational.hpp"

using namespace moment;

TEST_CASE("parse and print") {
  CHECK(parse_rational("3/6") == Rational(1, 2));
  CHECK(parse_rational("-7") == -7);
  CHECK(to_string(Rational(-2, 4)) == "-1/2");
  CHECK(to_string(Rational(5)) == "5");
  CHECK_THROWS(parse_rational("1/0"));
  CHECK_THROWS(parse_rational("abc"));
}

TEST_CASE("integer helpers") {
  CHECK(valuation(BigInt(50), 5) == 2);
  CHECK(mod(BigInt(-1), 9) == 8);
  CHECK(inverse_mod(3, 7) == 5u);
  CHECK_FALSE(inverse_mod(5, 25).has_value());
  CHECK(is_prime(97));
  CHECK_FALSE(is_prime(91));
  CHECK(factorial(6) == 720);
  CHECK(binomial(10, 3) == 120);
  CHECK(ipow(3, 4) == 81);
  CHECK_FALSE(checked_pow(10, 30).has_value());
  CHECK(pow(Rational(2, 3), 3) == Rational(8, 27));
}

TEST_CASE("simplest rational in an interval") {
  CHECK(simplest_between(Rational(1, 3), Rational(1, 2)) == Rational(1, 2));
  CHECK(simplest_between(Rational(32, 100), Rational(34, 100)) == Rational(1, 3));
  CHECK(simplest_between(Rational(31, 100), Rational(33, 100)) == Rational(5, 16));
  CHECK(simplest_between(Rational(-1, 2), Rational(1, 2)) == 0);
}
