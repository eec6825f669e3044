#include "minmod/rational.hpp"

#include <stdexcept>

#include "doctest.h"

using namespace minmod;

TEST_CASE("mod_one maps into [0,1)") {
  CHECK(mod_one(Rational(-1, 5)) == Rational(4, 5));
  CHECK(mod_one(Rational(7, 3)) == Rational(1, 3));
  CHECK(mod_one(Rational(-9)) == 0);
  CHECK(mod_one(Rational(0)) == 0);
  CHECK(mod_one(Rational(-13, 4)) == Rational(3, 4));
}

TEST_CASE("congruence mod one") {
  CHECK(congruent_mod_one(Rational(1, 16), Rational(17, 16)));
  CHECK(congruent_mod_one(Rational(-1, 5), Rational(4, 5)));
  CHECK_FALSE(congruent_mod_one(Rational(1, 2), Rational(1, 3)));
}

TEST_CASE("fraction strings round-trip") {
  CHECK(to_fraction_string(Rational(-1, 5)) == "-1/5");
  CHECK(to_fraction_string(Rational(3)) == "3");
  CHECK(parse_fraction("-1/5") == Rational(-1, 5));
  CHECK(parse_fraction("42") == Rational(42));
  CHECK(parse_fraction(to_fraction_string(Rational(1234567, 890123))) ==
        Rational(1234567, 890123));
  CHECK_THROWS_AS(parse_fraction("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_fraction("x"), std::invalid_argument);
  CHECK_THROWS_AS(parse_fraction(""), std::invalid_argument);
}

TEST_CASE("canonical form is automatic") {
  const Rational x = Rational(6) / Rational(-8);
  CHECK(numerator(x) == -3);
  CHECK(denominator(x) == 4);
  CHECK(parse_fraction("6/-8") == x);
}
