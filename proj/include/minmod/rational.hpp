#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

namespace minmod {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Representative of x mod 1 in [0, 1).
Rational mod_one(const Rational& x);

bool is_integer(const Rational& x);
bool congruent_mod_one(const Rational& x, const Rational& y);

/// "p/q" for non-integers, plain "p" for integers.
std::string to_fraction_string(const Rational& x);

/// Parses "p" or "p/q". Throws std::invalid_argument on malformed input
/// or zero denominator.
Rational parse_fraction(std::string_view text);

double to_double(const Rational& x);

}  // namespace minmod
