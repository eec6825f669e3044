#include "minmod/rational.hpp"

#include <stdexcept>

namespace minmod {

Rational mod_one(const Rational& x) {
  BigInt n = numerator(x);
  BigInt d = denominator(x);
  BigInt q = n / d;
  if (n < 0 && q * d != n) {
    --q;  // floor division
  }
  return x - Rational(q);
}

bool is_integer(const Rational& x) { return denominator(x) == 1; }

bool congruent_mod_one(const Rational& x, const Rational& y) {
  return is_integer(x - y);
}

std::string to_fraction_string(const Rational& x) {
  std::string s = numerator(x).str();
  if (denominator(x) != 1) {
    s += "/" + denominator(x).str();
  }
  return s;
}

Rational parse_fraction(std::string_view text) {
  if (text.empty()) {
    throw std::invalid_argument("empty fraction string");
  }
  const auto slash = text.find('/');
  try {
    if (slash == std::string_view::npos) {
      return Rational(BigInt(std::string(text)));
    }
    BigInt num(std::string(text.substr(0, slash)));
    BigInt den(std::string(text.substr(slash + 1)));
    if (den == 0) {
      throw std::invalid_argument("zero denominator");
    }
    if (den < 0) {
      num = -num;
      den = -den;
    }
    return Rational(num, den);
  } catch (const std::runtime_error& e) {
    throw std::invalid_argument("malformed fraction \"" + std::string(text) +
                                "\": " + e.what());
  }
}

double to_double(const Rational& x) { return x.convert_to<double>(); }

}  // namespace minmod
