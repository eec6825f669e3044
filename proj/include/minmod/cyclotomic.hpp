#pragma once

#include <complex>
#include <optional>
#include <utility>
#include <vector>

#include "minmod/rational.hpp"

namespace minmod {

/// Element of a cyclotomic field Q(zeta_n), stored as a polynomial in
/// zeta_n reduced modulo the n-th cyclotomic polynomial. The reduced form
/// is a canonical normal form, so equality and zero-testing are exact
/// decisions, never float comparisons. Values of different orders compare
/// and combine by lifting both into Q(zeta_lcm).
class Cyclotomic {
 public:
  Cyclotomic() : order_(1), coeffs_(1) {}
  Cyclotomic(const Rational& value) : order_(1), coeffs_{value} {}
  Cyclotomic(long long value) : Cyclotomic(Rational(value)) {}

  /// Sum of c * zeta_order^e terms; exponents may be any integers.
  static Cyclotomic from_monomials(
      long long order, const std::vector<std::pair<long long, Rational>>& terms);

  /// zeta_order^exponent. Throws std::invalid_argument if order < 1.
  static Cyclotomic root_of_unity(long long order, long long exponent);

  long long order() const { return order_; }

  /// Coefficients of zeta^0 .. zeta^(phi(order)-1) in the reduced form.
  const std::vector<Rational>& coefficients() const { return coeffs_; }

  bool is_zero() const;
  bool is_one() const;
  bool is_rational() const;
  /// Throws std::domain_error when the value is not rational.
  Rational as_rational() const;

  /// Galois conjugation zeta -> zeta^(-1) (complex conjugation).
  Cyclotomic conjugate() const;

  /// Multiplicative inverse via extended Euclid modulo Phi_n.
  /// Throws std::domain_error on zero.
  Cyclotomic inverse() const;

  /// Rewrites the value in Q(zeta_m); m must be a multiple of order().
  Cyclotomic raised_to_order(long long m) const;

  /// Attempts to rewrite the value in the subfield Q(zeta_n) for n | order();
  /// nullopt when the value does not lie there.
  std::optional<Cyclotomic> to_suborder(long long n) const;

  /// Numeric embedding with zeta_n = exp(2*pi*i/n). Display and
  /// cross-checking only; never used for equality decisions.
  std::complex<double> approx() const;

  Cyclotomic& operator+=(const Cyclotomic& rhs);
  Cyclotomic& operator-=(const Cyclotomic& rhs);
  Cyclotomic& operator*=(const Cyclotomic& rhs);
  Cyclotomic& operator*=(const Rational& scalar);
  Cyclotomic operator-() const;

  friend Cyclotomic operator+(Cyclotomic lhs, const Cyclotomic& rhs) {
    lhs += rhs;
    return lhs;
  }
  friend Cyclotomic operator-(Cyclotomic lhs, const Cyclotomic& rhs) {
    lhs -= rhs;
    return lhs;
  }
  friend Cyclotomic operator*(Cyclotomic lhs, const Cyclotomic& rhs) {
    lhs *= rhs;
    return lhs;
  }
  friend Cyclotomic operator*(Cyclotomic lhs, const Rational& scalar) {
    lhs *= scalar;
    return lhs;
  }

  friend bool operator==(const Cyclotomic& lhs, const Cyclotomic& rhs);
  friend bool operator!=(const Cyclotomic& lhs, const Cyclotomic& rhs) {
    return !(lhs == rhs);
  }

 private:
  Cyclotomic(long long order, std::vector<Rational> reduced)
      : order_(order), coeffs_(std::move(reduced)) {}

  long long order_;
  std::vector<Rational> coeffs_;  // size = phi(order_), reduced mod Phi
};

/// Exact sin(pi*m/n) as (zeta_{2n}^m - zeta_{2n}^-m) * (-zeta_4/2), embedded
/// in Q(zeta_lcm(2n,4)). Throws std::invalid_argument if n < 1.
Cyclotomic sin_pi(long long m, long long n);

/// Exact cos(pi*m/n).
Cyclotomic cos_pi(long long m, long long n);

/// Exact e^{2*pi*i*t} for rational t, i.e. zeta_q^p with t = p/q.
Cyclotomic unit_phase(const Rational& t);

long long euler_phi(long long n);

/// Coefficients of Phi_n, ascending degree, computed by exact division of
/// x^n - 1 by the lower cyclotomic polynomials. Memoized.
const std::vector<BigInt>& cyclotomic_polynomial(long long n);

}  // namespace minmod
