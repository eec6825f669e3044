#include "minmod/cyclotomic.hpp"

#include <cmath>
#include <functional>
#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>

namespace minmod {

namespace {

// Remainder of p modulo the monic integer polynomial phi, in place.
// Works for coefficient types Rational and BigInt.
template <typename Coeff>
void reduce_mod_phi(std::vector<Coeff>& p, const std::vector<BigInt>& phi) {
  const std::size_t deg = phi.size() - 1;
  if (p.size() <= deg) {
    p.resize(deg);
    return;
  }
  for (std::size_t i = p.size(); i-- > deg;) {
    if (p[i] == 0) continue;
    const Coeff c = p[i];
    for (std::size_t t = 0; t < deg; ++t) {
      if (phi[t] != 0) p[i - deg + t] -= c * Coeff(phi[t]);
    }
    p[i] = 0;
  }
  p.resize(deg);
}

// Exact division of integer polynomials, divisor monic.
std::vector<BigInt> exact_divide(std::vector<BigInt> num,
                                 const std::vector<BigInt>& den) {
  const std::size_t dd = den.size() - 1;
  std::vector<BigInt> quot(num.size() - dd);
  for (std::size_t i = num.size(); i-- > dd;) {
    BigInt c = num[i];
    quot[i - dd] = c;
    if (c == 0) continue;
    for (std::size_t t = 0; t <= dd; ++t) {
      num[i - dd + t] -= c * den[t];
    }
  }
  for (const BigInt& c : num) {
    if (c != 0) throw std::logic_error("cyclotomic polynomial division left a remainder");
  }
  return quot;
}

std::vector<long long> divisors_of(long long n) {
  std::vector<long long> divs;
  for (long long d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      divs.push_back(d);
      if (d != n / d) divs.push_back(n / d);
    }
  }
  return divs;
}

// Polynomial division with rational coefficients: returns (quotient, remainder).
std::pair<std::vector<Rational>, std::vector<Rational>> divmod(
    std::vector<Rational> num, const std::vector<Rational>& den) {
  const std::size_t dd = den.size() - 1;
  if (num.size() <= dd) return {{}, std::move(num)};
  std::vector<Rational> quot(num.size() - dd);
  const Rational& lead = den[dd];
  for (std::size_t i = num.size(); i-- > dd;) {
    if (num[i] == 0) continue;
    Rational c = num[i] / lead;
    quot[i - dd] = c;
    for (std::size_t t = 0; t <= dd; ++t) {
      num[i - dd + t] -= c * den[t];
    }
  }
  while (!num.empty() && num.back() == 0) num.pop_back();
  return {std::move(quot), std::move(num)};
}

std::vector<Rational> poly_sub_scaled(std::vector<Rational> a,
                                      const std::vector<Rational>& q,
                                      const std::vector<Rational>& b) {
  // a - q*b
  if (!q.empty() && !b.empty()) {
    if (a.size() < q.size() + b.size() - 1) a.resize(q.size() + b.size() - 1);
    for (std::size_t i = 0; i < q.size(); ++i) {
      if (q[i] == 0) continue;
      for (std::size_t j = 0; j < b.size(); ++j) {
        a[i + j] -= q[i] * b[j];
      }
    }
  }
  while (!a.empty() && a.back() == 0) a.pop_back();
  return a;
}

}  // namespace

long long euler_phi(long long n) {
  long long result = n;
  long long m = n;
  for (long long p = 2; p * p <= m; ++p) {
    if (m % p == 0) {
      result -= result / p;
      while (m % p == 0) m /= p;
    }
  }
  if (m > 1) result -= result / m;
  return result;
}

const std::vector<BigInt>& cyclotomic_polynomial(long long n) {
  if (n < 1) throw std::invalid_argument("cyclotomic polynomial order must be positive");
  static std::mutex mutex;
  static std::map<long long, std::vector<BigInt>> cache;
  std::scoped_lock lock(mutex);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;

  std::function<const std::vector<BigInt>&(long long)> compute =
      [&](long long m) -> const std::vector<BigInt>& {
    auto found = cache.find(m);
    if (found != cache.end()) return found->second;
    std::vector<BigInt> poly(m + 1);
    poly[0] = -1;
    poly[m] = 1;  // x^m - 1
    for (long long d : divisors_of(m)) {
      if (d == m) continue;
      poly = exact_divide(std::move(poly), compute(d));
    }
    return cache.emplace(m, std::move(poly)).first->second;
  };
  return compute(n);
}

Cyclotomic Cyclotomic::from_monomials(
    long long order, const std::vector<std::pair<long long, Rational>>& terms) {
  if (order < 1) throw std::invalid_argument("cyclotomic order must be positive");
  std::vector<Rational> dense(order);
  for (const auto& [e, c] : terms) {
    long long k = e % order;
    if (k < 0) k += order;
    dense[k] += c;
  }
  reduce_mod_phi(dense, cyclotomic_polynomial(order));
  return Cyclotomic(order, std::move(dense));
}

Cyclotomic Cyclotomic::root_of_unity(long long order, long long exponent) {
  return from_monomials(order, {{exponent, Rational(1)}});
}

bool Cyclotomic::is_zero() const {
  for (const Rational& c : coeffs_) {
    if (c != 0) return false;
  }
  return true;
}

bool Cyclotomic::is_one() const { return *this == Cyclotomic(1); }

bool Cyclotomic::is_rational() const {
  for (std::size_t k = 1; k < coeffs_.size(); ++k) {
    if (coeffs_[k] != 0) return false;
  }
  return true;
}

Rational Cyclotomic::as_rational() const {
  if (!is_rational()) throw std::domain_error("cyclotomic value is not rational");
  return coeffs_[0];
}

Cyclotomic Cyclotomic::conjugate() const {
  std::vector<std::pair<long long, Rational>> terms;
  terms.reserve(coeffs_.size());
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (coeffs_[k] != 0) {
      terms.emplace_back(-static_cast<long long>(k), coeffs_[k]);
    }
  }
  return from_monomials(order_, terms);
}

Cyclotomic Cyclotomic::inverse() const {
  if (is_zero()) throw std::domain_error("division by zero cyclotomic value");
  if (is_rational()) return Cyclotomic(Rational(1) / coeffs_[0]);

  const auto& phi_int = cyclotomic_polynomial(order_);
  std::vector<Rational> r0(phi_int.begin(), phi_int.end());
  std::vector<Rational> r1 = coeffs_;
  while (!r1.empty() && r1.back() == 0) r1.pop_back();
  // Track t with t * this == r (mod Phi).
  std::vector<Rational> t0, t1{Rational(1)};
  while (!r1.empty()) {
    auto [q, rem] = divmod(std::move(r0), r1);
    r0 = std::move(r1);
    r1 = std::move(rem);
    auto next = poly_sub_scaled(std::move(t0), q, t1);
    t0 = std::move(t1);
    t1 = std::move(next);
  }
  // Phi is irreducible, so the gcd of a nonzero element with Phi is a unit.
  if (r0.size() != 1) throw std::logic_error("cyclotomic inverse: non-constant gcd");
  for (Rational& c : t0) c /= r0[0];
  reduce_mod_phi(t0, phi_int);
  return Cyclotomic(order_, std::move(t0));
}

Cyclotomic Cyclotomic::raised_to_order(long long m) const {
  if (m == order_) return *this;
  if (m < order_ || m % order_ != 0) {
    throw std::invalid_argument("target order must be a multiple of the current order");
  }
  const long long stride = m / order_;
  std::vector<Rational> dense(m);
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (coeffs_[k] != 0) dense[k * stride] = coeffs_[k];
  }
  reduce_mod_phi(dense, cyclotomic_polynomial(m));
  return Cyclotomic(m, std::move(dense));
}

std::optional<Cyclotomic> Cyclotomic::to_suborder(long long n) const {
  if (n < 1 || order_ % n != 0) {
    throw std::invalid_argument("target order must divide the current order");
  }
  if (n == order_) return *this;
  const long long big_phi = euler_phi(order_);
  const long long small_phi = euler_phi(n);
  // Solve basis * d = coeffs by Gaussian elimination over Q, where column i
  // of basis is the reduced form of zeta_order^(i * order/n).
  std::vector<std::vector<Rational>> aug(
      big_phi, std::vector<Rational>(small_phi + 1));
  for (long long i = 0; i < small_phi; ++i) {
    Cyclotomic b = root_of_unity(order_, i * (order_ / n));
    for (long long row = 0; row < big_phi; ++row) {
      aug[row][i] = b.coefficients()[row];
    }
  }
  for (long long row = 0; row < big_phi; ++row) {
    aug[row][small_phi] = coeffs_[row];
  }

  std::vector<long long> pivot_col_of_row;
  long long row = 0;
  for (long long col = 0; col < small_phi && row < big_phi; ++col) {
    long long pivot = -1;
    for (long long r = row; r < big_phi; ++r) {
      if (aug[r][col] != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) continue;
    std::swap(aug[row], aug[pivot]);
    for (long long r = 0; r < big_phi; ++r) {
      if (r == row || aug[r][col] == 0) continue;
      Rational f = aug[r][col] / aug[row][col];
      for (long long c = col; c <= small_phi; ++c) {
        aug[r][c] -= f * aug[row][c];
      }
    }
    pivot_col_of_row.push_back(col);
    ++row;
  }
  for (long long r = row; r < big_phi; ++r) {
    if (aug[r][small_phi] != 0) return std::nullopt;  // not in the subfield
  }
  std::vector<Rational> solution(small_phi);
  for (long long r = 0; r < row; ++r) {
    const long long col = pivot_col_of_row[r];
    solution[col] = aug[r][small_phi] / aug[r][col];
  }
  return Cyclotomic(n, std::move(solution));
}

std::complex<double> Cyclotomic::approx() const {
  std::complex<double> sum;
  constexpr double two_pi = 6.283185307179586476925286766559;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (coeffs_[k] == 0) continue;
    const double angle = two_pi * static_cast<double>(k) / static_cast<double>(order_);
    sum += to_double(coeffs_[k]) * std::complex<double>(std::cos(angle), std::sin(angle));
  }
  return sum;
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& rhs) {
  const long long common = std::lcm(order_, rhs.order_);
  if (order_ != common) *this = raised_to_order(common);
  if (rhs.order_ != common) {
    Cyclotomic lifted = rhs.raised_to_order(common);
    for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] += lifted.coeffs_[k];
  } else {
    for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] += rhs.coeffs_[k];
  }
  return *this;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& rhs) {
  *this += -rhs;
  return *this;
}

Cyclotomic Cyclotomic::operator-() const {
  Cyclotomic result = *this;
  for (Rational& c : result.coeffs_) c = -c;
  return result;
}

Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& rhs) {
  const long long common = std::lcm(order_, rhs.order_);
  const Cyclotomic lhs = (order_ == common) ? *this : raised_to_order(common);
  const Cyclotomic rhm = (rhs.order_ == common) ? rhs : rhs.raised_to_order(common);

  // Sparse-aware convolution: iterate nonzeros of the sparser operand.
  const auto count_nonzero = [](const Cyclotomic& x) {
    std::size_t c = 0;
    for (const Rational& v : x.coeffs_) c += (v != 0);
    return c;
  };
  const Cyclotomic& outer = count_nonzero(lhs) <= count_nonzero(rhm) ? lhs : rhm;
  const Cyclotomic& inner = (&outer == &lhs) ? rhm : lhs;

  std::vector<Rational> prod(2 * lhs.coeffs_.size());
  for (std::size_t i = 0; i < outer.coeffs_.size(); ++i) {
    if (outer.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < inner.coeffs_.size(); ++j) {
      if (inner.coeffs_[j] != 0) prod[i + j] += outer.coeffs_[i] * inner.coeffs_[j];
    }
  }
  reduce_mod_phi(prod, cyclotomic_polynomial(common));
  *this = Cyclotomic(common, std::move(prod));
  return *this;
}

Cyclotomic& Cyclotomic::operator*=(const Rational& scalar) {
  if (scalar == 0) {
    *this = Cyclotomic();
  } else {
    for (Rational& c : coeffs_) c *= scalar;
  }
  return *this;
}

bool operator==(const Cyclotomic& lhs, const Cyclotomic& rhs) {
  if (lhs.order_ == rhs.order_) return lhs.coeffs_ == rhs.coeffs_;
  const long long common = std::lcm(lhs.order_, rhs.order_);
  return lhs.raised_to_order(common).coeffs_ == rhs.raised_to_order(common).coeffs_;
}

Cyclotomic sin_pi(long long m, long long n) {
  if (n < 1) throw std::invalid_argument("sin_pi: denominator order must be positive");
  const long long L = std::lcm(2 * n, 4ll);
  const long long quarter = L / 4;
  const long long step = L / (2 * n);
  // sin(pi m/n) = (zeta_2n^m - zeta_2n^-m) * (-zeta_4 / 2)
  return Cyclotomic::from_monomials(
      L, {{quarter + m * step, Rational(-1, 2)}, {quarter - m * step, Rational(1, 2)}});
}

Cyclotomic cos_pi(long long m, long long n) {
  if (n < 1) throw std::invalid_argument("cos_pi: denominator order must be positive");
  const long long L = 2 * n;
  return Cyclotomic::from_monomials(L, {{m, Rational(1, 2)}, {-m, Rational(1, 2)}});
}

Cyclotomic unit_phase(const Rational& t) {
  const Rational r = mod_one(t);
  const long long den = denominator(r).convert_to<long long>();
  const long long num = numerator(r).convert_to<long long>();
  return Cyclotomic::root_of_unity(den, num);
}

}  // namespace minmod
