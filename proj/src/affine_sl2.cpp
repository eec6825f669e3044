#include "minmod/affine_sl2.hpp"

#include <numeric>
#include <stdexcept>

#include "minmod/errors.hpp"

namespace minmod {

AdmissibleLevel::AdmissibleLevel(int a, int b) : a(a), b(b) {
  if (a < 2) throw std::invalid_argument("admissible level requires a > 1");
  if (b < 1) throw std::invalid_argument("admissible level requires b >= 1");
  if (std::gcd(a, b) != 1) throw std::invalid_argument("a and b must be coprime");
}

Rational affine_weight(int a, int b, int r) {
  if (r < 0 || r > a - 2) {
    throw std::out_of_range("affine label r = " + std::to_string(r) + " outside [0, a-2]");
  }
  return Rational(static_cast<long long>(r) * (r + 2) * b, 4ll * a);
}

AffineCategory affine_category(int a, int b) {
  const AdmissibleLevel level(a, b);
  const MinimalModel vir(a, a + b);
  const std::size_t n = static_cast<std::size_t>(a - 1);

  ModularDatum datum;
  datum.ring = FusionRing::with_rank(n);
  datum.ring.unit = 0;
  for (std::size_t r = 0; r < n; ++r) {
    datum.ring.labels[r] = std::to_string(r) + "w";
  }
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t rp = 0; rp < n; ++rp) {
      for (std::size_t rpp = 0; rpp < n; ++rpp) {
        datum.ring.n(r, rp, rpp) = chiral_fusion_coefficient(
            a, static_cast<int>(r) + 1, static_cast<int>(rp) + 1, static_cast<int>(rpp) + 1);
      }
    }
  }

  for (std::size_t r = 0; r < n; ++r) {
    datum.h.push_back(affine_weight(a, b, static_cast<int>(r)));
    datum.twist_exponent.push_back(mod_one(datum.h.back()));
  }

  datum.sratio.assign(n, std::vector<Cyclotomic>(n));
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t rp = 0; rp < n; ++rp) {
      // evaluated at the (r+1, 1) representatives, which keeps the whole
      // matrix inside Q(zeta_lcm(2a,4))
      Cyclotomic value = vir.sratio_at(KacLabel{static_cast<int>(r) + 1, 1},
                                       KacLabel{static_cast<int>(rp) + 1, 1});
      if ((r * rp) % 2 != 0) value = -value;
      datum.sratio[r][rp] = std::move(value);
    }
  }
  for (std::size_t r = 0; r < n; ++r) datum.qdim.push_back(datum.sratio[r][0]);

  validate_datum(datum);
  return AffineCategory{level, std::move(datum)};
}

std::vector<Cyclotomic> simple_current_row(const AffineCategory& category) {
  const int a = category.level.a;
  const int b = category.level.b;
  const std::size_t top = static_cast<std::size_t>(a - 2);
  const std::vector<Cyclotomic>& row = category.datum.sratio[top];
  for (std::size_t rp = 0; rp < row.size(); ++rp) {
    const int sign = ((rp + 1) * b + 1) % 2 == 0 ? 1 : -1;
    if (row[rp] != Cyclotomic(sign)) {
      throw ConsistencyError("simple current row of the affine category at l = -2 + " +
                             std::to_string(a) + "/" + std::to_string(b) +
                             " disagrees with (-1)^((r'+1)b+1) at r' = " + std::to_string(rp));
    }
  }
  return row;
}

bool affine_is_modular(int a, int b) {
  const AffineCategory category = affine_category(a, b);
  const bool verdict = is_modular(category.datum);
  if (verdict != (b % 2 == 1)) {
    throw ConsistencyError("affine modularity verdict at l = -2 + " + std::to_string(a) + "/" +
                           std::to_string(b) + " violates the parity of b");
  }
  return verdict;
}

int cg_bound(int r, int r1, int r2) {
  if (r < 0 || r1 < 0 || r2 < 0) throw std::out_of_range("sl2 weights must be nonnegative");
  if ((r + r1 + r2) % 2 != 0) return 0;
  return (std::abs(r - r1) <= r2 && r2 <= r + r1) ? 1 : 0;
}

}  // namespace minmod
