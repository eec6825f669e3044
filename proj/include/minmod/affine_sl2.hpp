#pragma once

#include "minmod/modular_datum.hpp"
#include "minmod/virasoro.hpp"

namespace minmod {

/// Admissible sl2 level l = -2 + a/b for coprime a >= 2, b >= 1.
struct AdmissibleLevel {
  int a;
  int b;

  /// Throws std::invalid_argument when a < 2, b < 1 or gcd(a,b) != 1.
  AdmissibleLevel(int a, int b);

  Rational level() const { return Rational(a, b) - 2; }
};

/// Category of ordinary modules of L(l, 0) at l = -2 + a/b. Simple objects
/// are L(l, r*omega) for r = 0..a-2, indexed by r; the datum's Hopf data is
/// induced from C_a inside Vir(a, a+b).
struct AffineCategory {
  AdmissibleLevel level;
  ModularDatum datum;
};

/// Builds the affine datum: fusion N[r][r'][r''] = N^a_{r+1,r'+1,r''+1},
/// Sugawara weights h(r*omega) = r(r+2)b/(4a), and
/// sratio(r, r') = (-1)^{r r'} * sratio_{Vir(a,a+b)}(M_{r+1,1}, M_{r'+1,1}).
/// The Verlinde eigencheck runs before returning.
AffineCategory affine_category(int a, int b);

/// Sugawara weight of L(l, r*omega): r(r+2)b/(4a).
Rational affine_weight(int a, int b, int r);

/// The sratio row of the simple current r = a-2, verified against the
/// closed form (-1)^{(r'+1)b+1}; disagreement throws ConsistencyError.
std::vector<Cyclotomic> simple_current_row(const AffineCategory& category);

/// Whether the ordinary-module category is modular; the verdict must match
/// the parity of b (ConsistencyError otherwise, since a mismatch can only
/// come from a broken engine).
bool affine_is_modular(int a, int b);

/// Clebsch-Gordan bound for sl2 weights r*omega: 1 iff |r-r'| <= r'' <= r+r'
/// with r+r'+r'' even.
int cg_bound(int r, int r1, int r2);

}  // namespace minmod
