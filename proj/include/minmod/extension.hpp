#pragma once

#include <map>
#include <utility>
#include <vector>

#include "minmod/affine_sl2.hpp"

namespace minmod {

/// One branching summand: L(l+1, s*omega) tensored with the Vir(a, a+b)
/// module M_{r+1, s+1}.
struct BranchingEntry {
  int s;
  KacLabel kac;

  bool operator==(const BranchingEntry&) const = default;
};

/// Label-level image of M_{r,1} under induction: the affine label (r-1)
/// and the level-one sector parity of r-1.
struct InducedLabel {
  int affine_r;
  int parity;

  bool operator==(const InducedLabel&) const = default;
};

struct CongruenceViolation {
  int r, t, s;

  bool operator==(const CongruenceViolation&) const = default;
};

/// The coset Com(L(l+1,0), L(l,0) x L(1,0)) = Vir(a, a+b) at l = -2 + a/b,
/// with the three verified categories it ties together: the base and
/// shifted affine data and the Virasoro minimal model.
class CosetSetup {
 public:
  /// Throws std::invalid_argument on inadmissible (a, b); construction
  /// failures of the three categories propagate.
  CosetSetup(int a, int b);

  int a() const { return base_.level.a; }
  int b() const { return base_.level.b; }
  const AffineCategory& base() const { return base_; }
  const AffineCategory& shifted() const { return shifted_; }
  const MinimalModel& vir() const { return vir_; }

 private:
  AffineCategory base_;     // level -2 + a/b
  AffineCategory shifted_;  // level -2 + (a+b)/b = base level + 1
  MinimalModel vir_;        // Vir(a, a+b)
};

/// Branching of L(l, r*omega) x L(1, t*omega): all s in [0, a+b-2] with
/// s+t+r even, each paired with M_{r+1, s+1}.
std::vector<BranchingEntry> branching(const CosetSetup& setup, int r, int t);

struct BranchingTable {
  int a, b;
  std::map<std::pair<int, int>, std::vector<BranchingEntry>> entries;  // keyed by (r, t)
};

BranchingTable full_branching(const CosetSetup& setup);

/// Image of L(l+1,0) x M_{r,1} under X -> A (x) X, for r in [1, a-1].
InducedLabel induce(const CosetSetup& setup, int r);

/// Whether all branching summands of the induced object of M_{r,1} carry a
/// single twist exponent, i.e. h_shifted(s) + h_vir(r, s+1) is constant
/// mod 1 over the admissible s.
bool check_locality(const CosetSetup& setup, int r);

/// The twist exponents whose agreement check_locality decides; exposed so
/// defects can be planted in tests.
std::vector<Rational> locality_exponents(const CosetSetup& setup, int r);
bool all_congruent_mod_one(const std::vector<Rational>& values);

/// For every branching entry, h_base(r) + h_1(t) == h_shifted(s) +
/// h_vir(r+1, s+1) mod 1, with h_1(0) = 0 and h_1(omega) = 1/4. Returns
/// the violations (expected: none).
std::vector<CongruenceViolation> verify_weight_congruence(const CosetSetup& setup);

/// Induction is a ring map: the C_a fusion of Vir(a, a+b) lands on the
/// affine fusion label-by-label with matching parities and multiplicities.
bool verify_ring_hom(const CosetSetup& setup);
/// Same check against an explicit affine ring (test seam).
bool verify_ring_hom_against(const CosetSetup& setup, const FusionRing& affine_ring);

/// h_vir(r,1) == h_base((r-1) omega) + ((r-1) mod 2)/4 mod 1 for all r.
bool verify_twist_relation(const CosetSetup& setup);

}  // namespace minmod
