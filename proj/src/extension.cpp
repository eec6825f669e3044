#include "minmod/extension.hpp"

#include <numeric>
#include <stdexcept>

#include "minmod/errors.hpp"

namespace minmod {

namespace {

Rational level_one_weight(int t) {
  if (t != 0 && t != 1) throw std::out_of_range("level-one sector must be 0 or 1");
  return t == 0 ? Rational(0) : Rational(1, 4);
}

void check_base_range(const CosetSetup& setup, int r, int lo, int hi) {
  if (r < lo || r > hi) {
    throw std::out_of_range("label r = " + std::to_string(r) + " outside [" +
                            std::to_string(lo) + ", " + std::to_string(hi) + "] for a = " +
                            std::to_string(setup.a()));
  }
}

}  // namespace

CosetSetup::CosetSetup(int a, int b)
    : base_(affine_category(a, b)),
      shifted_(affine_category(a + b, b)),
      vir_(a, a + b) {
  if (std::gcd(a + b, b) != 1 || std::gcd(a, a + b) != 1) {
    throw ConsistencyError("coset setup: coprimality is not preserved by the shift");
  }
  if (shifted_.level.level() != base_.level.level() + 1) {
    throw ConsistencyError("coset setup: shifted level is not base level + 1");
  }
}

std::vector<BranchingEntry> branching(const CosetSetup& setup, int r, int t) {
  check_base_range(setup, r, 0, setup.a() - 2);
  if (t != 0 && t != 1) throw std::out_of_range("level-one sector must be 0 or 1");
  std::vector<BranchingEntry> entries;
  for (int s = 0; s <= setup.a() + setup.b() - 2; ++s) {
    if ((s + t + r) % 2 == 0) {
      entries.push_back(BranchingEntry{s, KacLabel{r + 1, s + 1}});
    }
  }
  return entries;
}

BranchingTable full_branching(const CosetSetup& setup) {
  BranchingTable table{setup.a(), setup.b(), {}};
  for (int r = 0; r <= setup.a() - 2; ++r) {
    for (int t = 0; t <= 1; ++t) {
      table.entries[{r, t}] = branching(setup, r, t);
    }
  }
  return table;
}

InducedLabel induce(const CosetSetup& setup, int r) {
  check_base_range(setup, r, 1, setup.a() - 1);
  return InducedLabel{r - 1, (r - 1) % 2};
}

std::vector<Rational> locality_exponents(const CosetSetup& setup, int r) {
  check_base_range(setup, r, 1, setup.a() - 1);
  const int a = setup.a();
  const int b = setup.b();
  std::vector<Rational> exponents;
  for (int s = 0; s <= a + b - 2; s += 2) {
    exponents.push_back(mod_one(affine_weight(a + b, b, s) +
                                setup.vir().conformal_weight(KacLabel{r, s + 1})));
  }
  return exponents;
}

bool all_congruent_mod_one(const std::vector<Rational>& values) {
  for (std::size_t i = 1; i < values.size(); ++i) {
    if (!congruent_mod_one(values[i], values[0])) return false;
  }
  return true;
}

bool check_locality(const CosetSetup& setup, int r) {
  return all_congruent_mod_one(locality_exponents(setup, r));
}

std::vector<CongruenceViolation> verify_weight_congruence(const CosetSetup& setup) {
  const int a = setup.a();
  const int b = setup.b();
  std::vector<CongruenceViolation> violations;
  for (int r = 0; r <= a - 2; ++r) {
    for (int t = 0; t <= 1; ++t) {
      const Rational lhs = affine_weight(a, b, r) + level_one_weight(t);
      for (const BranchingEntry& entry : branching(setup, r, t)) {
        const Rational rhs =
            affine_weight(a + b, b, entry.s) + setup.vir().conformal_weight(entry.kac);
        if (!congruent_mod_one(lhs, rhs)) {
          violations.push_back(CongruenceViolation{r, t, entry.s});
        }
      }
    }
  }
  return violations;
}

bool verify_ring_hom_against(const CosetSetup& setup, const FusionRing& affine_ring) {
  const int a = setup.a();
  for (int r = 1; r <= a - 1; ++r) {
    for (int rp = 1; rp <= a - 1; ++rp) {
      const InducedLabel x = induce(setup, r);
      const InducedLabel y = induce(setup, rp);
      for (int rpp = 1; rpp <= a - 1; ++rpp) {
        const int ca_coeff = setup.vir().fusion_coefficient(
            KacLabel{r, 1}, KacLabel{rp, 1}, KacLabel{rpp, 1});
        const InducedLabel z = induce(setup, rpp);
        const int affine_coeff = affine_ring.n(static_cast<std::size_t>(x.affine_r),
                                               static_cast<std::size_t>(y.affine_r),
                                               static_cast<std::size_t>(z.affine_r));
        if (ca_coeff != affine_coeff) return false;
        if (ca_coeff != 0 && (x.parity + y.parity) % 2 != z.parity) return false;
      }
    }
  }
  return true;
}

bool verify_ring_hom(const CosetSetup& setup) {
  return verify_ring_hom_against(setup, setup.base().datum.ring);
}

bool verify_twist_relation(const CosetSetup& setup) {
  const int a = setup.a();
  const int b = setup.b();
  for (int r = 1; r <= a - 1; ++r) {
    const Rational lhs = setup.vir().conformal_weight(KacLabel{r, 1});
    const Rational rhs = affine_weight(a, b, r - 1) + Rational((r - 1) % 2, 4);
    if (!congruent_mod_one(lhs, rhs)) return false;
  }
  return true;
}

}  // namespace minmod
