#include "minmod/extension.hpp"

#include <numeric>
#include <set>
#include <stdexcept>

#include "doctest.h"

using namespace minmod;

TEST_CASE("coset setup ties the three categories together") {
  SUBCASE("Ising coset: l = 1") {
    const CosetSetup setup(3, 1);
    CHECK(setup.shifted().level.level() == 2);
    CHECK(setup.vir().a() == 3);
    CHECK(setup.vir().b() == 4);
  }
  SUBCASE("trivial coset: l = 0") {
    const CosetSetup setup(2, 1);
    CHECK(setup.shifted().level.level() == 1);
    CHECK(setup.vir().labels().size() == 1);
  }
  SUBCASE("fractional level") {
    const CosetSetup setup(3, 2);
    CHECK(setup.shifted().level.a == 5);
    CHECK(setup.shifted().level.b == 2);
    CHECK(setup.vir().b() == 5);
  }
}

TEST_CASE("branching lists the parity-admissible sectors") {
  const CosetSetup setup(3, 1);
  SUBCASE("vacuum sector") {
    const auto entries = branching(setup, 0, 0);
    REQUIRE(entries.size() == 2);
    CHECK(entries[0] == BranchingEntry{0, KacLabel{1, 1}});
    CHECK(entries[1] == BranchingEntry{2, KacLabel{1, 3}});
  }
  SUBCASE("odd sector flips the parity") {
    const auto entries = branching(setup, 0, 1);
    REQUIRE(entries.size() == 1);
    CHECK(entries[0] == BranchingEntry{1, KacLabel{1, 2}});
  }
  SUBCASE("a = 2 vacuum") {
    const CosetSetup small(2, 1);
    const auto entries = branching(small, 0, 0);
    REQUIRE(entries.size() == 2);
    CHECK(entries[0] == BranchingEntry{0, KacLabel{1, 1}});
    CHECK(entries[1] == BranchingEntry{2, KacLabel{1, 3}});
  }
  CHECK_THROWS_AS(branching(setup, 2, 0), std::out_of_range);
  CHECK_THROWS_AS(branching(setup, 0, 2), std::out_of_range);
}

TEST_CASE("branching sectors partition the shifted labels") {
  for (int a = 2; a <= 6; ++a) {
    for (int b = 1; b <= 5; ++b) {
      if (std::gcd(a, b) != 1) continue;
      const CosetSetup setup(a, b);
      for (int r = 0; r <= a - 2; ++r) {
        std::set<int> seen;
        for (int t = 0; t <= 1; ++t) {
          for (const BranchingEntry& entry : branching(setup, r, t)) {
            CHECK((entry.s + t + r) % 2 == 0);
            CHECK(seen.insert(entry.s).second);
          }
        }
        CHECK(seen.size() == static_cast<std::size_t>(a + b - 1));
      }
    }
  }
}

TEST_CASE("induction on labels") {
  const CosetSetup setup(5, 2);
  CHECK(induce(setup, 1) == InducedLabel{0, 0});
  CHECK(induce(setup, 2) == InducedLabel{1, 1});
  CHECK(induce(setup, 4) == InducedLabel{3, 1});
  CHECK(induce(setup, 4).parity == (5 % 2));
  CHECK_THROWS_AS(induce(setup, 0), std::out_of_range);
  CHECK_THROWS_AS(induce(setup, 5), std::out_of_range);
}

TEST_CASE("locality of induced objects") {
  SUBCASE("shared exponent at the Ising point") {
    const CosetSetup setup(3, 1);
    const auto exponents = locality_exponents(setup, 2);
    REQUIRE(exponents.size() == 2);
    CHECK(exponents[0] == Rational(1, 2));
    CHECK(exponents[1] == Rational(1, 2));
    CHECK(check_locality(setup, 2));
  }
  SUBCASE("all induced objects are local") {
    for (int a = 2; a <= 6; ++a) {
      for (int b = 1; b <= 5; ++b) {
        if (std::gcd(a, b) != 1) continue;
        const CosetSetup setup(a, b);
        for (int r = 1; r <= a - 1; ++r) CHECK(check_locality(setup, r));
      }
    }
  }
  SUBCASE("a perturbed summand weight breaks locality") {
    const CosetSetup setup(4, 3);
    auto exponents = locality_exponents(setup, 3);
    REQUIRE(all_congruent_mod_one(exponents));
    exponents[1] += Rational(1, 3);
    CHECK_FALSE(all_congruent_mod_one(exponents));
  }
}

TEST_CASE("weight congruence across the branching table") {
  SUBCASE("spot values at a = 3, b = 1") {
    const CosetSetup setup(3, 1);
    CHECK(verify_weight_congruence(setup).empty());
    // r=0, t=0, s=2 entry: 0 == 1/2 + 1/2 mod 1
    CHECK(congruent_mod_one(Rational(0),
                            affine_weight(4, 1, 2) +
                                setup.vir().conformal_weight(KacLabel{1, 3})));
  }
  SUBCASE("exhaustive over small setups") {
    for (int a = 2; a <= 7; ++a) {
      for (int b = 1; b <= 6; ++b) {
        if (std::gcd(a, b) != 1 || a + b > 12) continue;
        CHECK(verify_weight_congruence(CosetSetup(a, b)).empty());
      }
    }
  }
}

TEST_CASE("induction is a ring map onto the affine fusion") {
  for (int a = 2; a <= 6; ++a) {
    for (int b = 1; b <= 5; ++b) {
      if (std::gcd(a, b) != 1) continue;
      CHECK(verify_ring_hom(CosetSetup(a, b)));
    }
  }
  SUBCASE("perturbed affine ring is detected") {
    const CosetSetup setup(5, 2);
    FusionRing broken = setup.base().datum.ring;
    broken.n(1, 1, 2) += 1;
    CHECK_FALSE(verify_ring_hom_against(setup, broken));
  }
}

TEST_CASE("twist relation between Vir(a, a+b) and the base level") {
  SUBCASE("spot value: 1/2 == 1/4 + 1/4") {
    const CosetSetup setup(3, 1);
    CHECK(setup.vir().conformal_weight(KacLabel{2, 1}) == Rational(1, 2));
    CHECK(affine_weight(3, 1, 1) == Rational(1, 4));
    CHECK(verify_twist_relation(setup));
  }
  SUBCASE("exhaustive over small setups") {
    for (int a = 2; a <= 7; ++a) {
      for (int b = 1; b <= 6; ++b) {
        if (std::gcd(a, b) != 1 || a + b > 12) continue;
        CHECK(verify_twist_relation(CosetSetup(a, b)));
      }
    }
  }
}

TEST_CASE("hopf link transport between C_a and the affine category") {
  for (int a = 2; a <= 6; ++a) {
    for (int b = 1; b <= 4; ++b) {
      if (std::gcd(a, b) != 1) continue;
      const CosetSetup setup(a, b);
      for (int r = 1; r <= a - 1; ++r) {
        for (int rp = 1; rp <= a - 1; ++rp) {
          Cyclotomic affine_side =
              setup.base().datum.sratio[static_cast<std::size_t>(r - 1)]
                                       [static_cast<std::size_t>(rp - 1)];
          if (((r - 1) * (rp - 1)) % 2 != 0) affine_side = -affine_side;
          CHECK(setup.vir().sratio(KacLabel{r, 1}, KacLabel{rp, 1}) == affine_side);
        }
      }
    }
  }
}

TEST_CASE("full branching table") {
  const CosetSetup setup(3, 2);
  const BranchingTable table = full_branching(setup);
  CHECK(table.a == 3);
  CHECK(table.b == 2);
  CHECK(table.entries.size() == 4);  // (r, t) in {0,1} x {0,1}
  CHECK(table.entries.at({1, 0}).size() + table.entries.at({1, 1}).size() == 4);
}
