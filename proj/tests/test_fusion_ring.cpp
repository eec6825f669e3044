#include "minmod/fusion_ring.hpp"

#include <algorithm>
#include <stdexcept>

#include "doctest.h"
#include "minmod/errors.hpp"
#include "minmod/virasoro.hpp"

using namespace minmod;

namespace {

FusionRing lee_yang_ring() { return modular_datum(MinimalModel(2, 5)).ring; }

}  // namespace

TEST_CASE("axioms hold for constructed rings") {
  CHECK(verify_axioms(lee_yang_ring()).pass());
  CHECK(verify_axioms(modular_datum(MinimalModel(3, 4)).ring).pass());
  CHECK(verify_axioms(subcategory_ca(MinimalModel(4, 5)).ring).pass());
}

TEST_CASE("axiom report catches planted defects") {
  FusionRing ring = lee_yang_ring();
  SUBCASE("broken unit law") {
    ring.n(ring.unit, 1, 1) = 0;
    const AxiomReport report = verify_axioms(ring);
    CHECK_FALSE(report.pass());
    CHECK_FALSE(report.checks[0].pass);  // unit law is reported first
    CHECK(report.checks[0].name == "unit law");
    CHECK(report.checks[0].counterexample == "(0,1,1)");
  }
  SUBCASE("broken commutativity") {
    ring.n(0, 1, 1) = 7;
    const AxiomReport report = verify_axioms(ring);
    CHECK_FALSE(report.pass());
  }
  SUBCASE("broken associativity") {
    ring.n(1, 1, 0) = 2;
    const AxiomReport report = verify_axioms(ring);
    bool assoc_failed = false;
    for (const AxiomCheck& check : report.checks) {
      if (check.name == "associativity") assoc_failed = !check.pass;
    }
    CHECK(assoc_failed);
  }
  SUBCASE("dimension mismatch") {
    ring.n_data.pop_back();
    CHECK_THROWS_AS(verify_axioms(ring), std::invalid_argument);
  }
}

TEST_CASE("fuse returns the multiset of summands") {
  const FusionRing ring = lee_yang_ring();
  // Lee-Yang: W x W = 1 + W
  const auto product = fuse(ring, 1, 1);
  REQUIRE(product.size() == 2);
  CHECK(product.at(0) == 1);
  CHECK(product.at(1) == 1);
  // unit acts trivially
  const auto by_unit = fuse(ring, ring.unit, 1);
  REQUIRE(by_unit.size() == 1);
  CHECK(by_unit.at(1) == 1);
  CHECK_THROWS_AS(fuse(ring, 0, 5), std::out_of_range);
}

TEST_CASE("full_subring restricts closed subsets") {
  const MinimalModel ising(3, 4);
  const FusionRing ring = modular_datum(ising).ring;
  // {1, fermion} is closed; the fermion label is canonical (1,3)
  const std::vector<std::size_t> closed{ising.index_of(KacLabel{1, 1}),
                                        ising.index_of(KacLabel{1, 3})};
  const FusionRing sub = full_subring(ring, closed);
  CHECK(sub.rank() == 2);
  CHECK(verify_axioms(sub).pass());
  CHECK(sub.labels[0] == "(1,1)");
  CHECK(sub.labels[1] == "(1,3)");

  SUBCASE("trivial subring") {
    const FusionRing unit_only = full_subring(ring, {ring.unit});
    CHECK(unit_only.rank() == 1);
    CHECK(verify_axioms(unit_only).pass());
  }
  SUBCASE("escaping subset is rejected with the offending triple") {
    // sigma x sigma contains the fermion, so {1, sigma} is not closed
    const std::vector<std::size_t> open{ising.index_of(KacLabel{1, 1}),
                                        ising.index_of(KacLabel{1, 2})};
    try {
      full_subring(ring, open);
      FAIL("expected NotClosedError");
    } catch (const NotClosedError& e) {
      CHECK(ring.labels[e.i] == "(1,2)");
      CHECK(ring.labels[e.j] == "(1,2)");
      CHECK(ring.labels[e.k] == "(1,3)");
    }
  }
  SUBCASE("subset must contain the unit") {
    CHECK_THROWS_AS(full_subring(ring, {1}), std::invalid_argument);
  }
}

TEST_CASE("nested full_subring equals the inner restriction") {
  const MinimalModel model(5, 4);
  const FusionRing ring = modular_datum(model).ring;
  std::vector<std::size_t> ca;
  for (int r = 1; r <= 4; ++r) ca.push_back(model.index_of(KacLabel{r, 1}));
  std::sort(ca.begin(), ca.end());
  const FusionRing ca_ring = full_subring(ring, ca);

  std::vector<std::size_t> inner{model.index_of(KacLabel{1, 1}),
                                 model.index_of(KacLabel{4, 1})};
  std::sort(inner.begin(), inner.end());
  std::vector<std::size_t> inner_in_ca;
  for (std::size_t t = 0; t < ca.size(); ++t) {
    if (ca[t] == inner[0] || ca[t] == inner[1]) inner_in_ca.push_back(t);
  }
  CHECK(full_subring(ca_ring, inner_in_ca) == full_subring(ring, inner));
}

TEST_CASE("verlinde eigencheck on exact data") {
  const ModularDatum lee_yang = modular_datum(MinimalModel(2, 5));
  CHECK(verlinde_eigencheck(lee_yang.ring, lee_yang.sratio));

  const ModularDatum ising = modular_datum(MinimalModel(3, 4));
  CHECK(verlinde_eigencheck(ising.ring, ising.sratio));

  SUBCASE("a perturbed fusion coefficient breaks the eigen-property") {
    FusionRing broken = ising.ring;
    broken.n(1, 1, 1) += 1;
    CHECK_FALSE(verlinde_eigencheck(broken, ising.sratio));
  }
  SUBCASE("dimension mismatch is rejected") {
    std::vector<std::vector<Cyclotomic>> narrow = ising.sratio;
    narrow.pop_back();
    CHECK_THROWS_AS(verlinde_eigencheck(ising.ring, narrow), std::invalid_argument);
  }
}
