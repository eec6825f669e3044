#include "minmod/modular_datum.hpp"

#include <string>

#include "minmod/errors.hpp"

namespace minmod {

std::vector<Cyclotomic> ModularDatum::twists() const {
  std::vector<Cyclotomic> result;
  result.reserve(twist_exponent.size());
  for (const Rational& e : twist_exponent) result.push_back(unit_phase(e));
  return result;
}

void validate_datum(const ModularDatum& datum) {
  const std::size_t n = datum.ring.rank();
  if (datum.h.size() != n || datum.twist_exponent.size() != n ||
      datum.sratio.size() != n || datum.qdim.size() != n) {
    throw ConsistencyError("modular datum: field sizes do not match ring rank");
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (datum.sratio[i].size() != n) {
      throw ConsistencyError("modular datum: sratio is not square");
    }
    if (datum.twist_exponent[i] != mod_one(datum.h[i])) {
      throw ConsistencyError("modular datum: twist exponent of " + datum.ring.labels[i] +
                             " is not h mod 1");
    }
    if (!datum.sratio[datum.ring.unit][i].is_one()) {
      throw ConsistencyError("modular datum: unit row of sratio is not 1 at column " +
                             datum.ring.labels[i]);
    }
    if (datum.qdim[i] != datum.sratio[i][datum.ring.unit]) {
      throw ConsistencyError("modular datum: qdim of " + datum.ring.labels[i] +
                             " differs from its unit-column sratio");
    }
  }
  if (n > 0 && !datum.qdim[datum.ring.unit].is_one()) {
    throw ConsistencyError("modular datum: unit quantum dimension is not 1");
  }
  const AxiomReport axioms = verify_axioms(datum.ring);
  if (!axioms.pass()) {
    throw ConsistencyError("modular datum: fusion ring axioms fail\n" + axioms.summary());
  }
  if (!verlinde_eigencheck(datum.ring, datum.sratio)) {
    throw ConsistencyError("modular datum: Verlinde eigenvector check failed");
  }
}

std::vector<std::size_t> transparent_objects(const ModularDatum& datum) {
  std::vector<std::size_t> result;
  const std::size_t n = datum.ring.rank();
  for (std::size_t x = 0; x < n; ++x) {
    bool transparent = true;
    for (std::size_t y = 0; y < n && transparent; ++y) {
      transparent = (datum.sratio[x][y] == datum.qdim[x]);
    }
    if (transparent) result.push_back(x);
  }
  return result;
}

bool is_modular(const ModularDatum& datum) {
  const auto transparent = transparent_objects(datum);
  return transparent.size() == 1 && transparent[0] == datum.ring.unit;
}

bool balancing_check(const ModularDatum& datum) {
  const std::size_t n = datum.ring.rank();
  const std::vector<Cyclotomic> theta = datum.twists();
  std::vector<Cyclotomic> weighted(n);
  for (std::size_t k = 0; k < n; ++k) weighted[k] = theta[k] * datum.qdim[k];

  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      Cyclotomic rhs;
      for (std::size_t k = 0; k < n; ++k) {
        const int c = datum.ring.n(i, j, k);
        if (c != 0) rhs += weighted[k] * Rational(c);
      }
      const Cyclotomic lhs = datum.sratio[i][j] * datum.qdim[j] * theta[i] * theta[j];
      if (lhs != rhs) return false;
    }
  }
  return true;
}

}  // namespace minmod
