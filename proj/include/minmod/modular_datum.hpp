#pragma once

#include <vector>

#include "minmod/fusion_ring.hpp"
#include "minmod/rational.hpp"

namespace minmod {

/// Full modular package of a category: fusion ring, conformal weights,
/// twist exponents (h mod 1), the normalized Hopf-link matrix
/// sratio[X][Y] = S_{X,Y}/S_{1,Y}, and quantum dimensions
/// qdim[X] = sratio[X][unit].
struct ModularDatum {
  FusionRing ring;
  std::vector<Rational> h;
  std::vector<Rational> twist_exponent;
  std::vector<std::vector<Cyclotomic>> sratio;
  std::vector<Cyclotomic> qdim;

  /// Exact ribbon twists theta_x = e^{2 pi i h_x} as roots of unity.
  std::vector<Cyclotomic> twists() const;

  bool operator==(const ModularDatum&) const = default;
};

/// Field invariants, ring axioms and the Verlinde eigen-property.
/// Throws ConsistencyError naming the first failure.
void validate_datum(const ModularDatum& datum);

/// All X with sratio[X][Y] == qdim[X] for every Y, i.e. S_{X,Y} =
/// dim(X) dim(Y) in ratio form. Ascending label indices.
std::vector<std::size_t> transparent_objects(const ModularDatum& datum);

/// Bruguieres' criterion: modular iff the unit is the only transparent
/// simple object.
bool is_modular(const ModularDatum& datum);

/// Trace of the ribbon balancing axiom, checked exactly:
/// sratio[i][j] * qdim[j] * theta_i * theta_j ==
///     sum_k N[i][j][k] * theta_k * qdim[k].
bool balancing_check(const ModularDatum& datum);

}  // namespace minmod
