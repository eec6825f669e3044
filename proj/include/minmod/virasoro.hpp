#pragma once

#include <compare>
#include <string>
#include <vector>

#include "minmod/modular_datum.hpp"

namespace minmod {

/// Kac-table label (r, s) of a simple Vir(a,b)-module, subject to the
/// identification (r, s) ~ (a-r, b-s).
struct KacLabel {
  int r = 1;
  int s = 1;

  auto operator<=>(const KacLabel&) const = default;
};

std::string to_string(const KacLabel& label);

/// The simple Virasoro vertex algebra Vir(a,b) for coprime a, b >= 2, with
/// its canonical simple-module labels: the lexicographically smaller member
/// of each orbit {(r,s), (a-r,b-s)}, sorted.
class MinimalModel {
 public:
  /// Throws std::invalid_argument when a or b < 2 or gcd(a,b) != 1.
  MinimalModel(int a, int b);

  int a() const { return a_; }
  int b() const { return b_; }
  Rational central_charge() const;

  const std::vector<KacLabel>& labels() const { return labels_; }

  /// Folds any in-range label into its canonical representative.
  /// Throws std::out_of_range when (r, s) leaves the Kac grid.
  KacLabel canonical(KacLabel label) const;

  std::size_t index_of(KacLabel label) const;

  /// h_{r,s} = ((rb - sa)^2 - (a-b)^2) / (4ab), exact.
  Rational conformal_weight(KacLabel label) const;

  /// N_{L1,L2}^{L3}: the sum over grid representatives of the orbit of L3
  /// of the chiral coefficients N^a * N^b.
  int fusion_coefficient(KacLabel l1, KacLabel l2, KacLabel l3) const;

  /// Normalized Hopf link S_{X,Y}/S_{1,Y}, evaluated on the canonical
  /// representatives:
  ///   (-1)^{(r+1)s' + (s+1)r'} sin(pi b r r'/a) sin(pi a s s'/b)
  ///        / (sin(pi b r'/a) sin(pi a s'/b)).
  Cyclotomic sratio(KacLabel x, KacLabel y) const;

  /// The same formula evaluated at the given grid representatives without
  /// folding. The value is orbit-invariant (asserted by tests), but the
  /// representative chooses the cyclotomic field the result is computed in,
  /// which matters when one factor is trivial.
  Cyclotomic sratio_at(KacLabel x, KacLabel y) const;

 private:
  int a_, b_;
  std::vector<KacLabel> labels_;
  std::vector<Cyclotomic> inv_sin_a_;  // 1/sin(pi b r'/a), r' = 1..a-1
  std::vector<Cyclotomic> inv_sin_b_;  // 1/sin(pi a s'/b), s' = 1..b-1
};

/// Chiral sl2-type coefficient: 1 iff |t1-t2|+1 <= t3 <= min(t1+t2-1,
/// 2c-t1-t2-1) and t1+t2+t3 is odd.
int chiral_fusion_coefficient(int c, int t1, int t2, int t3);

/// Builds the complete modular datum of Vir(a,b). The Verlinde eigencheck
/// runs before returning; its failure throws ConsistencyError.
ModularDatum modular_datum(const MinimalModel& model);

/// The full tensor subcategory C_a on the labels {M_{r,1}}, obtained from
/// the ambient datum via full_subring with restricted weights, twists and
/// Hopf data.
ModularDatum subcategory_ca(const MinimalModel& model);

/// Same restriction against an already-built ambient datum.
ModularDatum subcategory_ca(const MinimalModel& model, const ModularDatum& full);

}  // namespace minmod
