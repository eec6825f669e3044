#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "minmod/cyclotomic.hpp"

namespace minmod {

/// Fusion ring on an ordered label set: unit index, dual involution and the
/// dense tensor of nonnegative structure constants N[i][j][k].
struct FusionRing {
  std::vector<std::string> labels;
  std::size_t unit = 0;
  std::vector<std::size_t> dual;
  std::vector<int> n_data;  // rank^3, row-major

  static FusionRing with_rank(std::size_t rank);

  std::size_t rank() const { return labels.size(); }

  int n(std::size_t i, std::size_t j, std::size_t k) const {
    return n_data[(i * rank() + j) * rank() + k];
  }
  int& n(std::size_t i, std::size_t j, std::size_t k) {
    return n_data[(i * rank() + j) * rank() + k];
  }

  bool operator==(const FusionRing&) const = default;
};

struct AxiomCheck {
  std::string name;
  bool pass = true;
  std::string counterexample;  // first offending tuple, empty when passing
};

struct AxiomReport {
  std::vector<AxiomCheck> checks;

  bool pass() const;
  std::string summary() const;
};

/// Checks unit law, commutativity, duality and associativity, reporting the
/// first counterexample of each. Throws std::invalid_argument when the
/// tensor dimensions do not match the label count.
AxiomReport verify_axioms(const FusionRing& ring);

/// The fusion product of labels i and j as {k -> N[i][j][k] : N > 0}.
std::map<std::size_t, int> fuse(const FusionRing& ring, std::size_t i, std::size_t j);

/// Restriction to a subset of labels (which must contain the unit),
/// relabeled with dense indices in ascending order of the original ones.
/// Throws NotClosedError naming the escaping triple when the subset is not
/// closed under fusion, and std::invalid_argument on bad subsets.
FusionRing full_subring(const FusionRing& ring, std::vector<std::size_t> subset);

/// Verlinde eigenvector property, checked exactly: for all i, j and every
/// column m, sum_k N[i][j][k] sratio[k][m] == sratio[i][m] * sratio[j][m].
/// Equivalently, normalized S-columns are simultaneous eigenvectors of all
/// fusion matrices with eigenvalues sratio[i][m].
bool verlinde_eigencheck(const FusionRing& ring,
                         const std::vector<std::vector<Cyclotomic>>& sratio);

}  // namespace minmod
