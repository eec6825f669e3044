#include "minmod/fusion_ring.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "minmod/errors.hpp"

namespace minmod {

namespace {

std::string tuple_string(std::initializer_list<std::size_t> idx) {
  std::ostringstream os;
  os << "(";
  bool first = true;
  for (std::size_t v : idx) {
    if (!first) os << ",";
    os << v;
    first = false;
  }
  os << ")";
  return os.str();
}

void check_shape(const FusionRing& ring) {
  const std::size_t r = ring.rank();
  if (ring.n_data.size() != r * r * r || ring.dual.size() != r || ring.unit >= r) {
    throw std::invalid_argument("malformed fusion ring: tensor dimensions do not match label count");
  }
  for (int c : ring.n_data) {
    if (c < 0) throw std::invalid_argument("malformed fusion ring: negative structure constant");
  }
  for (std::size_t d : ring.dual) {
    if (d >= r) throw std::invalid_argument("malformed fusion ring: dual index out of range");
  }
}

}  // namespace

FusionRing FusionRing::with_rank(std::size_t rank) {
  FusionRing ring;
  ring.labels.resize(rank);
  ring.dual.resize(rank);
  std::iota(ring.dual.begin(), ring.dual.end(), std::size_t{0});
  ring.n_data.assign(rank * rank * rank, 0);
  return ring;
}

bool AxiomReport::pass() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const AxiomCheck& c) { return c.pass; });
}

std::string AxiomReport::summary() const {
  std::ostringstream os;
  for (const AxiomCheck& c : checks) {
    os << c.name << ": " << (c.pass ? "pass" : "FAIL");
    if (!c.pass) os << " at " << c.counterexample;
    os << "\n";
  }
  return os.str();
}

AxiomReport verify_axioms(const FusionRing& ring) {
  check_shape(ring);
  const std::size_t n = ring.rank();
  AxiomReport report;

  AxiomCheck unit_law{"unit law", true, {}};
  for (std::size_t j = 0; j < n && unit_law.pass; ++j) {
    for (std::size_t k = 0; k < n && unit_law.pass; ++k) {
      if (ring.n(ring.unit, j, k) != (j == k ? 1 : 0)) {
        unit_law.pass = false;
        unit_law.counterexample = tuple_string({ring.unit, j, k});
      }
    }
  }
  report.checks.push_back(std::move(unit_law));

  AxiomCheck comm{"commutativity", true, {}};
  for (std::size_t i = 0; i < n && comm.pass; ++i) {
    for (std::size_t j = i + 1; j < n && comm.pass; ++j) {
      for (std::size_t k = 0; k < n && comm.pass; ++k) {
        if (ring.n(i, j, k) != ring.n(j, i, k)) {
          comm.pass = false;
          comm.counterexample = tuple_string({i, j, k});
        }
      }
    }
  }
  report.checks.push_back(std::move(comm));

  AxiomCheck duality{"duality", true, {}};
  for (std::size_t i = 0; i < n && duality.pass; ++i) {
    for (std::size_t j = 0; j < n && duality.pass; ++j) {
      if (ring.n(i, j, ring.unit) != (j == ring.dual[i] ? 1 : 0)) {
        duality.pass = false;
        duality.counterexample = tuple_string({i, j});
      }
    }
  }
  report.checks.push_back(std::move(duality));

  // (x . i) . j == x . (i . j), written through the regular representation.
  AxiomCheck assoc{"associativity", true, {}};
  for (std::size_t i = 0; i < n && assoc.pass; ++i) {
    for (std::size_t j = 0; j < n && assoc.pass; ++j) {
      for (std::size_t x = 0; x < n && assoc.pass; ++x) {
        for (std::size_t y = 0; y < n && assoc.pass; ++y) {
          long long lhs = 0, rhs = 0;
          for (std::size_t m = 0; m < n; ++m) {
            lhs += static_cast<long long>(ring.n(i, x, m)) * ring.n(j, m, y);
            rhs += static_cast<long long>(ring.n(i, j, m)) * ring.n(x, m, y);
          }
          if (lhs != rhs) {
            assoc.pass = false;
            assoc.counterexample = tuple_string({i, j, x, y});
          }
        }
      }
    }
  }
  report.checks.push_back(std::move(assoc));

  return report;
}

std::map<std::size_t, int> fuse(const FusionRing& ring, std::size_t i, std::size_t j) {
  check_shape(ring);
  if (i >= ring.rank() || j >= ring.rank()) {
    throw std::out_of_range("fuse: label index out of range");
  }
  std::map<std::size_t, int> result;
  for (std::size_t k = 0; k < ring.rank(); ++k) {
    if (int c = ring.n(i, j, k); c > 0) result[k] = c;
  }
  return result;
}

FusionRing full_subring(const FusionRing& ring, std::vector<std::size_t> subset) {
  check_shape(ring);
  std::sort(subset.begin(), subset.end());
  subset.erase(std::unique(subset.begin(), subset.end()), subset.end());
  for (std::size_t s : subset) {
    if (s >= ring.rank()) throw std::out_of_range("full_subring: label index out of range");
  }
  if (!std::binary_search(subset.begin(), subset.end(), ring.unit)) {
    throw std::invalid_argument("full_subring: subset must contain the unit");
  }

  std::vector<std::size_t> new_index(ring.rank(), SIZE_MAX);
  for (std::size_t t = 0; t < subset.size(); ++t) new_index[subset[t]] = t;

  for (std::size_t i : subset) {
    if (new_index[ring.dual[i]] == SIZE_MAX) {
      throw NotClosedError(i, i, ring.dual[i],
                           "full_subring: subset not closed under duality at label " +
                               ring.labels[i]);
    }
    for (std::size_t j : subset) {
      for (std::size_t k = 0; k < ring.rank(); ++k) {
        if (ring.n(i, j, k) != 0 && new_index[k] == SIZE_MAX) {
          throw NotClosedError(
              i, j, k,
              "full_subring: fusion of " + ring.labels[i] + " and " + ring.labels[j] +
                  " escapes through " + ring.labels[k]);
        }
      }
    }
  }

  FusionRing sub = FusionRing::with_rank(subset.size());
  for (std::size_t t = 0; t < subset.size(); ++t) {
    sub.labels[t] = ring.labels[subset[t]];
    sub.dual[t] = new_index[ring.dual[subset[t]]];
  }
  sub.unit = new_index[ring.unit];
  for (std::size_t i = 0; i < subset.size(); ++i) {
    for (std::size_t j = 0; j < subset.size(); ++j) {
      for (std::size_t k = 0; k < subset.size(); ++k) {
        sub.n(i, j, k) = ring.n(subset[i], subset[j], subset[k]);
      }
    }
  }
  return sub;
}

bool verlinde_eigencheck(const FusionRing& ring,
                         const std::vector<std::vector<Cyclotomic>>& sratio) {
  check_shape(ring);
  const std::size_t n = ring.rank();
  if (sratio.size() != n) {
    throw std::invalid_argument("verlinde_eigencheck: matrix size does not match ring rank");
  }
  for (const auto& row : sratio) {
    if (row.size() != n) {
      throw std::invalid_argument("verlinde_eigencheck: matrix is not square over the labels");
    }
  }
  if (n == 0) return true;

  long long common = 1;
  for (const auto& row : sratio) {
    for (const Cyclotomic& v : row) common = std::lcm(common, v.order());
  }
  const auto& phi_poly = cyclotomic_polynomial(common);
  const std::size_t deg = phi_poly.size() - 1;

  std::vector<std::vector<std::vector<Rational>>> lifted(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t m = 0; m < n; ++m) {
      lifted[i].push_back(sratio[i][m].raised_to_order(common).coefficients());
    }
  }

  // Per column, clear denominators once so the eigenvalue identity becomes a
  // statement about integer polynomials modulo Phi.
  std::vector<BigInt> conv(2 * deg), expected(deg);
  for (std::size_t m = 0; m < n; ++m) {
    BigInt lcd = 1;
    for (std::size_t i = 0; i < n; ++i) {
      for (const Rational& c : lifted[i][m]) lcd = lcm(lcd, denominator(c));
    }
    std::vector<std::vector<BigInt>> v(n, std::vector<BigInt>(deg));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t t = 0; t < deg; ++t) {
        const Rational& c = lifted[i][m][t];
        v[i][t] = numerator(c) * (lcd / denominator(c));
      }
    }
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i; j < n; ++j) {
        std::fill(expected.begin(), expected.end(), BigInt(0));
        for (std::size_t k = 0; k < n; ++k) {
          const int c = ring.n(i, j, k);
          if (c == 0) continue;
          for (std::size_t t = 0; t < deg; ++t) expected[t] += c * v[k][t];
        }
        std::fill(conv.begin(), conv.end(), BigInt(0));
        for (std::size_t s = 0; s < deg; ++s) {
          if (v[i][s] == 0) continue;
          for (std::size_t t = 0; t < deg; ++t) {
            if (v[j][t] != 0) conv[s + t] += v[i][s] * v[j][t];
          }
        }
        for (std::size_t s = 2 * deg; s-- > deg;) {
          if (conv[s] == 0) continue;
          const BigInt c = conv[s];
          for (std::size_t t = 0; t < deg; ++t) {
            if (phi_poly[t] != 0) conv[s - deg + t] -= c * phi_poly[t];
          }
          conv[s] = 0;
        }
        for (std::size_t t = 0; t < deg; ++t) {
          if (conv[t] != lcd * expected[t]) return false;
        }
      }
    }
  }
  return true;
}

}  // namespace minmod
