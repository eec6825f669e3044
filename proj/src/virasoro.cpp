#include "minmod/virasoro.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "minmod/errors.hpp"

namespace minmod {

std::string to_string(const KacLabel& label) {
  return "(" + std::to_string(label.r) + "," + std::to_string(label.s) + ")";
}

MinimalModel::MinimalModel(int a, int b) : a_(a), b_(b) {
  if (a < 2 || b < 2) {
    throw std::invalid_argument("minimal model requires a and b to be at least 2");
  }
  if (std::gcd(a, b) != 1) {
    throw std::invalid_argument("a and b must be coprime");
  }
  for (int r = 1; r <= a - 1; ++r) {
    for (int s = 1; s <= b - 1; ++s) {
      const KacLabel label{r, s};
      const KacLabel partner{a - r, b - s};
      if (label < partner) labels_.push_back(label);
    }
  }
  std::sort(labels_.begin(), labels_.end());
  if (labels_.size() != static_cast<std::size_t>((a - 1) * (b - 1) / 2)) {
    throw ConsistencyError("minimal model: canonical label count mismatch");
  }
  for (int rp = 1; rp <= a - 1; ++rp) {
    inv_sin_a_.push_back(sin_pi(static_cast<long long>(b) * rp, a).inverse());
  }
  for (int sp = 1; sp <= b - 1; ++sp) {
    inv_sin_b_.push_back(sin_pi(static_cast<long long>(a) * sp, b).inverse());
  }
}

Rational MinimalModel::central_charge() const {
  return 1 - Rational(6 * (a_ - b_) * (a_ - b_), a_ * b_);
}

KacLabel MinimalModel::canonical(KacLabel label) const {
  if (label.r < 1 || label.r > a_ - 1 || label.s < 1 || label.s > b_ - 1) {
    throw std::out_of_range("Kac label " + to_string(label) + " outside the grid of Vir(" +
                            std::to_string(a_) + "," + std::to_string(b_) + ")");
  }
  const KacLabel partner{a_ - label.r, b_ - label.s};
  return std::min(label, partner);
}

std::size_t MinimalModel::index_of(KacLabel label) const {
  const KacLabel c = canonical(label);
  const auto it = std::lower_bound(labels_.begin(), labels_.end(), c);
  if (it == labels_.end() || *it != c) {
    throw ConsistencyError("canonical label " + to_string(c) + " missing from the label list");
  }
  return static_cast<std::size_t>(it - labels_.begin());
}

Rational MinimalModel::conformal_weight(KacLabel label) const {
  canonical(label);  // range check; the formula is orbit-invariant
  const long long u = static_cast<long long>(label.r) * b_ - static_cast<long long>(label.s) * a_;
  const long long d = static_cast<long long>(a_ - b_) * (a_ - b_);
  return Rational(u * u - d, 4ll * a_ * b_);
}

int chiral_fusion_coefficient(int c, int t1, int t2, int t3) {
  if ((t1 + t2 + t3) % 2 == 0) return 0;
  const int lo = std::abs(t1 - t2) + 1;
  const int hi = std::min(t1 + t2 - 1, 2 * c - t1 - t2 - 1);
  return (lo <= t3 && t3 <= hi) ? 1 : 0;
}

int MinimalModel::fusion_coefficient(KacLabel l1, KacLabel l2, KacLabel l3) const {
  const KacLabel x = canonical(l1);
  const KacLabel y = canonical(l2);
  const KacLabel z = canonical(l3);
  const KacLabel zp{a_ - z.r, b_ - z.s};

  const int first = chiral_fusion_coefficient(a_, x.r, y.r, z.r) *
                    chiral_fusion_coefficient(b_, x.s, y.s, z.s);
  const int second = chiral_fusion_coefficient(a_, x.r, y.r, zp.r) *
                     chiral_fusion_coefficient(b_, x.s, y.s, zp.s);
  // The parity constraint forbids both grid representatives of an orbit from
  // contributing to one product.
  if (first != 0 && second != 0) {
    throw ConsistencyError("fusion folding: both orbit representatives of " + to_string(z) +
                           " carry a nonzero coefficient");
  }
  return first + second;
}

Cyclotomic MinimalModel::sratio(KacLabel x_in, KacLabel y_in) const {
  return sratio_at(canonical(x_in), canonical(y_in));
}

Cyclotomic MinimalModel::sratio_at(KacLabel x, KacLabel y) const {
  canonical(x);  // range checks only
  canonical(y);
  const long long sign_exponent =
      static_cast<long long>(x.r + 1) * y.s + static_cast<long long>(x.s + 1) * y.r;
  Cyclotomic value(1);
  if (x.r != 1) {  // r = 1 makes the first ratio collapse to 1
    value = sin_pi(static_cast<long long>(b_) * x.r * y.r, a_) * inv_sin_a_[y.r - 1];
  }
  if (x.s != 1) {
    value *= sin_pi(static_cast<long long>(a_) * x.s * y.s, b_) * inv_sin_b_[y.s - 1];
  }
  if (sign_exponent % 2 != 0) value = -value;
  return value;
}

ModularDatum modular_datum(const MinimalModel& model) {
  const auto& labels = model.labels();
  const std::size_t n = labels.size();

  ModularDatum datum;
  datum.ring = FusionRing::with_rank(n);
  for (std::size_t i = 0; i < n; ++i) {
    datum.ring.labels[i] = to_string(labels[i]);
  }
  datum.ring.unit = model.index_of(KacLabel{1, 1});
  // every M_{r,s} is self-dual: keep the identity involution from with_rank
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        const int c = model.fusion_coefficient(labels[i], labels[j], labels[k]);
        datum.ring.n(i, j, k) = c;
        datum.ring.n(j, i, k) = c;
      }
    }
  }

  datum.h.reserve(n);
  datum.twist_exponent.reserve(n);
  for (const KacLabel& label : labels) {
    datum.h.push_back(model.conformal_weight(label));
    datum.twist_exponent.push_back(mod_one(datum.h.back()));
  }

  datum.sratio.assign(n, std::vector<Cyclotomic>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t m = 0; m < n; ++m) {
      datum.sratio[i][m] = model.sratio(labels[i], labels[m]);
    }
  }
  datum.qdim.reserve(n);
  for (std::size_t i = 0; i < n; ++i) datum.qdim.push_back(datum.sratio[i][datum.ring.unit]);

  validate_datum(datum);
  return datum;
}

ModularDatum subcategory_ca(const MinimalModel& model) {
  return subcategory_ca(model, modular_datum(model));
}

ModularDatum subcategory_ca(const MinimalModel& model, const ModularDatum& full) {
  std::vector<std::size_t> subset;
  for (int r = 1; r <= model.a() - 1; ++r) {
    subset.push_back(model.index_of(KacLabel{r, 1}));
  }
  std::sort(subset.begin(), subset.end());
  subset.erase(std::unique(subset.begin(), subset.end()), subset.end());

  ModularDatum sub;
  sub.ring = full_subring(full.ring, subset);
  const std::size_t n = subset.size();
  sub.h.reserve(n);
  sub.twist_exponent.reserve(n);
  sub.qdim.reserve(n);
  sub.sratio.assign(n, std::vector<Cyclotomic>(n));
  for (std::size_t i = 0; i < n; ++i) {
    sub.h.push_back(full.h[subset[i]]);
    sub.twist_exponent.push_back(full.twist_exponent[subset[i]]);
    sub.qdim.push_back(full.qdim[subset[i]]);
    for (std::size_t j = 0; j < n; ++j) {
      sub.sratio[i][j] = full.sratio[subset[i]][subset[j]];
    }
  }
  validate_datum(sub);
  return sub;
}

}  // namespace minmod
