#pragma once

#include <deque>
#include <string>

namespace minmod {

struct CheckResult {
  std::string name;
  long long pass = 0;
  long long fail = 0;
  std::string first_failure;

  void ok() { ++pass; }
  void bad(const std::string& where) {
    if (fail++ == 0) first_failure = where;
  }
};

struct VerificationReport {
  std::deque<CheckResult> checks;  // deque: handed-out references stay valid

  bool all_passed() const;
  CheckResult& check(const std::string& name);
};

/// Sweeps every structural invariant over the coprime pairs with
/// 2 <= a <= amax and 2 <= b <= bmax (b >= 1 on the affine and coset side),
/// in a deterministic order. Pure computation, no output.
VerificationReport run_verification(int amax, int bmax);

}  // namespace minmod
