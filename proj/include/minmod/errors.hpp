#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace minmod {

/// A mathematically guaranteed identity failed while building or checking a
/// datum. Seeing this means the engine (not the input) is wrong.
class ConsistencyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// full_subring was handed a subset that is not closed under fusion or
/// duality; carries the first escaping triple.
class NotClosedError : public std::runtime_error {
 public:
  NotClosedError(std::size_t i, std::size_t j, std::size_t k,
                 const std::string& message)
      : std::runtime_error(message), i(i), j(j), k(k) {}

  std::size_t i, j, k;
};

}  // namespace minmod
