#pragma once

#include <stdexcept>
#include <string>

namespace cayley {

/// A computation would exceed a configured resource bound (integer width,
/// enumeration size, iteration count).
class CapExceeded : public std::runtime_error {
 public:
  explicit CapExceeded(const std::string& what) : std::runtime_error(what) {}
};

/// Two routes that must agree did not. Always a bug, never bad input.
class ConsistencyError : public std::logic_error {
 public:
  explicit ConsistencyError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace cayley
