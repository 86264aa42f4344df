#pragma once

#include <stdexcept>
#include <string>

namespace pstlie {

/// A character value outside the tabulated part of a partial character table.
class UntabulatedValue : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A brute-force path was asked to exceed its configured size bound.
class BoundExceeded : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// An exact sum that should have been a rational integer was not.
class NonIntegralValue : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace pstlie
