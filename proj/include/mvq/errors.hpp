#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace mvq {

// Malformed or out-of-range input (bad shapes, invalid Cartan type, e out of range).
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A module whose maps violate the preprojective relation.
class ValidationError : public std::runtime_error {
 public:
  ValidationError(const std::string& what, std::vector<int> vertices)
      : std::runtime_error(what), vertices_(std::move(vertices)) {}
  const std::vector<int>& vertices() const noexcept { return vertices_; }

 private:
  std::vector<int> vertices_;
};

// Input that is well-formed but outside what the library handles
// (e.g. chamber weights with a coordinate of absolute value >= 2).
class UnsupportedInput : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A configured enumeration bound would be exceeded.
class BoundExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Interpolated point counts are not a polynomial with nonnegative integer
// coefficients, so the variety cannot carry an affine paving.
class PavingViolation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace mvq
