#pragma once

#include <cstdint>
#include <vector>

#include "mvq/poly.hpp"

namespace mvq {

// Reduced Groebner basis (monic, sorted by leading monomial) of the ideal
// generated by `generators`. The unit ideal yields {1}.
std::vector<Polynomial> groebner_basis(const PolyRing& ring, std::vector<Polynomial> generators);

// Remainder of `p` on full division by `basis`.
Polynomial normal_form(const PolyRing& ring, const Polynomial& p, const std::vector<Polynomial>& basis);

struct QuotientSummary {
  bool finite = true;
  std::int64_t dimension = 0;          // valid when finite
  std::vector<std::int64_t> hilbert;   // hilbert[k] = dim of weight-k part; trailing zeros trimmed

  friend bool operator==(const QuotientSummary&, const QuotientSummary&) = default;
};

// Counts standard monomials of a Groebner basis, graded by weighted degree.
// Infinite when some variable has no pure power among the leading monomials.
QuotientSummary standard_monomial_summary(const PolyRing& ring, const std::vector<Polynomial>& basis);

}  // namespace mvq
