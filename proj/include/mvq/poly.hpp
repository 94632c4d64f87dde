#pragma once

// Multivariate polynomials over Q with positive integer variable weights.
//
// Monomial order: weighted degree first, ties broken reverse
// lexicographically (the monomial with the smaller exponent in the last
// differing variable is larger). Variable order is the order in which the
// ring was constructed.

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "mvq/rational.hpp"

namespace mvq {

using Exponents = std::vector<std::int16_t>;

struct Term {
  Rational coeff;
  Exponents exps;
};

// Terms sorted strictly descending in the ring's monomial order, no zero coefficients.
struct Polynomial {
  std::vector<Term> terms;

  bool is_zero() const noexcept { return terms.empty(); }
  const Term& leading() const { return terms.front(); }
};

class PolyRing {
 public:
  PolyRing() = default;
  PolyRing(std::vector<std::string> names, std::vector<int> weights);

  std::size_t num_vars() const noexcept { return names_.size(); }
  const std::string& name(std::size_t v) const { return names_[v]; }
  int weight(std::size_t v) const { return weights_[v]; }
  const std::vector<int>& weights() const noexcept { return weights_; }
  const std::vector<std::string>& names() const noexcept { return names_; }

  int degree(const Exponents& e) const;
  std::strong_ordering compare(const Exponents& x, const Exponents& y) const;

  Exponents one_exps() const { return Exponents(num_vars(), 0); }
  Polynomial constant(const Rational& c) const;
  Polynomial variable(std::size_t v) const;

  // Sorts, merges equal monomials and drops zeros.
  Polynomial normalize(std::vector<Term> terms) const;
  Polynomial add(const Polynomial& p, const Polynomial& q) const;
  Polynomial sub(const Polynomial& p, const Polynomial& q) const;
  Polynomial mul(const Polynomial& p, const Polynomial& q) const;
  Polynomial scale(const Polynomial& p, const Rational& c) const;
  Polynomial mul_term(const Polynomial& p, const Rational& c, const Exponents& m) const;
  Polynomial monic(const Polynomial& p) const;

  bool is_homogeneous(const Polynomial& p) const;
  // Weighted degree of a homogeneous polynomial (of the leading term otherwise).
  int degree(const Polynomial& p) const;

  std::string to_string(const Polynomial& p) const;
  std::string monomial_string(const Exponents& e) const;

  friend bool operator==(const PolyRing&, const PolyRing&) = default;

 private:
  std::vector<std::string> names_;
  std::vector<int> weights_;
};

bool divides(const Exponents& a, const Exponents& b);
Exponents lcm(const Exponents& a, const Exponents& b);
Exponents quotient(const Exponents& b, const Exponents& a);  // b / a, requires divides(a, b)
bool coprime(const Exponents& a, const Exponents& b);

}  // namespace mvq
