#pragma once

// Finite presentation of the coordinate ring of a T-fixed component:
//
//   k[a_{i,j}, b_{i,k}] / I(M),   1 <= j <= e_i,  1 <= k <= d_i - e_i,
//
// where a_i = 1 + a_{i,1} t^-1 + ... + a_{i,e_i} t^-e_i and b_i likewise
// (truncated at d_i - e_i). I(M) is generated by the coefficients of
// a_i b_i - 1 and, for every chamber weight gamma, by the coefficients of
// prod_{gamma_i > 0} a_i^{gamma_i} prod_{gamma_i < 0} b_i^{-gamma_i}
// in orders above
//
//   bound_gamma = sum_i gamma_i e_i + D_{-gamma}(M).
//
// A negative bound means the degree condition cannot hold for any unit
// series (constant term 1), and the generator 1 is emitted.
//
// Variables are ordered a before b, vertex-major, then by index; variable
// a_{i,j} and b_{i,k} have weight j and k.

#include <optional>
#include <string>
#include <vector>

#include "mvq/groebner.hpp"
#include "mvq/poly.hpp"
#include "mvq/quiver.hpp"

namespace mvq {

struct VariableLayout {
  std::vector<int> dims;
  std::vector<int> e;
  PolyRing ring;
  std::vector<std::vector<std::size_t>> a_vars;  // a_vars[i][j-1]
  std::vector<std::vector<std::size_t>> b_vars;  // b_vars[i][k-1]; empty when built without b
};

// Throws InputError unless 0 <= e_i <= d_i.
VariableLayout make_layout(const std::vector<int>& dims, const std::vector<int>& e, bool with_b = true);

// Truncated series in t^-1: coeffs[k] is the coefficient of t^-k, coeffs[0] == 1.
struct UnitSeries {
  std::vector<Polynomial> coeffs;
  int order() const noexcept { return static_cast<int>(coeffs.size()) - 1; }
};

UnitSeries a_series(const VariableLayout& layout, int vertex);
UnitSeries b_series(const VariableLayout& layout, int vertex);

// b_0 = 1, b_k = -sum_{j=1..min(k, deg a)} a_j b_{k-j}, for k <= order.
UnitSeries inverse_series(const PolyRing& ring, const UnitSeries& a, int order);

UnitSeries series_product(const PolyRing& ring, const UnitSeries& x, const UnitSeries& y, int order);

struct SeriesFactor {
  const UnitSeries* series;
  int exponent;
};

// Exact coefficient of t^-k in prod_f series_f^{exponent_f}.
Polynomial series_coefficient(const PolyRing& ring, const std::vector<SeriesFactor>& factors, int k);

// Coefficients of t^-1 .. t^-{d_i} of a_i b_i. Exactly d_i generators.
std::vector<Polynomial> ab_relations(const VariableLayout& layout, int vertex);

struct GammaBounds {
  int bound = 0;  // sum gamma_i e_i + D_{-gamma}(M)
  int top = 0;    // largest order the product can reach with truncated a, b
};

GammaBounds gamma_bounds(const std::vector<int>& dims, const std::vector<int>& e, const Weight& gamma,
                         int d_minus_gamma);

// Nonzero coefficients of orders bound+1 .. top, or {1} if bound < 0.
std::vector<Polynomial> gamma_relations(const VariableLayout& layout, const Weight& gamma, int d_minus_gamma);

// Chamber weights of the module's Cartan type with D_{-gamma}(M) = dim ker phi_gamma(M).
struct GammaTable {
  std::vector<Weight> gammas;
  std::vector<int> d_minus_gamma;
};

GammaTable gamma_table(const PiModule& module);

struct RingPresentation {
  VariableLayout layout;
  std::vector<Polynomial> generators;
  std::vector<std::string> provenance;  // one per generator
  bool unit = false;                    // 1 in I(M) detected while building
};

// The finite presentation; requires a module that passes validate_module.
RingPresentation presentation(const PiModule& module, const std::vector<int>& e);
RingPresentation presentation(const PiModule& module, const GammaTable& table, const std::vector<int>& e);

// Variables a only; b_i replaced by the inverse series of a_i up to `cutoff`,
// with the degree conditions imposed at every order bound+1 .. cutoff.
RingPresentation elimination_presentation(const PiModule& module, const GammaTable& table, const std::vector<int>& e,
                                          int cutoff);

QuotientSummary quotient_dimension(const RingPresentation& p);

struct EliminationResult {
  QuotientSummary summary;
  int cutoff = 0;
};

// Raises the cutoff until two consecutive cutoffs give the same finite
// Hilbert series whose top degree is below the cutoff. Throws BoundExceeded
// past `max_cutoff`.
EliminationResult elimination_summary(const PiModule& module, const GammaTable& table, const std::vector<int>& e,
                                      int max_cutoff = 64);

// Plain-text canonical form: one variable per line, then one generator per
// line with its provenance tag.
std::string to_canonical_text(const RingPresentation& p);

}  // namespace mvq
