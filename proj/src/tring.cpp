#include "mvq/tring.hpp"

#include <algorithm>
#include <sstream>

#include "mvq/errors.hpp"

namespace mvq {

VariableLayout make_layout(const std::vector<int>& dims, const std::vector<int>& e, bool with_b) {
  if (dims.size() != e.size()) throw InputError("dimension vector e has the wrong length");
  for (std::size_t i = 0; i < dims.size(); ++i) {
    if (e[i] < 0 || e[i] > dims[i]) {
      throw InputError("e_" + std::to_string(i + 1) + " = " + std::to_string(e[i]) + " is outside 0.." +
                       std::to_string(dims[i]));
    }
  }
  VariableLayout layout{dims, e, {}, {}, {}};
  std::vector<std::string> names;
  std::vector<int> weights;
  const std::size_t n = dims.size();
  layout.a_vars.resize(n);
  layout.b_vars.resize(n);
  for (std::size_t i = 0; i < n; ++i)
    for (int j = 1; j <= e[i]; ++j) {
      layout.a_vars[i].push_back(names.size());
      names.push_back("a" + std::to_string(i + 1) + "_" + std::to_string(j));
      weights.push_back(j);
    }
  if (with_b) {
    for (std::size_t i = 0; i < n; ++i)
      for (int k = 1; k <= dims[i] - e[i]; ++k) {
        layout.b_vars[i].push_back(names.size());
        names.push_back("b" + std::to_string(i + 1) + "_" + std::to_string(k));
        weights.push_back(k);
      }
  }
  layout.ring = PolyRing(std::move(names), std::move(weights));
  return layout;
}

namespace {

UnitSeries series_from_vars(const PolyRing& ring, const std::vector<std::size_t>& vars) {
  UnitSeries s;
  s.coeffs.push_back(ring.constant(1));
  for (auto v : vars) s.coeffs.push_back(ring.variable(v));
  return s;
}

const Polynomial& coeff_or_zero(const UnitSeries& s, int k, const Polynomial& zero) {
  return k <= s.order() ? s.coeffs[static_cast<std::size_t>(k)] : zero;
}

std::string weight_string(const Weight& g) {
  std::string s = "(";
  for (std::size_t i = 0; i < g.size(); ++i) s += (i ? "," : "") + std::to_string(g[i]);
  return s + ")";
}

}  // namespace

UnitSeries a_series(const VariableLayout& layout, int vertex) {
  return series_from_vars(layout.ring, layout.a_vars.at(static_cast<std::size_t>(vertex)));
}

UnitSeries b_series(const VariableLayout& layout, int vertex) {
  return series_from_vars(layout.ring, layout.b_vars.at(static_cast<std::size_t>(vertex)));
}

UnitSeries inverse_series(const PolyRing& ring, const UnitSeries& a, int order) {
  if (order < 0) throw InputError("series order must be nonnegative");
  UnitSeries b;
  b.coeffs.push_back(ring.constant(1));
  for (int k = 1; k <= order; ++k) {
    Polynomial acc;
    for (int j = 1; j <= std::min(k, a.order()); ++j) {
      acc = ring.sub(acc, ring.mul(a.coeffs[static_cast<std::size_t>(j)], b.coeffs[static_cast<std::size_t>(k - j)]));
    }
    b.coeffs.push_back(std::move(acc));
  }
  return b;
}

UnitSeries series_product(const PolyRing& ring, const UnitSeries& x, const UnitSeries& y, int order) {
  const int top = std::min(order, x.order() + y.order());
  UnitSeries out;
  for (int k = 0; k <= top; ++k) {
    Polynomial acc;
    for (int p = std::max(0, k - y.order()); p <= std::min(k, x.order()); ++p) {
      acc = ring.add(acc, ring.mul(x.coeffs[static_cast<std::size_t>(p)], y.coeffs[static_cast<std::size_t>(k - p)]));
    }
    out.coeffs.push_back(std::move(acc));
  }
  return out;
}

Polynomial series_coefficient(const PolyRing& ring, const std::vector<SeriesFactor>& factors, int k) {
  if (k < 0) throw InputError("series coefficient order must be nonnegative");
  UnitSeries acc;
  acc.coeffs.push_back(ring.constant(1));
  for (const auto& f : factors) {
    if (f.exponent < 0) throw InputError("series exponents must be nonnegative");
    for (int r = 0; r < f.exponent; ++r) acc = series_product(ring, acc, *f.series, k);
  }
  static const Polynomial zero;
  return coeff_or_zero(acc, k, zero);
}

std::vector<Polynomial> ab_relations(const VariableLayout& layout, int vertex) {
  const auto i = static_cast<std::size_t>(vertex);
  if (i >= layout.dims.size()) throw InputError("vertex out of range");
  const UnitSeries a = a_series(layout, vertex);
  const UnitSeries b = b_series(layout, vertex);
  const UnitSeries ab = series_product(layout.ring, a, b, layout.dims[i]);
  std::vector<Polynomial> out;
  for (int k = 1; k <= layout.dims[i]; ++k) {
    static const Polynomial zero;
    out.push_back(coeff_or_zero(ab, k, zero));
  }
  return out;
}

GammaBounds gamma_bounds(const std::vector<int>& dims, const std::vector<int>& e, const Weight& gamma,
                         int d_minus_gamma) {
  GammaBounds gb;
  gb.bound = d_minus_gamma;
  for (std::size_t i = 0; i < gamma.size(); ++i) {
    gb.bound += gamma[i] * e[i];
    if (gamma[i] > 0) gb.top += gamma[i] * e[i];
    if (gamma[i] < 0) gb.top += -gamma[i] * (dims[i] - e[i]);
  }
  return gb;
}

namespace {

std::vector<Polynomial> degree_conditions(const PolyRing& ring, const std::vector<UnitSeries>& a,
                                          const std::vector<UnitSeries>& b, const Weight& gamma, int from, int to) {
  std::vector<SeriesFactor> factors;
  for (std::size_t i = 0; i < gamma.size(); ++i) {
    if (gamma[i] > 0) factors.push_back({&a[i], gamma[i]});
    if (gamma[i] < 0) factors.push_back({&b[i], -gamma[i]});
  }
  // One product up to `to`, then read off each coefficient.
  UnitSeries acc;
  acc.coeffs.push_back(ring.constant(1));
  for (const auto& f : factors)
    for (int r = 0; r < f.exponent; ++r) acc = series_product(ring, acc, *f.series, to);
  std::vector<Polynomial> out;
  for (int k = from; k <= std::min(to, acc.order()); ++k) {
    if (!acc.coeffs[static_cast<std::size_t>(k)].is_zero()) out.push_back(acc.coeffs[static_cast<std::size_t>(k)]);
  }
  return out;
}

}  // namespace

std::vector<Polynomial> gamma_relations(const VariableLayout& layout, const Weight& gamma, int d_minus_gamma) {
  const auto gb = gamma_bounds(layout.dims, layout.e, gamma, d_minus_gamma);
  if (gb.bound < 0) return {layout.ring.constant(1)};
  std::vector<UnitSeries> a, b;
  for (std::size_t i = 0; i < layout.dims.size(); ++i) {
    a.push_back(a_series(layout, static_cast<int>(i)));
    b.push_back(b_series(layout, static_cast<int>(i)));
  }
  return degree_conditions(layout.ring, a, b, gamma, gb.bound + 1, gb.top);
}

GammaTable gamma_table(const PiModule& module) {
  GammaTable table;
  for (const auto& g : chamber_weights(module.quiver.cartan())) {
    table.d_minus_gamma.push_back(static_cast<int>(phi_gamma(module, g.weight).kernel_dim()));
    table.gammas.push_back(g.weight);
  }
  return table;
}

RingPresentation presentation(const PiModule& module, const std::vector<int>& e) {
  require_valid(module);
  return presentation(module, gamma_table(module), e);
}

RingPresentation presentation(const PiModule& module, const GammaTable& table, const std::vector<int>& e) {
  RingPresentation p{make_layout(module.dims, e, true), {}, {}, false};
  const auto& ring = p.layout.ring;
  const std::size_t n = module.dims.size();
  for (std::size_t i = 0; i < n; ++i) {
    auto rels = ab_relations(p.layout, static_cast<int>(i));
    for (std::size_t k = 0; k < rels.size(); ++k) {
      p.generators.push_back(std::move(rels[k]));
      p.provenance.push_back("ab vertex " + std::to_string(i + 1) + " order " + std::to_string(k + 1));
    }
  }
  std::vector<UnitSeries> a, b;
  for (std::size_t i = 0; i < n; ++i) {
    a.push_back(a_series(p.layout, static_cast<int>(i)));
    b.push_back(b_series(p.layout, static_cast<int>(i)));
  }
  for (std::size_t g = 0; g < table.gammas.size(); ++g) {
    const Weight& gamma = table.gammas[g];
    const auto gb = gamma_bounds(module.dims, e, gamma, table.d_minus_gamma[g]);
    if (gb.bound < 0) {
      p.generators.push_back(ring.constant(1));
      p.provenance.push_back("gamma " + weight_string(gamma) + " bound " + std::to_string(gb.bound));
      p.unit = true;
      continue;
    }
    for (auto& r : degree_conditions(ring, a, b, gamma, gb.bound + 1, gb.top)) {
      p.provenance.push_back("gamma " + weight_string(gamma) + " order " + std::to_string(ring.degree(r)));
      p.generators.push_back(std::move(r));
    }
  }
  return p;
}

RingPresentation elimination_presentation(const PiModule& module, const GammaTable& table, const std::vector<int>& e,
                                          int cutoff) {
  RingPresentation p{make_layout(module.dims, e, false), {}, {}, false};
  const auto& ring = p.layout.ring;
  const std::size_t n = module.dims.size();
  std::vector<UnitSeries> a, b;
  for (std::size_t i = 0; i < n; ++i) {
    a.push_back(a_series(p.layout, static_cast<int>(i)));
    b.push_back(inverse_series(ring, a.back(), cutoff));
  }
  for (std::size_t g = 0; g < table.gammas.size(); ++g) {
    const Weight& gamma = table.gammas[g];
    const auto gb = gamma_bounds(module.dims, e, gamma, table.d_minus_gamma[g]);
    if (gb.bound < 0) {
      p.generators.push_back(ring.constant(1));
      p.provenance.push_back("gamma " + weight_string(gamma) + " bound " + std::to_string(gb.bound));
      p.unit = true;
      continue;
    }
    for (auto& r : degree_conditions(ring, a, b, gamma, gb.bound + 1, cutoff)) {
      p.provenance.push_back("gamma " + weight_string(gamma) + " order " + std::to_string(ring.degree(r)));
      p.generators.push_back(std::move(r));
    }
  }
  return p;
}

QuotientSummary quotient_dimension(const RingPresentation& p) {
  if (p.unit) return QuotientSummary{};
  const auto gb = groebner_basis(p.layout.ring, p.generators);
  return standard_monomial_summary(p.layout.ring, gb);
}

EliminationResult elimination_summary(const PiModule& module, const GammaTable& table, const std::vector<int>& e,
                                      int max_cutoff) {
  std::optional<QuotientSummary> previous;
  for (int cutoff = 1; cutoff <= max_cutoff; ++cutoff) {
    auto summary = quotient_dimension(elimination_presentation(module, table, e, cutoff));
    const bool settled = summary.finite && static_cast<int>(summary.hilbert.size()) <= cutoff;
    if (settled && previous && *previous == summary) return {summary, cutoff};
    previous = summary;
  }
  throw BoundExceeded("elimination presentation did not stabilize below cutoff " + std::to_string(max_cutoff));
}

std::string to_canonical_text(const RingPresentation& p) {
  std::ostringstream os;
  const auto& ring = p.layout.ring;
  os << "variables " << ring.num_vars() << '\n';
  for (std::size_t v = 0; v < ring.num_vars(); ++v) os << ring.name(v) << " weight " << ring.weight(v) << '\n';
  os << "generators " << p.generators.size() << '\n';
  for (std::size_t g = 0; g < p.generators.size(); ++g)
    os << '[' << p.provenance[g] << "] " << ring.to_string(p.generators[g]) << '\n';
  return os.str();
}

}  // namespace mvq
