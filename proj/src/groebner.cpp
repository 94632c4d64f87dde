#include "mvq/groebner.hpp"

#include <algorithm>
#include <limits>
#include <set>

namespace mvq {

Polynomial normal_form(const PolyRing& ring, const Polynomial& p, const std::vector<Polynomial>& basis) {
  Polynomial h = p;
  std::vector<Term> rest;
  while (!h.is_zero()) {
    const Term& lt = h.leading();
    const Polynomial* divisor = nullptr;
    for (const auto& g : basis) {
      if (divides(g.leading().exps, lt.exps)) {
        divisor = &g;
        break;
      }
    }
    if (!divisor) {
      rest.push_back(lt);
      h.terms.erase(h.terms.begin());
      continue;
    }
    Rational c = lt.coeff / divisor->leading().coeff;
    h = ring.sub(h, ring.mul_term(*divisor, c, quotient(lt.exps, divisor->leading().exps)));
  }
  // `rest` was collected in descending order.
  return Polynomial{std::move(rest)};
}

namespace {

Polynomial s_polynomial(const PolyRing& ring, const Polynomial& f, const Polynomial& g) {
  const Exponents l = lcm(f.leading().exps, g.leading().exps);
  Polynomial a = ring.mul_term(f, 1 / f.leading().coeff, quotient(l, f.leading().exps));
  Polynomial b = ring.mul_term(g, 1 / g.leading().coeff, quotient(l, g.leading().exps));
  return ring.sub(a, b);
}

struct Pair {
  int degree;
  std::size_t i, j;
  bool operator<(const Pair& o) const { return std::tie(degree, j, i) < std::tie(o.degree, o.j, o.i); }
};

std::vector<Polynomial> reduce_basis(const PolyRing& ring, std::vector<Polynomial> g) {
  // Drop elements whose leading monomial is divisible by another's.
  std::vector<Polynomial> minimal;
  for (std::size_t k = 0; k < g.size(); ++k) {
    bool redundant = false;
    for (std::size_t m = 0; m < g.size() && !redundant; ++m) {
      if (m == k) continue;
      if (divides(g[m].leading().exps, g[k].leading().exps)) {
        redundant = g[m].leading().exps != g[k].leading().exps || m < k;
      }
    }
    if (!redundant) minimal.push_back(ring.monic(g[k]));
  }
  std::vector<Polynomial> out;
  for (std::size_t k = 0; k < minimal.size(); ++k) {
    std::vector<Polynomial> others;
    for (std::size_t m = 0; m < minimal.size(); ++m)
      if (m != k) others.push_back(minimal[m]);
    // Leading term is irreducible by the others, so only the tail changes.
    Polynomial tail{std::vector<Term>(minimal[k].terms.begin() + 1, minimal[k].terms.end())};
    Polynomial reduced = normal_form(ring, tail, others);
    reduced.terms.insert(reduced.terms.begin(), minimal[k].leading());
    out.push_back(std::move(reduced));
  }
  std::sort(out.begin(), out.end(),
            [&](const Polynomial& a, const Polynomial& b) { return ring.compare(a.leading().exps, b.leading().exps) < 0; });
  return out;
}

}  // namespace

std::vector<Polynomial> groebner_basis(const PolyRing& ring, std::vector<Polynomial> generators) {
  std::vector<Polynomial> g;
  for (auto& p : generators) {
    if (p.is_zero()) continue;
    if (ring.degree(p.leading().exps) == 0) return {ring.constant(1)};
    g.push_back(ring.monic(p));
  }
  std::set<Pair> pending;
  auto add_pairs = [&](std::size_t j) {
    for (std::size_t i = 0; i < j; ++i) {
      pending.insert({ring.degree(lcm(g[i].leading().exps, g[j].leading().exps)), i, j});
    }
  };
  for (std::size_t j = 0; j < g.size(); ++j) add_pairs(j);

  auto is_pending = [&](std::size_t a, std::size_t b) {
    if (a > b) std::swap(a, b);
    return pending.count({ring.degree(lcm(g[a].leading().exps, g[b].leading().exps)), a, b}) > 0;
  };

  while (!pending.empty()) {
    const Pair pr = *pending.begin();
    pending.erase(pending.begin());
    const auto& fi = g[pr.i].leading().exps;
    const auto& fj = g[pr.j].leading().exps;
    if (coprime(fi, fj)) continue;
    const Exponents l = lcm(fi, fj);
    bool chain = false;
    for (std::size_t k = 0; k < g.size() && !chain; ++k) {
      if (k == pr.i || k == pr.j) continue;
      if (divides(g[k].leading().exps, l) && !is_pending(pr.i, k) && !is_pending(pr.j, k)) chain = true;
    }
    if (chain) continue;
    Polynomial h = normal_form(ring, s_polynomial(ring, g[pr.i], g[pr.j]), g);
    if (h.is_zero()) continue;
    if (ring.degree(h.leading().exps) == 0) return {ring.constant(1)};
    g.push_back(ring.monic(h));
    add_pairs(g.size() - 1);
  }
  return reduce_basis(ring, std::move(g));
}

QuotientSummary standard_monomial_summary(const PolyRing& ring, const std::vector<Polynomial>& basis) {
  QuotientSummary summary;
  std::vector<Exponents> leads;
  for (const auto& p : basis) {
    if (p.is_zero()) continue;
    if (ring.degree(p.leading().exps) == 0) return summary;  // unit ideal: zero ring
    leads.push_back(p.leading().exps);
  }
  const std::size_t n = ring.num_vars();
  std::vector<int> cap(n, std::numeric_limits<int>::max());
  for (const auto& e : leads) {
    std::size_t support = 0, var = 0;
    for (std::size_t v = 0; v < n; ++v)
      if (e[v] != 0) ++support, var = v;
    if (support == 1) cap[var] = std::min(cap[var], static_cast<int>(e[var]));
  }
  for (int c : cap) {
    if (c == std::numeric_limits<int>::max()) {
      summary.finite = false;
      return summary;
    }
  }
  auto divisible = [&](const Exponents& m) {
    return std::any_of(leads.begin(), leads.end(), [&](const Exponents& l) { return divides(l, m); });
  };
  Exponents m(n, 0);
  std::vector<std::int64_t> hilbert;
  // Depth-first over exponent vectors; divisibility is inherited by multiples.
  auto visit = [&](auto&& self, std::size_t v) -> void {
    if (v == n) {
      const auto d = static_cast<std::size_t>(ring.degree(m));
      if (hilbert.size() <= d) hilbert.resize(d + 1, 0);
      ++hilbert[d];
      return;
    }
    for (int k = 0; k < cap[v]; ++k) {
      m[v] = static_cast<std::int16_t>(k);
      if (divisible(m)) break;
      self(self, v + 1);
    }
    m[v] = 0;
  };
  if (!divisible(m)) visit(visit, 0);
  while (!hilbert.empty() && hilbert.back() == 0) hilbert.pop_back();
  summary.hilbert = hilbert;
  for (auto h : hilbert) summary.dimension += h;
  return summary;
}

}  // namespace mvq
