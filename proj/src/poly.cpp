#include "mvq/poly.hpp"

#include <algorithm>
#include <sstream>

#include "mvq/errors.hpp"

namespace mvq {

PolyRing::PolyRing(std::vector<std::string> names, std::vector<int> weights)
    : names_(std::move(names)), weights_(std::move(weights)) {
  if (names_.size() != weights_.size()) throw InputError("variable names and weights differ in length");
  for (int w : weights_)
    if (w < 1) throw InputError("variable weights must be positive");
}

int PolyRing::degree(const Exponents& e) const {
  int d = 0;
  for (std::size_t v = 0; v < e.size(); ++v) d += weights_[v] * e[v];
  return d;
}

std::strong_ordering PolyRing::compare(const Exponents& x, const Exponents& y) const {
  if (auto c = degree(x) <=> degree(y); c != 0) return c;
  for (std::size_t v = x.size(); v-- > 0;) {
    if (x[v] != y[v]) return y[v] <=> x[v];
  }
  return std::strong_ordering::equal;
}

Polynomial PolyRing::constant(const Rational& c) const {
  Polynomial p;
  if (sgn(c) != 0) p.terms.push_back({c, one_exps()});
  return p;
}

Polynomial PolyRing::variable(std::size_t v) const {
  Exponents e = one_exps();
  e[v] = 1;
  return Polynomial{{Term{Rational(1), std::move(e)}}};
}

Polynomial PolyRing::normalize(std::vector<Term> terms) const {
  std::sort(terms.begin(), terms.end(), [&](const Term& a, const Term& b) { return compare(a.exps, b.exps) > 0; });
  Polynomial out;
  for (auto& t : terms) {
    if (!out.terms.empty() && out.terms.back().exps == t.exps) {
      out.terms.back().coeff += t.coeff;
    } else {
      if (!out.terms.empty() && sgn(out.terms.back().coeff) == 0) out.terms.pop_back();
      out.terms.push_back(std::move(t));
    }
  }
  if (!out.terms.empty() && sgn(out.terms.back().coeff) == 0) out.terms.pop_back();
  return out;
}

namespace {

// Merge of two descending term lists, q scaled by `sign`.
Polynomial merge(const PolyRing& ring, const Polynomial& p, const Polynomial& q, int sign) {
  Polynomial out;
  out.terms.reserve(p.terms.size() + q.terms.size());
  std::size_t i = 0, j = 0;
  while (i < p.terms.size() || j < q.terms.size()) {
    if (j == q.terms.size()) {
      out.terms.push_back(p.terms[i++]);
      continue;
    }
    if (i == p.terms.size()) {
      out.terms.push_back(q.terms[j++]);
      if (sign < 0) out.terms.back().coeff = -out.terms.back().coeff;
      continue;
    }
    auto c = ring.compare(p.terms[i].exps, q.terms[j].exps);
    if (c > 0) {
      out.terms.push_back(p.terms[i++]);
    } else if (c < 0) {
      out.terms.push_back(q.terms[j++]);
      if (sign < 0) out.terms.back().coeff = -out.terms.back().coeff;
    } else {
      Rational s = sign > 0 ? Rational(p.terms[i].coeff + q.terms[j].coeff)
                            : Rational(p.terms[i].coeff - q.terms[j].coeff);
      if (sgn(s) != 0) out.terms.push_back({std::move(s), p.terms[i].exps});
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

Polynomial PolyRing::add(const Polynomial& p, const Polynomial& q) const { return merge(*this, p, q, 1); }
Polynomial PolyRing::sub(const Polynomial& p, const Polynomial& q) const { return merge(*this, p, q, -1); }

Polynomial PolyRing::mul_term(const Polynomial& p, const Rational& c, const Exponents& m) const {
  Polynomial out;
  if (sgn(c) == 0) return out;
  out.terms.reserve(p.terms.size());
  for (const auto& t : p.terms) {
    Exponents e = t.exps;
    for (std::size_t v = 0; v < e.size(); ++v) e[v] = static_cast<std::int16_t>(e[v] + m[v]);
    out.terms.push_back({t.coeff * c, std::move(e)});
  }
  // Multiplying by a monomial preserves the order of terms.
  return out;
}

Polynomial PolyRing::mul(const Polynomial& p, const Polynomial& q) const {
  std::vector<Term> terms;
  terms.reserve(p.terms.size() * q.terms.size());
  for (const auto& a : p.terms)
    for (const auto& b : q.terms) {
      Exponents e = a.exps;
      for (std::size_t v = 0; v < e.size(); ++v) e[v] = static_cast<std::int16_t>(e[v] + b.exps[v]);
      terms.push_back({a.coeff * b.coeff, std::move(e)});
    }
  return normalize(std::move(terms));
}

Polynomial PolyRing::scale(const Polynomial& p, const Rational& c) const { return mul_term(p, c, one_exps()); }

Polynomial PolyRing::monic(const Polynomial& p) const {
  if (p.is_zero()) return p;
  Rational inv = 1 / p.leading().coeff;
  return scale(p, inv);
}

bool PolyRing::is_homogeneous(const Polynomial& p) const {
  if (p.is_zero()) return true;
  const int d = degree(p.leading().exps);
  return std::all_of(p.terms.begin(), p.terms.end(), [&](const Term& t) { return degree(t.exps) == d; });
}

int PolyRing::degree(const Polynomial& p) const { return p.is_zero() ? 0 : degree(p.leading().exps); }

std::string PolyRing::monomial_string(const Exponents& e) const {
  std::string s;
  for (std::size_t v = 0; v < e.size(); ++v) {
    if (e[v] == 0) continue;
    if (!s.empty()) s += '*';
    s += names_[v];
    if (e[v] > 1) s += '^' + std::to_string(e[v]);
  }
  return s.empty() ? "1" : s;
}

std::string PolyRing::to_string(const Polynomial& p) const {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : p.terms) {
    Rational c = t.coeff;
    const bool neg = sgn(c) < 0;
    if (neg) c = -c;
    os << (first ? (neg ? "-" : "") : (neg ? " - " : " + "));
    const bool unit_monomial = degree(t.exps) == 0;
    if (c != 1 || unit_monomial) {
      os << mvq::to_string(c);
      if (!unit_monomial) os << '*';
    }
    if (!unit_monomial) os << monomial_string(t.exps);
    first = false;
  }
  return os.str();
}

bool divides(const Exponents& a, const Exponents& b) {
  for (std::size_t v = 0; v < a.size(); ++v)
    if (a[v] > b[v]) return false;
  return true;
}

Exponents lcm(const Exponents& a, const Exponents& b) {
  Exponents out(a.size());
  for (std::size_t v = 0; v < a.size(); ++v) out[v] = std::max(a[v], b[v]);
  return out;
}

Exponents quotient(const Exponents& b, const Exponents& a) {
  Exponents out(a.size());
  for (std::size_t v = 0; v < a.size(); ++v) out[v] = static_cast<std::int16_t>(b[v] - a[v]);
  return out;
}

bool coprime(const Exponents& a, const Exponents& b) {
  for (std::size_t v = 0; v < a.size(); ++v)
    if (a[v] != 0 && b[v] != 0) return false;
  return true;
}

}  // namespace mvq
