#include "mvq/weyl.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>

#include "mvq/errors.hpp"

namespace mvq {

Family parse_family(std::string_view name) {
  if (name == "A" || name == "a") return Family::A;
  if (name == "D" || name == "d") return Family::D;
  if (name == "E" || name == "e") return Family::E;
  throw InputError("unknown Cartan family '" + std::string(name) + "' (expected A, D or E)");
}

char family_letter(Family f) {
  switch (f) {
    case Family::A: return 'A';
    case Family::D: return 'D';
    case Family::E: return 'E';
  }
  return '?';
}

std::vector<int> CartanData::neighbors(int i) const {
  std::vector<int> out;
  for (int j = 0; j < rank; ++j)
    if (j != i && (*this)(i, j) != 0) out.push_back(j);
  return out;
}

std::vector<std::pair<int, int>> CartanData::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i < rank; ++i)
    for (int j = i + 1; j < rank; ++j)
      if ((*this)(i, j) != 0) out.emplace_back(i, j);
  return out;
}

std::string CartanData::name() const { return std::string(1, family_letter(family)) + std::to_string(rank); }

CartanData cartan_matrix(Family family, int rank) {
  std::vector<std::pair<int, int>> edges;
  switch (family) {
    case Family::A:
      if (rank < 1) throw InputError("A_n requires n >= 1");
      for (int i = 0; i + 1 < rank; ++i) edges.emplace_back(i, i + 1);
      break;
    case Family::D:
      if (rank < 4) throw InputError("D_n requires n >= 4");
      for (int i = 0; i + 2 < rank; ++i) edges.emplace_back(i, i + 1);
      edges.emplace_back(rank - 3, rank - 1);
      break;
    case Family::E:
      if (rank < 6 || rank > 8) throw InputError("E_n requires 6 <= n <= 8");
      edges.emplace_back(0, 2);
      edges.emplace_back(1, 3);
      for (int i = 2; i + 1 < rank; ++i) edges.emplace_back(i, i + 1);
      break;
  }
  CartanData c{family, rank, std::vector<int>(static_cast<std::size_t>(rank * rank), 0)};
  for (int i = 0; i < rank; ++i) c.entries[static_cast<std::size_t>(i * rank + i)] = 2;
  for (auto [i, j] : edges) {
    c.entries[static_cast<std::size_t>(i * rank + j)] = -1;
    c.entries[static_cast<std::size_t>(j * rank + i)] = -1;
  }
  return c;
}

Weight operator-(const Weight& w) {
  Weight out = w;
  for (auto& x : out.coords) x = -x;
  return out;
}

Weight operator+(const Weight& a, const Weight& b) {
  Weight out = a;
  for (std::size_t i = 0; i < out.coords.size(); ++i) out.coords[i] += b.coords[i];
  return out;
}

Coweight operator+(const Coweight& a, const Coweight& b) {
  Coweight out = a;
  for (std::size_t i = 0; i < out.coords.size(); ++i) out.coords[i] += b.coords[i];
  return out;
}

Coweight operator-(const Coweight& a, const Coweight& b) {
  Coweight out = a;
  for (std::size_t i = 0; i < out.coords.size(); ++i) out.coords[i] -= b.coords[i];
  return out;
}

Coweight operator*(int s, const Coweight& c) {
  Coweight out = c;
  for (auto& x : out.coords) x *= s;
  return out;
}

namespace {

void check_vertex(const CartanData& cartan, int i) {
  if (i < 0 || i >= cartan.rank) throw InputError("vertex " + std::to_string(i) + " out of range");
}

}  // namespace

Weight fundamental_weight(const CartanData& cartan, int j) {
  check_vertex(cartan, j);
  Weight w{std::vector<int>(static_cast<std::size_t>(cartan.rank), 0)};
  w.coords[static_cast<std::size_t>(j)] = 1;
  return w;
}

Coweight simple_coroot(const CartanData& cartan, int i) {
  check_vertex(cartan, i);
  Coweight c{std::vector<int>(static_cast<std::size_t>(cartan.rank), 0)};
  c.coords[static_cast<std::size_t>(i)] = 1;
  return c;
}

Weight reflect_weight(const CartanData& cartan, int i, const Weight& lambda) {
  check_vertex(cartan, i);
  Weight out = lambda;
  int li = lambda[static_cast<std::size_t>(i)];
  for (int k = 0; k < cartan.rank; ++k) out.coords[static_cast<std::size_t>(k)] -= li * cartan(k, i);
  return out;
}

Coweight reflect_coweight(const CartanData& cartan, int i, const Coweight& nu) {
  check_vertex(cartan, i);
  Coweight out = nu;
  int s = 0;
  for (int j = 0; j < cartan.rank; ++j) s += cartan(i, j) * nu[static_cast<std::size_t>(j)];
  out.coords[static_cast<std::size_t>(i)] -= s;
  return out;
}

long pairing(const Weight& lambda, const Coweight& nu) {
  if (lambda.size() != nu.size()) throw InputError("pairing: rank mismatch");
  long s = 0;
  for (std::size_t i = 0; i < lambda.size(); ++i) s += static_cast<long>(lambda[i]) * nu[i];
  return s;
}

IntMatrix IntMatrix::identity(int n) {
  IntMatrix m{n, std::vector<int>(static_cast<std::size_t>(n * n), 0)};
  for (int i = 0; i < n; ++i) m.a[static_cast<std::size_t>(i * n + i)] = 1;
  return m;
}

std::vector<int> IntMatrix::apply(const std::vector<int>& v) const {
  std::vector<int> out(static_cast<std::size_t>(n), 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) out[static_cast<std::size_t>(i)] += (*this)(i, j) * v[static_cast<std::size_t>(j)];
  return out;
}

IntMatrix operator*(const IntMatrix& x, const IntMatrix& y) {
  IntMatrix out{x.n, std::vector<int>(x.a.size(), 0)};
  for (int i = 0; i < x.n; ++i)
    for (int k = 0; k < x.n; ++k) {
      int v = x(i, k);
      if (v == 0) continue;
      for (int j = 0; j < x.n; ++j) out.a[static_cast<std::size_t>(i * x.n + j)] += v * y(k, j);
    }
  return out;
}

Coweight WeylElement::act_inverse(const Coweight& nu) const {
  Coweight out{std::vector<int>(nu.size(), 0)};
  const int n = weight_action.n;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      out.coords[static_cast<std::size_t>(i)] += weight_action(j, i) * nu[static_cast<std::size_t>(j)];
  return out;
}

IntMatrix reflection_weight_matrix(const CartanData& cartan, int i) {
  IntMatrix s = IntMatrix::identity(cartan.rank);
  for (int k = 0; k < cartan.rank; ++k) s.a[static_cast<std::size_t>(k * cartan.rank + i)] -= cartan(k, i);
  return s;
}

IntMatrix reflection_coweight_matrix(const CartanData& cartan, int i) {
  IntMatrix s = IntMatrix::identity(cartan.rank);
  for (int j = 0; j < cartan.rank; ++j) s.a[static_cast<std::size_t>(i * cartan.rank + j)] -= cartan(i, j);
  return s;
}

std::vector<WeylElement> weyl_elements(const CartanData& cartan, std::size_t max_elements) {
  const int n = cartan.rank;
  std::vector<IntMatrix> sw, sc;
  for (int i = 0; i < n; ++i) {
    sw.push_back(reflection_weight_matrix(cartan, i));
    sc.push_back(reflection_coweight_matrix(cartan, i));
  }
  std::vector<WeylElement> out;
  std::map<std::vector<int>, std::size_t> seen;
  out.push_back({IntMatrix::identity(n), IntMatrix::identity(n), {}});
  seen.emplace(out.front().weight_action.a, 0);
  for (std::size_t head = 0; head < out.size(); ++head) {
    for (int i = 0; i < n; ++i) {
      IntMatrix next = sw[static_cast<std::size_t>(i)] * out[head].weight_action;
      if (seen.count(next.a)) continue;
      if (out.size() >= max_elements) {
        throw BoundExceeded("Weyl group of " + cartan.name() + " exceeds the bound of " +
                            std::to_string(max_elements) + " elements");
      }
      WeylElement w{std::move(next), sc[static_cast<std::size_t>(i)] * out[head].coweight_action, out[head].word};
      w.word.push_back(i);
      seen.emplace(w.weight_action.a, out.size());
      out.push_back(std::move(w));
    }
  }
  return out;
}

void split_supports(const Weight& gamma, std::vector<std::pair<int, int>>& positive,
                    std::vector<std::pair<int, int>>& negative) {
  positive.clear();
  negative.clear();
  for (std::size_t i = 0; i < gamma.size(); ++i) {
    if (gamma[i] > 0) positive.emplace_back(static_cast<int>(i), gamma[i]);
    if (gamma[i] < 0) negative.emplace_back(static_cast<int>(i), -gamma[i]);
  }
}

std::vector<ChamberWeight> chamber_weights(const CartanData& cartan, std::span<const WeylElement> elements) {
  std::vector<ChamberWeight> out;
  std::map<Weight, std::size_t> index;
  for (int j = 0; j < cartan.rank; ++j) {
    const Weight base = fundamental_weight(cartan, j);
    for (const auto& w : elements) {
      Weight gamma = w.act(base);
      if (index.count(gamma)) continue;
      index.emplace(gamma, out.size());
      ChamberWeight cw{gamma, j, w, {}, {}};
      split_supports(cw.weight, cw.positive, cw.negative);
      out.push_back(std::move(cw));
    }
  }
  return out;
}

std::vector<ChamberWeight> chamber_weights(const CartanData& cartan, std::size_t max_elements) {
  auto elements = weyl_elements(cartan, max_elements);
  return chamber_weights(cartan, elements);
}

bool is_admissible(const CartanData& cartan, std::span<const int> word, int j) {
  Weight mu = fundamental_weight(cartan, j);
  for (int i : word) {
    check_vertex(cartan, i);
    if (mu[static_cast<std::size_t>(i)] < 0) return false;
    mu = reflect_weight(cartan, i, mu);
  }
  return true;
}

AdmissibilityReport check_reduced_words(const CartanData& cartan, std::size_t max_elements) {
  const auto elements = weyl_elements(cartan, max_elements);
  std::map<std::vector<int>, std::size_t> length;
  for (const auto& w : elements) length.emplace(w.weight_action.a, w.length());

  const int n = cartan.rank;
  std::vector<IntMatrix> sw;
  for (int i = 0; i < n; ++i) sw.push_back(reflection_weight_matrix(cartan, i));

  AdmissibilityReport report;
  report.elements = elements.size();
  constexpr std::size_t kMaxRecorded = 16;
  std::vector<int> word;

  // ok[j]: the current word is j-admissible so far. Column j of the weight
  // action of the current element is w varpi_j.
  std::function<void(const IntMatrix&, std::vector<char>&)> visit = [&](const IntMatrix& w, std::vector<char>& ok) {
    ++report.reduced_words;
    report.checks += static_cast<std::size_t>(n);
    for (int j = 0; j < n; ++j) {
      if (!ok[static_cast<std::size_t>(j)]) {
        ++report.failures;
        if (report.counterexamples.size() < kMaxRecorded) report.counterexamples.emplace_back(word, j);
      }
    }
    const std::size_t len = word.size();
    for (int i = 0; i < n; ++i) {
      IntMatrix next = sw[static_cast<std::size_t>(i)] * w;
      if (length.at(next.a) != len + 1) continue;
      std::vector<char> next_ok = ok;
      for (int j = 0; j < n; ++j)
        if (w(i, j) < 0) next_ok[static_cast<std::size_t>(j)] = 0;
      word.push_back(i);
      visit(next, next_ok);
      word.pop_back();
    }
  };
  std::vector<char> ok(static_cast<std::size_t>(n), 1);
  visit(IntMatrix::identity(n), ok);
  return report;
}

bool dominates(const Coweight& mu, const Coweight& nu) {
  if (mu.size() != nu.size()) throw InputError("dominance: rank mismatch");
  for (std::size_t i = 0; i < mu.size(); ++i)
    if (mu[i] < nu[i]) return false;
  return true;
}

bool check_pseudo_weyl(const CartanData& cartan, const std::vector<std::pair<WeylElement, Coweight>>& family) {
  std::map<std::vector<int>, std::size_t> by_action;
  for (std::size_t k = 0; k < family.size(); ++k) {
    if (family[k].second.size() != static_cast<std::size_t>(cartan.rank))
      throw InputError("pseudo-Weyl check: coweight rank mismatch");
    by_action.emplace(family[k].first.weight_action.a, k);
  }
  for (const auto& w : weyl_elements(cartan)) {
    if (!by_action.count(w.weight_action.a))
      throw InputError("pseudo-Weyl check: no lambda_w given for w = " + format_word(w.word));
  }
  for (const auto& [w, lambda_w] : family) {
    const Coweight base = w.act_inverse(lambda_w);
    for (const auto& [v, lambda_v] : family) {
      if (!dominates(w.act_inverse(lambda_v), base)) return false;
    }
  }
  return true;
}

std::string format_word(std::span<const int> word) {
  if (word.empty()) return "e";
  std::ostringstream os;
  for (std::size_t k = word.size(); k-- > 0;) {
    os << 's' << word[k] + 1;
    if (k != 0) os << ' ';
  }
  return os.str();
}

}  // namespace mvq
