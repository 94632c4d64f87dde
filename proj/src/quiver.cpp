#include "mvq/quiver.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>

#include "mvq/errors.hpp"

namespace mvq {

Quiver::Quiver(CartanData cartan, const std::vector<std::pair<int, int>>& orientation) : cartan_(std::move(cartan)) {
  const auto edges = cartan_.edges();
  std::set<std::pair<int, int>> expected(edges.begin(), edges.end());
  std::set<std::pair<int, int>> covered;
  for (auto [s, t] : orientation) {
    auto key = std::minmax(s, t);
    if (!expected.count(key)) {
      throw InputError("orientation edge " + std::to_string(s + 1) + "->" + std::to_string(t + 1) +
                       " is not an edge of " + cartan_.name());
    }
    if (!covered.insert(key).second) throw InputError("orientation lists an edge twice");
  }
  if (covered.size() != expected.size()) throw InputError("orientation does not cover every Dynkin edge");

  const int m = static_cast<int>(orientation.size());
  for (int k = 0; k < m; ++k) arrows_.push_back({orientation[k].first, orientation[k].second, 1, m + k});
  for (int k = 0; k < m; ++k) arrows_.push_back({orientation[k].second, orientation[k].first, -1, k});
}

Quiver Quiver::standard(CartanData cartan) {
  auto edges = cartan.edges();
  return Quiver(std::move(cartan), edges);
}

std::optional<std::size_t> Quiver::arrow_between(int source, int target) const {
  for (std::size_t a = 0; a < arrows_.size(); ++a)
    if (arrows_[a].source == source && arrows_[a].target == target) return a;
  return std::nullopt;
}

std::vector<int> Quiver::path(int i, int j) const {
  const int n = num_vertices();
  if (i < 0 || i >= n || j < 0 || j >= n) throw InputError("path: vertex out of range");
  std::vector<int> parent(static_cast<std::size_t>(n), -1);
  std::queue<int> q;
  q.push(j);
  parent[static_cast<std::size_t>(j)] = j;
  while (!q.empty()) {
    int u = q.front();
    q.pop();
    for (int v : cartan_.neighbors(u)) {
      if (parent[static_cast<std::size_t>(v)] != -1) continue;
      parent[static_cast<std::size_t>(v)] = u;
      q.push(v);
    }
  }
  std::vector<int> out{i};
  while (out.back() != j) out.push_back(parent[static_cast<std::size_t>(out.back())]);
  return out;
}

bool Quiver::is_standard() const {
  for (std::size_t a = 0; a < num_edges(); ++a)
    if (arrows_[a].source > arrows_[a].target) return false;
  return true;
}

PiModule PiModule::zero(const Quiver& quiver, std::vector<int> dims) {
  if (dims.size() != static_cast<std::size_t>(quiver.num_vertices())) throw InputError("dimension vector length mismatch");
  PiModule m{quiver, std::move(dims), {}};
  for (const auto& a : quiver.arrows()) {
    m.maps.emplace_back(static_cast<std::size_t>(m.dims[static_cast<std::size_t>(a.target)]),
                        static_cast<std::size_t>(m.dims[static_cast<std::size_t>(a.source)]));
  }
  return m;
}

int PiModule::total_dim() const {
  int s = 0;
  for (int d : dims) s += d;
  return s;
}

bool PiModule::is_kq() const {
  for (std::size_t a = 0; a < maps.size(); ++a)
    if (quiver.arrow(a).sign < 0 && !maps[a].is_zero()) return false;
  return true;
}

namespace {

void check_shapes(const PiModule& m) {
  const auto& q = m.quiver;
  if (m.dims.size() != static_cast<std::size_t>(q.num_vertices())) throw InputError("dimension vector length mismatch");
  for (int d : m.dims)
    if (d < 0) throw InputError("negative dimension");
  if (m.maps.size() != q.arrows().size()) throw InputError("expected one matrix per arrow of the doubled quiver");
  for (std::size_t a = 0; a < m.maps.size(); ++a) {
    const auto& arr = q.arrow(a);
    if (m.maps[a].rows() != static_cast<std::size_t>(m.dims[static_cast<std::size_t>(arr.target)]) ||
        m.maps[a].cols() != static_cast<std::size_t>(m.dims[static_cast<std::size_t>(arr.source)])) {
      throw InputError("map " + std::to_string(arr.source + 1) + "->" + std::to_string(arr.target + 1) +
                       " has the wrong shape");
    }
  }
}

}  // namespace

ValidationReport validate_module(const PiModule& module) {
  check_shapes(module);
  ValidationReport report;
  const auto& q = module.quiver;
  for (int i = 0; i < q.num_vertices(); ++i) {
    const auto d = static_cast<std::size_t>(module.dims[static_cast<std::size_t>(i)]);
    QMatrix rel(d, d);
    for (std::size_t a = 0; a < q.arrows().size(); ++a) {
      const auto& arr = q.arrow(a);
      if (arr.target != i) continue;
      QMatrix prod = module.maps[a] * module.maps[static_cast<std::size_t>(arr.star)];
      rel = arr.sign > 0 ? rel + prod : rel - prod;
    }
    if (!rel.is_zero()) report.violations.push_back(i);
  }
  report.ok = report.violations.empty();
  return report;
}

void require_valid(const PiModule& module) {
  auto report = validate_module(module);
  if (report.ok) return;
  std::string list;
  for (int v : report.violations) list += (list.empty() ? "" : ", ") + std::to_string(v + 1);
  throw ValidationError("preprojective relation fails at vertices " + list, report.violations);
}

void check_intervals(const CartanData& cartan, const IntervalSpec& spec) {
  for (const auto& iv : spec) {
    if (iv.first < 0 || iv.last >= cartan.rank || iv.first > iv.last)
      throw InputError("interval [" + std::to_string(iv.first + 1) + "," + std::to_string(iv.last + 1) +
                       "] is not within 1.." + std::to_string(cartan.rank));
    if (iv.mult < 1) throw InputError("interval multiplicity must be positive");
  }
}

PiModule build_from_intervals(const CartanData& cartan, const IntervalSpec& spec) {
  if (cartan.family != Family::A) throw InputError("interval modules are defined for type A only");
  check_intervals(cartan, spec);
  const int n = cartan.rank;
  // basis[i] lists the summand copy owning each basis vector of M_i.
  std::vector<std::vector<std::size_t>> basis(static_cast<std::size_t>(n));
  std::size_t copy = 0;
  for (const auto& iv : spec) {
    for (int k = 0; k < iv.mult; ++k, ++copy)
      for (int i = iv.first; i <= iv.last; ++i) basis[static_cast<std::size_t>(i)].push_back(copy);
  }
  std::vector<int> dims;
  for (const auto& b : basis) dims.push_back(static_cast<int>(b.size()));
  PiModule m = PiModule::zero(Quiver::standard(cartan), dims);
  for (int i = 0; i + 1 < n; ++i) {
    const auto a = static_cast<std::size_t>(i);  // standard orientation: arrow i is i -> i+1
    const auto& src = basis[static_cast<std::size_t>(i)];
    const auto& dst = basis[static_cast<std::size_t>(i + 1)];
    for (std::size_t c = 0; c < src.size(); ++c) {
      auto it = std::find(dst.begin(), dst.end(), src[c]);
      if (it != dst.end()) m.maps[a](static_cast<std::size_t>(it - dst.begin()), c) = 1;
    }
  }
  return m;
}

PiModule direct_sum(const PiModule& m, const PiModule& n) {
  if (!(m.quiver == n.quiver)) throw InputError("direct sum: modules live on different quivers");
  check_shapes(m);
  check_shapes(n);
  PiModule out{m.quiver, m.dims, {}};
  for (std::size_t i = 0; i < out.dims.size(); ++i) out.dims[i] += n.dims[i];
  for (std::size_t a = 0; a < m.maps.size(); ++a) out.maps.push_back(block_diagonal(m.maps[a], n.maps[a]));
  return out;
}

QMatrix path_map(const PiModule& module, int i, int j) {
  const auto& q = module.quiver;
  const auto path = q.path(i, j);
  QMatrix acc = QMatrix::identity(static_cast<std::size_t>(module.dims[static_cast<std::size_t>(i)]));
  for (std::size_t k = 0; k + 1 < path.size(); ++k) {
    auto a = q.arrow_between(path[k], path[k + 1]);
    acc = module.maps[*a] * acc;
  }
  return acc;
}

QMatrix phi_gamma(const PiModule& module, const Weight& gamma) {
  const int n = module.quiver.num_vertices();
  if (gamma.size() != static_cast<std::size_t>(n)) throw InputError("chamber weight rank mismatch");
  std::vector<int> src, dst;
  for (int i = 0; i < n; ++i) {
    int g = gamma[static_cast<std::size_t>(i)];
    if (g > 1 || g < -1)
      throw UnsupportedInput("chamber weights with a coordinate of absolute value >= 2 are not supported");
    if (g < 0) src.push_back(i);
    if (g > 0) dst.push_back(i);
  }
  auto dim = [&](int v) { return static_cast<std::size_t>(module.dims[static_cast<std::size_t>(v)]); };
  std::size_t rows = 0, cols = 0;
  for (int j : dst) rows += dim(j);
  for (int i : src) cols += dim(i);
  QMatrix out(rows, cols);
  std::size_t r = 0;
  for (int j : dst) {
    std::size_t c = 0;
    for (int i : src) {
      out.set_block(r, c, path_map(module, i, j));
      c += dim(i);
    }
    r += dim(j);
  }
  return out;
}

int d_gamma(const PiModule& module, const Weight& gamma) {
  return static_cast<int>(phi_gamma(module, -gamma).kernel_dim());
}

int PolytopeData::A_of(const Weight& gamma) const {
  for (std::size_t k = 0; k < gammas.size(); ++k)
    if (gammas[k].weight == gamma) return A[k];
  throw InputError("not a chamber weight");
}

std::vector<std::pair<WeylElement, Coweight>> PolytopeData::family() const {
  std::vector<std::pair<WeylElement, Coweight>> out;
  for (std::size_t k = 0; k < elements.size(); ++k) out.emplace_back(elements[k], lambda[k]);
  return out;
}

PolytopeData polytope_data(const PiModule& module) {
  const auto& cartan = module.quiver.cartan();
  PolytopeData data;
  data.elements = weyl_elements(cartan);
  data.gammas = chamber_weights(cartan, data.elements);
  std::map<Weight, int> a_of;
  for (const auto& g : data.gammas) {
    int a = -static_cast<int>(phi_gamma(module, g.weight).kernel_dim());
    data.A.push_back(a);
    a_of.emplace(g.weight, a);
  }
  const int n = cartan.rank;
  for (const auto& w : data.elements) {
    Coweight lambda{std::vector<int>(static_cast<std::size_t>(n), 0)};
    for (int i = 0; i < n; ++i) {
      const int a = a_of.at(w.act(fundamental_weight(cartan, i)));
      lambda = lambda + a * w.act(simple_coroot(cartan, i));
    }
    data.lambda.push_back(std::move(lambda));
  }
  return data;
}

}  // namespace mvq
