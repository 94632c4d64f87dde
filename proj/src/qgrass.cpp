#include "mvq/qgrass.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "mvq/errors.hpp"

namespace mvq {

BigInt PoincarePoly::evaluate(const BigInt& q) const {
  BigInt acc = 0;
  for (std::size_t k = coeffs.size(); k-- > 0;) acc = acc * q + coeffs[k];
  return acc;
}

std::int64_t PoincarePoly::euler() const { return std::accumulate(coeffs.begin(), coeffs.end(), std::int64_t{0}); }

std::vector<std::int64_t> PoincarePoly::betti() const {
  std::vector<std::int64_t> out;
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    if (k) out.push_back(0);
    out.push_back(coeffs[k]);
  }
  return out;
}

bool is_submodule(const PiModule& module, std::span<const QMatrix> subspaces) {
  const auto& q = module.quiver;
  if (subspaces.size() != static_cast<std::size_t>(q.num_vertices())) throw InputError("one subspace per vertex expected");
  for (std::size_t i = 0; i < subspaces.size(); ++i)
    if (subspaces[i].rows() != static_cast<std::size_t>(module.dims[i]))
      throw InputError("subspace at vertex " + std::to_string(i + 1) + " has the wrong ambient dimension");
  for (std::size_t a = 0; a < q.arrows().size(); ++a) {
    const auto& arr = q.arrow(a);
    const QMatrix image = module.maps[a] * subspaces[static_cast<std::size_t>(arr.source)];
    if (!column_span_contains(subspaces[static_cast<std::size_t>(arr.target)], image)) return false;
  }
  return true;
}

std::int64_t euler_cc(const CartanData& cartan, const IntervalSpec& spec, const DimVector& e) {
  if (cartan.family != Family::A) throw InputError("Euler characteristic by convolution needs type A intervals");
  check_intervals(cartan, spec);
  if (e.size() != static_cast<std::size_t>(cartan.rank)) throw InputError("dimension vector e has the wrong length");
  for (int x : e)
    if (x < 0) throw InputError("dimension vector entries must be nonnegative");

  using Vec = std::vector<int>;
  std::map<Vec, std::int64_t> dp{{Vec(e.size(), 0), 1}};
  for (const auto& iv : spec) {
    // Submodule dimension vectors of one copy of [first, last].
    std::vector<Vec> options{Vec(e.size(), 0)};
    for (int c = iv.first; c <= iv.last; ++c) {
      Vec v(e.size(), 0);
      for (int i = c; i <= iv.last; ++i) v[static_cast<std::size_t>(i)] = 1;
      options.push_back(std::move(v));
    }
    for (int copy = 0; copy < iv.mult; ++copy) {
      std::map<Vec, std::int64_t> next;
      for (const auto& [partial, count] : dp) {
        for (const auto& opt : options) {
          Vec sum = partial;
          bool fits = true;
          for (std::size_t i = 0; i < sum.size(); ++i) {
            sum[i] += opt[i];
            if (sum[i] > e[i]) fits = false;
          }
          if (fits) next[sum] += count;
        }
      }
      dp = std::move(next);
    }
  }
  auto it = dp.find(e);
  return it == dp.end() ? 0 : it->second;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p = 2; p * p <= n; ++p)
    if (n % p == 0) return false;
  return true;
}

BigInt gaussian_binomial(int n, int k, const BigInt& q) {
  if (k < 0 || k > n) return 0;
  BigInt num = 1, den = 1;
  for (int i = 0; i < k; ++i) {
    BigInt a, b;
    mpz_pow_ui(a.get_mpz_t(), q.get_mpz_t(), static_cast<unsigned long>(n - i));
    mpz_pow_ui(b.get_mpz_t(), q.get_mpz_t(), static_cast<unsigned long>(i + 1));
    num *= a - 1;
    den *= b - 1;
  }
  return num / den;
}

namespace {

// Dense matrix over F_p, p < 2^31.
struct FpMatrix {
  std::size_t rows = 0, cols = 0;
  std::vector<std::uint64_t> a;

  FpMatrix() = default;
  FpMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c, 0) {}
  std::uint64_t& operator()(std::size_t r, std::size_t c) { return a[r * cols + c]; }
  std::uint64_t operator()(std::size_t r, std::size_t c) const { return a[r * cols + c]; }
};

std::uint64_t pow_mod(std::uint64_t b, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1;
  b %= p;
  while (e) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return r;
}

std::uint64_t inv_mod(std::uint64_t x, std::uint64_t p) { return pow_mod(x, p - 2, p); }

FpMatrix multiply(const FpMatrix& x, const FpMatrix& y, std::uint64_t p) {
  FpMatrix out(x.rows, y.cols);
  for (std::size_t i = 0; i < x.rows; ++i)
    for (std::size_t k = 0; k < x.cols; ++k) {
      const std::uint64_t v = x(i, k);
      if (!v) continue;
      for (std::size_t j = 0; j < y.cols; ++j) out(i, j) = (out(i, j) + v * y(k, j)) % p;
    }
  return out;
}

bool is_zero(const FpMatrix& m) {
  return std::all_of(m.a.begin(), m.a.end(), [](std::uint64_t v) { return v == 0; });
}

std::size_t rank(FpMatrix m, std::uint64_t p) {
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols && r < m.rows; ++c) {
    std::size_t piv = r;
    while (piv < m.rows && m(piv, c) == 0) ++piv;
    if (piv == m.rows) continue;
    for (std::size_t j = 0; j < m.cols; ++j) std::swap(m(piv, j), m(r, j));
    const std::uint64_t inv = inv_mod(m(r, c), p);
    for (std::size_t i = r + 1; i < m.rows; ++i) {
      if (!m(i, c)) continue;
      const std::uint64_t f = m(i, c) * inv % p;
      for (std::size_t j = c; j < m.cols; ++j) m(i, j) = (m(i, j) + (p - f) * m(r, j)) % p;
    }
    ++r;
  }
  return r;
}

FpMatrix hstack(const std::vector<FpMatrix>& parts, std::size_t rows) {
  std::size_t cols = 0;
  for (const auto& m : parts) cols += m.cols;
  FpMatrix out(rows, cols);
  std::size_t c0 = 0;
  for (const auto& m : parts) {
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < m.cols; ++j) out(i, c0 + j) = m(i, j);
    c0 += m.cols;
  }
  return out;
}

FpMatrix vstack(const std::vector<FpMatrix>& parts, std::size_t cols) {
  std::size_t rows = 0;
  for (const auto& m : parts) rows += m.rows;
  FpMatrix out(rows, cols);
  std::size_t r0 = 0;
  for (const auto& m : parts) {
    for (std::size_t i = 0; i < m.rows; ++i)
      for (std::size_t j = 0; j < cols; ++j) out(r0 + i, j) = m(i, j);
    r0 += m.rows;
  }
  return out;
}

FpMatrix reduce_mod(const QMatrix& m, std::uint64_t p) {
  FpMatrix out(m.rows(), m.cols());
  const BigInt pz(static_cast<unsigned long>(p));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const Rational& x = m(i, j);
      BigInt num = x.get_num() % pz;
      if (num < 0) num += pz;
      BigInt den = x.get_den() % pz;
      if (den == 0) throw InputError("matrix entry " + to_string(x) + " has a denominator divisible by " + std::to_string(p));
      const std::uint64_t n = num.get_ui(), d = den.get_ui();
      out(i, j) = n * inv_mod(d, p) % p;
    }
  return out;
}

// A subspace N of F_p^n given by a basis (n x k, columns) and an annihilator
// ((n-k) x n) whose kernel is exactly N.
struct Subspace {
  FpMatrix basis;
  FpMatrix annihilator;
};

// All k-dimensional subspaces of F_p^n, one per reduced row echelon form.
std::vector<Subspace> all_subspaces(std::size_t n, std::size_t k, std::uint64_t p, std::uint64_t limit) {
  std::vector<Subspace> out;
  std::vector<char> is_pivot(n, 0);
  std::vector<std::size_t> pivots(k);
  std::iota(pivots.begin(), pivots.end(), 0);
  while (true) {
    std::fill(is_pivot.begin(), is_pivot.end(), 0);
    for (auto c : pivots) is_pivot[c] = 1;
    // Free slots: (row r, column c) with c > pivots[r] and c not a pivot.
    std::vector<std::pair<std::size_t, std::size_t>> free;
    for (std::size_t r = 0; r < k; ++r)
      for (std::size_t c = pivots[r] + 1; c < n; ++c)
        if (!is_pivot[c]) free.emplace_back(r, c);
    std::vector<std::uint64_t> vals(free.size(), 0);
    while (true) {
      if (out.size() >= limit) throw BoundExceeded("subspace enumeration exceeds the configured bound");
      Subspace s{FpMatrix(n, k), FpMatrix(n - k, n)};
      for (std::size_t r = 0; r < k; ++r) s.basis(pivots[r], r) = 1;
      for (std::size_t f = 0; f < free.size(); ++f) s.basis(free[f].second, free[f].first) = vals[f];
      // x lies in N iff x_c = sum_r x_{pivot_r} R_r[c] at every non-pivot c.
      std::size_t row = 0;
      for (std::size_t c = 0; c < n; ++c) {
        if (is_pivot[c]) continue;
        s.annihilator(row, c) = 1;
        for (std::size_t r = 0; r < k; ++r) s.annihilator(row, pivots[r]) = (p - s.basis(c, r)) % p;
        ++row;
      }
      out.push_back(std::move(s));
      std::size_t f = 0;
      while (f < vals.size() && ++vals[f] == p) vals[f++] = 0;
      if (f == vals.size()) break;
    }
    // Next pivot combination.
    std::size_t i = k;
    while (i > 0 && pivots[i - 1] == n - k + i - 1) --i;
    if (i == 0) break;
    ++pivots[i - 1];
    for (std::size_t j = i; j < k; ++j) pivots[j] = pivots[j - 1] + 1;
  }
  return out;
}

struct FpModule {
  std::vector<int> dims;
  std::vector<FpMatrix> maps;
};

// Odometer over the Cartesian product of per-vertex subspace lists.
template <class Visit>
void for_each_tuple(const std::vector<int>& vertices, const std::vector<std::vector<Subspace>>& lists,
                    std::uint64_t limit, Visit&& visit) {
  std::vector<std::size_t> idx(vertices.size(), 0);
  for (int v : vertices)
    if (lists[static_cast<std::size_t>(v)].empty()) return;
  std::uint64_t visited = 0;
  while (true) {
    if (++visited > limit) throw BoundExceeded("graded subspace enumeration exceeds the configured bound");
    visit(idx);
    std::size_t k = 0;
    while (k < idx.size() && ++idx[k] == lists[static_cast<std::size_t>(vertices[k])].size()) idx[k++] = 0;
    if (k == idx.size()) break;
  }
}

BigInt count_brute_force(const PiModule& module, const FpModule& fp, const DimVector& e, std::uint64_t p,
                         const CountOptions& options) {
  const auto& q = module.quiver;
  const int n = q.num_vertices();
  std::vector<std::vector<Subspace>> lists;
  for (int i = 0; i < n; ++i)
    lists.push_back(all_subspaces(static_cast<std::size_t>(fp.dims[static_cast<std::size_t>(i)]),
                                  static_cast<std::size_t>(e[static_cast<std::size_t>(i)]), p, options.max_enumeration));
  std::vector<int> vertices(static_cast<std::size_t>(n));
  std::iota(vertices.begin(), vertices.end(), 0);
  BigInt count = 0;
  for_each_tuple(vertices, lists, options.max_enumeration, [&](const std::vector<std::size_t>& idx) {
    for (std::size_t a = 0; a < q.arrows().size(); ++a) {
      const auto& arr = q.arrow(a);
      const auto& src = lists[static_cast<std::size_t>(arr.source)][idx[static_cast<std::size_t>(arr.source)]];
      const auto& dst = lists[static_cast<std::size_t>(arr.target)][idx[static_cast<std::size_t>(arr.target)]];
      if (!is_zero(multiply(dst.annihilator, multiply(fp.maps[a], src.basis, p), p))) return;
    }
    ++count;
  });
  return count;
}

BigInt count_fibered(const PiModule& module, const FpModule& fp, const DimVector& e, std::uint64_t p,
                     const CountOptions& options) {
  const auto& q = module.quiver;
  const auto& cartan = q.cartan();
  const int n = q.num_vertices();
  const BigInt pz(static_cast<unsigned long>(p));
  auto gr = [&](int i) {
    return gaussian_binomial(fp.dims[static_cast<std::size_t>(i)], e[static_cast<std::size_t>(i)], pz);
  };

  // Two-colour the tree and enumerate the cheaper class.
  std::vector<int> colour(static_cast<std::size_t>(n), -1);
  for (int root = 0; root < n; ++root) {
    if (colour[static_cast<std::size_t>(root)] != -1) continue;
    colour[static_cast<std::size_t>(root)] = 0;
    std::vector<int> stack{root};
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (int v : cartan.neighbors(u)) {
        if (colour[static_cast<std::size_t>(v)] != -1) continue;
        colour[static_cast<std::size_t>(v)] = 1 - colour[static_cast<std::size_t>(u)];
        stack.push_back(v);
      }
    }
  }
  std::vector<int> cls[2];
  BigInt cost[2] = {1, 1};
  for (int i = 0; i < n; ++i) {
    cls[colour[static_cast<std::size_t>(i)]].push_back(i);
    cost[colour[static_cast<std::size_t>(i)]] *= gr(i);
  }
  const int pick = cost[0] <= cost[1] ? 0 : 1;
  const std::vector<int>& enumerated = cls[pick];
  const std::vector<int>& fibred = cls[1 - pick];
  if (cost[pick] > BigInt(static_cast<unsigned long>(options.max_enumeration)))
    throw BoundExceeded("graded subspace enumeration exceeds the configured bound");

  std::vector<std::vector<Subspace>> lists(static_cast<std::size_t>(n));
  for (int i : enumerated)
    lists[static_cast<std::size_t>(i)] =
        all_subspaces(static_cast<std::size_t>(fp.dims[static_cast<std::size_t>(i)]),
                      static_cast<std::size_t>(e[static_cast<std::size_t>(i)]), p, options.max_enumeration);

  // Gaussian binomials needed per fibred vertex, indexed by (dim V - dim U, e_j - dim U).
  std::map<std::pair<int, int>, BigInt> gauss_cache;
  auto gauss = [&](int a, int b) -> const BigInt& {
    auto key = std::make_pair(a, b);
    auto it = gauss_cache.find(key);
    if (it == gauss_cache.end()) it = gauss_cache.emplace(key, gaussian_binomial(a, b, pz)).first;
    return it->second;
  };

  BigInt total = 0;
  std::vector<int> slot(static_cast<std::size_t>(n), -1);
  for (std::size_t k = 0; k < enumerated.size(); ++k) slot[static_cast<std::size_t>(enumerated[k])] = static_cast<int>(k);

  for_each_tuple(enumerated, lists, options.max_enumeration, [&](const std::vector<std::size_t>& idx) {
    BigInt product = 1;
    for (int j : fibred) {
      const auto dj = static_cast<std::size_t>(fp.dims[static_cast<std::size_t>(j)]);
      std::vector<FpMatrix> images, constraints;
      for (int i : cartan.neighbors(j)) {
        const auto& sub = lists[static_cast<std::size_t>(i)][idx[static_cast<std::size_t>(slot[static_cast<std::size_t>(i)])]];
        auto in = q.arrow_between(i, j);
        auto out = q.arrow_between(j, i);
        images.push_back(multiply(fp.maps[*in], sub.basis, p));
        constraints.push_back(multiply(sub.annihilator, fp.maps[*out], p));
      }
      const FpMatrix u = hstack(images, dj);
      const FpMatrix kmat = vstack(constraints, dj);
      const int dim_u = static_cast<int>(rank(u, p));
      const int dim_v = static_cast<int>(dj - rank(kmat, p));
      const int ej = e[static_cast<std::size_t>(j)];
      if (ej < dim_u || ej > dim_v || !is_zero(multiply(kmat, u, p))) return;
      product *= gauss(dim_v - dim_u, ej - dim_u);
    }
    total += product;
  });
  return total;
}

}  // namespace

std::vector<std::uint64_t> admissible_primes(const PiModule& module, std::size_t count) {
  // Matrices whose ranks determine the reduction: arrows, path maps and every
  // phi_gamma the module's type supports.
  std::vector<QMatrix> witnesses = module.maps;
  const int n = module.quiver.num_vertices();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j) witnesses.push_back(path_map(module, i, j));
  for (const auto& g : chamber_weights(module.quiver.cartan())) {
    try {
      witnesses.push_back(phi_gamma(module, g.weight));
    } catch (const UnsupportedInput&) {
    }
  }
  std::vector<std::size_t> ranks;
  for (const auto& m : witnesses) ranks.push_back(m.rank());

  std::vector<std::uint64_t> out;
  for (std::uint64_t p = 2; out.size() < count; ++p) {
    if (!is_prime(p)) continue;
    bool ok = true;
    for (const auto& m : module.maps)
      for (std::size_t i = 0; i < m.rows() && ok; ++i)
        for (std::size_t j = 0; j < m.cols() && ok; ++j)
          if (mpz_divisible_ui_p(m(i, j).get_den_mpz_t(), static_cast<unsigned long>(p))) ok = false;
    for (std::size_t k = 0; k < witnesses.size() && ok; ++k)
      if (rank(reduce_mod(witnesses[k], p), p) != ranks[k]) ok = false;
    if (ok) out.push_back(p);
  }
  return out;
}

BigInt count_points_fq(const PiModule& module, const DimVector& e, std::uint64_t q, const CountOptions& options) {
  if (!is_prime(q) || q >= (1ULL << 31)) throw InputError("q must be a prime below 2^31");
  const int n = module.quiver.num_vertices();
  if (e.size() != static_cast<std::size_t>(n)) throw InputError("dimension vector e has the wrong length");
  for (int x : e)
    if (x < 0) throw InputError("dimension vector entries must be nonnegative");
  if (module.total_dim() > options.max_total_dim)
    throw BoundExceeded("total dimension " + std::to_string(module.total_dim()) + " exceeds the point-count bound " +
                        std::to_string(options.max_total_dim));
  for (int i = 0; i < n; ++i)
    if (e[static_cast<std::size_t>(i)] > module.dims[static_cast<std::size_t>(i)]) return 0;

  FpModule fp{module.dims, {}};
  for (const auto& m : module.maps) fp.maps.push_back(reduce_mod(m, q));
  return options.method == CountMethod::BruteForce ? count_brute_force(module, fp, e, q, options)
                                                   : count_fibered(module, fp, e, q, options);
}

std::vector<Rational> interpolate(std::span<const BigInt> xs, std::span<const BigInt> ys) {
  if (xs.size() != ys.size()) throw InputError("interpolation: sample count mismatch");
  const std::size_t m = xs.size();
  // Divided differences.
  std::vector<Rational> c(m);
  for (std::size_t i = 0; i < m; ++i) c[i] = Rational(ys[i]);
  for (std::size_t j = 1; j < m; ++j)
    for (std::size_t i = m - 1; i >= j; --i) {
      c[i] = (c[i] - c[i - 1]) / Rational(xs[i] - xs[i - j]);
      if (i == j) break;
    }
  // Expand the Newton form, innermost first.
  std::vector<Rational> poly;
  for (std::size_t k = m; k-- > 0;) {
    // poly = poly * (x - xs[k]) + c[k]
    std::vector<Rational> next(poly.size() + 1);
    for (std::size_t d = 0; d < poly.size(); ++d) {
      next[d + 1] += poly[d];
      next[d] -= poly[d] * Rational(xs[k]);
    }
    next[0] += c[k];
    poly = std::move(next);
  }
  while (!poly.empty() && sgn(poly.back()) == 0) poly.pop_back();
  return poly;
}

PoincarePoly poincare_poly(const PiModule& module, const DimVector& e, const PoincareOptions& options) {
  const int n = module.quiver.num_vertices();
  if (e.size() != static_cast<std::size_t>(n)) throw InputError("dimension vector e has the wrong length");
  int ambient = 0;
  for (int i = 0; i < n; ++i) {
    const int ei = e[static_cast<std::size_t>(i)], di = module.dims[static_cast<std::size_t>(i)];
    if (ei < 0) throw InputError("dimension vector entries must be nonnegative");
    if (ei > di) return {};
    ambient += ei * (di - ei);
  }
  const std::size_t samples = static_cast<std::size_t>(ambient) + 1 + (options.check_extra_prime ? 1 : 0);
  const auto primes = admissible_primes(module, samples);
  std::vector<BigInt> xs, ys;
  for (auto p : primes) {
    xs.emplace_back(static_cast<unsigned long>(p));
    ys.push_back(count_points_fq(module, e, p, options.count));
  }
  const std::size_t fit = static_cast<std::size_t>(ambient) + 1;
  const auto coeffs = interpolate(std::span(xs).first(fit), std::span(ys).first(fit));
  PoincarePoly poly;
  for (const auto& c : coeffs) {
    if (c.get_den() != 1 || sgn(c) < 0)
      throw PavingViolation("point counts interpolate to a coefficient " + to_string(c) +
                            ", not a nonnegative integer");
    if (!c.get_num().fits_slong_p()) throw PavingViolation("interpolated coefficient out of range");
    poly.coeffs.push_back(c.get_num().get_si());
  }
  if (options.check_extra_prime && poly.evaluate(xs.back()) != ys.back()) {
    throw PavingViolation("point count at q = " + xs.back().get_str() + " disagrees with the interpolant");
  }
  return poly;
}

CohomologySummary total_cohomology(const PiModule& module, const DimVector& e, const PoincareOptions& options) {
  const auto poly = poincare_poly(module, e, options);
  return {poly.euler(), poly.betti()};
}

}  // namespace mvq
