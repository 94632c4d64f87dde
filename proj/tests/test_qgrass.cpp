#include <random>
#include <set>

#include "doctest.h"
#include "mvq/errors.hpp"
#include "mvq/qgrass.hpp"

using namespace mvq;

namespace {

// Subspaces of F_2^d as sorted lists of bit-vectors, by closing every
// generating set.
std::vector<std::vector<unsigned>> f2_subspaces(int d, int k) {
  std::set<std::vector<unsigned>> found;
  const unsigned n = 1u << d;
  std::vector<std::vector<unsigned>> frontier = {{0}};
  found.insert({0});
  while (!frontier.empty()) {
    std::vector<std::vector<unsigned>> next;
    for (const auto& s : frontier)
      for (unsigned v = 1; v < n; ++v) {
        if (std::find(s.begin(), s.end(), v) != s.end()) continue;
        std::set<unsigned> closed(s.begin(), s.end());
        for (unsigned x : s) closed.insert(x ^ v);
        std::vector<unsigned> t(closed.begin(), closed.end());
        if (found.insert(t).second) next.push_back(t);
      }
    frontier = std::move(next);
  }
  std::vector<std::vector<unsigned>> out;
  for (const auto& s : found)
    if (s.size() == (1u << k)) out.push_back(s);
  return out;
}

unsigned apply_f2(const QMatrix& m, unsigned v) {
  unsigned out = 0;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    int bit = 0;
    for (std::size_t c = 0; c < m.cols(); ++c)
      if ((v >> c) & 1u) bit ^= static_cast<int>(mpz_fdiv_ui(m(r, c).get_num_mpz_t(), 2));
    out |= static_cast<unsigned>(bit) << r;
  }
  return out;
}

// Number of F_2-points of Gr_e(M) by enumerating subspaces as sets of vectors.
long f2_oracle(const PiModule& m, const DimVector& e) {
  const auto n = static_cast<std::size_t>(m.quiver.num_vertices());
  std::vector<std::vector<std::vector<unsigned>>> lists;
  for (std::size_t i = 0; i < n; ++i) lists.push_back(f2_subspaces(m.dims[i], e[i]));
  std::vector<std::size_t> idx(n, 0);
  for (const auto& l : lists)
    if (l.empty()) return 0;
  long count = 0;
  while (true) {
    bool ok = true;
    for (std::size_t a = 0; a < m.maps.size() && ok; ++a) {
      const auto& arr = m.quiver.arrow(a);
      const auto& src = lists[static_cast<std::size_t>(arr.source)][idx[static_cast<std::size_t>(arr.source)]];
      const auto& dst = lists[static_cast<std::size_t>(arr.target)][idx[static_cast<std::size_t>(arr.target)]];
      for (unsigned v : src)
        if (!std::binary_search(dst.begin(), dst.end(), apply_f2(m.maps[a], v))) ok = false;
    }
    count += ok;
    std::size_t k = 0;
    while (k < n && ++idx[k] == lists[k].size()) idx[k++] = 0;
    if (k == n) break;
  }
  return count;
}

PiModule random_oriented(std::mt19937& rng, const CartanData& c, int max_dim, int max_total) {
  std::uniform_int_distribution<int> dim(0, max_dim), coin(0, 1), entry(-1, 1);
  std::vector<int> dims;
  int total = 0;
  for (int i = 0; i < c.rank; ++i) {
    dims.push_back(std::min(dim(rng), max_total - total));
    total += dims.back();
  }
  PiModule m = PiModule::zero(Quiver::standard(c), dims);
  for (std::size_t k = 0; k < m.quiver.num_edges(); ++k) {
    const std::size_t a = coin(rng) ? k : k + m.quiver.num_edges();
    for (std::size_t r = 0; r < m.maps[a].rows(); ++r)
      for (std::size_t s = 0; s < m.maps[a].cols(); ++s) m.maps[a](r, s) = entry(rng);
  }
  return m;
}

std::vector<DimVector> all_e(const std::vector<int>& dims) {
  std::vector<DimVector> out{{}};
  for (int d : dims) {
    std::vector<DimVector> next;
    for (const auto& p : out)
      for (int x = 0; x <= d; ++x) {
        auto q = p;
        q.push_back(x);
        next.push_back(q);
      }
    out = std::move(next);
  }
  return out;
}

BigInt pascal_gauss(int n, int k, long q) {
  if (k < 0 || k > n) return 0;
  if (k == 0 || k == n) return 1;
  BigInt qk;
  mpz_ui_pow_ui(qk.get_mpz_t(), static_cast<unsigned long>(q), static_cast<unsigned long>(k));
  return pascal_gauss(n - 1, k - 1, q) + qk * pascal_gauss(n - 1, k, q);
}

}  // namespace

TEST_CASE("gaussian binomials") {
  for (long q : {2L, 3L, 5L, 7L})
    for (int n = 0; n <= 7; ++n)
      for (int k = -1; k <= n + 1; ++k) CHECK(gaussian_binomial(n, k, q) == pascal_gauss(n, k, q));
}

TEST_CASE("primes") {
  CHECK(is_prime(2));
  CHECK(is_prime(29));
  CHECK_FALSE(is_prime(1));
  CHECK_FALSE(is_prime(91));
  PiModule m = PiModule::zero(Quiver::standard(cartan_matrix(Family::A, 2)), {1, 1});
  m.maps[0](0, 0) = Rational(2, 3);
  CHECK(admissible_primes(m, 4) == std::vector<std::uint64_t>{5, 7, 11, 13});
  CHECK_THROWS_AS(count_points_fq(m, {0, 1}, 3), InputError);
  CHECK_THROWS_AS(count_points_fq(m, {0, 1}, 4), InputError);
  CHECK(count_points_fq(m, {0, 1}, 5) == 1);
}

TEST_CASE("point counts against an F_2 subset oracle") {
  std::mt19937 rng(23);
  const std::vector<CartanData> types = {cartan_matrix(Family::A, 1), cartan_matrix(Family::A, 2),
                                         cartan_matrix(Family::A, 3), cartan_matrix(Family::D, 4)};
  for (const auto& c : types)
    for (int trial = 0; trial < 6; ++trial) {
      const auto m = random_oriented(rng, c, 3, 6);
      for (const auto& e : all_e(m.dims)) {
        const long expected = f2_oracle(m, e);
        CountOptions fib, brute;
        brute.method = CountMethod::BruteForce;
        CHECK(count_points_fq(m, e, 2, fib) == expected);
        CHECK(count_points_fq(m, e, 2, brute) == expected);
      }
    }
}

TEST_CASE("fibered and brute-force counts agree at odd primes") {
  std::mt19937 rng(29);
  for (int n = 1; n <= 3; ++n) {
    const auto c = cartan_matrix(Family::A, n);
    for (int trial = 0; trial < 5; ++trial) {
      const auto m = random_oriented(rng, c, 2, 5);
      for (const auto& e : all_e(m.dims)) {
        CountOptions brute;
        brute.method = CountMethod::BruteForce;
        for (std::uint64_t q : {3, 5}) CHECK(count_points_fq(m, e, q) == count_points_fq(m, e, q, brute));
      }
    }
  }
}

TEST_CASE("point-count bounds and edge cases") {
  const auto c = cartan_matrix(Family::A, 1);
  const auto m = build_from_intervals(c, {{0, 0, 3}});
  CHECK(count_points_fq(m, {4}, 2) == 0);
  CHECK(count_points_fq(m, {0}, 2) == 1);
  CHECK_THROWS_AS(count_points_fq(m, {-1}, 2), InputError);
  CountOptions small;
  small.max_total_dim = 2;
  CHECK_THROWS_AS(count_points_fq(m, {1}, 2, small), BoundExceeded);
  CountOptions tight;
  tight.method = CountMethod::BruteForce;
  tight.max_enumeration = 3;
  CHECK_THROWS_AS(count_points_fq(m, {1}, 2, tight), BoundExceeded);
}

TEST_CASE("interpolation") {
  // 3 + 2x^2 at x = 2, 3, 5.
  std::vector<BigInt> xs = {2, 3, 5}, ys = {11, 21, 53};
  const auto c = interpolate(xs, ys);
  REQUIRE(c.size() == 3);
  CHECK(c[0] == 3);
  CHECK(c[1] == 0);
  CHECK(c[2] == 2);
  std::vector<BigInt> ys2 = {1, 2, 5};
  const auto frac = interpolate(xs, ys2);
  CHECK(frac.back().get_den() != 1);
}

TEST_CASE("Poincare polynomials of ordinary Grassmannians") {
  const auto c = cartan_matrix(Family::A, 1);
  const auto m = build_from_intervals(c, {{0, 0, 6}});
  const auto p = poincare_poly(m, {3});
  CHECK(p.coeffs == std::vector<std::int64_t>{1, 1, 2, 3, 3, 3, 3, 2, 1, 1});
  CHECK(p.euler() == 20);
  CHECK(p.betti().size() == 19);
  CHECK(p.betti()[1] == 0);
  CHECK(p.evaluate(2) == pascal_gauss(6, 3, 2));
  CHECK(poincare_poly(m, {7}).coeffs.empty());
  const auto t = total_cohomology(m, {1});
  CHECK(t.euler == 6);
  CHECK(t.betti == std::vector<std::int64_t>{1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1});
}

TEST_CASE("Euler characteristics by convolution") {
  const auto c2 = cartan_matrix(Family::A, 2);
  CHECK(euler_cc(c2, {{0, 1, 1}}, {1, 0}) == 0);
  CHECK(euler_cc(c2, {{0, 1, 1}}, {0, 1}) == 1);
  CHECK(euler_cc(c2, {{0, 1, 1}, {1, 1, 1}}, {0, 1}) == 2);
  CHECK(euler_cc(cartan_matrix(Family::A, 1), {{0, 0, 5}}, {2}) == 10);
  CHECK(euler_cc(c2, {}, {0, 0}) == 1);
  CHECK(euler_cc(c2, {}, {1, 0}) == 0);
  CHECK_THROWS_AS(euler_cc(c2, {{0, 2, 1}}, {0, 0}), InputError);
  CHECK_THROWS_AS(euler_cc(cartan_matrix(Family::D, 4), {}, {0, 0, 0, 0}), InputError);

  std::mt19937 rng(31);
  const auto c3 = cartan_matrix(Family::A, 3);
  std::uniform_int_distribution<int> v(0, 2), count(1, 3);
  for (int trial = 0; trial < 10; ++trial) {
    IntervalSpec spec;
    const int k = count(rng);
    for (int s = 0; s < k; ++s) {
      int a = v(rng), b = v(rng);
      if (a > b) std::swap(a, b);
      spec.push_back({a, b, 1});
    }
    const auto m = build_from_intervals(c3, spec);
    if (m.total_dim() > 6) continue;
    for (const auto& e : all_e(m.dims)) CHECK(euler_cc(c3, spec, e) == poincare_poly(m, e).euler());
  }
}

TEST_CASE("submodule test") {
  const auto c = cartan_matrix(Family::A, 2);
  const auto m = build_from_intervals(c, {{0, 1, 1}});
  QMatrix full = QMatrix::identity(1), none(1, 0);
  std::vector<QMatrix> sub = {none, full};
  CHECK(is_submodule(m, sub));
  sub = {full, none};
  CHECK_FALSE(is_submodule(m, sub));
  sub = {full};
  CHECK_THROWS_AS(is_submodule(m, sub), InputError);
}
