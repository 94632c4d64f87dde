#include <fstream>
#include <sstream>

#include "doctest.h"
#include "mvq/errors.hpp"
#include "mvq/tring.hpp"

using namespace mvq;

namespace {

std::string read_file(const std::string& name) {
  std::ifstream in(std::string(MVQ_TEST_DATA) + "/" + name);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

long binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// Coefficients of [n choose k]_q by the q-Pascal rule
// [n, k] = [n-1, k-1] + q^k [n-1, k].
std::vector<std::int64_t> gaussian_coeffs(int n, int k) {
  if (k < 0 || k > n) return {};
  if (k == 0 || k == n) return {1};
  auto a = gaussian_coeffs(n - 1, k - 1);
  auto b = gaussian_coeffs(n - 1, k);
  std::vector<std::int64_t> out(std::max(a.size(), b.size() + static_cast<std::size_t>(k)), 0);
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i + static_cast<std::size_t>(k)] += b[i];
  return out;
}

QuotientSummary ring_of(const PiModule& m, const std::vector<int>& e) { return quotient_dimension(presentation(m, e)); }

}  // namespace

TEST_CASE("variable layout") {
  const auto layout = make_layout({2, 1}, {1, 0});
  CHECK(layout.ring.names() == std::vector<std::string>{"a1_1", "b1_1", "b2_1"});
  CHECK(layout.ring.weights() == std::vector<int>{1, 1, 1});
  const auto big = make_layout({3}, {2});
  CHECK(big.ring.names() == std::vector<std::string>{"a1_1", "a1_2", "b1_1"});
  CHECK(big.ring.weights() == std::vector<int>{1, 2, 1});
  CHECK_THROWS_AS(make_layout({1}, {2}), InputError);
  CHECK_THROWS_AS(make_layout({1}, {-1}), InputError);
  CHECK_THROWS_AS(make_layout({1, 1}, {0}), InputError);
}

TEST_CASE("series inversion") {
  const auto layout = make_layout({4}, {2}, false);
  const auto& ring = layout.ring;
  const auto a = a_series(layout, 0);
  const auto b = inverse_series(ring, a, 6);
  const auto ab = series_product(ring, a, b, 6);
  CHECK(ring.to_string(ab.coeffs[0]) == "1");
  for (int k = 1; k <= 6; ++k) CHECK(ab.coeffs[static_cast<std::size_t>(k)].is_zero());
  // b_2 = a_1^2 - a_2.
  CHECK(ring.to_string(b.coeffs[2]) == ring.to_string(ring.sub(ring.mul(ring.variable(0), ring.variable(0)), ring.variable(1))));

  const std::vector<SeriesFactor> square = {{&a, 2}};
  // Coefficient of t^-2 in a^2 is a_1^2 + 2 a_2.
  CHECK(ring.to_string(series_coefficient(ring, square, 2)) ==
        ring.to_string(ring.add(ring.mul(ring.variable(0), ring.variable(0)), ring.scale(ring.variable(1), 2))));
}

TEST_CASE("ab relations") {
  const auto layout = make_layout({3}, {1});
  const auto rels = ab_relations(layout, 0);
  REQUIRE(rels.size() == 3);
  CHECK(layout.ring.to_string(rels[0]) == "a1_1 + b1_1");
  CHECK(layout.ring.to_string(rels[2]) == "a1_1*b1_2");
}

TEST_CASE("gamma bounds") {
  const auto gb = gamma_bounds({1, 2}, {0, 1}, Weight{{-1, 1}}, 0);
  CHECK(gb.bound == 1);
  CHECK(gb.top == 2);
  const auto neg = gamma_bounds({1, 1}, {1, 0}, Weight{{-1, 1}}, 0);
  CHECK(neg.bound == -1);
  const auto layout = make_layout({1, 1}, {1, 0});
  const auto rel = gamma_relations(layout, Weight{{-1, 1}}, 0);
  REQUIRE(rel.size() == 1);
  CHECK(layout.ring.to_string(rel[0]) == "1");
}

TEST_CASE("canonical presentations") {
  const auto c = cartan_matrix(Family::A, 2);
  CHECK(to_canonical_text(presentation(build_from_intervals(c, {{0, 1, 1}, {1, 1, 1}}), {0, 1})) ==
        read_file("a2_12_plus_22_e01.presentation.txt"));
  const auto unit = presentation(build_from_intervals(c, {{0, 1, 1}}), {1, 0});
  CHECK(unit.unit);
  CHECK(to_canonical_text(unit) == read_file("a2_12_e10.presentation.txt"));
}

TEST_CASE("hand-computed rings on A2") {
  const auto c = cartan_matrix(Family::A, 2);
  const auto m12 = build_from_intervals(c, {{0, 1, 1}});
  CHECK(ring_of(m12, {1, 1}).dimension == 1);
  CHECK(ring_of(m12, {0, 1}).dimension == 1);
  CHECK(ring_of(m12, {0, 0}).dimension == 1);
  CHECK(ring_of(m12, {1, 0}).dimension == 0);

  const auto s = ring_of(build_from_intervals(c, {{0, 1, 1}, {1, 1, 1}}), {0, 1});
  CHECK(s.dimension == 2);
  CHECK(s.hilbert == std::vector<std::int64_t>{1, 1});

  CHECK(ring_of(build_from_intervals(c, {{0, 0, 1}, {0, 1, 1}}), {1, 0}).dimension == 1);
}

TEST_CASE("A1: rings of k^d are the cohomology of Gr(e, d)") {
  const auto c = cartan_matrix(Family::A, 1);
  for (int d = 0; d <= 5; ++d) {
    const auto m = build_from_intervals(c, d ? IntervalSpec{{0, 0, d}} : IntervalSpec{});
    for (int e = 0; e <= d; ++e) {
      const auto s = ring_of(m, {e});
      CHECK(s.finite);
      CHECK(s.dimension == binomial(d, e));
      CHECK(s.hilbert == gaussian_coeffs(d, e));
    }
  }
}

TEST_CASE("elimination presentation agrees with the finite one") {
  const auto c2 = cartan_matrix(Family::A, 2);
  const std::vector<IntervalSpec> specs = {
      {{0, 1, 1}}, {{0, 1, 1}, {1, 1, 1}}, {{0, 0, 1}, {0, 1, 1}}, {{0, 1, 2}}, {{0, 0, 1}, {1, 1, 2}}};
  for (const auto& spec : specs) {
    const auto m = build_from_intervals(c2, spec);
    const auto table = gamma_table(m);
    for (int e0 = 0; e0 <= m.dims[0]; ++e0)
      for (int e1 = 0; e1 <= m.dims[1]; ++e1) {
        const auto finite = quotient_dimension(presentation(m, table, {e0, e1}));
        const auto elim = elimination_summary(m, table, {e0, e1});
        CHECK(elim.summary == finite);
      }
  }
}

TEST_CASE("presentation rejects invalid input") {
  const auto c = cartan_matrix(Family::A, 2);
  PiModule bad = PiModule::zero(Quiver::standard(c), {1, 1});
  bad.maps[0](0, 0) = 1;
  bad.maps[1](0, 0) = 1;
  CHECK_THROWS_AS(presentation(bad, {0, 0}), ValidationError);
  CHECK_THROWS_AS(presentation(build_from_intervals(c, {{0, 1, 1}}), {2, 0}), InputError);
}
