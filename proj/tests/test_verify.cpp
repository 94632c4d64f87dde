#include "doctest.h"
#include "mvq/errors.hpp"
#include "mvq/module_io.hpp"
#include "mvq/verify.hpp"

using namespace mvq;

namespace {

std::string data(const std::string& name) { return std::string(MVQ_TEST_DATA) + "/" + name; }

long binomial(int n, int k) {
  long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

TEST_CASE("module files") {
  const auto a = parse_module_file(data("a2_interval_12.json"));
  CHECK(a.id == "A2 [1,2]");
  CHECK(a.module.dims == std::vector<int>{1, 1});
  REQUIRE(a.intervals);
  CHECK(*a.intervals == IntervalSpec{{0, 1, 1}});

  const auto z = parse_module_file(data("a2_explicit_zero.json"));
  CHECK(z.id == "a2_explicit_zero");
  CHECK(z.module.is_kq());
  CHECK_FALSE(z.intervals);

  try {
    parse_module_file(data("a2_identity_both.json"));
    FAIL("expected a validation error");
  } catch (const ValidationError& e) {
    CHECK(e.vertices() == std::vector<int>{0, 1});
  }

  const auto x = parse_module_file(data("a2_explicit_12.json"));
  CHECK(x.module.maps == build_from_intervals(cartan_matrix(Family::A, 2), {{0, 1, 1}}).maps);

  CHECK_THROWS_AS(parse_module_file(data("bad_schema.json")), InputError);
  CHECK_THROWS_AS(parse_module_file(data("missing.json")), InputError);
}

TEST_CASE("schema violations") {
  const std::vector<std::string> bad = {
      "[1]",
      "{\"family\": \"A\"}",
      "{\"family\": \"Q\", \"rank\": 2, \"dims\": [0, 0]}",
      "{\"family\": \"A\", \"rank\": 2, \"intervals\": [{\"from\": 2, \"to\": 1}]}",
      "{\"family\": \"A\", \"rank\": 2, \"intervals\": [{\"from\": 0, \"to\": 1}]}",
      "{\"family\": \"A\", \"rank\": 2, \"intervals\": [], \"dims\": [0, 0]}",
      "{\"family\": \"A\", \"rank\": 2, \"dims\": [1, 1], \"maps\": {\"1-2\": [[1]]}}",
      "{\"family\": \"A\", \"rank\": 2, \"dims\": [1, 1], \"maps\": {\"1->3\": [[1]]}}",
      "{\"family\": \"A\", \"rank\": 2, \"dims\": [1, 1], \"maps\": {\"1->2\": [[1, 0]]}}",
      "{\"family\": \"A\", \"rank\": 2, \"dims\": [1, 1], \"maps\": {\"1->2\": [[\"x\"]]}}",
      "{\"family\": \"A\", \"rank\": 2, \"dims\": [1, 1], \"maps\": {\"1->2\": [[\"1/0\"]]}}",
      "{\"family\": \"A\", \"rank\": 3, \"orientation\": [[1, 3], [2, 3]], \"dims\": [0, 0, 0]}",
      "{\"family\": \"A\", \"rank\": 2, \"dims\": [-1, 0]}",
      "not json",
  };
  for (const auto& text : bad) CHECK_THROWS_AS(parse_module_text(text), InputError);

  const auto ok = parse_module_text(
      "{\"family\": \"A\", \"rank\": 2, \"orientation\": [[2, 1]], \"dims\": [1, 1], \"maps\": {\"2->1\": [[\"-3/4\"]]}}");
  CHECK_FALSE(ok.module.quiver.is_standard());
  CHECK(ok.module.maps[0](0, 0) == Rational(-3, 4));

  CHECK(parse_dim_vector("1,0,2") == std::vector<int>{1, 0, 2});
  CHECK_THROWS_AS(parse_dim_vector("1,,2"), InputError);
  CHECK_THROWS_AS(parse_dim_vector("1;2"), InputError);
}

TEST_CASE("verify") {
  const auto k2 = parse_module_file(data("a1_k2.json"));
  const auto r = verify(k2, {1});
  CHECK(r.ring.dimension == 2);
  CHECK(*r.chi == 2);
  CHECK(r.ring.hilbert == std::vector<std::int64_t>{1, 1});
  CHECK(r.poincare->coeffs == std::vector<std::int64_t>{1, 1});
  CHECK(r.passed());
  CHECK(r.mode == Mode::Assert);

  const auto empty = verify(parse_module_file(data("a2_interval_12.json")), {1, 0});
  CHECK(empty.ring.dimension == 0);
  CHECK(*empty.chi == 0);
  CHECK(empty.passed());

  const auto two = verify(parse_module_file(data("a2_12_plus_22.json")), {0, 1});
  CHECK(two.ring.dimension == 2);
  CHECK(*two.chi == 2);
  CHECK(two.series_match);

  CHECK_THROWS_AS(verify(k2, {3}), InputError);
  CHECK_THROWS_AS(verify(k2, {1, 0}), InputError);
}

TEST_CASE("modes") {
  const auto pi = parse_module_file(data("a3_nilpotent_pi.json"));
  CHECK(default_mode(pi.module) == Mode::Explore);
  VerifyOptions o;
  o.mode = Mode::Assert;
  CHECK(verify(pi, {0, 1, 0}, o).mode == Mode::Assert);
  CHECK(default_mode(parse_module_file(data("a2_explicit_zero.json")).module) == Mode::Assert);
}

TEST_CASE("scan") {
  const auto r12 = scan(parse_module_file(data("a2_interval_12.json")));
  CHECK(r12.size() == 4);
  CHECK(summarize(r12).passed == 4);

  const auto zero = scan(parse_module_file(data("a2_zero.json")));
  REQUIRE(zero.size() == 1);
  CHECK(zero[0].ring.dimension == 1);
  CHECK(*zero[0].chi == 1);

  const auto k3 = scan(parse_module_file(data("a1_k3.json")));
  std::vector<std::int64_t> dims;
  for (const auto& r : k3) dims.push_back(r.ring.dimension);
  CHECK(dims == std::vector<std::int64_t>{1, 3, 3, 1});

  std::vector<DimVector> order;
  const auto two = scan(parse_module_file(data("a2_12_plus_22.json")));
  std::int64_t ring_total = 0, chi_total = 0;
  for (const auto& r : two) {
    order.push_back(r.e);
    ring_total += r.ring.dimension;
    chi_total += *r.chi;
  }
  CHECK(std::is_sorted(order.begin(), order.end()));
  CHECK(ring_total == chi_total);

  VerifyOptions tight;
  tight.max_cases = 3;
  CHECK_THROWS_AS(scan(parse_module_file(data("a2_interval_12.json")), tight), BoundExceeded);
}

TEST_CASE("factor check") {
  const auto c1 = cartan_matrix(Family::A, 1);
  const auto k = build_from_intervals(c1, {{0, 0, 1}});
  const auto fc = factor_check(k, k, {1});
  CHECK(*fc.lhs == 2);
  CHECK(*fc.rhs == 2);
  CHECK(fc.terms.size() == 2);
  CHECK(fc.holds());

  const auto c2 = cartan_matrix(Family::A, 2);
  const auto m12 = build_from_intervals(c2, {{0, 1, 1}});
  const auto m22 = build_from_intervals(c2, {{1, 1, 1}});
  const auto two = factor_check(m12, m22, {0, 1});
  CHECK(*two.lhs == 2);
  CHECK(two.holds());

  const auto zero = PiModule::zero(m12.quiver, {0, 0});
  for (const auto& e : std::vector<DimVector>{{0, 0}, {0, 1}, {1, 1}}) CHECK(factor_check(m12, zero, e).holds());

  // k^a (+) k^b on A1: Vandermonde.
  const auto k2 = build_from_intervals(c1, {{0, 0, 2}});
  const auto k3 = build_from_intervals(c1, {{0, 0, 3}});
  for (int e = 0; e <= 5; ++e) CHECK(*factor_check(k2, k3, {e}).lhs == binomial(5, e));

  CHECK_THROWS_AS(factor_check(k, m12, {0}), InputError);
}

TEST_CASE("report JSON is byte-stable") {
  const auto in = parse_module_file(data("a2_interval_12.json"));
  const std::string expected =
      "{\n"
      "  \"module\": \"A2 [1,2]\",\n"
      "  \"e\": [\n"
      "    1,\n"
      "    1\n"
      "  ],\n"
      "  \"ring_dim\": 1,\n"
      "  \"ring_hilbert\": [\n"
      "    1\n"
      "  ],\n"
      "  \"chi\": 1,\n"
      "  \"poincare\": [\n"
      "    1\n"
      "  ],\n"
      "  \"dim_match\": true,\n"
      "  \"series_match\": true,\n"
      "  \"mode\": \"assert\"\n"
      "}";
  CHECK(report_json(verify(in, {1, 1})) == expected);
  CHECK(reports_json(scan(in)) == reports_json(scan(in)));
  CHECK(describe_intervals(cartan_matrix(Family::A, 3), {{0, 2, 1}, {1, 1, 2}}) == "A3 [1,3]+[2,2]^2");
}
