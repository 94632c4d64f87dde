// mvq: command-line front end.
//
// Exit codes: 0 every asserted check passes, 1 mismatch or anomaly, 2 input error.

#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "mvq/errors.hpp"
#include "mvq/module_io.hpp"
#include "mvq/verify.hpp"

namespace {

using namespace mvq;
using ojson = nlohmann::ordered_json;

constexpr int kPass = 0;
constexpr int kMismatch = 1;
constexpr int kInputError = 2;

std::string weight_string(const std::vector<int>& v) {
  std::string s = "(";
  for (std::size_t k = 0; k < v.size(); ++k) s += (k ? "," : "") + std::to_string(v[k]);
  return s + ")";
}

std::string series_string(const std::vector<std::int64_t>& c, char var) {
  if (c.empty()) return "0";
  std::string s;
  for (std::size_t k = 0; k < c.size(); ++k) {
    if (c[k] == 0) continue;
    if (!s.empty()) s += " + ";
    if (k == 0 || c[k] != 1) s += std::to_string(c[k]);
    if (k >= 1) s += var;
    if (k >= 2) s += "^" + std::to_string(k);
  }
  return s;
}

struct Common {
  std::string file;
  std::string e;
  bool json = false;
  bool assert_mode = false;
  bool explore_mode = false;
  int max_dim = 8;
};

VerifyOptions verify_options(const Common& c) {
  VerifyOptions o;
  if (c.assert_mode) o.mode = Mode::Assert;
  if (c.explore_mode) o.mode = Mode::Explore;
  o.poincare.count.max_total_dim = c.max_dim;
  return o;
}

int cmd_validate(const Common& c) {
  // parse_module_file validates; reaching here means the relation holds.
  const auto in = parse_module_file(c.file);
  if (c.json) {
    ojson j{{"module", in.id}, {"dims", in.module.dims}, {"kq", in.module.is_kq()}, {"valid", true}};
    std::cout << j.dump(2) << '\n';
  } else {
    std::cout << in.id << ": valid, dims " << weight_string(in.module.dims) << (in.module.is_kq() ? ", kQ-module" : "")
              << '\n';
  }
  return kPass;
}

int cmd_dgamma(const Common& c) {
  const auto in = parse_module_file(c.file);
  const auto gammas = chamber_weights(in.module.quiver.cartan());
  ojson rows = ojson::array();
  for (const auto& g : gammas) {
    const int d = d_gamma(in.module, g.weight);
    if (c.json)
      rows.push_back({{"gamma", g.weight.coords}, {"D", d}});
    else
      std::cout << weight_string(g.weight.coords) << ' ' << d << '\n';
  }
  if (c.json) std::cout << ojson{{"module", in.id}, {"dgamma", rows}}.dump(2) << '\n';
  return kPass;
}

int cmd_polytope(const Common& c) {
  const auto in = parse_module_file(c.file);
  const auto data = polytope_data(in.module);
  const bool pseudo = check_pseudo_weyl(in.module.quiver.cartan(), data.family());
  ojson rows = ojson::array();
  for (std::size_t k = 0; k < data.elements.size(); ++k) {
    const auto& w = data.elements[k];
    if (c.json)
      rows.push_back({{"w", format_word(w.word)}, {"lambda", data.lambda[k].coords}});
    else
      std::cout << format_word(w.word) << ' ' << weight_string(data.lambda[k].coords) << '\n';
  }
  if (c.json)
    std::cout << ojson{{"module", in.id}, {"vertices", rows}, {"pseudo_weyl", pseudo}}.dump(2) << '\n';
  else
    std::cout << "pseudo-Weyl: " << (pseudo ? "yes" : "no") << '\n';
  return pseudo ? kPass : kMismatch;
}

int cmd_chi(const Common& c, const std::vector<std::uint64_t>& qs) {
  const auto in = parse_module_file(c.file);
  const auto e = parse_dim_vector(c.e);
  CountOptions count;
  count.max_total_dim = c.max_dim;
  ojson j{{"module", in.id}, {"e", e}};
  if (in.intervals) {
    const auto chi = euler_cc(in.module.quiver.cartan(), *in.intervals, e);
    j["chi"] = chi;
    if (!c.json) std::cout << "chi " << chi << '\n';
  }
  ojson counts = ojson::object();
  for (auto q : qs) {
    const auto n = count_points_fq(in.module, e, q, count);
    counts[std::to_string(q)] = n.get_str();
    if (!c.json) std::cout << "#Gr(F_" << q << ") " << n.get_str() << '\n';
  }
  if (!qs.empty()) j["points"] = counts;
  if (!in.intervals && qs.empty()) {
    PoincareOptions po;
    po.count = count;
    const auto p = poincare_poly(in.module, e, po);
    j["chi"] = p.euler();
    if (!c.json) std::cout << "chi " << p.euler() << '\n';
  }
  if (c.json) std::cout << j.dump(2) << '\n';
  return kPass;
}

int cmd_ring(const Common& c, bool show_presentation) {
  const auto in = parse_module_file(c.file);
  const auto e = parse_dim_vector(c.e);
  const auto p = presentation(in.module, e);
  const auto q = quotient_dimension(p);
  if (c.json) {
    ojson j{{"module", in.id}, {"e", e}};
    if (q.finite)
      j["ring_dim"] = q.dimension;
    else
      j["ring_dim"] = "INFINITE";
    j["ring_hilbert"] = q.hilbert;
    std::cout << j.dump(2) << '\n';
  } else {
    if (show_presentation) std::cout << to_canonical_text(p);
    if (q.finite)
      std::cout << "dim " << q.dimension << "\nhilbert " << series_string(q.hilbert, 'x') << '\n';
    else
      std::cout << "dim INFINITE\n";
  }
  return q.finite ? kPass : kMismatch;
}

int exit_for(const VerificationReport& r) { return r.passed() || r.mode == Mode::Explore ? kPass : kMismatch; }

int cmd_verify(const Common& c) {
  const auto in = parse_module_file(c.file);
  const auto r = verify(in, parse_dim_vector(c.e), verify_options(c));
  std::cout << (c.json ? report_json(r) : report_text(r)) << '\n';
  return exit_for(r);
}

int cmd_scan(const Common& c) {
  const auto in = parse_module_file(c.file);
  const auto reports = scan(in, verify_options(c));
  const auto s = summarize(reports);
  if (c.json) {
    std::cout << reports_json(reports) << '\n';
  } else {
    for (const auto& r : reports) std::cout << report_text(r) << '\n';
    std::cout << "summary: " << reports.size() << " cases, " << s.passed << " pass, " << s.failed << " fail, "
              << s.findings << " exploratory mismatches\n";
  }
  return s.failed ? kMismatch : kPass;
}

int cmd_factor(const Common& c, const std::string& second) {
  const auto a = parse_module_file(c.file);
  const auto b = parse_module_file(second);
  const auto fc = factor_check(a.module, b.module, parse_dim_vector(c.e));
  auto opt = [](const std::optional<std::int64_t>& v) { return v ? std::to_string(*v) : std::string("INFINITE"); };
  if (c.json) {
    ojson terms = ojson::array();
    for (const auto& t : fc.terms) terms.push_back({{"e1", t.e1}, {"e2", t.e2}, {"dim1", t.dim1}, {"dim2", t.dim2}});
    ojson j{{"modules", {a.id, b.id}}, {"e", fc.e}, {"lhs", opt(fc.lhs)}, {"rhs", opt(fc.rhs)},
            {"terms", terms}, {"holds", fc.holds()}};
    std::cout << j.dump(2) << '\n';
  } else {
    for (const auto& t : fc.terms)
      std::cout << weight_string(t.e1) << " + " << weight_string(t.e2) << ": " << t.dim1 << " * " << t.dim2 << '\n';
    std::cout << "lhs " << opt(fc.lhs) << " rhs " << opt(fc.rhs) << ' ' << (fc.holds() ? "holds" : "FAILS") << '\n';
  }
  return fc.holds() ? kPass : kMismatch;
}

int cmd_admissible(const std::string& family, int rank, bool json) {
  const auto cartan = cartan_matrix(parse_family(family), rank);
  const auto rep = check_reduced_words(cartan);
  if (json) {
    ojson ce = ojson::array();
    for (const auto& [w, j] : rep.counterexamples) ce.push_back({{"word", format_word(w)}, {"j", j + 1}});
    ojson j{{"type", cartan.name()}, {"elements", rep.elements}, {"reduced_words", rep.reduced_words},
            {"checks", rep.checks}, {"failures", rep.failures}, {"counterexamples", ce}};
    std::cout << j.dump(2) << '\n';
  } else {
    std::cout << cartan.name() << ": " << rep.elements << " elements, " << rep.reduced_words << " reduced words, "
              << rep.checks << " checks, " << rep.failures << " failures\n";
    for (const auto& [w, j] : rep.counterexamples) std::cout << "  " << format_word(w) << " j=" << j + 1 << '\n';
  }
  return rep.failures ? kMismatch : kPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"MV cycles and preprojective modules: rings of T-fixed components against quiver Grassmannians"};
  app.require_subcommand(1);

  Common c;
  std::string second, family = "A";
  int rank = 1;
  bool show_presentation = false;
  std::vector<std::uint64_t> qs;

  auto add_file = [&](CLI::App* sub) { sub->add_option("file", c.file, "module file (JSON)")->required()->check(CLI::ExistingFile); };
  auto add_e = [&](CLI::App* sub) { sub->add_option("--e", c.e, "dimension vector, e.g. 1,0")->required(); };
  auto add_json = [&](CLI::App* sub) { sub->add_flag("--json", c.json, "machine-readable output"); };
  auto add_max_dim = [&](CLI::App* sub) {
    sub->add_option("--max-dim", c.max_dim, "largest total dimension for point counting")->capture_default_str();
  };
  auto add_mode = [&](CLI::App* sub) {
    auto* a = sub->add_flag("--assert", c.assert_mode, "treat mismatches as failures");
    auto* x = sub->add_flag("--explore", c.explore_mode, "report mismatches without failing");
    a->excludes(x);
  };

  auto* validate = app.add_subcommand("validate", "load a module file and check the preprojective relation");
  add_file(validate);
  add_json(validate);

  auto* dgamma = app.add_subcommand("dgamma", "table of D_gamma over the chamber weights");
  add_file(dgamma);
  add_json(dgamma);

  auto* polytope = app.add_subcommand("polytope", "vertices lambda_w and the pseudo-Weyl check");
  add_file(polytope);
  add_json(polytope);

  auto* chi = app.add_subcommand("chi", "Euler characteristic and F_q point counts of Gr_e(M)");
  add_file(chi);
  add_e(chi);
  add_json(chi);
  add_max_dim(chi);
  chi->add_option("--q", qs, "primes at which to count points");

  auto* ring = app.add_subcommand("ring", "presentation and Hilbert series of the fixed-point ring");
  add_file(ring);
  add_e(ring);
  add_json(ring);
  ring->add_flag("--presentation", show_presentation, "print the generators");

  auto* verify_cmd = app.add_subcommand("verify", "compare ring and cohomology for one e");
  add_file(verify_cmd);
  add_e(verify_cmd);
  add_json(verify_cmd);
  add_mode(verify_cmd);
  add_max_dim(verify_cmd);

  auto* scan_cmd = app.add_subcommand("scan", "verify every e with 0 <= e <= d");
  add_file(scan_cmd);
  add_json(scan_cmd);
  add_mode(scan_cmd);
  add_max_dim(scan_cmd);

  auto* factor = app.add_subcommand("factor-check", "ring dimension of a direct sum against the convolution");
  add_file(factor);
  factor->add_option("second", second, "second module file")->required()->check(CLI::ExistingFile);
  add_e(factor);
  add_json(factor);

  auto* admissible = app.add_subcommand("admissible", "test every reduced word for j-admissibility");
  admissible->add_option("--family", family, "A, D or E")->capture_default_str();
  admissible->add_option("--rank", rank, "rank")->required();
  add_json(admissible);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kPass : kInputError;
  }

  try {
    if (*validate) return cmd_validate(c);
    if (*dgamma) return cmd_dgamma(c);
    if (*polytope) return cmd_polytope(c);
    if (*chi) return cmd_chi(c, qs);
    if (*ring) return cmd_ring(c, show_presentation);
    if (*verify_cmd) return cmd_verify(c);
    if (*scan_cmd) return cmd_scan(c);
    if (*factor) return cmd_factor(c, second);
    if (*admissible) return cmd_admissible(family, rank, c.json);
  } catch (const ValidationError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const UnsupportedInput& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const BoundExceeded& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const PavingViolation& e) {
    std::cerr << "anomaly: " << e.what() << '\n';
    return kMismatch;
  }
  return kInputError;
}
