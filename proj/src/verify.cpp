#include "mvq/verify.hpp"

#include <chrono>
#include <map>
#include <sstream>

#include "json.hpp"
#include "mvq/errors.hpp"

namespace mvq {

const char* mode_name(Mode m) { return m == Mode::Assert ? "assert" : "explore"; }

Mode default_mode(const PiModule& module) {
  return module.quiver.cartan().family == Family::A && module.is_kq() ? Mode::Assert : Mode::Explore;
}

namespace {

void check_e(const PiModule& module, const DimVector& e) {
  if (e.size() != module.dims.size()) throw InputError("dimension vector e has the wrong length");
  for (std::size_t i = 0; i < e.size(); ++i)
    if (e[i] < 0 || e[i] > module.dims[i])
      throw InputError("e_" + std::to_string(i + 1) + " = " + std::to_string(e[i]) + " is outside 0.." +
                       std::to_string(module.dims[i]));
}

std::string vec_string(const std::vector<std::int64_t>& v) {
  std::string s = "[";
  for (std::size_t k = 0; k < v.size(); ++k) s += (k ? "," : "") + std::to_string(v[k]);
  return s + "]";
}

std::string dim_string(const DimVector& v) {
  std::string s = "(";
  for (std::size_t k = 0; k < v.size(); ++k) s += (k ? "," : "") + std::to_string(v[k]);
  return s + ")";
}

}  // namespace

VerificationReport verify(const ModuleInput& input, const DimVector& e, const VerifyOptions& options) {
  return verify(input, gamma_table(input.module), e, options);
}

VerificationReport verify(const ModuleInput& input, const GammaTable& table, const DimVector& e,
                          const VerifyOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  const PiModule& module = input.module;
  check_e(module, e);

  VerificationReport r;
  r.module = input.id;
  r.e = e;
  r.mode = options.mode.value_or(default_mode(module));
  r.ring = quotient_dimension(presentation(module, table, e));

  try {
    r.poincare = poincare_poly(module, e, options.poincare);
  } catch (const PavingViolation& ex) {
    r.note = ex.what();
  }
  if (input.intervals) {
    r.chi = euler_cc(module.quiver.cartan(), *input.intervals, e);
  } else if (r.poincare) {
    r.chi = r.poincare->euler();
  }
  if (!r.ring.finite) r.note = r.note.empty() ? "ring dimension is infinite" : r.note + "; ring dimension is infinite";

  r.dim_match = r.ring.finite && r.chi && r.poincare && r.ring.dimension == *r.chi && r.poincare->euler() == *r.chi;
  r.series_match = r.ring.finite && r.poincare && r.ring.hilbert == r.poincare->coeffs;
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

std::vector<DimVector> all_dimension_vectors(const std::vector<int>& dims, std::uint64_t max_cases) {
  std::uint64_t total = 1;
  for (int d : dims) {
    total *= static_cast<std::uint64_t>(d + 1);
    if (total > max_cases)
      throw BoundExceeded("scan would visit more than " + std::to_string(max_cases) + " dimension vectors");
  }
  std::vector<DimVector> out;
  DimVector e(dims.size(), 0);
  while (true) {
    out.push_back(e);
    std::size_t k = e.size();
    while (k > 0 && e[k - 1] == dims[k - 1]) e[--k] = 0;
    if (k == 0) break;
    ++e[k - 1];
  }
  return out;
}

std::vector<VerificationReport> scan(const ModuleInput& input, const VerifyOptions& options) {
  const auto table = gamma_table(input.module);
  std::vector<VerificationReport> out;
  for (const auto& e : all_dimension_vectors(input.module.dims, options.max_cases))
    out.push_back(verify(input, table, e, options));
  return out;
}

ScanSummary summarize(const std::vector<VerificationReport>& reports) {
  ScanSummary s;
  for (const auto& r : reports) {
    if (r.passed())
      ++s.passed;
    else if (r.mode == Mode::Assert)
      ++s.failed;
    else
      ++s.findings;
  }
  return s;
}

FactorCheck factor_check(const PiModule& m1, const PiModule& m2, const DimVector& e) {
  if (!(m1.quiver == m2.quiver)) throw InputError("factor check needs both modules on the same quiver");
  const PiModule sum = direct_sum(m1, m2);
  check_e(sum, e);

  auto ring_dim = [](const PiModule& m, const GammaTable& t, const DimVector& f) -> std::optional<std::int64_t> {
    const auto q = quotient_dimension(presentation(m, t, f));
    if (!q.finite) return std::nullopt;
    return q.dimension;
  };

  FactorCheck fc;
  fc.e = e;
  fc.lhs = ring_dim(sum, gamma_table(sum), e);

  const auto t1 = gamma_table(m1), t2 = gamma_table(m2);
  std::int64_t rhs = 0;
  bool finite = true;
  for (const auto& e1 : all_dimension_vectors(m1.dims, std::uint64_t{1} << 32)) {
    DimVector e2(e.size());
    bool ok = true;
    for (std::size_t i = 0; i < e.size(); ++i) {
      e2[i] = e[i] - e1[i];
      if (e2[i] < 0 || e2[i] > m2.dims[i]) ok = false;
    }
    if (!ok) continue;
    const auto d1 = ring_dim(m1, t1, e1);
    const auto d2 = ring_dim(m2, t2, e2);
    if (!d1 || !d2) {
      finite = false;
      continue;
    }
    if (*d1 * *d2 == 0) continue;
    fc.terms.push_back({e1, e2, *d1, *d2});
    rhs += *d1 * *d2;
  }
  if (finite) fc.rhs = rhs;
  return fc;
}

namespace {

nlohmann::ordered_json to_json(const VerificationReport& r) {
  nlohmann::ordered_json j;
  j["module"] = r.module;
  j["e"] = r.e;
  if (r.ring.finite)
    j["ring_dim"] = r.ring.dimension;
  else
    j["ring_dim"] = "INFINITE";
  j["ring_hilbert"] = r.ring.finite ? r.ring.hilbert : std::vector<std::int64_t>{};
  if (r.chi)
    j["chi"] = *r.chi;
  else
    j["chi"] = nullptr;
  if (r.poincare)
    j["poincare"] = r.poincare->coeffs;
  else
    j["poincare"] = nullptr;
  j["dim_match"] = r.dim_match;
  j["series_match"] = r.series_match;
  j["mode"] = mode_name(r.mode);
  return j;
}

}  // namespace

std::string report_json(const VerificationReport& r) { return to_json(r).dump(2); }

std::string reports_json(const std::vector<VerificationReport>& reports) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& r : reports) arr.push_back(to_json(r));
  return arr.dump(2);
}

std::string report_text(const VerificationReport& r) {
  std::ostringstream os;
  os << r.module << " e=" << dim_string(r.e) << " ring_dim=";
  if (r.ring.finite)
    os << r.ring.dimension << " ring_hilbert=" << vec_string(r.ring.hilbert);
  else
    os << "INFINITE";
  os << " chi=" << (r.chi ? std::to_string(*r.chi) : "-");
  os << " poincare=" << (r.poincare ? vec_string(r.poincare->coeffs) : "-");
  os << " dim_match=" << (r.dim_match ? "yes" : "no") << " series_match=" << (r.series_match ? "yes" : "no");
  os << " mode=" << mode_name(r.mode);
  os.setf(std::ios::fixed);
  os.precision(3);
  os << " time=" << r.seconds << "s";
  if (!r.note.empty()) os << " note=\"" << r.note << "\"";
  return os.str();
}

}  // namespace mvq
