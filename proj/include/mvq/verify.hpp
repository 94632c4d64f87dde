#pragma once

// Compares the coordinate ring of a T-fixed component with the cohomology of
// the matching quiver Grassmannian: dimension against chi, Hilbert series
// against the Poincare polynomial.

#include <optional>
#include <string>
#include <vector>

#include "mvq/groebner.hpp"
#include "mvq/module_io.hpp"
#include "mvq/qgrass.hpp"
#include "mvq/tring.hpp"

namespace mvq {

enum class Mode {
  Assert,   // mismatches are failures
  Explore,  // mismatches are reported as findings
};

const char* mode_name(Mode m);

// Assert for type A kQ-modules, Explore otherwise.
Mode default_mode(const PiModule& module);

struct VerifyOptions {
  std::optional<Mode> mode;  // default_mode when unset
  PoincareOptions poincare;
  std::uint64_t max_cases = 4096;  // scan: bound on prod_i (d_i + 1)
};

struct VerificationReport {
  std::string module;
  DimVector e;
  QuotientSummary ring;
  std::optional<std::int64_t> chi;          // convolution for interval modules, else Poincare(1)
  std::optional<PoincarePoly> poincare;     // unset if point counts are not a paving polynomial
  std::string note;                         // why a side is missing, if it is
  bool dim_match = false;
  bool series_match = false;
  Mode mode = Mode::Assert;
  double seconds = 0;  // text output only

  bool passed() const { return dim_match && series_match; }
};

VerificationReport verify(const ModuleInput& input, const DimVector& e, const VerifyOptions& options = {});
VerificationReport verify(const ModuleInput& input, const GammaTable& table, const DimVector& e,
                          const VerifyOptions& options = {});

// Every e with 0 <= e_i <= d_i, in lexicographic order.
std::vector<DimVector> all_dimension_vectors(const std::vector<int>& dims, std::uint64_t max_cases);

std::vector<VerificationReport> scan(const ModuleInput& input, const VerifyOptions& options = {});

struct ScanSummary {
  std::size_t passed = 0;
  std::size_t failed = 0;   // asserted mismatches
  std::size_t findings = 0; // explore-mode mismatches
};

ScanSummary summarize(const std::vector<VerificationReport>& reports);

struct FactorTerm {
  DimVector e1, e2;
  std::int64_t dim1 = 0, dim2 = 0;
};

struct FactorCheck {
  DimVector e;
  std::optional<std::int64_t> lhs;  // unset if the ring of M1 (+) M2 is infinite
  std::optional<std::int64_t> rhs;  // unset if some summand ring is infinite
  std::vector<FactorTerm> terms;    // nonzero products only
  bool holds() const { return lhs && rhs && *lhs == *rhs; }
};

// dim O(M1 (+) M2, e) against sum_{e1 + e2 = e} dim O(M1, e1) dim O(M2, e2).
FactorCheck factor_check(const PiModule& m1, const PiModule& m2, const DimVector& e);

std::string report_json(const VerificationReport& r);
std::string reports_json(const std::vector<VerificationReport>& reports);
std::string report_text(const VerificationReport& r);

}  // namespace mvq
