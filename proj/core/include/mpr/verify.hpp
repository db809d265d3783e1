#pragma once

#include "mpr/edge.hpp"
#include "mpr/walk.hpp"
#include "mpr/series.hpp"

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace mpr {

struct VerifyConfig {
  std::string profile = "full";
  std::uint64_t seed = 7;
  /// Perturbative order for the coefficient table, closure and moments.
  int order = 4;
  long long coeff_samples = 1'000'000;
  long long div_samples = 10'000'000;
  double div_max_rel_stderr = 1e-3;
  int weights_max_r0 = 4;
  int weights_max_r1 = 3;
  int euler_max_edges = 6;
  long chi2_samples = 1'000'000;
  long multiplicity_walks = 10'000;
  long walk_n = 1L << 16;
  long walk_batch = 1000;
  long walk_n_third = 1L << 18;
  long walk_batch_third = 2000;
  LipatovConstants lipatov = LipatovConstants::defaults();
  VisitConvention convention;

  static VerifyConfig full();
  /// Reduced sizes for smoke runs; thresholds are unchanged.
  static VerifyConfig quick();
};

struct CheckResult {
  int id = 0;
  std::string name;
  bool pass = false;
  /// Largest |difference| / sigma among statistical comparisons, if any.
  std::optional<double> sigma;
  std::vector<std::pair<std::string, double>> values;
  std::vector<std::string> notes;
};

struct VerifyReport {
  VerifyConfig config;
  std::vector<CheckResult> checks;
  bool all_pass() const;
};

CheckResult check_weight_oracle(const VerifyConfig& c);
CheckResult check_a1_closed(const VerifyConfig& c);
CheckResult check_euler_counting(const VerifyConfig& c);
CheckResult check_div_sum_rule(const VerifyConfig& c);
CheckResult check_borel_identity(const VerifyConfig& c);
CheckResult check_asymptotic_scaling(const VerifyConfig& c);
CheckResult check_closure(const VerifyConfig& c, const CoefficientTable& t);
CheckResult check_moment_reality(const VerifyConfig& c, const CoefficientTable& t);
CheckResult check_edge_constants(const VerifyConfig& c);
CheckResult check_walks(const VerifyConfig& c, const CoefficientTable& t);

/// Coefficient table for the configured order and seed.
CoefficientTable verify_coefficients(const VerifyConfig& c);

/// Criteria 1-10 in order. Progress lines go to `log` when it is set.
VerifyReport run_verification(const VerifyConfig& c, std::ostream* log = nullptr);

}  // namespace mpr
