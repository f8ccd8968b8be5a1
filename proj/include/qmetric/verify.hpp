// Copyright 2026 The qmetric Authors.
// SPDX-License-Identifier: Apache-2.0

#ifndef QMETRIC_VERIFY_HPP_
#define QMETRIC_VERIFY_HPP_

#include <cstdint>
#include <functional>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "qmetric/metrics.hpp"

namespace qmetric {

/// Budget and seeding for a verification run. samples_per_property scales
/// every property's sample count linearly: 500 reproduces the per-property
/// defaults exactly, smaller values give proportionally shorter smoke runs.
struct RunConfig {
  std::uint64_t seed = 0x5EED;
  std::vector<int> dims = {2, 3, 4};
  int samples_per_property = 500;
  OptimizerOptions optimizer;
  std::string output_path = "report.json";
};

/// Throws BadConfigError on empty/sub-2 dims or a zero sample budget.
void validate_config(const RunConfig& config);

RunConfig config_from_json(const nlohmann::json& j);
nlohmann::json config_to_json(const RunConfig& config);

enum class VerdictStatus { Pass, Fail, ReportOnly };

const char* to_string(VerdictStatus s);

/// Outcome of one property suite. worst_margin is the most negative slack
/// observed; a hard property passes iff worst_margin >= -tolerance.
/// Properties that combine checks with different tolerances normalize each
/// slack (slack + its tolerance) and declare tolerance 0.
struct PropertyVerdict {
  std::string property_id;
  long samples = 0;
  double worst_margin = 0.0;
  double tolerance = 0.0;
  VerdictStatus status = VerdictStatus::Pass;
  std::optional<nlohmann::json> counterexample;
};

struct VerifyReport {
  std::vector<PropertyVerdict> verdicts;
  int pass = 0;
  int fail = 0;
  int report_only = 0;
};

struct PropertyOutcome {
  double worst_margin = 0.0;
  long samples = 0;
  std::optional<nlohmann::json> payload;
};

struct PropertyContext {
  const RunConfig& config;
  Rng rng;
  double scale = 1.0;  // samples_per_property / 500

  long scaled(long spec_count) const;
};

struct PropertySpec {
  std::string id;
  bool hard = true;
  double tolerance = 0.0;
  std::function<PropertyOutcome(PropertyContext&)> run;
};

/// Every Invariants & Properties entry of the matops/states/fidelity/
/// metrics/channels modules, registered exactly once under a stable id.
const std::vector<PropertySpec>& property_registry();

/// Runs the whole registry with per-property sub-seeded generators
/// (seed derived from config.seed and the property id, so serial and
/// parallel execution would agree). Writes one progress line per property
/// to `progress` when non-null.
VerifyReport run_verify(const RunConfig& config,
                        std::ostream* progress = nullptr);

nlohmann::json verdict_to_json(const PropertyVerdict& v);
nlohmann::json report_to_json(const VerifyReport& report,
                              const RunConfig& config);

namespace verify_detail {

/// Raw Monte-Carlo max of |x^H delta x| over Haar unit vectors; also
/// returns the best sample for seeding refinement.
struct PureMcResult {
  double best_value = 0.0;
  ComplexVector best_vector;
};
PureMcResult pure_mc_max(const ComplexMatrix& delta, long samples, Rng& rng);

/// Sharpens a pure-state candidate by power iteration on +/-delta (shifted
/// to dominance); independent of any eigendecomposition. Returns the best
/// |x^H delta x| reached.
double refine_extreme_rayleigh(const ComplexMatrix& delta,
                               const ComplexVector& seed_vec);

}  // namespace verify_detail

}  // namespace qmetric

#endif  // QMETRIC_VERIFY_HPP_
