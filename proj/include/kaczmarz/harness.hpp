#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "kaczmarz/estimators.hpp"
#include "kaczmarz/harmonic.hpp"

namespace kaczmarz {

struct EstimatorSpec {
  std::string label;
  EstimatorConfig config;
  // Overrides the zero initial parameter vector when set.
  std::optional<Vector> initial_theta;
};

struct Scenario {
  FrequencyGrid grid;
  ParameterTrajectory trajectory;
  Step steps = 0;
  double noise_std = 0.0;
  std::uint64_t seed = 0;
  std::vector<EstimatorSpec> estimators;

  // Throws ValidationError: steps must exceed max(w) + 1, labels must be
  // unique and CSV-safe, every config must be valid.
  void validate() const;
};

struct MetricsRecord {
  Step k = 0;
  std::string label;
  Vector theta;
  double param_error = 0.0;      // |theta_k - theta*(k)|_2
  double output_residual = 0.0;  // |phi_k^T theta_k - y_k|
  // Larger of the two endpoint residuals; only for rank-two steps.
  std::optional<double> extended_residual;
  bool skipped = false;
  int guard_triggers = 0;
};

// Runs one estimator over precomputed samples.
std::vector<MetricsRecord> run_estimator(const EstimatorSpec& spec, const FrequencyGrid& grid,
                                         const ParameterTrajectory& trajectory,
                                         std::span<const SignalSample> samples);

// One record per (estimator, step). Estimators run concurrently; records are
// ordered by estimator declaration order, then step.
std::vector<MetricsRecord> run_scenario(const Scenario& scenario);

// Smallest d >= 0 with param_error <= tol on every step in
// [change_step + d, last step]; nullopt when the estimate never settles.
std::optional<Step> reconvergence_time(std::span<const MetricsRecord> records, const std::string& label,
                                       Step change_step, double tol);

struct SummaryRow {
  std::string label;
  std::optional<Step> reconvergence;
  double final_error = 0.0;
  std::optional<double> mean_extended_residual;
  std::int64_t skip_count = 0;  // records with skipped == true
};

// One row per label, in order of first appearance.
std::vector<SummaryRow> compare_summary(std::span<const MetricsRecord> records, Step change_step, double tol);

}  // namespace kaczmarz
