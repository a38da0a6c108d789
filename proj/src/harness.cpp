#include "kaczmarz/harness.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <set>
#include <stdexcept>

#include "kaczmarz/errors.hpp"
#include "kaczmarz/oracle.hpp"

namespace kaczmarz {

void Scenario::validate() const {
  if (trajectory.dimension() != grid.dimension()) {
    throw ValidationError("segments", "theta_star length does not match 2 * frequency count");
  }
  if (!(noise_std >= 0.0) || !std::isfinite(noise_std)) throw ValidationError("noise_std", "must be finite and >= 0");
  if (estimators.empty()) throw ValidationError("estimators", "at least one estimator is required");

  std::set<std::string> labels;
  std::size_t max_w = 0;
  for (std::size_t i = 0; i < estimators.size(); ++i) {
    const EstimatorSpec& e = estimators[i];
    const std::string prefix = "estimators[" + std::to_string(i) + "]";
    if (e.label.empty()) throw ValidationError(prefix + ".label", "must not be empty");
    if (e.label.find_first_of(",\"\r\n") != std::string::npos) {
      throw ValidationError(prefix + ".label", "must not contain commas, quotes or line breaks");
    }
    if (!labels.insert(e.label).second) throw ValidationError(prefix + ".label", "duplicate label '" + e.label + "'");
    try {
      e.config.validate();
    } catch (const ValidationError& err) {
      throw ValidationError(prefix + "." + err.field(), std::string(err.what()).substr(err.field().size() + 2));
    }
    if (e.initial_theta && e.initial_theta->size() != grid.dimension()) {
      throw ValidationError(prefix + ".theta0", "expected length " + std::to_string(grid.dimension()));
    }
    max_w = std::max(max_w, e.config.w);
  }
  if (steps <= static_cast<Step>(max_w) + 1) {
    throw ValidationError("steps", "must exceed the largest window size + 1 (" + std::to_string(max_w + 1) + ")");
  }
}

std::vector<MetricsRecord> run_estimator(const EstimatorSpec& spec, const FrequencyGrid& grid,
                                         const ParameterTrajectory& trajectory,
                                         std::span<const SignalSample> samples) {
  EstimatorState state = init_state(grid, spec.config);
  if (spec.initial_theta) state.theta = *spec.initial_theta;
  SampleWindow window(spec.config.w);

  std::vector<MetricsRecord> records;
  records.reserve(samples.size());
  for (const SignalSample& sample : samples) {
    StepOutcome outcome = step(spec.config, state, window, sample);
    state = std::move(outcome.state);

    MetricsRecord r;
    r.k = sample.k;
    r.label = spec.label;
    r.theta = state.theta;
    const Vector& truth = trajectory.theta_at(sample.k);
    double err2 = 0.0;
    for (std::size_t i = 0; i < truth.size(); ++i) err2 += (state.theta[i] - truth[i]) * (state.theta[i] - truth[i]);
    r.param_error = std::sqrt(err2);
    r.output_residual = std::abs(dot(sample.phi, state.theta) - sample.y);
    if (outcome.law == UpdateLaw::RankTwo && outcome.pair) {
      r.extended_residual = oracle::orthogonality_report(*outcome.pair, state.theta).max();
    }
    r.skipped = outcome.skipped();
    r.guard_triggers = outcome.guard_triggers();
    records.push_back(std::move(r));
  }
  return records;
}

std::vector<MetricsRecord> run_scenario(const Scenario& scenario) {
  scenario.validate();
  const std::vector<SignalSample> samples =
      synthesize_signal(scenario.grid, scenario.trajectory, scenario.steps, scenario.noise_std, scenario.seed);

  std::vector<std::future<std::vector<MetricsRecord>>> runs;
  runs.reserve(scenario.estimators.size());
  for (const EstimatorSpec& spec : scenario.estimators) {
    runs.push_back(std::async(std::launch::async, [&scenario, &samples, &spec] {
      return run_estimator(spec, scenario.grid, scenario.trajectory, samples);
    }));
  }

  std::vector<MetricsRecord> merged;
  merged.reserve(samples.size() * runs.size());
  for (auto& run : runs) {
    std::vector<MetricsRecord> part = run.get();
    std::move(part.begin(), part.end(), std::back_inserter(merged));
  }
  return merged;
}

std::optional<Step> reconvergence_time(std::span<const MetricsRecord> records, const std::string& label,
                                       Step change_step, double tol) {
  if (!(tol > 0.0)) throw std::invalid_argument("reconvergence_time: tol must be > 0");

  std::vector<const MetricsRecord*> mine;
  for (const MetricsRecord& r : records) {
    if (r.label == label) mine.push_back(&r);
  }
  if (mine.empty()) throw UnknownLabel("no records for label '" + label + "'");
  std::sort(mine.begin(), mine.end(), [](const auto* a, const auto* b) { return a->k < b->k; });
  if (change_step < mine.front()->k || change_step > mine.back()->k) {
    throw std::invalid_argument("reconvergence_time: change_step outside the run");
  }

  // Walk back from the end to find the last violation at or after the change.
  std::optional<Step> last_bad;
  for (auto it = mine.rbegin(); it != mine.rend() && (*it)->k >= change_step; ++it) {
    if (!((*it)->param_error <= tol)) {
      last_bad = (*it)->k;
      break;
    }
  }
  if (!last_bad) return Step{0};
  if (*last_bad == mine.back()->k) return std::nullopt;
  return *last_bad + 1 - change_step;
}

std::vector<SummaryRow> compare_summary(std::span<const MetricsRecord> records, Step change_step, double tol) {
  std::vector<std::string> labels;
  for (const MetricsRecord& r : records) {
    if (std::find(labels.begin(), labels.end(), r.label) == labels.end()) labels.push_back(r.label);
  }

  std::vector<SummaryRow> rows;
  for (const std::string& label : labels) {
    SummaryRow row;
    row.label = label;
    row.reconvergence = reconvergence_time(records, label, change_step, tol);
    Step last_k = 0;
    double ext_sum = 0.0;
    std::int64_t ext_count = 0;
    for (const MetricsRecord& r : records) {
      if (r.label != label) continue;
      if (r.k >= last_k) {
        last_k = r.k;
        row.final_error = r.param_error;
      }
      if (r.extended_residual) {
        ext_sum += *r.extended_residual;
        ++ext_count;
      }
      if (r.skipped) ++row.skip_count;
    }
    if (ext_count > 0) row.mean_extended_residual = ext_sum / static_cast<double>(ext_count);
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace kaczmarz
