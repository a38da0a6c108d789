#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>

#include "kaczmarz/harmonic.hpp"
#include "kaczmarz/numerics.hpp"
#include "kaczmarz/window.hpp"

namespace kaczmarz {

enum class Variant { Classical, RankOne, RankTwo };

std::string_view to_string(Variant v);
// Accepts "classical", "rank_one", "rank_two" and the CamelCase spellings.
std::optional<Variant> parse_variant(std::string_view text);

struct EstimatorConfig {
  Variant variant = Variant::RankTwo;
  double lambda = 0.95;
  std::size_t w = 16;
  double gamma0 = 100.0;
  double sing_rel_tol = 1e-12;
  // Re-anchor the gain to the direct window inverse every N steps; 0 disables.
  std::int64_t resync_period = 0;

  // Throws ValidationError naming the first invalid field.
  void validate() const;
};

struct EstimatorState {
  Vector theta;
  SymMatrix gamma;
  Step step = 0;
  std::int64_t skipped_steps = 0;
};

EstimatorState init_state(const FrequencyGrid& grid, const EstimatorConfig& config);

enum class UpdateLaw { Classical, RankOne, RankTwo };

// Result of one estimator step. Each guard that fires sets its flag and adds
// one to state.skipped_steps.
struct StepOutcome {
  EstimatorState state;
  UpdateLaw law = UpdateLaw::Classical;
  bool parameter_skipped = false;
  bool gain_skipped = false;
  bool resynced = false;
  std::optional<UpdatePair> pair;

  int guard_triggers() const { return int{parameter_skipped} + int{gain_skipped}; }
  bool skipped() const { return parameter_skipped || gain_skipped; }
};

// theta - phi / (phi^T phi) * (phi^T theta - y)
Vector classical_kaczmarz_step(std::span<const double> theta, std::span<const double> phi, double y);

// Exponentially forgetting rank-one law:
//   Gamma_k = (Gamma - Gamma phi phi^T Gamma / (lambda + phi^T Gamma phi)) / lambda
//   theta_k = theta - Gamma phi / (phi^T Gamma phi) * (phi^T theta - y)
// Both use Gamma_{k-1}. The parameter update is skipped when
// phi^T Gamma phi <= sing_rel_tol * trace(Gamma) * |phi|^2.
StepOutcome rank_one_gain_step(const EstimatorState& state, std::span<const double> phi, double y,
                               double lambda, double sing_rel_tol);

// Moving-window rank-two law with Q = [q_new, q_old], D = diag[1, -1]:
//   S       = lambda D + Q^T Gamma Q
//   Gamma_k = (Gamma - Gamma Q S^-1 Q^T Gamma) / lambda
//   theta_k = theta - Gamma Q (Q^T Gamma Q)^-1 (Q^T theta - y_tilde)
// A singular Q^T Gamma Q skips the parameter update; a singular S skips
// the gain update.
StepOutcome rank_two_gain_step(const EstimatorState& state, const UpdatePair& pair, double lambda,
                               double sing_rel_tol);

// Dispatches on config.variant. RankTwo applies the rank-one law until the
// window is full and a sample is evicted, then the rank-two law. `window`
// belongs to this run and receives every sample.
StepOutcome step(const EstimatorConfig& config, const EstimatorState& state, SampleWindow& window,
                 const SignalSample& sample);

}  // namespace kaczmarz
