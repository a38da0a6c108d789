#include "kaczmarz/estimators.hpp"

#include <cctype>
#include <cmath>
#include <string>

#include "kaczmarz/errors.hpp"

namespace kaczmarz {

std::string_view to_string(Variant v) {
  switch (v) {
    case Variant::Classical:
      return "classical";
    case Variant::RankOne:
      return "rank_one";
    case Variant::RankTwo:
      return "rank_two";
  }
  return "unknown";
}

std::optional<Variant> parse_variant(std::string_view text) {
  std::string lowered;
  for (char c : text) {
    if (c == '_' || c == '-') continue;
    lowered.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  }
  if (lowered == "classical") return Variant::Classical;
  if (lowered == "rankone") return Variant::RankOne;
  if (lowered == "ranktwo") return Variant::RankTwo;
  return std::nullopt;
}

void EstimatorConfig::validate() const {
  if (!(lambda > 0.0 && lambda <= 1.0)) throw ValidationError("lambda", "must satisfy 0 < lambda <= 1");
  if (w < 2) throw ValidationError("w", "must be at least 2");
  if (!(gamma0 > 0.0) || !std::isfinite(gamma0)) throw ValidationError("gamma0", "must be finite and > 0");
  if (!(sing_rel_tol > 0.0) || !std::isfinite(sing_rel_tol)) {
    throw ValidationError("sing_rel_tol", "must be finite and > 0");
  }
  if (resync_period < 0) throw ValidationError("resync_period", "must be >= 0");
}

EstimatorState init_state(const FrequencyGrid& grid, const EstimatorConfig& config) {
  config.validate();
  const std::size_t n = grid.dimension();
  return EstimatorState{Vector(n, 0.0), SymMatrix::identity(n, config.gamma0), 0, 0};
}

Vector classical_kaczmarz_step(std::span<const double> theta, std::span<const double> phi, double y) {
  const double residual = dot(phi, theta) - y;
  const double scale = residual / dot(phi, phi);
  Vector next(theta.begin(), theta.end());
  for (std::size_t i = 0; i < next.size(); ++i) next[i] -= scale * phi[i];
  return next;
}

namespace {

void check_dims(const EstimatorState& state, std::size_t n) {
  if (state.theta.size() != n || state.gamma.dim() != n) {
    throw DimensionMismatch("estimator state does not match regressor length " + std::to_string(n));
  }
}

}  // namespace

StepOutcome rank_one_gain_step(const EstimatorState& state, std::span<const double> phi, double y,
                               double lambda, double sing_rel_tol) {
  const std::size_t n = phi.size();
  check_dims(state, n);

  StepOutcome out;
  out.state = state;
  out.law = UpdateLaw::RankOne;
  const Vector g = state.gamma.apply(phi);
  const double a = dot(phi, g);

  if (a > sing_rel_tol * state.gamma.trace() * dot(phi, phi)) {
    const double scale = (dot(phi, state.theta) - y) / a;
    for (std::size_t i = 0; i < n; ++i) out.state.theta[i] -= scale * g[i];
  } else {
    out.parameter_skipped = true;
    ++out.state.skipped_steps;
  }

  const double denom = lambda + a;
  SymMatrix gamma(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) gamma(i, j) = (state.gamma(i, j) - g[i] * g[j] / denom) / lambda;
  }
  out.state.gamma = symmetrize(gamma);
  return out;
}

StepOutcome rank_two_gain_step(const EstimatorState& state, const UpdatePair& pair, double lambda,
                               double sing_rel_tol) {
  const std::size_t n = pair.q_new.size();
  check_dims(state, n);
  if (pair.q_old.size() != n) throw DimensionMismatch("update pair columns differ in length");

  StepOutcome out;
  out.state = state;
  out.law = UpdateLaw::RankTwo;
  out.pair = pair;

  // G = Gamma Q, column by column.
  const Vector g_new = state.gamma.apply(pair.q_new);
  const Vector g_old = state.gamma.apply(pair.q_old);
  const double cross = 0.5 * (dot(pair.q_new, g_old) + dot(pair.q_old, g_new));
  const Mat2 pair_matrix{dot(pair.q_new, g_new), cross, cross, dot(pair.q_old, g_old)};

  const Vec2 residual{dot(pair.q_new, state.theta) - pair.y_tilde.x0,
                      dot(pair.q_old, state.theta) - pair.y_tilde.x1};
  if (auto x = solve2(pair_matrix, residual, sing_rel_tol)) {
    for (std::size_t i = 0; i < n; ++i) out.state.theta[i] -= g_new[i] * x->x0 + g_old[i] * x->x1;
  } else {
    out.parameter_skipped = true;
    ++out.state.skipped_steps;
  }

  const Mat2 s{pair_matrix.a + lambda, pair_matrix.b, pair_matrix.c, pair_matrix.d - lambda};
  if (auto s_inv = invert2(s, sing_rel_tol)) {
    SymMatrix gamma(n);
    for (std::size_t i = 0; i < n; ++i) {
      // Row i of G S^-1.
      const double u0 = g_new[i] * s_inv->a + g_old[i] * s_inv->c;
      const double u1 = g_new[i] * s_inv->b + g_old[i] * s_inv->d;
      for (std::size_t j = 0; j < n; ++j) {
        gamma(i, j) = (state.gamma(i, j) - (u0 * g_new[j] + u1 * g_old[j])) / lambda;
      }
    }
    out.state.gamma = symmetrize(gamma);
  } else {
    out.gain_skipped = true;
    ++out.state.skipped_steps;
  }
  return out;
}

StepOutcome step(const EstimatorConfig& config, const EstimatorState& state, SampleWindow& window,
                 const SignalSample& sample) {
  check_dims(state, sample.phi.size());
  if (window.capacity() != config.w) throw WindowMisaligned("window capacity differs from config.w");

  EstimatorState current = state;
  bool resynced = false;
  if (config.variant == Variant::RankTwo && config.resync_period > 0 && window.full() &&
      sample.k % config.resync_period == 0) {
    // Window still holds k-w..k-1 here, so this is A_{k-1}^{-1}.
    if (auto g = invert_sym(direct_information_matrix(window, config.lambda))) {
      current.gamma = std::move(*g);
      resynced = true;
    }
  }

  std::optional<SignalSample> evicted = window.push(sample);

  StepOutcome out;
  switch (config.variant) {
    case Variant::Classical:
      out.state = current;
      out.state.theta = classical_kaczmarz_step(current.theta, sample.phi, sample.y);
      out.law = UpdateLaw::Classical;
      break;
    case Variant::RankOne:
      out = rank_one_gain_step(current, sample.phi, sample.y, config.lambda, config.sing_rel_tol);
      break;
    case Variant::RankTwo:
      if (evicted) {
        const UpdatePair pair = make_update_pair(sample, *evicted, config.lambda, config.w);
        out = rank_two_gain_step(current, pair, config.lambda, config.sing_rel_tol);
      } else {
        out = rank_one_gain_step(current, sample.phi, sample.y, config.lambda, config.sing_rel_tol);
      }
      break;
  }
  out.resynced = resynced;
  out.state.step = sample.k;
  return out;
}

}  // namespace kaczmarz
