#include "kaczmarz/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <random>

#include "kaczmarz/errors.hpp"
#include "kaczmarz/estimators.hpp"
#include "kaczmarz/oracle.hpp"

namespace kaczmarz::verify {

namespace {

constexpr double kGainTol = 1e-6;
constexpr double kOrthogonalityTol = 1e-9;
constexpr double kLimitTol = 1e-6;
constexpr double kSlidingTol = 1e-10;

class Tracker {
 public:
  Tracker(std::string name, double tolerance) {
    result_.name = std::move(name);
    result_.tolerance = tolerance;
  }

  void check(double value, Step k, const std::string& context) {
    ++result_.checks;
    result_.worst = std::max(result_.worst, value);
    if (!(value <= result_.tolerance) && result_.passed) {
      result_.passed = false;
      result_.first_failing_step = k;
      result_.failing_case = context;
    }
  }

  PropertyResult result() const { return result_; }

 private:
  PropertyResult result_;
};

Vector random_theta(std::size_t n, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  Vector theta(n);
  for (double& v : theta) v = u(rng);
  return theta;
}

std::string case_name(std::size_t freqs, double lambda, std::size_t w) {
  char buf[96];
  std::snprintf(buf, sizeof buf, "freqs=%zu lambda=%g w=%zu", freqs, lambda, w);
  return buf;
}

double relative_distance(const Vector& a, const Vector& ref) {
  double diff2 = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) diff2 += (a[i] - ref[i]) * (a[i] - ref[i]);
  const double ref_norm = norm2(ref);
  return ref_norm > 0.0 ? std::sqrt(diff2) / ref_norm : std::sqrt(diff2);
}

PropertyResult gain_consistency(const Options& opt) {
  Tracker t("gain_consistency", kGainTol * opt.tolerance_scale);
  std::uint64_t salt = 0;
  for (std::size_t freqs : opt.sizes) {
    for (double lambda : {0.9, 0.95}) {
      for (std::size_t w : {std::max<std::size_t>(8, 2 * freqs), std::size_t{20}}) {
        const std::uint64_t seed = opt.seed * 1000003 + (++salt);
        std::mt19937_64 rng(seed);
        const FrequencyGrid grid = random_grid(freqs, seed);
        const auto samples = synthesize_signal(grid, ParameterTrajectory::constant(random_theta(grid.dimension(), rng)),
                                               static_cast<Step>(w + 500), 0.0, seed);
        EstimatorConfig config;
        config.variant = Variant::RankTwo;
        config.lambda = lambda;
        config.w = w;
        EstimatorState state = init_state(grid, config);
        SampleWindow window(w);
        for (std::size_t i = 0; i < samples.size(); ++i) {
          state = step(config, state, window, samples[i]).state;
          if (i + 1 < w) continue;
          auto direct = oracle::batch_gain(window, lambda);
          if (!direct) {
            t.check(INFINITY, samples[i].k, case_name(freqs, lambda, w) + " (window not exciting)");
            continue;
          }
          if (i + 1 == w) {
            state.gamma = *direct;
            continue;
          }
          t.check(relative_frobenius_error(state.gamma, *direct), samples[i].k, case_name(freqs, lambda, w));
        }
      }
    }
  }
  return t.result();
}

PropertyResult extended_orthogonality(const Options& opt) {
  Tracker t("extended_orthogonality", kOrthogonalityTol * opt.tolerance_scale);
  std::uint64_t salt = 100;
  for (std::size_t freqs : opt.sizes) {
    for (double lambda : {0.9, 0.99}) {
      const std::size_t w = std::max<std::size_t>(12, 2 * freqs + 4);
      const std::uint64_t seed = opt.seed * 1000003 + (++salt);
      std::mt19937_64 rng(seed);
      const FrequencyGrid grid = random_grid(freqs, seed);
      const Vector truth = random_theta(grid.dimension(), rng);
      const auto samples = synthesize_signal(grid, ParameterTrajectory::constant(truth), 300, 0.0, seed);
      EstimatorConfig config;
      config.variant = Variant::RankTwo;
      config.lambda = lambda;
      config.w = w;
      EstimatorState state = init_state(grid, config);
      SampleWindow window(w);
      for (const SignalSample& s : samples) {
        StepOutcome out = step(config, state, window, s);
        state = out.state;
        if (out.law != UpdateLaw::RankTwo || out.parameter_skipped) continue;
        const UpdatePair& pair = *out.pair;
        const double scale = 1.0 + std::max(std::abs(pair.y_tilde.x0), std::abs(pair.y_tilde.x1));
        t.check(oracle::orthogonality_report(pair, state.theta).max() / scale, s.k, case_name(freqs, lambda, w));
        Vector mismatch = state.theta;
        for (std::size_t i = 0; i < mismatch.size(); ++i) mismatch[i] -= truth[i];
        const double mismatch_residual = std::max(std::abs(dot(pair.q_new, mismatch)), std::abs(dot(pair.q_old, mismatch)));
        t.check(mismatch_residual / scale, s.k, case_name(freqs, lambda, w) + " (mismatch)");
      }
    }
  }
  return t.result();
}

PropertyResult limit_equivalence(const Options& opt) {
  Tracker t("limit_equivalence", kLimitTol * opt.tolerance_scale);
  constexpr double lambda = 0.5;
  constexpr std::size_t w = 40;
  std::uint64_t salt = 200;
  for (std::size_t freqs : opt.sizes) {
    const std::uint64_t seed = opt.seed * 1000003 + (++salt);
    std::mt19937_64 rng(seed);
    const FrequencyGrid grid = random_grid(freqs, seed);
    const auto samples =
        synthesize_signal(grid, ParameterTrajectory::constant(random_theta(grid.dimension(), rng)), 300, 0.0, seed);
    EstimatorConfig two;
    two.variant = Variant::RankTwo;
    two.lambda = lambda;
    two.w = w;
    EstimatorConfig one = two;
    one.variant = Variant::RankOne;
    EstimatorState s2 = init_state(grid, two);
    EstimatorState s1 = init_state(grid, one);
    SampleWindow w2(w);
    SampleWindow w1(w);
    for (const SignalSample& s : samples) {
      s2 = step(two, s2, w2, s).state;
      s1 = step(one, s1, w1, s).state;
      if (s.k > static_cast<Step>(w)) t.check(relative_distance(s2.theta, s1.theta), s.k, case_name(freqs, lambda, w));
    }
  }
  return t.result();
}

PropertyResult sliding_identity(const Options& opt) {
  Tracker t("sliding_identity", kSlidingTol * opt.tolerance_scale);
  std::uint64_t salt = 300;
  for (std::size_t freqs : opt.sizes) {
    for (double lambda : {0.5, 0.9, 1.0}) {
      for (std::size_t w : {4, 16, 40}) {
        const std::uint64_t seed = opt.seed * 1000003 + (++salt);
        const FrequencyGrid grid = random_grid(freqs, seed);
        SampleWindow window(w);
        std::optional<SymMatrix> previous;
        for (Step k = 1; k <= static_cast<Step>(3 * w); ++k) {
          SignalSample sample{k, eval_regressor(grid, k), 0.0};
          auto evicted = window.push(sample);
          SymMatrix direct = direct_information_matrix(window, lambda);
          if (evicted) {
            const UpdatePair pair = make_update_pair(sample, *evicted, lambda, w);
            const SymMatrix recursed = rank_two_downdate_apply(*previous, pair.q_new, pair.q_old, lambda);
            t.check(relative_frobenius_error(recursed, direct), k, case_name(freqs, lambda, w));
          }
          previous = std::move(direct);
        }
      }
    }
  }
  return t.result();
}

}  // namespace

FrequencyGrid random_grid(std::size_t count, std::uint64_t seed) {
  if (count < 1 || count > 8) throw ValidationError("sizes", "frequency count must be between 1 and 8");
  constexpr double lo = 0.2;
  constexpr double hi = 2.9;
  constexpr double gap = 0.2;
  std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
  std::uniform_real_distribution<double> u(0.0, (hi - lo) - gap * static_cast<double>(count - 1));
  std::vector<double> q(count);
  for (double& v : q) v = u(rng);
  std::sort(q.begin(), q.end());
  for (std::size_t i = 0; i < count; ++i) q[i] += lo + gap * static_cast<double>(i);
  return FrequencyGrid(std::move(q));
}

std::vector<PropertyResult> run_all(const Options& options) {
  if (options.sizes.empty()) throw ValidationError("sizes", "at least one size is required");
  for (std::size_t s : options.sizes) {
    if (s < 1 || s > 8) throw ValidationError("sizes", "frequency count must be between 1 and 8");
  }
  return {gain_consistency(options), extended_orthogonality(options), limit_equivalence(options),
          sliding_identity(options)};
}

std::string format_report(const std::vector<PropertyResult>& results) {
  std::string out;
  char buf[256];
  for (const PropertyResult& r : results) {
    if (r.passed) {
      std::snprintf(buf, sizeof buf, "PASS %-24s checks=%zu worst=%.3e tol=%.1e\n", r.name.c_str(), r.checks, r.worst,
                    r.tolerance);
    } else {
      std::snprintf(buf, sizeof buf, "FAIL %-24s first failing step=%lld [%s] checks=%zu worst=%.3e tol=%.1e\n",
                    r.name.c_str(), static_cast<long long>(r.first_failing_step.value_or(0)), r.failing_case.c_str(),
                    r.checks, r.worst, r.tolerance);
    }
    out += buf;
  }
  return out;
}

}  // namespace kaczmarz::verify
