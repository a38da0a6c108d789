#include "kaczmarz/harmonic.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <string>

#include "kaczmarz/errors.hpp"

namespace kaczmarz {

FrequencyGrid::FrequencyGrid(std::vector<double> frequencies)
    : frequencies_(std::move(frequencies)) {
  if (frequencies_.empty()) throw ValidationError("frequencies", "at least one frequency is required");
  for (std::size_t i = 0; i < frequencies_.size(); ++i) {
    const double q = frequencies_[i];
    const std::string field = "frequencies[" + std::to_string(i) + "]";
    if (!std::isfinite(q) || q <= 0.0 || q >= std::numbers::pi) {
      throw ValidationError(field, "must lie strictly inside (0, pi)");
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (frequencies_[j] == q) throw ValidationError(field, "duplicates frequencies[" + std::to_string(j) + "]");
    }
  }
}

Vector eval_regressor(const FrequencyGrid& grid, Step k) {
  if (k < 0) throw std::invalid_argument("eval_regressor: step must be non-negative");
  Vector phi;
  phi.reserve(grid.dimension());
  const auto t = static_cast<double>(k);
  for (double q : grid.frequencies()) {
    phi.push_back(std::cos(q * t));
    phi.push_back(std::sin(q * t));
  }
  return phi;
}

ParameterTrajectory::ParameterTrajectory(std::vector<TrajectorySegment> segments, std::size_t dimension)
    : segments_(std::move(segments)), dimension_(dimension) {
  if (segments_.empty()) throw ValidationError("segments", "at least one segment is required");
  if (segments_.front().start_step != 1) throw ValidationError("segments[0].start_step", "must be 1");
  for (std::size_t i = 0; i < segments_.size(); ++i) {
    const std::string prefix = "segments[" + std::to_string(i) + "]";
    if (i > 0 && segments_[i].start_step <= segments_[i - 1].start_step) {
      throw ValidationError(prefix + ".start_step", "must be strictly increasing");
    }
    if (segments_[i].theta_star.size() != dimension_) {
      throw ValidationError(prefix + ".theta_star",
                            "expected length " + std::to_string(dimension_) + ", got " +
                                std::to_string(segments_[i].theta_star.size()));
    }
    for (double v : segments_[i].theta_star) {
      if (!std::isfinite(v)) throw ValidationError(prefix + ".theta_star", "entries must be finite");
    }
  }
}

ParameterTrajectory ParameterTrajectory::constant(Vector theta_star) {
  const std::size_t n = theta_star.size();
  return ParameterTrajectory({TrajectorySegment{1, std::move(theta_star)}}, n);
}

const Vector& ParameterTrajectory::theta_at(Step k) const {
  auto it = std::upper_bound(segments_.begin(), segments_.end(), k,
                             [](Step step, const TrajectorySegment& s) { return step < s.start_step; });
  if (it == segments_.begin()) return segments_.front().theta_star;
  return std::prev(it)->theta_star;
}

std::vector<SignalSample> synthesize_signal(const FrequencyGrid& grid,
                                            const ParameterTrajectory& trajectory,
                                            Step steps, double noise_std, std::uint64_t seed) {
  if (steps < 1) throw ValidationError("steps", "must be at least 1");
  if (!(noise_std >= 0.0) || !std::isfinite(noise_std)) throw ValidationError("noise_std", "must be finite and >= 0");
  if (trajectory.dimension() != grid.dimension()) {
    throw ValidationError("segments", "theta_star length does not match 2 * frequency count");
  }

  std::mt19937_64 rng(seed);
  std::normal_distribution<double> noise(0.0, 1.0);

  std::vector<SignalSample> samples;
  samples.reserve(static_cast<std::size_t>(steps));
  for (Step k = 1; k <= steps; ++k) {
    SignalSample s{k, eval_regressor(grid, k), 0.0};
    s.y = dot(s.phi, trajectory.theta_at(k));
    if (noise_std > 0.0) s.y += noise_std * noise(rng);
    samples.push_back(std::move(s));
  }
  return samples;
}

}  // namespace kaczmarz
