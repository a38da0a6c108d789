#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "kaczmarz/numerics.hpp"

namespace kaczmarz {

using Step = std::int64_t;

// Known frequencies q_0..q_h in radians per sample. Every frequency lies in
// (0, pi) and no two are equal; otherwise a sine column vanishes or two
// columns coincide and the regressor loses excitation.
class FrequencyGrid {
 public:
  explicit FrequencyGrid(std::vector<double> frequencies);

  std::span<const double> frequencies() const noexcept { return frequencies_; }
  std::size_t count() const noexcept { return frequencies_.size(); }
  // Regressor length 2(h+1).
  std::size_t dimension() const noexcept { return 2 * frequencies_.size(); }

 private:
  std::vector<double> frequencies_;
};

// [cos(q_0 k), sin(q_0 k), ..., cos(q_h k), sin(q_h k)]; squared norm is h+1.
Vector eval_regressor(const FrequencyGrid& grid, Step k);

struct TrajectorySegment {
  Step start_step = 1;
  Vector theta_star;
};

// Piecewise-constant true parameters. Segment i is active on
// [start_step_i, start_step_{i+1}).
class ParameterTrajectory {
 public:
  ParameterTrajectory(std::vector<TrajectorySegment> segments, std::size_t dimension);

  static ParameterTrajectory constant(Vector theta_star);

  const Vector& theta_at(Step k) const;
  std::span<const TrajectorySegment> segments() const noexcept { return segments_; }
  std::size_t dimension() const noexcept { return dimension_; }

 private:
  std::vector<TrajectorySegment> segments_;
  std::size_t dimension_ = 0;
};

struct SignalSample {
  Step k = 0;
  Vector phi;
  double y = 0.0;
};

// Samples k = 1..steps with y_k = phi_k^T theta*(k) + eps_k, eps_k ~ N(0, noise_std^2)
// drawn from a generator seeded with `seed`.
std::vector<SignalSample> synthesize_signal(const FrequencyGrid& grid,
                                            const ParameterTrajectory& trajectory,
                                            Step steps, double noise_std, std::uint64_t seed);

}  // namespace kaczmarz
