#pragma once

#include <cstddef>
#include <deque>
#include <optional>

#include "kaczmarz/harmonic.hpp"
#include "kaczmarz/numerics.hpp"

namespace kaczmarz {

// The last `capacity` samples at consecutive steps, oldest first. Samples are
// stored raw; forgetting weights are applied on demand by the consumers.
class SampleWindow {
 public:
  explicit SampleWindow(std::size_t capacity);

  // Appends `sample`. Once the buffer is full the oldest sample is removed
  // and returned. Throws NonConsecutiveStep unless sample.k follows the
  // newest stored step.
  std::optional<SignalSample> push(SignalSample sample);

  std::size_t capacity() const noexcept { return capacity_; }
  std::size_t size() const noexcept { return samples_.size(); }
  bool empty() const noexcept { return samples_.empty(); }
  bool full() const noexcept { return samples_.size() == capacity_; }

  const SignalSample& oldest() const { return samples_.front(); }
  const SignalSample& newest() const { return samples_.back(); }
  const std::deque<SignalSample>& samples() const noexcept { return samples_; }

 private:
  std::size_t capacity_;
  std::deque<SignalSample> samples_;
};

// The two columns of Q_k and the synthetic output. Column order is fixed:
// new data first (D = +1), downdated data second (D = -1).
struct UpdatePair {
  Step k = 0;
  Vector q_new;
  Vector q_old;  // sqrt(lambda^w) * phi_{k-w}
  Vec2 y_tilde;  // [y_k, sqrt(lambda^w) * y_{k-w}]
};

UpdatePair make_update_pair(const SignalSample& current, const SignalSample& evicted, double lambda,
                            std::size_t w);

// sum_j lambda^{k-j} phi_j phi_j^T over the stored samples, k = newest step.
// Direct summation, no recursion.
SymMatrix direct_information_matrix(const SampleWindow& window, double lambda);

}  // namespace kaczmarz
