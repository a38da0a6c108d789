#include "kaczmarz/window.hpp"

#include <cmath>
#include <string>

#include "kaczmarz/errors.hpp"

namespace kaczmarz {

namespace {

void check_lambda(double lambda) {
  if (!(lambda > 0.0 && lambda <= 1.0)) throw ValidationError("lambda", "must satisfy 0 < lambda <= 1");
}

}  // namespace

SampleWindow::SampleWindow(std::size_t capacity) : capacity_(capacity) {
  if (capacity_ < 2) throw ValidationError("w", "window size must be at least 2");
}

std::optional<SignalSample> SampleWindow::push(SignalSample sample) {
  if (!samples_.empty()) {
    if (sample.k != samples_.back().k + 1) {
      throw NonConsecutiveStep("window expected step " + std::to_string(samples_.back().k + 1) +
                               ", got " + std::to_string(sample.k));
    }
    if (sample.phi.size() != samples_.back().phi.size()) {
      throw DimensionMismatch("window: regressor length changed");
    }
  }
  samples_.push_back(std::move(sample));
  if (samples_.size() <= capacity_) return std::nullopt;
  SignalSample evicted = std::move(samples_.front());
  samples_.pop_front();
  return evicted;
}

UpdatePair make_update_pair(const SignalSample& current, const SignalSample& evicted, double lambda,
                            std::size_t w) {
  check_lambda(lambda);
  if (current.k - evicted.k != static_cast<Step>(w)) {
    throw WindowMisaligned("update pair needs a step gap of " + std::to_string(w) + ", got " +
                           std::to_string(current.k - evicted.k));
  }
  if (current.phi.size() != evicted.phi.size()) throw DimensionMismatch("update pair: regressor length mismatch");

  const double weight = std::sqrt(std::pow(lambda, static_cast<double>(w)));
  UpdatePair pair;
  pair.k = current.k;
  pair.q_new = current.phi;
  pair.q_old.reserve(evicted.phi.size());
  for (double v : evicted.phi) pair.q_old.push_back(weight * v);
  pair.y_tilde = {current.y, weight * evicted.y};
  return pair;
}

SymMatrix direct_information_matrix(const SampleWindow& window, double lambda) {
  check_lambda(lambda);
  if (window.empty()) throw std::invalid_argument("direct_information_matrix: window is empty");
  const std::size_t n = window.newest().phi.size();
  const Step k = window.newest().k;
  SymMatrix a(n);
  for (const SignalSample& s : window.samples()) {
    const double weight = std::pow(lambda, static_cast<double>(k - s.k));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i; j < n; ++j) a(i, j) += weight * s.phi[i] * s.phi[j];
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < i; ++j) a(i, j) = a(j, i);
  }
  return a;
}

}  // namespace kaczmarz
