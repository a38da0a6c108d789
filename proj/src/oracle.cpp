#include "kaczmarz/oracle.hpp"

#include <cmath>
#include <stdexcept>

#include "kaczmarz/errors.hpp"

namespace kaczmarz::oracle {

std::optional<SymMatrix> batch_gain(const SampleWindow& window, double lambda) {
  if (!window.full()) throw std::invalid_argument("batch_gain: window is not full");
  return invert_sym(direct_information_matrix(window, lambda));
}

SymMatrix full_history_information(std::span<const SignalSample> samples, double lambda) {
  if (!(lambda > 0.0 && lambda <= 1.0)) throw ValidationError("lambda", "must satisfy 0 < lambda <= 1");
  if (samples.empty()) throw std::invalid_argument("full_history_information: no samples");
  const std::size_t n = samples.front().phi.size();
  if (samples.size() < n) throw std::invalid_argument("full_history_information: fewer samples than parameters");

  const Step k = samples.back().k;
  SymMatrix a(n);
  for (const SignalSample& s : samples) {
    if (s.phi.size() != n) throw DimensionMismatch("full_history_information: regressor length mismatch");
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

std::optional<SymMatrix> full_history_gain(std::span<const SignalSample> samples, double lambda) {
  return invert_sym(full_history_information(samples, lambda));
}

OrthogonalityReport orthogonality_report(const UpdatePair& pair, std::span<const double> theta) {
  return OrthogonalityReport{pair.k, std::abs(dot(pair.q_new, theta) - pair.y_tilde.x0),
                             std::abs(dot(pair.q_old, theta) - pair.y_tilde.x1)};
}

}  // namespace kaczmarz::oracle
