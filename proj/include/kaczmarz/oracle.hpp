#pragma once

// Brute-force reference computations. Direct sums and dense inversion only,
// never the recursive update formulas.

#include <optional>
#include <span>

#include "kaczmarz/harmonic.hpp"
#include "kaczmarz/numerics.hpp"
#include "kaczmarz/window.hpp"

namespace kaczmarz::oracle {

struct OrthogonalityReport {
  Step k = 0;
  double residual_new = 0.0;  // |q_new^T theta - y_tilde[0]|
  double residual_old = 0.0;  // |q_old^T theta - y_tilde[1]|

  double max() const { return residual_new > residual_old ? residual_new : residual_old; }
};

// Inverse of the windowed information matrix. Requires a full window;
// nullopt when the window is not persistently exciting.
std::optional<SymMatrix> batch_gain(const SampleWindow& window, double lambda);

// sum_{j<=k} lambda^{k-j} phi_j phi_j^T over every sample (k = last),
// unweighted by any initial gain. Requires at least phi.size() samples.
SymMatrix full_history_information(std::span<const SignalSample> samples, double lambda);
std::optional<SymMatrix> full_history_gain(std::span<const SignalSample> samples, double lambda);

OrthogonalityReport orthogonality_report(const UpdatePair& pair, std::span<const double> theta);

}  // namespace kaczmarz::oracle
