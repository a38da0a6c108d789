#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>

#include "kaczmarz/harness.hpp"

namespace kaczmarz {

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  Scenario scenario;
  std::string output;
};

// JSON run configuration:
//   frequencies  array of reals in (0, pi)           required
//   segments     array of {start_step, theta_star}   required
//   steps        integer                             required
//   noise_std    real >= 0                           default 0
//   seed         unsigned integer                    default 0
//   estimators   array of {label, variant, lambda, w, gamma0,
//                sing_rel_tol, resync_period, theta0} label/variant required
//   output       CSV path                            required
// Malformed JSON and invalid fields raise ValidationError naming the line
// or the field path (e.g. "estimators[1].lambda").
RunConfig parse_run_config(std::string_view json_text);

// Throws IoError when the file cannot be read.
RunConfig load_run_config(const std::filesystem::path& path);

}  // namespace kaczmarz
