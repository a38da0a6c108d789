#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "kaczmarz/harmonic.hpp"

namespace kaczmarz::verify {

struct Options {
  std::uint64_t seed = 1;
  // Frequency counts to exercise; each in [1, 8].
  std::vector<std::size_t> sizes = {1, 2, 3, 4};
  // Multiplies every tolerance. Anything other than 1 is a test hook.
  double tolerance_scale = 1.0;
};

struct PropertyResult {
  std::string name;
  bool passed = true;
  std::size_t checks = 0;
  double worst = 0.0;
  double tolerance = 0.0;
  std::optional<Step> first_failing_step;
  std::string failing_case;
};

// Recursion-vs-oracle gain consistency, extended orthogonality, rank-one
// limit equivalence and the sliding information-matrix identity, each over
// seeded random grids of every requested size.
std::vector<PropertyResult> run_all(const Options& options);

std::string format_report(const std::vector<PropertyResult>& results);

// Random distinct frequencies in (0.2, 2.9), at least 0.2 apart.
FrequencyGrid random_grid(std::size_t count, std::uint64_t seed);

}  // namespace kaczmarz::verify
