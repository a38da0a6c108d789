#pragma once

#include <ostream>
#include <span>
#include <string>

#include "kaczmarz/harness.hpp"

namespace kaczmarz::csv {

inline constexpr const char* kMetricsHeader = "step,label,param_error,output_residual,extended_residual,skipped";

// Shortest decimal string that parses back to exactly `value`. Independent of
// the global locale.
std::string format_double(double value);

// Header plus one row per record. Absent extended residuals are empty
// fields; `skipped` is 0 or 1. With include_theta, theta_0..theta_{n-1}
// columns follow.
void write_metrics(std::ostream& out, std::span<const MetricsRecord> records, bool include_theta);

}  // namespace kaczmarz::csv
