#include "kaczmarz/csv.hpp"

#include <array>
#include <charconv>

namespace kaczmarz::csv {

std::string format_double(double value) {
  std::array<char, 64> buf{};
  const auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value);
  if (ec != std::errc{}) return "nan";
  return std::string(buf.data(), end);
}

void write_metrics(std::ostream& out, std::span<const MetricsRecord> records, bool include_theta) {
  std::string line = kMetricsHeader;
  const std::size_t theta_len = (include_theta && !records.empty()) ? records.front().theta.size() : 0;
  for (std::size_t i = 0; i < theta_len; ++i) line += ",theta_" + std::to_string(i);
  line += '\n';
  out << line;

  for (const MetricsRecord& r : records) {
    line.clear();
    line += std::to_string(r.k);
    line += ',';
    line += r.label;
    line += ',';
    line += format_double(r.param_error);
    line += ',';
    line += format_double(r.output_residual);
    line += ',';
    if (r.extended_residual) line += format_double(*r.extended_residual);
    line += ',';
    line += r.skipped ? '1' : '0';
    for (std::size_t i = 0; i < theta_len; ++i) {
      line += ',';
      line += format_double(r.theta[i]);
    }
    line += '\n';
    out << line;
  }
}

}  // namespace kaczmarz::csv
