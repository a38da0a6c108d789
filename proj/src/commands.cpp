#include "kaczmarz/commands.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "CLI11.hpp"
#include "kaczmarz/config.hpp"
#include "kaczmarz/csv.hpp"
#include "kaczmarz/errors.hpp"
#include "kaczmarz/harness.hpp"

namespace kaczmarz::cli {

namespace {

void write_file(const std::string& path, const std::string& contents) {
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) throw IoError("cannot open output file '" + path + "'");
  file << contents;
  file.close();
  if (!file) throw IoError("error writing output file '" + path + "'");
}

std::string metrics_csv(const std::vector<MetricsRecord>& records, bool include_theta) {
  std::ostringstream buf;
  csv::write_metrics(buf, records, include_theta);
  return buf.str();
}

std::string sci(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", v);
  return buf;
}

void print_table(std::ostream& out, const std::vector<SummaryRow>& rows) {
  std::vector<std::vector<std::string>> cells = {{"label", "reconvergence", "final_error", "mean_ext_residual", "skips"}};
  for (const SummaryRow& r : rows) {
    cells.push_back({r.label, r.reconvergence ? std::to_string(*r.reconvergence) : "not-reconverged", sci(r.final_error),
                     r.mean_extended_residual ? sci(*r.mean_extended_residual) : "-", std::to_string(r.skip_count)});
  }
  std::vector<std::size_t> width(cells.front().size(), 0);
  for (const auto& row : cells) {
    for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
  }
  for (const auto& row : cells) {
    std::string line;
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c > 0) line += "  ";
      // Label left-aligned, numbers right-aligned.
      const std::string pad(width[c] - row[c].size(), ' ');
      line += c == 0 ? row[c] + pad : pad + row[c];
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out << line << '\n';
  }
}

}  // namespace

int cmd_simulate(const std::filesystem::path& config_path, bool include_theta, std::ostream& out, std::ostream& err) {
  try {
    const RunConfig config = load_run_config(config_path);
    const std::vector<MetricsRecord> records = run_scenario(config.scenario);
    write_file(config.output, metrics_csv(records, include_theta));
    out << "wrote " << records.size() << " records to " << config.output << '\n';
    return kOk;
  } catch (const IoError& e) {
    err << "error: " << e.what() << '\n';
    return kIoFailure;
  } catch (const ValidationError& e) {
    err << "invalid config: " << e.what() << '\n';
    return kConfigInvalid;
  }
}

int cmd_verify(const verify::Options& options, std::ostream& out, std::ostream& err) {
  std::vector<verify::PropertyResult> results;
  try {
    results = verify::run_all(options);
  } catch (const ValidationError& e) {
    err << "invalid arguments: " << e.what() << '\n';
    return kConfigInvalid;
  }
  out << verify::format_report(results);
  const bool ok = std::all_of(results.begin(), results.end(), [](const auto& r) { return r.passed; });
  return ok ? kOk : kPropertyFailure;
}

int cmd_compare(const std::filesystem::path& config_path, Step change_step, double tol, bool include_theta,
                std::ostream& out, std::ostream& err) {
  try {
    if (!(tol > 0.0) || !std::isfinite(tol)) throw ValidationError("--tol", "must be finite and > 0");
    const RunConfig config = load_run_config(config_path);
    if (change_step < 1 || change_step > config.scenario.steps) {
      throw ValidationError("--change-step", "must lie in [1, steps]");
    }
    const std::vector<MetricsRecord> records = run_scenario(config.scenario);
    write_file(config.output, metrics_csv(records, include_theta));
    print_table(out, compare_summary(records, change_step, tol));
    return kOk;
  } catch (const IoError& e) {
    err << "error: " << e.what() << '\n';
    return kIoFailure;
  } catch (const ValidationError& e) {
    err << "invalid config: " << e.what() << '\n';
    return kConfigInvalid;
  }
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Kaczmarz estimators for harmonic signals"};
  app.require_subcommand(1);

  std::string config_path;
  bool include_theta = false;
  auto* simulate = app.add_subcommand("simulate", "Run a scenario and write per-step metrics CSV");
  simulate->add_option("--config", config_path, "JSON run configuration")->required();
  simulate->add_flag("--theta", include_theta, "Append theta components to each CSV row");

  verify::Options verify_options;
  auto* verify_cmd = app.add_subcommand("verify", "Run the oracle property suites on seeded scenarios");
  verify_cmd->add_option("--seed", verify_options.seed, "Random seed");
  verify_cmd->add_option("--sizes", verify_options.sizes, "Frequency counts, e.g. 1,2,3")->delimiter(',');
  // Test hook for exercising the failure path.
  verify_cmd->add_option("--tolerance-scale", verify_options.tolerance_scale)->group("");

  Step change_step = 0;
  double tol = 0.0;
  auto* compare = app.add_subcommand("compare", "Run a scenario and summarize reconvergence after a change");
  compare->add_option("--config", config_path, "JSON run configuration")->required();
  compare->add_option("--change-step", change_step, "Step at which the parameters change")->required();
  compare->add_option("--tol", tol, "Parameter-error tolerance")->required();
  compare->add_flag("--theta", include_theta, "Append theta components to each CSV row");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kConfigInvalid;
  }

  if (simulate->parsed()) return cmd_simulate(config_path, include_theta, out, err);
  if (verify_cmd->parsed()) return cmd_verify(verify_options, out, err);
  return cmd_compare(config_path, change_step, tol, include_theta, out, err);
}

}  // namespace kaczmarz::cli
