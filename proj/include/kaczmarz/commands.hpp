#pragma once

#include <filesystem>
#include <ostream>
#include <string>
#include <vector>

#include "kaczmarz/verify.hpp"

namespace kaczmarz::cli {

enum ExitCode : int {
  kOk = 0,
  kIoFailure = 1,
  kConfigInvalid = 2,
  kPropertyFailure = 3,
};

int cmd_simulate(const std::filesystem::path& config_path, bool include_theta, std::ostream& out, std::ostream& err);
int cmd_verify(const verify::Options& options, std::ostream& out, std::ostream& err);
int cmd_compare(const std::filesystem::path& config_path, Step change_step, double tol, bool include_theta,
                std::ostream& out, std::ostream& err);

// Parses argv (without the program name) and dispatches to a subcommand.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace kaczmarz::cli
