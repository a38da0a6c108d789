#include "kaczmarz/config.hpp"

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <initializer_list>
#include <sstream>

#include "json.hpp"
#include "kaczmarz/errors.hpp"

namespace kaczmarz {

namespace {

using nlohmann::json;

void reject_unknown_keys(const json& obj, const std::string& path, std::initializer_list<std::string_view> known) {
  for (const auto& [key, value] : obj.items()) {
    if (std::find(known.begin(), known.end(), key) == known.end()) {
      throw ValidationError(path.empty() ? key : path + "." + key, "unknown field");
    }
  }
}

const json& require(const json& obj, const std::string& key, const std::string& path) {
  auto it = obj.find(key);
  if (it == obj.end()) throw ValidationError(path, "missing required field");
  return *it;
}

double as_real(const json& v, const std::string& path) {
  if (!v.is_number()) throw ValidationError(path, "expected a number");
  return v.get<double>();
}

std::int64_t as_integer(const json& v, const std::string& path) {
  if (!v.is_number_integer()) throw ValidationError(path, "expected an integer");
  if (v.is_number_unsigned() && v.get<std::uint64_t>() > static_cast<std::uint64_t>(INT64_MAX)) {
    throw ValidationError(path, "integer out of range");
  }
  return v.get<std::int64_t>();
}

Vector as_vector(const json& v, const std::string& path) {
  if (!v.is_array()) throw ValidationError(path, "expected an array of numbers");
  Vector out;
  for (std::size_t i = 0; i < v.size(); ++i) out.push_back(as_real(v[i], path + "[" + std::to_string(i) + "]"));
  return out;
}

std::string as_string(const json& v, const std::string& path) {
  if (!v.is_string()) throw ValidationError(path, "expected a string");
  return v.get<std::string>();
}

EstimatorSpec parse_estimator(const json& e, const std::string& path) {
  if (!e.is_object()) throw ValidationError(path, "expected an object");
  reject_unknown_keys(e, path, {"label", "variant", "lambda", "w", "gamma0", "sing_rel_tol", "resync_period", "theta0"});

  EstimatorSpec spec;
  spec.label = as_string(require(e, "label", path + ".label"), path + ".label");
  const std::string variant = as_string(require(e, "variant", path + ".variant"), path + ".variant");
  auto parsed = parse_variant(variant);
  if (!parsed) throw ValidationError(path + ".variant", "unknown variant '" + variant + "'");
  spec.config.variant = *parsed;

  if (e.contains("lambda")) spec.config.lambda = as_real(e["lambda"], path + ".lambda");
  if (e.contains("w")) {
    const std::int64_t w = as_integer(e["w"], path + ".w");
    if (w < 2) throw ValidationError(path + ".w", "must be at least 2");
    spec.config.w = static_cast<std::size_t>(w);
  }
  if (e.contains("gamma0")) spec.config.gamma0 = as_real(e["gamma0"], path + ".gamma0");
  if (e.contains("sing_rel_tol")) spec.config.sing_rel_tol = as_real(e["sing_rel_tol"], path + ".sing_rel_tol");
  if (e.contains("resync_period")) spec.config.resync_period = as_integer(e["resync_period"], path + ".resync_period");
  if (e.contains("theta0")) spec.initial_theta = as_vector(e["theta0"], path + ".theta0");

  try {
    spec.config.validate();
  } catch (const ValidationError& err) {
    throw ValidationError(path + "." + err.field(), std::string(err.what()).substr(err.field().size() + 2));
  }
  return spec;
}

std::string line_column(std::string_view text, std::size_t byte) {
  std::size_t line = 1;
  std::size_t column = 1;
  for (std::size_t i = 0; i < std::min(byte, text.size()); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(column);
}

}  // namespace

RunConfig parse_run_config(std::string_view json_text) {
  json root;
  try {
    root = json::parse(json_text);
  } catch (const json::parse_error& e) {
    // nlohmann reports the byte just past the offending token.
    const std::size_t at = e.byte > 0 ? e.byte - 1 : 0;
    throw ValidationError(line_column(json_text, at), "malformed JSON");
  }
  if (!root.is_object()) throw ValidationError("<root>", "expected a JSON object");
  reject_unknown_keys(root, "", {"frequencies", "segments", "steps", "noise_std", "seed", "estimators", "output"});

  FrequencyGrid grid(as_vector(require(root, "frequencies", "frequencies"), "frequencies"));

  const json& segs = require(root, "segments", "segments");
  if (!segs.is_array()) throw ValidationError("segments", "expected an array");
  std::vector<TrajectorySegment> segments;
  for (std::size_t i = 0; i < segs.size(); ++i) {
    const std::string path = "segments[" + std::to_string(i) + "]";
    if (!segs[i].is_object()) throw ValidationError(path, "expected an object");
    reject_unknown_keys(segs[i], path, {"start_step", "theta_star"});
    TrajectorySegment s;
    s.start_step = as_integer(require(segs[i], "start_step", path + ".start_step"), path + ".start_step");
    s.theta_star = as_vector(require(segs[i], "theta_star", path + ".theta_star"), path + ".theta_star");
    segments.push_back(std::move(s));
  }
  ParameterTrajectory trajectory(std::move(segments), grid.dimension());

  const Step steps = as_integer(require(root, "steps", "steps"), "steps");
  if (steps < 1) throw ValidationError("steps", "must be at least 1");
  const double noise_std = root.contains("noise_std") ? as_real(root["noise_std"], "noise_std") : 0.0;
  std::uint64_t seed = 0;
  if (root.contains("seed")) {
    const json& s = root["seed"];
    if (!s.is_number_unsigned()) throw ValidationError("seed", "expected a non-negative integer");
    seed = s.get<std::uint64_t>();
  }

  const json& ests = require(root, "estimators", "estimators");
  if (!ests.is_array()) throw ValidationError("estimators", "expected an array");
  std::vector<EstimatorSpec> estimators;
  for (std::size_t i = 0; i < ests.size(); ++i) {
    estimators.push_back(parse_estimator(ests[i], "estimators[" + std::to_string(i) + "]"));
  }

  std::string output = as_string(require(root, "output", "output"), "output");
  if (output.empty()) throw ValidationError("output", "must not be empty");

  RunConfig config{Scenario{std::move(grid), std::move(trajectory), steps, noise_std, seed, std::move(estimators)},
                   std::move(output)};
  config.scenario.validate();
  return config;
}

RunConfig load_run_config(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read config file '" + path.string() + "'");
  std::ostringstream text;
  text << in.rdbuf();
  if (in.bad()) throw IoError("error reading config file '" + path.string() + "'");
  return parse_run_config(text.str());
}

}  // namespace kaczmarz
