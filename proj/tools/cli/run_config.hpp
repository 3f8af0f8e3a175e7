#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "reinhardt/tolerances.hpp"

namespace reinhardt::cli {

enum class Command { curvature, scan, flow, verify, critical, ode };
enum class Format { json, csv, svg };

Command parse_command(const std::string& name);
Format parse_format(const std::string& name);
const char* to_string(Command c);
const char* to_string(Format f);

/// Process exit codes; scripts branch on them.
enum ExitCode : int {
  kExitOk = 0,
  kExitError = 1,          // I/O, parse and usage errors
  kExitResidual = 2,       // a residual exceeded its threshold
  kExitNotSphere = 3,
  kExitPrecondition = 4,   // unbounded / inconclusive boundedness
};

struct RunConfig {
  Command command = Command::curvature;
  std::string profile_path;
  std::uint64_t seed = 42;
  std::size_t samples = 0;  // 0 selects the per-command default
  std::string out;          // empty writes to stdout
  std::optional<Format> format;
  std::map<std::string, double> tol_overrides;
  std::string point;        // "r=r1,r2,...;theta=t1,t2,..." or "z=re:im,re:im,..."
  bool project = false;
  // flow
  double t_end = 10.0;
  double dt = 1e-3;
  std::string method = "rk4";
  // ode
  double k = 1.0;
  double s0 = 0.1;
  double f0 = 0.9;
  double fp0 = -1.0;
  double s_max = 10.0;
  bool sphere_residual = false;
  double radius = 1.0;

  Tolerances tolerances() const;
  std::size_t resolved_samples() const;
  Format resolved_format() const;
};

/// Parses the command line; throws ParseError (or returns a help request via
/// std::nullopt with the help text in *help).
std::optional<RunConfig> parse_args(int argc, const char* const* argv, std::string* help);

/// Strict JSON run configuration; unknown keys raise ParseError.
RunConfig config_from_json(const nlohmann::json& doc);

/// Every resolved setting, including defaults and all tolerances.
nlohmann::json config_echo(const RunConfig& config);

}  // namespace reinhardt::cli
