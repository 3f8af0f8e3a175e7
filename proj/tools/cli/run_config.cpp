#include "run_config.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include <CLI11.hpp>

#include "reinhardt/errors.hpp"

namespace reinhardt::cli {
namespace {

using nlohmann::json;

void apply_tol_arg(RunConfig& config, const std::string& arg) {
  const auto eq = arg.find('=');
  if (eq == std::string::npos) throw ParseError("--tol expects KEY=VAL, got '" + arg + "'");
  const std::string key = arg.substr(0, eq);
  double value = 0.0;
  try {
    std::size_t used = 0;
    value = std::stod(arg.substr(eq + 1), &used);
    if (used != arg.size() - eq - 1) throw std::invalid_argument("trailing characters");
  } catch (const std::exception&) {
    throw ParseError("--tol value for '" + key + "' is not a number");
  }
  Tolerances probe;
  set_tolerance(probe, key, value);  // validates the key
  config.tol_overrides[key] = value;
}

}  // namespace

Command parse_command(const std::string& name) {
  if (name == "curvature") return Command::curvature;
  if (name == "scan") return Command::scan;
  if (name == "flow") return Command::flow;
  if (name == "verify") return Command::verify;
  if (name == "critical") return Command::critical;
  if (name == "ode") return Command::ode;
  throw ParseError("unknown command '" + name + "'");
}

Format parse_format(const std::string& name) {
  if (name == "json") return Format::json;
  if (name == "csv") return Format::csv;
  if (name == "svg") return Format::svg;
  throw ParseError("unknown format '" + name + "'");
}

const char* to_string(Command c) {
  switch (c) {
    case Command::curvature: return "curvature";
    case Command::scan: return "scan";
    case Command::flow: return "flow";
    case Command::verify: return "verify";
    case Command::critical: return "critical";
    case Command::ode: return "ode";
  }
  return "curvature";
}

const char* to_string(Format f) {
  switch (f) {
    case Format::json: return "json";
    case Format::csv: return "csv";
    case Format::svg: return "svg";
  }
  return "json";
}

Tolerances RunConfig::tolerances() const {
  Tolerances tol;
  for (const auto& [key, value] : tol_overrides) set_tolerance(tol, key, value);
  return tol;
}

std::size_t RunConfig::resolved_samples() const {
  if (samples > 0) return samples;
  switch (command) {
    case Command::verify: return 500;
    case Command::scan: return 200;
    default: return 100;
  }
}

Format RunConfig::resolved_format() const {
  if (format) return *format;
  switch (command) {
    case Command::scan:
    case Command::flow: return Format::csv;
    case Command::ode: return sphere_residual ? Format::json : Format::csv;
    default: return Format::json;
  }
}

RunConfig config_from_json(const json& doc) {
  static const std::set<std::string> allowed{
      "command", "profile", "seed", "samples", "out",  "format", "tol", "point", "project", "t_end", "dt",
      "method",  "k",       "s0",   "f0",      "fp0", "s_max",  "sphere_residual", "radius"};
  if (!doc.is_object()) throw ParseError("run configuration must be a JSON object");
  for (const auto& item : doc.items())
    if (!allowed.count(item.key())) throw ParseError("unknown key '" + item.key() + "' in run configuration");

  RunConfig config;
  try {
    if (doc.contains("command")) config.command = parse_command(doc.at("command").get<std::string>());
    if (doc.contains("profile")) config.profile_path = doc.at("profile").get<std::string>();
    if (doc.contains("seed")) config.seed = doc.at("seed").get<std::uint64_t>();
    if (doc.contains("samples")) config.samples = doc.at("samples").get<std::size_t>();
    if (doc.contains("out")) config.out = doc.at("out").get<std::string>();
    if (doc.contains("format")) config.format = parse_format(doc.at("format").get<std::string>());
    if (doc.contains("tol")) {
      for (const auto& item : doc.at("tol").items()) {
        Tolerances probe;
        set_tolerance(probe, item.key(), item.value().get<double>());
        config.tol_overrides[item.key()] = item.value().get<double>();
      }
    }
    if (doc.contains("point")) config.point = doc.at("point").get<std::string>();
    if (doc.contains("project")) config.project = doc.at("project").get<bool>();
    if (doc.contains("t_end")) config.t_end = doc.at("t_end").get<double>();
    if (doc.contains("dt")) config.dt = doc.at("dt").get<double>();
    if (doc.contains("method")) config.method = doc.at("method").get<std::string>();
    if (doc.contains("k")) config.k = doc.at("k").get<double>();
    if (doc.contains("s0")) config.s0 = doc.at("s0").get<double>();
    if (doc.contains("f0")) config.f0 = doc.at("f0").get<double>();
    if (doc.contains("fp0")) config.fp0 = doc.at("fp0").get<double>();
    if (doc.contains("s_max")) config.s_max = doc.at("s_max").get<double>();
    if (doc.contains("sphere_residual")) config.sphere_residual = doc.at("sphere_residual").get<bool>();
    if (doc.contains("radius")) config.radius = doc.at("radius").get<double>();
  } catch (const json::exception& e) {
    throw ParseError(std::string("invalid run configuration: ") + e.what());
  }
  return config;
}

std::optional<RunConfig> parse_args(int argc, const char* const* argv, std::string* help) {
  CLI::App app{"Curvature invariants, characteristic flows and symmetry checks for Reinhardt boundaries",
               "reinhardt"};
  std::string config_path, command, format, method;
  std::vector<std::string> tols;
  RunConfig flags;

  app.add_option("--config", config_path, "JSON run configuration (flags override it)");
  app.add_option("--command", command, "curvature | scan | flow | verify | critical | ode");
  app.add_option("--profile", flags.profile_path, "profile JSON path");
  auto* seed = app.add_option("--seed", flags.seed, "RNG seed (default 42)");
  auto* samples = app.add_option("--samples", flags.samples, "sample count");
  auto* out = app.add_option("--out", flags.out, "output path (default stdout)");
  app.add_option("--format", format, "json | csv | svg");
  app.add_option("--tol", tols, "tolerance override KEY=VAL (repeatable)");
  auto* point = app.add_option("--point", flags.point, "\"r=...;theta=...\" or \"z=re:im,...\"");
  auto* project = app.add_flag("--project", flags.project, "project --point onto the surface first");
  auto* k = app.add_option("--k", flags.k, "ODE curvature constant");
  auto* s0 = app.add_option("--s0", flags.s0, "ODE initial s");
  auto* f0 = app.add_option("--f0", flags.f0, "ODE initial f");
  auto* fp0 = app.add_option("--fp0", flags.fp0, "ODE initial f'");
  auto* s_max = app.add_option("--s-max", flags.s_max, "ODE integration limit");
  auto* t_end = app.add_option("--t-end", flags.t_end, "flow end time");
  auto* dt = app.add_option("--dt", flags.dt, "flow time step");
  app.add_option("--method", method, "closed_form | rk4 | implicit_midpoint");
  auto* sphere_res = app.add_flag("--sphere-residual", flags.sphere_residual, "ODE: residual of the sphere witness");
  auto* radius = app.add_option("--radius", flags.radius, "sphere radius for --sphere-residual");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    if (help) *help = app.help();
    return std::nullopt;
  } catch (const CLI::ParseError& e) {
    throw ParseError(e.what());
  }

  RunConfig config;
  if (!config_path.empty()) {
    std::ifstream in(config_path);
    if (!in) throw ParseError("cannot open run configuration '" + config_path + "'");
    json doc;
    try {
      doc = json::parse(in);
    } catch (const json::parse_error& e) {
      throw ParseError(std::string("malformed run configuration: ") + e.what());
    }
    config = config_from_json(doc);
  } else if (command.empty()) {
    throw ParseError("--command is required");
  }

  if (!command.empty()) config.command = parse_command(command);
  if (!flags.profile_path.empty()) config.profile_path = flags.profile_path;
  if (seed->count()) config.seed = flags.seed;
  if (samples->count()) config.samples = flags.samples;
  if (out->count()) config.out = flags.out;
  if (!format.empty()) config.format = parse_format(format);
  for (const std::string& t : tols) apply_tol_arg(config, t);
  if (point->count()) config.point = flags.point;
  if (project->count()) config.project = flags.project;
  if (k->count()) config.k = flags.k;
  if (s0->count()) config.s0 = flags.s0;
  if (f0->count()) config.f0 = flags.f0;
  if (fp0->count()) config.fp0 = flags.fp0;
  if (s_max->count()) config.s_max = flags.s_max;
  if (t_end->count()) config.t_end = flags.t_end;
  if (dt->count()) config.dt = flags.dt;
  if (!method.empty()) config.method = method;
  if (sphere_res->count()) config.sphere_residual = flags.sphere_residual;
  if (radius->count()) config.radius = flags.radius;
  return config;
}

json config_echo(const RunConfig& config) {
  json echo{
      {"command", to_string(config.command)},
      {"profile", config.profile_path},
      {"seed", config.seed},
      {"samples", config.resolved_samples()},
      {"format", to_string(config.resolved_format())},
      {"tolerances", tolerance_map(config.tolerances())},
  };
  switch (config.command) {
    case Command::curvature:
      echo["point"] = config.point;
      echo["project"] = config.project;
      break;
    case Command::flow:
      echo["point"] = config.point;
      echo["t_end"] = config.t_end;
      echo["dt"] = config.dt;
      echo["method"] = config.method;
      break;
    case Command::ode:
      echo["k"] = config.k;
      echo["s0"] = config.s0;
      echo["f0"] = config.f0;
      echo["fp0"] = config.fp0;
      echo["s_max"] = config.s_max;
      echo["sphere_residual"] = config.sphere_residual;
      echo["radius"] = config.radius;
      break;
    default: break;
  }
  return echo;
}

}  // namespace reinhardt::cli
