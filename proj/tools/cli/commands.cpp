#include "commands.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include <fmt/format.h>
#include <spdlog/sinks/stdout_sinks.h>
#include <spdlog/spdlog.h>

#include "profile_json.hpp"
#include "reinhardt/errors.hpp"
#include "reinhardt/geometry.hpp"
#include "reinhardt/hamiltonian.hpp"
#include "reinhardt/hl_ode.hpp"
#include "reinhardt/sampling.hpp"
#include "reinhardt/symmetry.hpp"
#include "serialize.hpp"
#include "svg.hpp"

namespace reinhardt::cli {
namespace {

using nlohmann::json;

std::shared_ptr<spdlog::logger> logger() {
  static const std::shared_ptr<spdlog::logger> log = [] {
    auto l = std::make_shared<spdlog::logger>("reinhardt", std::make_shared<spdlog::sinks::stderr_sink_mt>());
    const char* env = std::getenv("REINHARDT_LOG");
    const std::string level = env ? env : "error";
    if (level == "debug")
      l->set_level(spdlog::level::debug);
    else if (level == "info")
      l->set_level(spdlog::level::info);
    else
      l->set_level(spdlog::level::err);
    return l;
  }();
  return log;
}

std::vector<double> parse_list(const std::string& text, const std::string& what) {
  std::vector<double> values;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      values.push_back(std::stod(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw ParseError("bad number '" + item + "' in " + what);
    }
  }
  return values;
}

struct Output {
  std::ofstream file;
  std::ostream* stream;

  Output(const std::string& path, std::ostream& fallback) : stream(&fallback) {
    if (path.empty()) return;
    file.open(path, std::ios::binary);
    if (!file) throw ParseError("cannot open output file '" + path + "'");
    stream = &file;
  }
  std::ostream& operator*() { return *stream; }
};

struct Context {
  const RunConfig& config;
  Tolerances tol;
  json meta;

  std::vector<std::string> comments() const {
    return {"tool_version " + meta["tool_version"].get<std::string>(), "config " + meta["config"].dump(),
            "profile_hash " + (meta["profile_hash"].is_null() ? std::string("none")
                                                               : meta["profile_hash"].get<std::string>())};
  }
};

void write_json(std::ostream& out, const json& doc) { out << doc.dump(2) << '\n'; }

void require_format(Format f, std::initializer_list<Format> allowed, Command c) {
  for (Format a : allowed)
    if (a == f) return;
  throw ParseError(fmt::format("format '{}' is not available for command '{}'", to_string(f), to_string(c)));
}

SurfacePoint resolve_point(const Context& ctx, const RadialProfile& profile) {
  if (ctx.config.point.empty()) {
    // first generic sample: past the axis points
    const auto samples = sample_surface(profile, static_cast<std::size_t>(profile.dim()) + 1, ctx.config.seed);
    return samples.back();
  }
  const ComplexVector z = parse_point(ctx.config.point, profile.dim());
  if (ctx.config.project) {
    ProjectionOptions opts;
    opts.surface_tol = ctx.tol.surface_tol;
    return project_to_surface(profile, z, opts);
  }
  return make_surface_point(profile, z);
}

int cmd_curvature(const Context& ctx, const RadialProfile& profile, std::ostream& out) {
  const Format format = ctx.config.resolved_format();
  require_format(format, {Format::json, Format::csv}, Command::curvature);
  const SurfacePoint q = resolve_point(ctx, profile);
  const CurvatureReport report = curvature_report(profile, q, ctx.tol);
  const bool on_surface = q.residual <= ctx.tol.surface_tol;
  const bool ok = on_surface && report.within(ctx.tol.report_tol);
  logger()->info("curvature at residual {:.3e}, h_TT {}", q.residual, report.h_TT);

  if (format == Format::json) {
    write_json(out, json{{"meta", ctx.meta},
                         {"point", point_to_json(q)},
                         {"report", report_to_json(report)},
                         {"diagnostics", report_diagnostics(report)}});
  } else {
    std::vector<double> row{0.0};
    const auto tail = scan_csv_row(q, report);
    row.insert(row.end(), tail.begin(), tail.end());
    write_csv(out, ctx.comments(), scan_csv_header(profile.dim()), {row});
  }
  return ok ? kExitOk : kExitResidual;
}

int cmd_scan(const Context& ctx, const RadialProfile& profile, std::ostream& out) {
  const Format format = ctx.config.resolved_format();
  const auto points = sample_surface(profile, ctx.config.resolved_samples(), ctx.config.seed);
  std::vector<CurvatureReport> reports;
  reports.reserve(points.size());
  bool ok = true;
  for (const SurfacePoint& q : points) {
    reports.push_back(curvature_report(profile, q, ctx.tol));
    ok = ok && reports.back().within(ctx.tol.report_tol);
  }
  logger()->info("scan of {} points", points.size());

  if (format == Format::csv) {
    std::vector<std::vector<double>> rows;
    for (std::size_t i = 0; i < points.size(); ++i) {
      std::vector<double> row{static_cast<double>(i)};
      const auto tail = scan_csv_row(points[i], reports[i]);
      row.insert(row.end(), tail.begin(), tail.end());
      rows.push_back(std::move(row));
    }
    write_csv(out, ctx.comments(), scan_csv_header(profile.dim()), rows);
  } else if (format == Format::json) {
    json entries = json::array();
    for (std::size_t i = 0; i < points.size(); ++i)
      entries.push_back(json{{"index", i}, {"point", point_to_json(points[i])}, {"report", report_to_json(reports[i])}});
    write_json(out, json{{"meta", ctx.meta}, {"points", entries}});
  } else {
    ScatterPanel by_index{"h(T,T) by sample", "sample index", "h(T,T)", {}, {}};
    ScatterPanel by_norm{"|p| against h(T,T)", "h(T,T)", "|p|", {}, {}};
    for (std::size_t i = 0; i < points.size(); ++i) {
      by_index.x.push_back(static_cast<double>(i));
      by_index.y.push_back(reports[i].h_TT);
      by_norm.x.push_back(reports[i].h_TT);
      by_norm.y.push_back(std::sqrt(points[i].r.sum()));
    }
    out << render_scatter_svg({by_index, by_norm});
  }
  return ok ? kExitOk : kExitResidual;
}

int cmd_verify(const Context& ctx, const RadialProfile& profile, std::ostream& out) {
  require_format(ctx.config.resolved_format(), {Format::json}, Command::verify);
  const SymmetryVerdict verdict = verify_symmetry(profile, ctx.config.resolved_samples(), ctx.config.seed, ctx.tol);
  logger()->info("verdict {} (spread {:.3e})", to_string(verdict.kind), verdict.h_TT_spread);
  write_json(out, json{{"meta", ctx.meta}, {"verdict", verdict_to_json(verdict)}, {"details", verdict_details(verdict)}});
  switch (verdict.kind) {
    case VerdictKind::sphere: return kExitOk;
    case VerdictKind::not_sphere: return kExitNotSphere;
    case VerdictKind::precondition_failed: return kExitPrecondition;
  }
  return kExitError;
}

int cmd_critical(const Context& ctx, const RadialProfile& profile, std::ostream& out) {
  require_format(ctx.config.resolved_format(), {Format::json}, Command::critical);
  CriticalSearchOptions opts;
  opts.seed = ctx.config.seed;
  const auto points = find_critical_points(profile, opts, ctx.tol);
  bool ok = true;
  json entries = json::array();
  for (const CriticalPointResult& cp : points) {
    entries.push_back(critical_to_json(cp));
    ok = ok && cp.rigidity_residual <= ctx.tol.critical_tol;
  }
  logger()->info("{} critical tori", points.size());
  write_json(out, json{{"meta", ctx.meta}, {"critical_points", entries}});
  return ok ? kExitOk : kExitResidual;
}

int cmd_flow(const Context& ctx, const RadialProfile& profile, std::ostream& out) {
  const Format format = ctx.config.resolved_format();
  const Integrator method = parse_integrator(ctx.config.method);
  const SurfacePoint q0 = resolve_point(ctx, profile);
  const Trajectory traj =
      method == Integrator::closed_form
          ? flow_closed_form_trajectory(profile, q0.z, ctx.config.t_end, ctx.config.dt)
          : flow_numeric(profile, q0.z, ctx.config.t_end, ctx.config.dt, method);
  const double gap = closed_form_gap(profile, traj);
  const double torus = torus_deviation(torus_of(q0.z), traj);
  const double endpoint = (traj.samples.back().z - q0.z).cwiseAbs().maxCoeff();
  logger()->info("flow {} with {} samples", to_string(method), traj.samples.size());

  const json summary{{"method", to_string(method)},
                     {"samples", traj.samples.size()},
                     {"drift", drift_to_json(traj.drift)},
                     {"closed_form_gap", gap},
                     {"torus_deviation", torus},
                     {"endpoint_gap", endpoint}};
  if (format == Format::csv) {
    auto comments = ctx.comments();
    comments.push_back("initial_point " + point_to_json(q0).dump());
    comments.push_back("summary " + summary.dump());
    write_csv(out, comments, trajectory_csv_header(profile.dim()), trajectory_rows(profile, traj));
  } else if (format == Format::json) {
    write_json(out, json{{"meta", ctx.meta}, {"initial_point", point_to_json(q0)}, {"summary", summary}});
  } else {
    ScatterPanel orbit{"orbit in the z_1 plane", "x_1", "y_1", {}, {}};
    ScatterPanel radius{"radial drift", "t", "r_1 - r_1(0)", {}, {}};
    const double r0 = std::norm(q0.z[0]);
    for (const TrajectorySample& s : traj.samples) {
      orbit.x.push_back(s.z[0].real());
      orbit.y.push_back(s.z[0].imag());
      radius.x.push_back(s.t);
      radius.y.push_back(std::norm(s.z[0]) - r0);
    }
    out << render_scatter_svg({orbit, radius});
  }
  return kExitOk;
}

int cmd_ode(const Context& ctx, std::ostream& out) {
  const RunConfig& c = ctx.config;
  const Format format = c.resolved_format();
  if (c.sphere_residual) {
    require_format(format, {Format::json}, Command::ode);
    const double residual = sphere_residual(c.k, c.radius, static_cast<int>(c.resolved_samples()));
    write_json(out, json{{"meta", ctx.meta},
                         {"sphere_residual", json{{"k", c.k}, {"radius", c.radius}, {"residual", residual}}}});
    return residual <= ctx.tol.report_tol ? kExitOk : kExitResidual;
  }
  if (!(c.f0 > 0.0) || !(c.s0 > 0.0)) throw ParseError("ODE initial data need s0 > 0 and f0 > 0");
  const OdeProfile prof = integrate_profile(c.k, c.s0, c.f0, c.fp0, c.s_max);
  const json end{{"end", prof.end == ProfileEnd::reached_s_max  ? "reached_s_max"
                         : prof.end == ProfileEnd::crossed_zero ? "crossed_zero"
                                                                : "touched_zero"},
                 {"crossing", prof.crossing ? json(*prof.crossing) : json(nullptr)},
                 {"steps", prof.states.size()}};
  if (format == Format::csv) {
    auto comments = ctx.comments();
    comments.push_back("summary " + end.dump());
    write_csv(out, comments, {"s", "f", "fp"}, ode_rows(prof));
  } else if (format == Format::json) {
    json states = json::array();
    for (const OdeState& st : prof.states) states.push_back(json{st.s, st.f, st.fp});
    write_json(out, json{{"meta", ctx.meta}, {"summary", end}, {"states", states}});
  } else {
    ScatterPanel panel{"profile f(s)", "s", "f", {}, {}};
    for (const OdeState& st : prof.states) {
      panel.x.push_back(st.s);
      panel.y.push_back(st.f);
    }
    out << render_scatter_svg({panel});
  }
  return kExitOk;
}

}  // namespace

ComplexVector parse_point(const std::string& spec, int dim) {
  ComplexVector z(dim);
  if (spec.rfind("z=", 0) == 0) {
    std::stringstream ss(spec.substr(2));
    std::string item;
    int k = 0;
    while (std::getline(ss, item, ',')) {
      if (k >= dim) throw ParseError("--point has more than " + std::to_string(dim) + " components");
      const auto colon = item.find(':');
      const auto parts = parse_list(colon == std::string::npos ? item : item.substr(0, colon) + "," +
                                                                            item.substr(colon + 1),
                                    "--point");
      z[k++] = Complex(parts[0], parts.size() > 1 ? parts[1] : 0.0);
    }
    if (k != dim) throw ParseError("--point needs " + std::to_string(dim) + " components");
    return z;
  }
  std::vector<double> radii, phases;
  std::stringstream ss(spec);
  std::string part;
  while (std::getline(ss, part, ';')) {
    if (part.rfind("r=", 0) == 0)
      radii = parse_list(part.substr(2), "--point radii");
    else if (part.rfind("theta=", 0) == 0)
      phases = parse_list(part.substr(6), "--point phases");
    else
      throw ParseError("cannot read --point part '" + part + "'");
  }
  if (static_cast<int>(radii.size()) != dim) throw ParseError("--point needs " + std::to_string(dim) + " radii");
  if (!phases.empty() && static_cast<int>(phases.size()) != dim)
    throw ParseError("--point needs " + std::to_string(dim) + " phases");
  for (int k = 0; k < dim; ++k) {
    if (radii[k] < 0.0) throw ParseError("--point radii must be nonnegative");
    z[k] = std::polar(std::sqrt(radii[k]), phases.empty() ? 0.0 : phases[k]);
  }
  return z;
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    Context ctx{config, config.tolerances(), json{}};
    std::optional<RadialProfile> profile;
    if (config.command != Command::ode) {
      if (config.profile_path.empty()) throw ParseError("--profile is required");
      profile = load_profile(config.profile_path);
    }
    ctx.meta = json{{"tool_version", REINHARDT_VERSION},
                    {"config", config_echo(config)},
                    {"profile_hash", profile ? json(profile_hash(*profile)) : json(nullptr)}};

    Output sink(config.out, out);
    switch (config.command) {
      case Command::curvature: return cmd_curvature(ctx, *profile, *sink);
      case Command::scan: return cmd_scan(ctx, *profile, *sink);
      case Command::verify: return cmd_verify(ctx, *profile, *sink);
      case Command::critical: return cmd_critical(ctx, *profile, *sink);
      case Command::flow: return cmd_flow(ctx, *profile, *sink);
      case Command::ode: return cmd_ode(ctx, *sink);
    }
  } catch (const PreconditionError& e) {
    err << "reinhardt: precondition failed: " << e.what() << '\n';
    return kExitPrecondition;
  } catch (const ConvergenceError& e) {
    err << "reinhardt: " << e.what() << '\n';
    return kExitResidual;
  } catch (const OdeError& e) {
    const OdeState& s = e.last_valid();
    err << "reinhardt: " << e.what() << fmt::format(" (last state s={} f={} fp={})", s.s, s.f, s.fp) << '\n';
    return kExitError;
  } catch (const std::exception& e) {
    err << "reinhardt: " << e.what() << '\n';
    return kExitError;
  }
  return kExitError;
}

int run_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  try {
    std::string help;
    const auto config = parse_args(argc, argv, &help);
    if (!config) {
      out << help;
      return kExitOk;
    }
    return run(*config, out, err);
  } catch (const std::exception& e) {
    err << "reinhardt: " << e.what() << '\n';
    return kExitError;
  }
}

}  // namespace reinhardt::cli
