#include "serialize.hpp"

#include <fmt/format.h>

namespace reinhardt::cli {
namespace {

using nlohmann::json;

json vector_json(const RealVector& v) { return std::vector<double>(v.begin(), v.end()); }

}  // namespace

json report_to_json(const CurvatureReport& report) {
  return json{
      {"h_TT", report.h_TT},
      {"h_TT_oracle", report.h_TT_oracle},
      {"levi_eigenvalues", vector_json(report.levi_eigenvalues)},
      {"levi_det", vector_json(report.levi_det)},
      {"levi_sym", vector_json(report.levi_sym)},
      {"mean_curvature", report.mean_curvature},
      {"relation_residual", report.relation_residual},
  };
}

json report_diagnostics(const CurvatureReport& report) {
  return json{
      {"characteristic_route_residual", report.route_residuals.characteristic},
      {"levi_route_residual", report.route_residuals.levi},
      {"strictly_pseudoconvex", report.strictly_pseudoconvex},
  };
}

json point_to_json(const SurfacePoint& q) {
  return json{
      {"z_re", vector_json(q.z.real())},
      {"z_im", vector_json(q.z.imag())},
      {"r", vector_json(q.r)},
      {"residual", q.residual},
      {"grad_norm_complex", q.grad_norm_complex},
  };
}

json verdict_to_json(const SymmetryVerdict& v) {
  return json{
      {"verdict", to_string(v.kind)},
      {"radius", v.kind == VerdictKind::sphere ? json(v.radius) : json(nullptr)},
      {"h_TT_mean", v.h_TT_mean},
      {"h_TT_spread", v.h_TT_spread},
      {"bounded", to_string(v.bounded.kind)},
      {"sample_count", v.sample_count},
      {"seed", v.seed},
      {"tolerances", json{{"constancy_tol", v.constancy_tol}, {"radius_tol", v.radius_tol}}},
  };
}

json verdict_details(const SymmetryVerdict& v) {
  json details{
      {"is_constant", v.is_constant},
      {"radius_check", v.radius_check},
      {"search_radius", v.bounded.search_radius},
      {"reason", v.reason},
      {"witness",
       json{{"first", point_to_json(v.witness.first)},
            {"second", point_to_json(v.witness.second)},
            {"h_TT_first", v.witness.h_first},
            {"h_TT_second", v.witness.h_second}}},
  };
  if (v.bounded.kind == Boundedness::unbounded) details["unbounded_witness_r"] = vector_json(v.bounded.witness);
  return details;
}

json critical_to_json(const CriticalPointResult& cp) {
  std::vector<int> active;
  for (int k : cp.active_set) active.push_back(k + 1);
  return json{
      {"p_hat", point_to_json(cp.p_hat)},
      {"norm", cp.norm},
      {"h_TT_at", cp.h_TT_at},
      {"rigidity_residual", cp.rigidity_residual},
      {"parallel_residual", cp.parallel_residual},
      {"multiplier", cp.multiplier},
      {"active_set", active},
      {"kind", to_string(cp.kind)},
  };
}

json drift_to_json(const DriftTable& drift) {
  return json{
      {"radii", vector_json(drift.radii)},
      {"f", drift.f},
      {"h_TT", drift.h_TT},
      {"levi", vector_json(drift.levi)},
  };
}

std::string format_number(double value) { return fmt::format("{:.17g}", value == 0.0 ? 0.0 : value); }

void write_csv(std::ostream& out, const std::vector<std::string>& comments,
               const std::vector<std::string>& header, const std::vector<std::vector<double>>& rows) {
  for (const std::string& c : comments) out << "# " << c << '\n';
  for (std::size_t i = 0; i < header.size(); ++i) out << (i ? "," : "") << header[i];
  out << '\n';
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << format_number(row[i]);
    out << '\n';
  }
}

std::vector<std::vector<double>> trajectory_rows(const RadialProfile& profile, const Trajectory& trajectory) {
  std::vector<std::vector<double>> rows;
  rows.reserve(trajectory.samples.size());
  for (const TrajectorySample& s : trajectory.samples) {
    const ConservedQuantities q = conserved_quantities(profile, s.z);
    std::vector<double> row{s.t};
    for (Eigen::Index k = 0; k < s.z.size(); ++k) row.push_back(s.z[k].real());
    for (Eigen::Index k = 0; k < s.z.size(); ++k) row.push_back(s.z[k].imag());
    for (Eigen::Index k = 0; k < q.radii.size(); ++k) row.push_back(q.radii[k]);
    row.push_back(q.f);
    row.push_back(q.h_TT);
    for (Eigen::Index j = 0; j < q.levi.size(); ++j) row.push_back(q.levi[j]);
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<std::vector<double>> ode_rows(const OdeProfile& profile) {
  std::vector<std::vector<double>> rows;
  rows.reserve(profile.states.size());
  for (const OdeState& st : profile.states) rows.push_back({st.s, st.f, st.fp});
  return rows;
}

}  // namespace reinhardt::cli
