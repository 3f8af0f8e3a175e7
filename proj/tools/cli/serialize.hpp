#pragma once

#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "reinhardt/geometry.hpp"
#include "reinhardt/hamiltonian.hpp"
#include "reinhardt/hl_ode.hpp"
#include "reinhardt/symmetry.hpp"

namespace reinhardt::cli {

/// Exactly the report contract: h_TT, h_TT_oracle, levi_eigenvalues, levi_det,
/// levi_sym, mean_curvature, relation_residual.
nlohmann::json report_to_json(const CurvatureReport& report);
nlohmann::json report_diagnostics(const CurvatureReport& report);

nlohmann::json point_to_json(const SurfacePoint& q);

/// Exactly the verdict contract: verdict, radius, h_TT_mean, h_TT_spread,
/// bounded, sample_count, seed, tolerances.
nlohmann::json verdict_to_json(const SymmetryVerdict& verdict);
nlohmann::json verdict_details(const SymmetryVerdict& verdict);

nlohmann::json critical_to_json(const CriticalPointResult& cp);
nlohmann::json drift_to_json(const DriftTable& drift);

/// %.17g, the lossless round-trip format used for every CSV number.
std::string format_number(double value);

/// Comment lines ("# ...") followed by the header and rows.
void write_csv(std::ostream& out, const std::vector<std::string>& comments,
               const std::vector<std::string>& header, const std::vector<std::vector<double>>& rows);

std::vector<std::vector<double>> trajectory_rows(const RadialProfile& profile, const Trajectory& trajectory);
std::vector<std::vector<double>> ode_rows(const OdeProfile& profile);

}  // namespace reinhardt::cli
