#pragma once

#include <map>
#include <string>

namespace reinhardt {

/// Numerical thresholds shared by all modules. Every field can be overridden by
/// name through set_tolerance(), which rejects unknown keys.
struct Tolerances {
  double surface_tol = 1e-10;   // |g(r)| after projection
  double grad_tol = 1e-12;      // minimum ‖∇f‖ accepted
  double tangent_tol = 1e-10;   // |V·∇f|/‖∇f‖ for tangent inputs
  double report_tol = 1e-8;     // dual-route and mean-curvature relation gates
  double critical_tol = 1e-6;   // rigidity residual at critical points
  double parallel_tol = 1e-8;   // ‖p̂ + |p̂| N‖ at critical points
  double constancy_tol = 1e-6;  // relative h_TT spread for "constant"
  double radius_tol = 1e-6;     // | |p| − 1/h_TT | for the sphere verdict
  double torus_tol = 1e-12;     // closed-form torus confinement
  double dedup_tol = 1e-8;      // radii distance for merging critical points
};

void set_tolerance(Tolerances& tol, const std::string& key, double value);
std::map<std::string, double> tolerance_map(const Tolerances& tol);

}  // namespace reinhardt
