#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "reinhardt/profile.hpp"
#include "reinhardt/tolerances.hpp"
#include "reinhardt/types.hpp"

namespace reinhardt {

/// z_k(t) = z0_k e^{−i g_k(r(z0)) t}, the explicit solution of ż_k = −i z_k g_k.
ComplexVector flow_closed_form(const RadialProfile& profile, const ComplexVector& z0, double t);

/// Arc-length orbit of the characteristic direction:
/// z_k(t) = z0_k e^{−i g_k t / |∂f(z0)|}.
ComplexVector characteristic_integral_curve(const RadialProfile& profile, const ComplexVector& z0,
                                            double t, const Tolerances& tol = {});

/// ż_k = −i z_k g_k(r(z)); in real coordinates this is ½·J_symp·∇f.
ComplexVector flow_velocity(const RadialProfile& profile, const ComplexVector& z);

enum class Integrator { closed_form, rk4, implicit_midpoint };

Integrator parse_integrator(const std::string& name);
const char* to_string(Integrator method);

struct TrajectorySample {
  double t = 0.0;
  ComplexVector z;
};

/// Per-quantity max |Q(z(t)) − Q(z0)| over the samples.
struct DriftTable {
  RealVector radii;   // one entry per r_k
  double f = 0.0;
  double h_TT = 0.0;
  RealVector levi;    // one entry per L^j
  double max_radius() const { return radii.size() ? radii.maxCoeff() : 0.0; }
  double max_levi() const { return levi.size() ? levi.maxCoeff() : 0.0; }
};

struct Trajectory {
  std::vector<TrajectorySample> samples;  // strictly increasing t
  Integrator mode = Integrator::closed_form;
  double step = 0.0;
  DriftTable drift;
};

struct FlowOptions {
  std::size_t max_samples = 100000;
  double midpoint_tol = 1e-12;
  int midpoint_max_iter = 20;
  bool compute_drift = true;
};

/// Fixed-step integration of ż_k = −i z_k g_k on [0, t_end]; the last step is
/// shortened to land on t_end. Samples are thinned to at most max_samples
/// equally spaced records (always keeping both endpoints).
Trajectory flow_numeric(const RadialProfile& profile, const ComplexVector& z0, double t_end,
                        double dt, Integrator method, const FlowOptions& options = {});

/// Samples of the closed-form flow on the same time grid as flow_numeric.
Trajectory flow_closed_form_trajectory(const RadialProfile& profile, const ComplexVector& z0,
                                       double t_end, double dt, const FlowOptions& options = {});

/// Conserved quantities Q(z): r_k, f, h_TT and L^j (curvatures of the level set
/// of f through z).
struct ConservedQuantities {
  RealVector radii;
  double f = 0.0;
  double h_TT = 0.0;
  RealVector levi;
};

ConservedQuantities conserved_quantities(const RadialProfile& profile, const ComplexVector& z);

DriftTable conservation_report(const RadialProfile& profile, const Trajectory& trajectory);

struct Torus {
  RealVector moduli;  // c_k = |z0_k|
  bool degenerate = false;
};

Torus torus_of(const ComplexVector& z0);

/// max_k,t | |z_k(t)| − c_k | over a trajectory.
double torus_deviation(const Torus& torus, const Trajectory& trajectory);

/// Largest componentwise |z_num(t) − z_closed(t)| over the samples.
double closed_form_gap(const RadialProfile& profile, const Trajectory& trajectory);

std::vector<std::string> trajectory_csv_header(int dim);

}  // namespace reinhardt
