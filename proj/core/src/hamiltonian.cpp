#include "reinhardt/hamiltonian.hpp"

#include <algorithm>
#include <cmath>

#include "reinhardt/errors.hpp"
#include "reinhardt/geometry.hpp"
#include "reinhardt/linalg.hpp"

namespace reinhardt {
namespace {

const Complex kMinusI(0.0, -1.0);

ComplexVector rotate(const ComplexVector& z0, const RealVector& rates, double t) {
  ComplexVector z(z0.size());
  for (Eigen::Index k = 0; k < z0.size(); ++k) z[k] = z0[k] * std::polar(1.0, -rates[k] * t);
  return z;
}

ComplexVector rk4_step(const RadialProfile& profile, const ComplexVector& z, double h) {
  const ComplexVector k1 = flow_velocity(profile, z);
  const ComplexVector k2 = flow_velocity(profile, z + 0.5 * h * k1);
  const ComplexVector k3 = flow_velocity(profile, z + 0.5 * h * k2);
  const ComplexVector k4 = flow_velocity(profile, z + h * k3);
  return z + (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
}

ComplexVector midpoint_step(const RadialProfile& profile, const ComplexVector& z, double h,
                            const FlowOptions& options) {
  ComplexVector next = z + h * flow_velocity(profile, z);
  for (int iter = 0; iter < options.midpoint_max_iter; ++iter) {
    const ComplexVector updated = z + h * flow_velocity(profile, 0.5 * (z + next));
    const double change = (updated - next).cwiseAbs().maxCoeff();
    next = updated;
    if (change <= options.midpoint_tol * std::max(1.0, next.cwiseAbs().maxCoeff())) break;
  }
  return next;
}

// Step count and record stride for a fixed-step run on [0, t_end].
struct Grid {
  std::size_t steps;
  std::size_t stride;
};

Grid make_grid(double t_end, double dt, std::size_t max_samples) {
  if (!(dt > 0.0)) throw DomainError("time step dt must be positive");
  if (!(t_end >= 0.0)) throw DomainError("t_end must be nonnegative");
  std::size_t steps = static_cast<std::size_t>(std::ceil(t_end / dt - 1e-9));
  if (t_end == 0.0) steps = 0;
  const std::size_t cap = std::max<std::size_t>(max_samples, 2) - 1;
  const std::size_t stride = std::max<std::size_t>(1, (steps + cap - 1) / cap);
  return {steps, stride};
}

double step_time(std::size_t i, std::size_t steps, double t_end, double dt) {
  return i == steps ? t_end : static_cast<double>(i) * dt;
}

}  // namespace

ComplexVector flow_closed_form(const RadialProfile& profile, const ComplexVector& z0, double t) {
  const ProfileJet jet = profile.jet(eval_radii(z0));
  return rotate(z0, jet.grad, t);
}

ComplexVector characteristic_integral_curve(const RadialProfile& profile, const ComplexVector& z0,
                                            double t, const Tolerances& tol) {
  const RealVector r = eval_radii(z0);
  const ProfileJet jet = profile.jet(r);
  const double norm = complex_gradient_norm(r, jet.grad);
  if (!(2.0 * norm >= tol.grad_tol)) throw DegenerateGradientError("characteristic direction undefined");
  return rotate(z0, jet.grad / norm, t);
}

ComplexVector flow_velocity(const RadialProfile& profile, const ComplexVector& z) {
  const ProfileJet jet = profile.jet(eval_radii(z));
  ComplexVector v(z.size());
  for (Eigen::Index k = 0; k < z.size(); ++k) v[k] = kMinusI * z[k] * jet.grad[k];
  return v;
}

Integrator parse_integrator(const std::string& name) {
  if (name == "closed_form" || name == "closed-form") return Integrator::closed_form;
  if (name == "rk4") return Integrator::rk4;
  if (name == "implicit_midpoint" || name == "implicit-midpoint") return Integrator::implicit_midpoint;
  throw ParseError("unknown integration method '" + name + "'");
}

const char* to_string(Integrator method) {
  switch (method) {
    case Integrator::closed_form: return "closed_form";
    case Integrator::rk4: return "rk4";
    case Integrator::implicit_midpoint: return "implicit_midpoint";
  }
  return "closed_form";
}

Trajectory flow_numeric(const RadialProfile& profile, const ComplexVector& z0, double t_end, double dt,
                        Integrator method, const FlowOptions& options) {
  if (method == Integrator::closed_form) return flow_closed_form_trajectory(profile, z0, t_end, dt, options);
  if (z0.size() != profile.dim()) throw DomainError("initial point has wrong dimension");

  const Grid grid = make_grid(t_end, dt, options.max_samples);
  Trajectory traj;
  traj.mode = method;
  traj.step = dt;
  traj.samples.push_back({0.0, z0});

  ComplexVector z = z0;
  double t = 0.0;
  for (std::size_t i = 1; i <= grid.steps; ++i) {
    const double t_next = step_time(i, grid.steps, t_end, dt);
    const double h = t_next - t;
    z = method == Integrator::rk4 ? rk4_step(profile, z, h) : midpoint_step(profile, z, h, options);
    if (!z.allFinite()) throw DomainError("integration left the evaluation domain");
    t = t_next;
    if (i % grid.stride == 0 || i == grid.steps) traj.samples.push_back({t, z});
  }
  if (options.compute_drift) traj.drift = conservation_report(profile, traj);
  return traj;
}

Trajectory flow_closed_form_trajectory(const RadialProfile& profile, const ComplexVector& z0, double t_end,
                                       double dt, const FlowOptions& options) {
  if (z0.size() != profile.dim()) throw DomainError("initial point has wrong dimension");
  const Grid grid = make_grid(t_end, dt, options.max_samples);
  const RealVector rates = profile.jet(eval_radii(z0)).grad;
  Trajectory traj;
  traj.mode = Integrator::closed_form;
  traj.step = dt;
  traj.samples.push_back({0.0, z0});
  for (std::size_t i = grid.stride; i <= grid.steps; i += grid.stride) {
    const double t = step_time(i, grid.steps, t_end, dt);
    traj.samples.push_back({t, rotate(z0, rates, t)});
  }
  if (grid.steps > 0 && grid.steps % grid.stride != 0) traj.samples.push_back({t_end, rotate(z0, rates, t_end)});
  if (options.compute_drift) traj.drift = conservation_report(profile, traj);
  return traj;
}

ConservedQuantities conserved_quantities(const RadialProfile& profile, const ComplexVector& z) {
  const SurfacePoint q = make_surface_point(profile, z);
  const LocalData local = local_data(profile, q);
  ConservedQuantities out;
  out.radii = q.r;
  out.f = local.jet.value;
  out.h_TT = characteristic_curvature_radial(local);
  const RealVector eig = linalg::hermitian_eigenvalues(levi_form_matrix(local));
  const std::vector<double> e = linalg::elementary_symmetric(eig);
  const int n = profile.cr_dim();
  out.levi.resize(n);
  for (int j = 1; j <= n; ++j) out.levi[j - 1] = e[j] / linalg::binomial(n, j);
  return out;
}

DriftTable conservation_report(const RadialProfile& profile, const Trajectory& trajectory) {
  DriftTable drift;
  drift.radii = RealVector::Zero(profile.dim());
  drift.levi = RealVector::Zero(profile.cr_dim());
  if (trajectory.samples.empty()) return drift;
  const ConservedQuantities q0 = conserved_quantities(profile, trajectory.samples.front().z);
  for (const TrajectorySample& s : trajectory.samples) {
    const ConservedQuantities q = conserved_quantities(profile, s.z);
    drift.radii = drift.radii.cwiseMax((q.radii - q0.radii).cwiseAbs());
    drift.f = std::max(drift.f, std::abs(q.f - q0.f));
    drift.h_TT = std::max(drift.h_TT, std::abs(q.h_TT - q0.h_TT));
    drift.levi = drift.levi.cwiseMax((q.levi - q0.levi).cwiseAbs());
  }
  return drift;
}

Torus torus_of(const ComplexVector& z0) {
  Torus torus;
  torus.moduli = z0.cwiseAbs();
  torus.degenerate = (torus.moduli.array() == 0.0).any();
  return torus;
}

double torus_deviation(const Torus& torus, const Trajectory& trajectory) {
  double worst = 0.0;
  for (const TrajectorySample& s : trajectory.samples)
    worst = std::max(worst, (s.z.cwiseAbs() - torus.moduli).cwiseAbs().maxCoeff());
  return worst;
}

double closed_form_gap(const RadialProfile& profile, const Trajectory& trajectory) {
  if (trajectory.samples.empty()) return 0.0;
  const ComplexVector& z0 = trajectory.samples.front().z;
  double worst = 0.0;
  for (const TrajectorySample& s : trajectory.samples)
    worst = std::max(worst, (s.z - flow_closed_form(profile, z0, s.t)).cwiseAbs().maxCoeff());
  return worst;
}

std::vector<std::string> trajectory_csv_header(int dim) {
  std::vector<std::string> cols{"t"};
  for (const char* prefix : {"x_", "y_", "r_"})
    for (int k = 1; k <= dim; ++k) cols.push_back(prefix + std::to_string(k));
  cols.emplace_back("f");
  cols.emplace_back("h_TT");
  for (int j = 1; j < dim; ++j) cols.push_back("L_" + std::to_string(j));
  return cols;
}

}  // namespace reinhardt
