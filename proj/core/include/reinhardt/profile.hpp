#pragma once

#include <map>
#include <string>
#include <variant>
#include <vector>

#include "reinhardt/tolerances.hpp"
#include "reinhardt/types.hpp"

namespace reinhardt {

/// g(r) = Σ r_k − R².
struct Sphere {
  double radius = 1.0;
};

/// g(r) = Σ r_k / a_k² − 1.
struct Ellipsoid {
  std::vector<double> semiaxes;
};

/// g(r) = r_i − R² with i = fixed_index (0-based). Unbounded for dim ≥ 2.
struct Cylinder {
  double radius = 1.0;
  int fixed_index = 0;
};

using MultiIndex = std::vector<int>;

/// g(r) = Σ_e c_e Π_k r_k^{e_k}, coefficients keyed by multi-index in the radii.
struct Polynomial {
  std::map<MultiIndex, double> terms;
};

using Family = std::variant<Sphere, Ellipsoid, Cylinder, Polynomial>;

enum class DerivativeMode { analytic, finite_difference };

/// Central stencils in the interior, second-order one-sided stencils within one
/// step of r_k = 0. Second derivatives use their own, larger step.
struct FiniteDifferenceSteps {
  double gradient_step = 1e-5;
  double hessian_step = 1e-3;
};

/// g together with its radial gradient (g_k) and Hessian (g_jk) at some r.
struct ProfileJet {
  double value = 0.0;
  RealVector grad;
  RealMatrix hess;
};

/// A radial defining function g of the radii r_k = |z_k|²; the Reinhardt domain
/// is {g(r(z)) < 0}. Immutable after construction.
class RadialProfile {
 public:
  RadialProfile(int dim, Family family, DerivativeMode mode = DerivativeMode::analytic,
                FiniteDifferenceSteps steps = {});

  static RadialProfile sphere(int dim, double radius);
  static RadialProfile ellipsoid(std::vector<double> semiaxes);
  static RadialProfile cylinder(int dim, double radius, int fixed_index = 0);
  static RadialProfile polynomial(int dim, std::map<MultiIndex, double> terms);

  /// Complex dimension n+1 of the ambient space.
  int dim() const { return dim_; }
  /// CR dimension n (number of Levi eigenvalues).
  int cr_dim() const { return dim_ - 1; }

  const Family& family() const { return family_; }
  DerivativeMode mode() const { return mode_; }
  const FiniteDifferenceSteps& steps() const { return steps_; }
  std::string family_name() const;

  RadialProfile with_mode(DerivativeMode mode, FiniteDifferenceSteps steps = {}) const;

  /// g(r). Throws DomainError on a negative or wrong-sized radius vector.
  double value(const RealVector& r) const;

  /// g, (g_k) and (g_jk) at r; the Hessian is exactly symmetric.
  ProfileJet jet(const RealVector& r) const;

 private:
  double analytic_value(const RealVector& r) const;
  ProfileJet analytic_jet(const RealVector& r) const;
  ProfileJet finite_difference_jet(const RealVector& r) const;
  void check_radii(const RealVector& r) const;

  int dim_;
  Family family_;
  DerivativeMode mode_;
  FiniteDifferenceSteps steps_;
};

/// A point z on (or near) M = {g(r(z)) = 0} with cached radii and gradient data.
struct SurfacePoint {
  ComplexVector z;
  RealVector r;
  double residual = 0.0;           // |g(r)|
  double grad_norm_complex = 0.0;  // |∂f| = (Σ r_k g_k²)^{1/2}
};

/// r_k = x_k² + y_k².
RealVector eval_radii(const ComplexVector& z);

SurfacePoint make_surface_point(const RadialProfile& profile, const ComplexVector& z);

/// |∂f|² = Σ_k r_k g_k².
double complex_gradient_norm(const RealVector& r, const RealVector& grad);

/// (f_{x_1}..f_{x_m}, f_{y_1}..f_{y_m}) with f_{x_k} = 2 x_k g_k, f_{y_k} = 2 y_k g_k.
/// Throws DegenerateGradientError when the norm falls below tol.grad_tol.
RealVector real_gradient(const RadialProfile& profile, const ComplexVector& z,
                         const Tolerances& tol = {});
RealVector real_gradient(const ProfileJet& jet, const ComplexVector& z);

/// Real Hessian of f(x, y) = g(x² + y²) in the (x-block, y-block) layout.
RealMatrix real_hessian(const ProfileJet& jet, const ComplexVector& z);

/// f_{j k̄} = ∂²f/∂z_j∂z̄_k = δ_jk g_k + z̄_j z_k g_jk (0-based indices).
Complex complex_hessian_entry(const RadialProfile& profile, const ComplexVector& z, int j, int k);
ComplexMatrix complex_hessian(const ProfileJet& jet, const ComplexVector& z);

struct ProjectionOptions {
  double surface_tol = 1e-10;
  int max_iter = 50;
};

/// Radial Newton projection: keeps every phase arg(z_k) and solves g(t·r) = 0
/// for the scale t > 0, returning z·√t.
SurfacePoint project_to_surface(const RadialProfile& profile, const ComplexVector& guess,
                                const ProjectionOptions& options = {});

}  // namespace reinhardt
