#pragma once

#include <string>
#include <vector>

#include "reinhardt/profile.hpp"
#include "reinhardt/tolerances.hpp"
#include "reinhardt/types.hpp"

namespace reinhardt {

/// Orthonormal frame at a point of M in real coordinates (x-block, y-block).
/// {X_1..X_n, Y_1..Y_n, T} spans T_pM, Y_k = J·X_k and T = J·N.
struct Frame {
  RealVector normal;
  RealVector characteristic;
  std::vector<RealVector> x;
  std::vector<RealVector> y;
};

/// First- and second-order data of f = g(r(z)) at one point, evaluated once and
/// shared by every curvature routine.
struct LocalData {
  ComplexVector z;
  RealVector r;
  ProfileJet jet;
  RealVector gradient;    // ∇f, real
  RealMatrix hessian;     // Hess_ℝ f
  double gradient_norm;   // ‖∇f‖ = 2|∂f|
  double complex_norm;    // |∂f|
};

LocalData local_data(const RadialProfile& profile, const SurfacePoint& q, const Tolerances& tol = {});

/// Inner unit normal N = −∇f/‖∇f‖.
RealVector unit_normal(const RadialProfile& profile, const SurfacePoint& q, const Tolerances& tol = {});

/// T = J·N = (f_y, −f_x)/‖∇f‖.
RealVector characteristic_direction(const RadialProfile& profile, const SurfacePoint& q,
                                    const Tolerances& tol = {});

/// h(V, W) = Vᵀ Hess_ℝf W / ‖∇f‖ for tangent V, W (NonTangentError otherwise).
double second_fundamental_form(const RadialProfile& profile, const SurfacePoint& q,
                               const RealVector& v, const RealVector& w, const Tolerances& tol = {});
double second_fundamental_form(const LocalData& local, const RealVector& v, const RealVector& w,
                               const Tolerances& tol = {});

/// Σ_k r_k g_k³ / (Σ_k r_k g_k²)^{3/2}.
double characteristic_curvature_radial(const RadialProfile& profile, const SurfacePoint& q,
                                       const Tolerances& tol = {});
double characteristic_curvature_radial(const LocalData& local);

/// h(T, T) through the ambient real Hessian, independent of the radial formula.
double characteristic_curvature_oracle(const RadialProfile& profile, const SurfacePoint& q,
                                       const Tolerances& tol = {});
double characteristic_curvature_oracle(const LocalData& local);

/// Hermitian-orthonormal basis Z_1..Z_n of {Z : Σ_k Z_k f_k = 0}, f_k = ∂f/∂z_k.
/// Gram–Schmidt seeded with coordinate vectors; the coordinate with the largest
/// |f_k| is excluded first.
std::vector<ComplexVector> horizontal_complex_basis(const RadialProfile& profile, const SurfacePoint& q,
                                                    const Tolerances& tol = {});
std::vector<ComplexVector> horizontal_complex_basis(const LocalData& local);

/// Real pair (X, J·X) of a complex horizontal vector W, scaled so that
/// ‖X‖² + ‖JX‖² = |W|²; with it l(W, W) = h(X, X) + h(JX, JX).
std::pair<RealVector, RealVector> real_pair(const ComplexVector& w);

Frame frame(const RadialProfile& profile, const SurfacePoint& q, const Tolerances& tol = {});
Frame frame(const LocalData& local);

/// l_ab = Σ_{jk} f_{j k̄} (Z_a)_j conj((Z_b)_k) / |∂f| on the horizontal basis.
/// On the sphere of radius R this is Id/R.
ComplexMatrix levi_form_matrix(const RadialProfile& profile, const SurfacePoint& q,
                               const Tolerances& tol = {});
ComplexMatrix levi_form_matrix(const LocalData& local);

/// Levi eigenvalues λ_1 ≥ … ≥ λ_n.
RealVector levi_eigenvalues(const RadialProfile& profile, const SurfacePoint& q,
                            const Tolerances& tol = {});

/// L^j = e_j(λ)/C(n, j), 1 ≤ j ≤ n.
double levi_curvature_sym(const RadialProfile& profile, const SurfacePoint& q, int j,
                          const Tolerances& tol = {});

/// Bordered complex-Hessian determinant Δ_(i_1..i_{j+1}) for 0-based indices.
Complex bordered_determinant(const LocalData& local, const std::vector<int>& indices);

/// L^j = −|∂f|^{−(j+2)} Σ_{|I| = j+1} Δ_I(f) / C(n, j).
double levi_curvature_det(const RadialProfile& profile, const SurfacePoint& q, int j,
                          const Tolerances& tol = {});
double levi_curvature_det(const LocalData& local, int j);

/// H = (tr Hess_ℝf − Nᵀ Hess_ℝf N) / ((2n+1)‖∇f‖).
double mean_curvature(const RadialProfile& profile, const SurfacePoint& q, const Tolerances& tol = {});
double mean_curvature(const LocalData& local);

struct RouteResiduals {
  double characteristic = 0.0;  // |h_TT − h_TT_oracle|
  double levi = 0.0;            // max_j |L^j(det) − L^j(sym)|
};

struct CurvatureReport {
  double h_TT = 0.0;
  double h_TT_oracle = 0.0;
  RealVector levi_eigenvalues;
  RealVector levi_det;  // L^1..L^n, determinant route
  RealVector levi_sym;  // L^1..L^n, eigenvalue route
  double mean_curvature = 0.0;
  double relation_residual = 0.0;  // |H − (2n L^1 + h_TT)/(2n+1)|
  RouteResiduals route_residuals;
  bool strictly_pseudoconvex = false;

  /// All residual gates at the given tolerance.
  bool within(double report_tol) const;
};

CurvatureReport curvature_report(const RadialProfile& profile, const SurfacePoint& q,
                                 const Tolerances& tol = {});

/// Column names of a scan row: index, x_k, y_k, r_k, then the report fields.
std::vector<std::string> scan_csv_header(int dim);
std::vector<double> scan_csv_row(const SurfacePoint& q, const CurvatureReport& report);

}  // namespace reinhardt
