#pragma once

// Reference computations used only by the tests. Everything here is written
// from the defining formulas, without calling the library routine it checks.

#include <cstdint>
#include <functional>
#include <random>
#include <vector>

#include "reinhardt/profile.hpp"
#include "reinhardt/sampling.hpp"
#include "reinhardt/types.hpp"

namespace oracle {

using reinhardt::Complex;
using reinhardt::ComplexMatrix;
using reinhardt::ComplexVector;
using reinhardt::RadialProfile;
using reinhardt::RealMatrix;
using reinhardt::RealVector;

/// f(u) = g(r(u)) on ℝ^{2m}, u = (x, y), using only profile.value().
double ambient_value(const RadialProfile& p, const RealVector& u);

/// Central differences of ambient_value.
RealVector fd_gradient(const RadialProfile& p, const RealVector& u, double h = 1e-6);
RealMatrix fd_hessian(const RadialProfile& p, const RealVector& u, double h = 1e-4);

/// h(T,T) from an ambient gradient and Hessian: TᵀHT/‖∇f‖ with T = J·(−∇f/‖∇f‖).
double characteristic_curvature(const RealVector& grad, const RealMatrix& hess);

/// (Σ r_k/a_k⁶)/(Σ r_k/a_k⁴)^{3/2}
double ellipsoid_h_TT(const std::vector<double>& a, const RealVector& r);

/// Levi eigenvalues (descending) from an ambient gradient and Hessian: complex
/// Hessian assembled from real second derivatives, kernel of Σ W_j ∂_j f by
/// Eigen's full-pivot LU, eigenvalues by Eigen's self-adjoint solver.
RealVector levi_eigenvalues(const RealVector& grad, const RealMatrix& hess);

/// (trace Hess − NᵀHess N)/((2n+1)‖∇f‖)
double mean_curvature(const RealVector& grad, const RealMatrix& hess);

/// e_j by summing products over all j-subsets.
double elementary_symmetric_subsets(const RealVector& lambda, int j);

/// Determinant by Laplace expansion along the first row.
Complex cofactor_determinant(const ComplexMatrix& a);

/// g = −1 + Σ c_k r_k^{d_k} + (a few positive mixed terms), c_k ∈ [0.5, 2].
/// Bounded and star-shaped about the origin, with g increasing in every r_k.
RadialProfile random_bounded_polynomial(int dim, std::uint64_t seed);

/// Sphere, two ellipsoids and polynomials for every dim in {2, 3, 4}.
std::vector<RadialProfile> bounded_profile_zoo(int polynomials_per_dim = 2);

/// Uniform phases e^{iθ}.
ComplexVector random_phases(int dim, std::mt19937_64& rng);

}  // namespace oracle
