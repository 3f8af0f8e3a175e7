#pragma once

#include <complex>

#include <Eigen/Dense>

namespace reinhardt {

using Complex = std::complex<double>;
using RealVector = Eigen::VectorXd;
using ComplexVector = Eigen::VectorXcd;
using RealMatrix = Eigen::MatrixXd;
using ComplexMatrix = Eigen::MatrixXcd;

// Real coordinates of z ∈ ℂ^{m} are laid out as (x_1..x_m, y_1..y_m).
inline RealVector to_real(const ComplexVector& z) {
  const Eigen::Index m = z.size();
  RealVector u(2 * m);
  u.head(m) = z.real();
  u.tail(m) = z.imag();
  return u;
}

inline ComplexVector to_complex(const RealVector& u) {
  const Eigen::Index m = u.size() / 2;
  ComplexVector z(m);
  for (Eigen::Index k = 0; k < m; ++k) z[k] = Complex(u[k], u[m + k]);
  return z;
}

/// Standard complex structure on ℝ^{2m}: multiplication by i, (x, y) ↦ (−y, x).
inline RealVector apply_J(const RealVector& u) {
  const Eigen::Index m = u.size() / 2;
  RealVector v(2 * m);
  v.head(m) = -u.tail(m);
  v.tail(m) = u.head(m);
  return v;
}

/// Canonical symplectic matrix [[0, I], [−I, 0]] acting on (q, p): (q, p) ↦ (p, −q).
inline RealVector apply_symplectic(const RealVector& u) { return -apply_J(u); }

}  // namespace reinhardt
