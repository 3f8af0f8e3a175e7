#include "reinhardt/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

namespace reinhardt::linalg {

RealVector hermitian_eigenvalues(const ComplexMatrix& input, int max_sweeps) {
  const Eigen::Index n = input.rows();
  ComplexMatrix a = 0.5 * (input + input.adjoint());

  auto off_norm = [&] {
    double s = 0.0;
    for (Eigen::Index p = 0; p < n; ++p)
      for (Eigen::Index q = p + 1; q < n; ++q) s += std::norm(a(p, q));
    return std::sqrt(s);
  };
  const double scale = std::max(a.norm(), 1e-300);

  for (int sweep = 0; sweep < max_sweeps; ++sweep) {
    if (off_norm() <= 1e-17 * scale) break;
    for (Eigen::Index p = 0; p < n; ++p) {
      for (Eigen::Index q = p + 1; q < n; ++q) {
        const double b = std::abs(a(p, q));
        if (b == 0.0) continue;
        // Phase the (p, q) pair so the off-diagonal entry becomes the real b,
        // then apply the classical real rotation.
        const Complex phase = std::conj(a(p, q)) / b;  // e^{-iα}
        const double app = a(p, p).real();
        const double aqq = a(q, q).real();
        const double theta = (aqq - app) / (2.0 * b);
        const double t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;

        // V = diag(1, e^{-iα}) · [[c, s], [-s, c]] on the (p, q) block.
        const Complex vpp = c, vpq = s;
        const Complex vqp = -s * phase, vqq = c * phase;

        for (Eigen::Index k = 0; k < n; ++k) {
          const Complex akp = a(k, p), akq = a(k, q);
          a(k, p) = akp * vpp + akq * vqp;
          a(k, q) = akp * vpq + akq * vqq;
        }
        for (Eigen::Index k = 0; k < n; ++k) {
          const Complex apk = a(p, k), aqk = a(q, k);
          a(p, k) = std::conj(vpp) * apk + std::conj(vqp) * aqk;
          a(q, k) = std::conj(vpq) * apk + std::conj(vqq) * aqk;
        }
        a(p, q) = a(q, p) = 0.0;
        a(p, p) = a(p, p).real();
        a(q, q) = a(q, q).real();
      }
    }
  }

  RealVector eig(n);
  for (Eigen::Index k = 0; k < n; ++k) eig[k] = a(k, k).real();
  std::sort(eig.begin(), eig.end(), std::greater<>());
  return eig;
}

bool is_hermitian(const ComplexMatrix& a, double tol) {
  if (a.rows() != a.cols()) return false;
  return (a - a.adjoint()).cwiseAbs().maxCoeff() <= tol;
}

Complex determinant(ComplexMatrix a) {
  const Eigen::Index n = a.rows();
  Complex det = 1.0;
  for (Eigen::Index col = 0; col < n; ++col) {
    Eigen::Index pivot = col;
    for (Eigen::Index row = col + 1; row < n; ++row)
      if (std::abs(a(row, col)) > std::abs(a(pivot, col))) pivot = row;
    if (a(pivot, col) == Complex(0.0)) return 0.0;
    if (pivot != col) {
      a.row(pivot).swap(a.row(col));
      det = -det;
    }
    det *= a(col, col);
    for (Eigen::Index row = col + 1; row < n; ++row) {
      const Complex factor = a(row, col) / a(col, col);
      for (Eigen::Index k = col + 1; k < n; ++k) a(row, k) -= factor * a(col, k);
    }
  }
  return det;
}

std::vector<double> elementary_symmetric(const RealVector& values) {
  std::vector<double> e(values.size() + 1, 0.0);
  e[0] = 1.0;
  for (Eigen::Index i = 0; i < values.size(); ++i)
    for (Eigen::Index j = i + 1; j >= 1; --j) e[j] += values[i] * e[j - 1];
  return e;
}

double binomial(int n, int k) {
  if (k < 0 || k > n) return 0.0;
  double out = 1.0;
  for (int i = 1; i <= k; ++i) out = out * (n - k + i) / i;
  return out;
}

}  // namespace reinhardt::linalg
