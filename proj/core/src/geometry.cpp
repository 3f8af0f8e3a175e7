#include "reinhardt/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>

#include "reinhardt/errors.hpp"
#include "reinhardt/linalg.hpp"

namespace reinhardt {
namespace {

void for_each_subset(int m, int size, const std::function<void(const std::vector<int>&)>& visit) {
  std::vector<int> idx(size);
  std::iota(idx.begin(), idx.end(), 0);
  for (;;) {
    visit(idx);
    int i = size - 1;
    while (i >= 0 && idx[i] == m - size + i) --i;
    if (i < 0) return;
    ++idx[i];
    for (int k = i + 1; k < size; ++k) idx[k] = idx[k - 1] + 1;
  }
}

void check_levi_index(const LocalData& local, int j) {
  const int n = static_cast<int>(local.z.size()) - 1;
  if (j < 1 || j > n) throw DomainError("Levi curvature index j must satisfy 1 <= j <= n");
}

}  // namespace

LocalData local_data(const RadialProfile& profile, const SurfacePoint& q, const Tolerances& tol) {
  LocalData local;
  local.z = q.z;
  local.r = eval_radii(q.z);
  local.jet = profile.jet(local.r);
  local.gradient = real_gradient(local.jet, q.z);
  local.gradient_norm = local.gradient.norm();
  if (!(local.gradient_norm >= tol.grad_tol))
    throw DegenerateGradientError("defining-function gradient vanishes at the point");
  local.hessian = real_hessian(local.jet, q.z);
  local.complex_norm = complex_gradient_norm(local.r, local.jet.grad);
  return local;
}

RealVector unit_normal(const RadialProfile& profile, const SurfacePoint& q, const Tolerances& tol) {
  const LocalData local = local_data(profile, q, tol);
  return -local.gradient / local.gradient_norm;
}

RealVector characteristic_direction(const RadialProfile& profile, const SurfacePoint& q,
                                    const Tolerances& tol) {
  return apply_J(unit_normal(profile, q, tol));
}

double second_fundamental_form(const LocalData& local, const RealVector& v, const RealVector& w,
                               const Tolerances& tol) {
  const Eigen::Index size = local.gradient.size();
  if (v.size() != size || w.size() != size) throw DomainError("tangent vector has wrong dimension");
  for (const RealVector* u : {&v, &w}) {
    const double normal_part = std::abs(u->dot(local.gradient)) / local.gradient_norm;
    if (normal_part > tol.tangent_tol * std::max(1.0, u->norm()))
      throw NonTangentError("vector is not tangent to the surface");
  }
  return v.dot(local.hessian * w) / local.gradient_norm;
}

double second_fundamental_form(const RadialProfile& profile, const SurfacePoint& q,
                               const RealVector& v, const RealVector& w, const Tolerances& tol) {
  return second_fundamental_form(local_data(profile, q, tol), v, w, tol);
}

double characteristic_curvature_radial(const LocalData& local) {
  double numerator = 0.0;
  for (Eigen::Index k = 0; k < local.r.size(); ++k) {
    const double gk = local.jet.grad[k];
    numerator += local.r[k] * gk * gk * gk;
  }
  const double norm = local.complex_norm;
  return numerator / (norm * norm * norm);
}

double characteristic_curvature_radial(const RadialProfile& profile, const SurfacePoint& q,
                                       const Tolerances& tol) {
  return characteristic_curvature_radial(local_data(profile, q, tol));
}

double characteristic_curvature_oracle(const LocalData& local) {
  const RealVector t = apply_J(-local.gradient / local.gradient_norm);
  return t.dot(local.hessian * t) / local.gradient_norm;
}

double characteristic_curvature_oracle(const RadialProfile& profile, const SurfacePoint& q,
                                       const Tolerances& tol) {
  return characteristic_curvature_oracle(local_data(profile, q, tol));
}

std::vector<ComplexVector> horizontal_complex_basis(const LocalData& local) {
  const Eigen::Index m = local.z.size();
  // Σ_k Z_k f_k = ⟨Z, c⟩ with c_k = conj(f_k) = z_k g_k.
  ComplexVector c(m);
  for (Eigen::Index k = 0; k < m; ++k) c[k] = local.z[k] * local.jet.grad[k];

  Eigen::Index pivot = 0;
  for (Eigen::Index k = 1; k < m; ++k)
    if (std::abs(c[k]) > std::abs(c[pivot])) pivot = k;

  std::vector<ComplexVector> span{c / c.norm()};
  std::vector<ComplexVector> basis;
  for (Eigen::Index k = 0; k < m && static_cast<Eigen::Index>(basis.size()) < m - 1; ++k) {
    if (k == pivot) continue;
    ComplexVector v = ComplexVector::Unit(m, k);
    for (int pass = 0; pass < 2; ++pass)
      for (const ComplexVector& u : span) v -= u.dot(v) * u;
    const double norm = v.norm();
    if (norm < 1e-8) continue;
    v /= norm;
    span.push_back(v);
    basis.push_back(v);
  }
  return basis;
}

std::vector<ComplexVector> horizontal_complex_basis(const RadialProfile& profile, const SurfacePoint& q,
                                                    const Tolerances& tol) {
  return horizontal_complex_basis(local_data(profile, q, tol));
}

std::pair<RealVector, RealVector> real_pair(const ComplexVector& w) {
  const RealVector x = to_real(w) / std::sqrt(2.0);
  return {x, apply_J(x)};
}

Frame frame(const LocalData& local) {
  Frame out;
  out.normal = -local.gradient / local.gradient_norm;
  out.characteristic = apply_J(out.normal);
  for (const ComplexVector& w : horizontal_complex_basis(local)) {
    RealVector x = to_real(w);
    out.y.push_back(apply_J(x));
    out.x.push_back(std::move(x));
  }
  return out;
}

Frame frame(const RadialProfile& profile, const SurfacePoint& q, const Tolerances& tol) {
  return frame(local_data(profile, q, tol));
}

ComplexMatrix levi_form_matrix(const LocalData& local) {
  const std::vector<ComplexVector> basis = horizontal_complex_basis(local);
  const ComplexMatrix hess = complex_hessian(local.jet, local.z);
  const Eigen::Index n = static_cast<Eigen::Index>(basis.size());
  ComplexMatrix levi(n, n);
  for (Eigen::Index a = 0; a < n; ++a) {
    const ComplexVector row = hess.transpose() * basis[a];  // Σ_j f_{j k̄} (Z_a)_j
    for (Eigen::Index b = 0; b < n; ++b) {
      levi(a, b) = basis[b].dot(row) / local.complex_norm;  // Σ_k conj((Z_b)_k) row_k
    }
  }
  return levi;
}

ComplexMatrix levi_form_matrix(const RadialProfile& profile, const SurfacePoint& q, const Tolerances& tol) {
  return levi_form_matrix(local_data(profile, q, tol));
}

RealVector levi_eigenvalues(const RadialProfile& profile, const SurfacePoint& q, const Tolerances& tol) {
  return linalg::hermitian_eigenvalues(levi_form_matrix(profile, q, tol));
}

double levi_curvature_sym(const RadialProfile& profile, const SurfacePoint& q, int j, const Tolerances& tol) {
  const LocalData local = local_data(profile, q, tol);
  check_levi_index(local, j);
  const RealVector eig = linalg::hermitian_eigenvalues(levi_form_matrix(local));
  const int n = static_cast<int>(eig.size());
  return linalg::elementary_symmetric(eig)[j] / linalg::binomial(n, j);
}

Complex bordered_determinant(const LocalData& local, const std::vector<int>& indices) {
  const Eigen::Index size = static_cast<Eigen::Index>(indices.size()) + 1;
  ComplexMatrix bordered(size, size);
  bordered(0, 0) = 0.0;
  for (Eigen::Index a = 0; a + 1 < size; ++a) {
    const int i = indices[a];
    const Complex f_i = std::conj(local.z[i]) * local.jet.grad[i];
    bordered(0, a + 1) = std::conj(f_i);  // f_{ī}
    bordered(a + 1, 0) = f_i;
    for (Eigen::Index b = 0; b + 1 < size; ++b) {
      const int k = indices[b];
      Complex entry = std::conj(local.z[i]) * local.z[k] * local.jet.hess(i, k);
      if (i == k) entry += local.jet.grad[i];
      bordered(a + 1, b + 1) = entry;
    }
  }
  return linalg::determinant(bordered);
}

double levi_curvature_det(const LocalData& local, int j) {
  check_levi_index(local, j);
  const int m = static_cast<int>(local.z.size());
  double sum = 0.0;
  for_each_subset(m, j + 1, [&](const std::vector<int>& idx) {
    sum += bordered_determinant(local, idx).real();
  });
  return -sum / (linalg::binomial(m - 1, j) * std::pow(local.complex_norm, j + 2));
}

double levi_curvature_det(const RadialProfile& profile, const SurfacePoint& q, int j, const Tolerances& tol) {
  return levi_curvature_det(local_data(profile, q, tol), j);
}

double mean_curvature(const LocalData& local) {
  const RealVector normal = -local.gradient / local.gradient_norm;
  const double tangential_trace = local.hessian.trace() - normal.dot(local.hessian * normal);
  const double n = static_cast<double>(local.z.size() - 1);
  return tangential_trace / ((2.0 * n + 1.0) * local.gradient_norm);
}

double mean_curvature(const RadialProfile& profile, const SurfacePoint& q, const Tolerances& tol) {
  return mean_curvature(local_data(profile, q, tol));
}

bool CurvatureReport::within(double report_tol) const {
  return relation_residual <= report_tol && route_residuals.characteristic <= report_tol &&
         route_residuals.levi <= report_tol;
}

CurvatureReport curvature_report(const RadialProfile& profile, const SurfacePoint& q, const Tolerances& tol) {
  const LocalData local = local_data(profile, q, tol);
  const int n = profile.cr_dim();

  CurvatureReport report;
  report.h_TT = characteristic_curvature_radial(local);
  report.h_TT_oracle = characteristic_curvature_oracle(local);
  report.levi_eigenvalues = linalg::hermitian_eigenvalues(levi_form_matrix(local));
  const std::vector<double> e = linalg::elementary_symmetric(report.levi_eigenvalues);
  report.levi_sym.resize(n);
  report.levi_det.resize(n);
  for (int j = 1; j <= n; ++j) {
    report.levi_sym[j - 1] = e[j] / linalg::binomial(n, j);
    report.levi_det[j - 1] = levi_curvature_det(local, j);
  }
  report.mean_curvature = mean_curvature(local);
  report.relation_residual =
      std::abs(report.mean_curvature - (2.0 * n * report.levi_sym[0] + report.h_TT) / (2.0 * n + 1.0));
  report.route_residuals.characteristic = std::abs(report.h_TT - report.h_TT_oracle);
  report.route_residuals.levi = (report.levi_det - report.levi_sym).cwiseAbs().maxCoeff();
  report.strictly_pseudoconvex = report.levi_eigenvalues.minCoeff() > 0.0;
  return report;
}

std::vector<std::string> scan_csv_header(int dim) {
  const int n = dim - 1;
  std::vector<std::string> cols{"index"};
  for (const char* prefix : {"x_", "y_", "r_"})
    for (int k = 1; k <= dim; ++k) cols.push_back(prefix + std::to_string(k));
  cols.emplace_back("h_TT");
  cols.emplace_back("h_TT_oracle");
  for (const char* prefix : {"levi_eigenvalues_", "levi_det_", "levi_sym_"})
    for (int j = 1; j <= n; ++j) cols.push_back(prefix + std::to_string(j));
  cols.emplace_back("mean_curvature");
  cols.emplace_back("relation_residual");
  return cols;
}

std::vector<double> scan_csv_row(const SurfacePoint& q, const CurvatureReport& report) {
  std::vector<double> row;
  for (Eigen::Index k = 0; k < q.z.size(); ++k) row.push_back(q.z[k].real());
  for (Eigen::Index k = 0; k < q.z.size(); ++k) row.push_back(q.z[k].imag());
  for (Eigen::Index k = 0; k < q.r.size(); ++k) row.push_back(q.r[k]);
  row.push_back(report.h_TT);
  row.push_back(report.h_TT_oracle);
  for (const RealVector* v : {&report.levi_eigenvalues, &report.levi_det, &report.levi_sym})
    for (Eigen::Index j = 0; j < v->size(); ++j) row.push_back((*v)[j]);
  row.push_back(report.mean_curvature);
  row.push_back(report.relation_residual);
  return row;
}

}  // namespace reinhardt
