#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "reinhardt/errors.hpp"
#include "reinhardt/geometry.hpp"
#include "reinhardt/linalg.hpp"
#include "reinhardt/sampling.hpp"

using namespace reinhardt;

namespace {

SurfacePoint at(const RadialProfile& p, std::initializer_list<double> z) {
  ComplexVector v(static_cast<Eigen::Index>(z.size()));
  Eigen::Index k = 0;
  for (double c : z) v[k++] = c;
  return make_surface_point(p, v);
}

double scale(double x) { return std::max(1.0, std::abs(x)); }

}  // namespace

TEST_CASE("sphere model") {
  for (double R : {0.5, 1.0, 3.0})
    for (int dim = 2; dim <= 4; ++dim) {
      const auto p = RadialProfile::sphere(dim, R);
      for (const SurfacePoint& q : sample_surface(p, 30, 3)) {
        const CurvatureReport rep = curvature_report(p, q);
        CHECK(rep.h_TT == doctest::Approx(1 / R).epsilon(1e-12));
        CHECK(rep.h_TT_oracle == doctest::Approx(1 / R).epsilon(1e-12));
        CHECK(rep.mean_curvature == doctest::Approx(1 / R).epsilon(1e-12));
        const ComplexMatrix l = levi_form_matrix(p, q);
        CHECK((l - ComplexMatrix::Identity(dim - 1, dim - 1) / R).cwiseAbs().maxCoeff() <= 1e-12);
        for (int j = 1; j < dim; ++j) {
          CHECK(std::abs(rep.levi_sym[j - 1] - std::pow(R, -j)) <= 1e-10);
          CHECK(std::abs(rep.levi_det[j - 1] - std::pow(R, -j)) <= 1e-10);
        }
        CHECK(rep.within(1e-10));
        CHECK(rep.strictly_pseudoconvex);

        // every unit tangent vector has normal curvature 1/R
        const Frame fr = frame(p, q);
        RealVector v = fr.characteristic + fr.x[0] - 0.5 * fr.y[0];
        v.normalize();
        CHECK(second_fundamental_form(p, q, v, v) == doctest::Approx(1 / R).epsilon(1e-12));
      }
    }
}

TEST_CASE("normal and characteristic direction examples") {
  const auto s = RadialProfile::sphere(2, 2.0);
  const SurfacePoint q = at(s, {2.0, 0.0});
  RealVector N(4), T(4);
  N << -1, 0, 0, 0;
  T << 0, 0, -1, 0;
  CHECK((unit_normal(s, q) - N).norm() <= 1e-15);
  CHECK((characteristic_direction(s, q) - T).norm() <= 1e-15);

  const auto e = RadialProfile::ellipsoid({1.0, 2.0});
  RealVector Ne(4);
  Ne << 0, -1, 0, 0;
  CHECK((unit_normal(e, at(e, {0.0, 2.0})) - Ne).norm() <= 1e-15);

  const auto basis = horizontal_complex_basis(s, q);
  REQUIRE(basis.size() == 1);
  CHECK(std::abs(basis[0][0]) == 0.0);
  CHECK(std::abs(std::abs(basis[0][1]) - 1.0) <= 1e-15);
}

TEST_CASE("frame is orthonormal and J-compatible") {
  for (const auto& p : oracle::bounded_profile_zoo())
    for (const SurfacePoint& q : sample_surface(p, 25, 4)) {
      const Frame fr = frame(p, q);
      const int n = p.cr_dim();
      RealMatrix basis(2 * p.dim(), 2 * p.dim());
      for (int k = 0; k < n; ++k) {
        basis.col(k) = fr.x[k];
        basis.col(n + k) = fr.y[k];
        CHECK((apply_J(fr.x[k]) - fr.y[k]).cwiseAbs().maxCoeff() <= 1e-14);
      }
      basis.col(2 * n) = fr.characteristic;
      basis.col(2 * n + 1) = fr.normal;
      const RealMatrix gram = basis.transpose() * basis;
      CHECK((gram - RealMatrix::Identity(2 * p.dim(), 2 * p.dim())).cwiseAbs().maxCoeff() <= 1e-12);
      CHECK((apply_J(fr.normal) - fr.characteristic).cwiseAbs().maxCoeff() <= 1e-14);

      const RealVector grad = real_gradient(p, q.z);
      CHECK(fr.normal.dot(grad) < 0.0);
      CHECK(std::abs(fr.characteristic.dot(grad)) <= 1e-12 * grad.norm());
      for (int k = 0; k < n; ++k) {
        CHECK(std::abs(grad.dot(fr.x[k])) <= 1e-10);
        CHECK(std::abs(grad.dot(fr.y[k])) <= 1e-10);
      }
      // the position vector is orthogonal to T
      CHECK(std::abs(to_real(q.z).dot(fr.characteristic)) <= 1e-12);
    }
}

TEST_CASE("horizontal basis is orthonormal and annihilates the complex gradient") {
  for (const auto& p : oracle::bounded_profile_zoo())
    for (const SurfacePoint& q : sample_surface(p, 25, 5)) {
      const auto basis = horizontal_complex_basis(p, q);
      REQUIRE(static_cast<int>(basis.size()) == p.cr_dim());
      const ComplexVector df = (q.z.conjugate().array() * p.jet(q.r).grad.array().cast<Complex>()).matrix();
      for (std::size_t a = 0; a < basis.size(); ++a) {
        CHECK(std::abs(basis[a].cwiseProduct(df).sum()) <= 1e-12 * std::max(1.0, df.norm()));
        for (std::size_t b = 0; b < basis.size(); ++b)
          CHECK(std::abs(basis[b].dot(basis[a]) - (a == b ? 1.0 : 0.0)) <= 1e-12);
      }
    }
}

TEST_CASE("characteristic curvature closed forms") {
  for (const std::vector<double>& a : {std::vector<double>{1, 2}, std::vector<double>{1, 2, 3}}) {
    const auto e = RadialProfile::ellipsoid(a);
    for (const SurfacePoint& q : sample_surface(e, 100, 6)) {
      const double ref = oracle::ellipsoid_h_TT(a, q.r);
      CHECK(std::abs(characteristic_curvature_radial(e, q) - ref) <= 1e-12);
      CHECK(std::abs(characteristic_curvature_oracle(e, q) - ref) <= 1e-8);
    }
    // axis points: 1/a_k
    for (std::size_t k = 0; k < a.size(); ++k) {
      ComplexVector z = ComplexVector::Zero(static_cast<Eigen::Index>(a.size()));
      z[static_cast<Eigen::Index>(k)] = a[k];
      CHECK(characteristic_curvature_radial(e, make_surface_point(e, z)) == doctest::Approx(1 / a[k]).epsilon(1e-14));
    }
  }
  for (double R : {0.5, 2.0}) {
    const auto c = RadialProfile::cylinder(2, R);
    for (const SurfacePoint& q : sample_surface(c, 40, 7)) {
      CHECK(characteristic_curvature_radial(c, q) == doctest::Approx(1 / R).epsilon(1e-13));
      CHECK(characteristic_curvature_oracle(c, q) == doctest::Approx(1 / R).epsilon(1e-12));
    }
  }
}

TEST_CASE("curvatures against finite-difference ambient oracles") {
  for (const auto& p : oracle::bounded_profile_zoo())
    for (const SurfacePoint& q : sample_surface(p, 15, 8)) {
      CAPTURE(p.family_name());
      const RealVector u = to_real(q.z);
      const RealVector grad = oracle::fd_gradient(p, u);
      const RealMatrix hess = oracle::fd_hessian(p, u);
      const CurvatureReport rep = curvature_report(p, q);
      const double tol = 1e-5;

      CHECK(std::abs(rep.h_TT - oracle::characteristic_curvature(grad, hess)) <= tol * scale(rep.h_TT));
      CHECK(std::abs(rep.mean_curvature - oracle::mean_curvature(grad, hess)) <= tol * scale(rep.mean_curvature));
      const RealVector ev = oracle::levi_eigenvalues(grad, hess);
      CHECK((rep.levi_eigenvalues - ev).cwiseAbs().maxCoeff() <= tol * scale(ev.cwiseAbs().maxCoeff()));
      for (int j = 1; j <= p.cr_dim(); ++j) {
        const double ref = oracle::elementary_symmetric_subsets(ev, j) / linalg::binomial(p.cr_dim(), j);
        CHECK(std::abs(rep.levi_det[j - 1] - ref) <= 10 * tol * scale(ref));
      }
    }
}

TEST_CASE("exact-Hessian oracles for the Levi eigenvalues") {
  // same analytic derivatives, independent basis and eigen-solver
  for (const auto& p : oracle::bounded_profile_zoo())
    for (const SurfacePoint& q : sample_surface(p, 20, 9)) {
      const LocalData loc = local_data(p, q);
      const RealVector ref = oracle::levi_eigenvalues(loc.gradient, loc.hessian);
      CHECK((levi_eigenvalues(p, q) - ref).cwiseAbs().maxCoeff() <= 1e-10 * scale(ref.cwiseAbs().maxCoeff()));
      CHECK(std::abs(mean_curvature(p, q) - oracle::mean_curvature(loc.gradient, loc.hessian)) <= 1e-12 * scale(mean_curvature(p, q)));
    }
}

TEST_CASE("dual routes and the mean-curvature relation") {
  for (const auto& p : oracle::bounded_profile_zoo())
    for (auto mode : {DerivativeMode::analytic, DerivativeMode::finite_difference}) {
      const RadialProfile pm = p.with_mode(mode);
      for (const SurfacePoint& q : sample_surface(p, 40, 10)) {
        const CurvatureReport rep = curvature_report(pm, q);
        CHECK(std::abs(rep.h_TT - rep.h_TT_oracle) <= 1e-8);
        CHECK((rep.levi_det - rep.levi_sym).cwiseAbs().maxCoeff() <= 1e-8);
        CHECK(rep.relation_residual <= 1e-8);
        CHECK(rep.route_residuals.characteristic == doctest::Approx(std::abs(rep.h_TT - rep.h_TT_oracle)));
        const int n = p.cr_dim();
        CHECK(rep.levi_sym[0] == doctest::Approx(rep.levi_eigenvalues.sum() / n).epsilon(1e-13));
        const double H = (2.0 * n * rep.levi_sym[0] + rep.h_TT) / (2.0 * n + 1.0);
        CHECK(std::abs(rep.mean_curvature - H) <= 1e-8);
      }
    }
}

TEST_CASE("Levi form equals the second fundamental form on real pairs") {
  for (const auto& p : oracle::bounded_profile_zoo())
    for (const SurfacePoint& q : sample_surface(p, 20, 11)) {
      const auto basis = horizontal_complex_basis(p, q);
      const ComplexMatrix l = levi_form_matrix(p, q);
      CHECK(linalg::is_hermitian(l, 1e-13 * scale(l.cwiseAbs().maxCoeff())));
      for (std::size_t a = 0; a < basis.size(); ++a) {
        const auto [X, JX] = real_pair(basis[a]);
        const double h = second_fundamental_form(p, q, X, X) + second_fundamental_form(p, q, JX, JX);
        CHECK(std::abs(l(a, a).real() - h) <= 1e-12 * scale(h));
        CHECK(std::abs(l(a, a).imag()) <= 1e-13 * scale(h));
      }
    }
}

TEST_CASE("Levi form is the T-component of the bracket [X, JX]") {
  // X(u): a fixed vector projected onto the horizontal space of the level set
  // of f through u; [X, JX] by central differences of the two fields.
  auto field = [](const RadialProfile& p, const RealVector& x0, const RealVector& u) {
    const ComplexVector z = to_complex(u);
    const RealVector g = real_gradient(p.jet(eval_radii(z)), z);
    const RealVector N = -g / g.norm();
    const RealVector T = apply_J(N);
    return RealVector(x0 - x0.dot(N) * N - x0.dot(T) * T);
  };
  const double h = 1e-5;

  double worst = 0.0;
  for (const auto& p : oracle::bounded_profile_zoo())
    for (const SurfacePoint& q : sample_surface(p, 10, 12)) {
      const auto basis = horizontal_complex_basis(p, q);
      const ComplexMatrix l = levi_form_matrix(p, q);
      const RealVector u = to_real(q.z);
      const RealVector T = characteristic_direction(p, q);
      for (std::size_t a = 0; a < basis.size(); ++a) {
        const RealVector x0 = real_pair(basis[a]).first;
        auto X = [&](const RealVector& v) { return field(p, x0, v); };
        auto Y = [&](const RealVector& v) { return RealVector(apply_J(field(p, x0, v))); };
        const RealVector Xp = X(u), Yp = Y(u);
        // directional derivatives DY·X − DX·Y
        const RealVector dY = (Y(u + h * Xp) - Y(u - h * Xp)) / (2 * h);
        const RealVector dX = (X(u + h * Yp) - X(u - h * Yp)) / (2 * h);
        const double bracket_T = (dY - dX).dot(T);
        const double gap = std::abs(l(a, a).real() - bracket_T);
        worst = std::max(worst, gap / scale(l(a, a).real()));
      }
    }
  CHECK(worst <= 1e-6);
}

TEST_CASE("phase equivariance of every curvature") {
  std::mt19937_64 rng(13);
  for (const auto& p : oracle::bounded_profile_zoo())
    for (const SurfacePoint& q : sample_surface(p, 20, 14)) {
      const ComplexVector w = oracle::random_phases(p.dim(), rng);
      const SurfacePoint qr = make_surface_point(p, w.cwiseProduct(q.z));
      const CurvatureReport a = curvature_report(p, q), b = curvature_report(p, qr);
      CHECK(std::abs(a.h_TT - b.h_TT) <= 1e-10);
      CHECK(std::abs(a.h_TT_oracle - b.h_TT_oracle) <= 1e-10);
      CHECK(std::abs(a.mean_curvature - b.mean_curvature) <= 1e-10);
      CHECK((a.levi_eigenvalues - b.levi_eigenvalues).cwiseAbs().maxCoeff() <= 1e-10);
      CHECK((a.levi_det - b.levi_det).cwiseAbs().maxCoeff() <= 1e-10);
      CHECK((a.levi_sym - b.levi_sym).cwiseAbs().maxCoeff() <= 1e-10);
      // the unit normal rotates with the point
      const ComplexVector Na = to_complex(unit_normal(p, q)), Nb = to_complex(unit_normal(p, qr));
      CHECK((w.cwiseProduct(Na) - Nb).cwiseAbs().maxCoeff() <= 1e-12);
    }
}

TEST_CASE("bordered determinants") {
  // sphere(R) in ℂ², j = 1: Δ_(1,2) = −(r_1 + r_2) = −R², |∂f|³ = R³
  const double R = 1.5;
  const auto s = RadialProfile::sphere(2, R);
  const SurfacePoint q = at(s, {std::sqrt(0.3) * R, std::sqrt(0.7) * R});
  const LocalData loc = local_data(s, q);
  CHECK(std::abs(bordered_determinant(loc, {0, 1}) - Complex(-R * R)) <= 1e-13);
  CHECK(levi_curvature_det(s, q, 1) == doctest::Approx(1 / R).epsilon(1e-13));

  // Δ_(i_1..i_{j+1}) only reads the indexed coordinates (given g's derivatives) and
  // is invariant under their phases
  std::mt19937_64 rng(15);
  std::uniform_real_distribution<double> u(0.1, 1.0);
  const auto p = oracle::random_bounded_polynomial(4, 77);
  const SurfacePoint q4 = sample_surface(p, 10, 3)[9];
  const LocalData base = local_data(p, q4);
  const std::vector<int> idx{0, 2};
  const Complex ref = bordered_determinant(base, idx);
  CHECK(std::abs(ref.imag()) <= 1e-14 * scale(std::abs(ref)));
  for (int trial = 0; trial < 10; ++trial) {
    LocalData other = base;
    for (int k : {1, 3}) {
      other.z[k] = std::polar(u(rng), 6.0 * u(rng));
      other.r[k] = std::norm(other.z[k]);
    }
    for (int k : idx) other.z[k] *= std::polar(1.0, 6.0 * u(rng));
    CHECK(std::abs(bordered_determinant(other, idx) - ref) <= 1e-13 * scale(std::abs(ref)));
  }

  CHECK_THROWS_AS(levi_curvature_det(s, q, 0), DomainError);
  CHECK_THROWS_AS(levi_curvature_sym(s, q, 2), DomainError);
}

TEST_CASE("pseudoconvexity of spheres and ellipsoids") {
  for (const auto& p : {RadialProfile::ellipsoid({1.0, 2.0}), RadialProfile::ellipsoid({1.0, 2.0, 3.0}),
                        RadialProfile::ellipsoid({3.0, 0.5, 1.0, 1.0}), RadialProfile::sphere(3, 1.0)})
    for (const SurfacePoint& q : sample_surface(p, 50, 16)) {
      const CurvatureReport rep = curvature_report(p, q);
      CHECK(rep.strictly_pseudoconvex);
      CHECK(rep.levi_eigenvalues.minCoeff() > 0.0);
    }
}

TEST_CASE("ellipsoid axis points") {
  const auto e = RadialProfile::ellipsoid({1.0, 2.0});
  const CurvatureReport a = curvature_report(e, at(e, {1.0, 0.0}));
  const CurvatureReport b = curvature_report(e, at(e, {0.0, 2.0}));
  CHECK(a.h_TT == doctest::Approx(1.0));
  CHECK(b.h_TT == doctest::Approx(0.5));
  CHECK(a.relation_residual <= 1e-8);
  // at z = (1, 0): N = −e_x1, T = −e_y1, horizontal span {e_x2, e_y2}
  // h(T,T) = 1, Levi eigenvalue = g_2 / |∂f| = 1/4, H = (2·(1/4) + 1)/3
  CHECK(a.levi_eigenvalues[0] == doctest::Approx(0.25));
  CHECK(a.mean_curvature == doctest::Approx(0.5).epsilon(1e-14));
}

TEST_CASE("tangency is enforced") {
  const auto s = RadialProfile::sphere(2, 1.0);
  const SurfacePoint q = at(s, {1.0, 0.0});
  const RealVector N = unit_normal(s, q);
  CHECK_THROWS_AS(second_fundamental_form(s, q, N, N), NonTangentError);
  const RealVector T = characteristic_direction(s, q);
  const Frame fr = frame(s, q);
  CHECK(second_fundamental_form(s, q, T, fr.x[0]) == doctest::Approx(second_fundamental_form(s, q, fr.x[0], T)));
}

TEST_CASE("scan export columns") {
  const std::vector<std::string> expected{"index", "x_1", "x_2", "x_3", "y_1", "y_2", "y_3", "r_1", "r_2", "r_3",
                                          "h_TT", "h_TT_oracle", "levi_eigenvalues_1", "levi_eigenvalues_2",
                                          "levi_det_1", "levi_det_2", "levi_sym_1", "levi_sym_2",
                                          "mean_curvature", "relation_residual"};
  CHECK(scan_csv_header(3) == expected);
  const auto p = RadialProfile::sphere(3, 1.0);
  const SurfacePoint q = sample_surface(p, 5, 1)[4];
  CHECK(scan_csv_row(q, curvature_report(p, q)).size() + 1 == expected.size());
}
