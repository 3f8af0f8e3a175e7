#include <doctest.h>

#include <random>

#include <Eigen/Eigenvalues>

#include "oracles.hpp"
#include "reinhardt/linalg.hpp"

using namespace reinhardt;

namespace {

ComplexMatrix random_matrix(int n, std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  ComplexMatrix a(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a(i, j) = Complex(g(rng), g(rng));
  return a;
}

}  // namespace

TEST_CASE("Jacobi eigenvalues match Eigen") {
  std::mt19937_64 rng(21);
  for (int n = 1; n <= 6; ++n)
    for (int trial = 0; trial < 30; ++trial) {
      const ComplexMatrix b = random_matrix(n, rng);
      const ComplexMatrix a = (b + b.adjoint()) / 2.0;
      const RealVector ours = linalg::hermitian_eigenvalues(a);
      const RealVector ref = Eigen::SelfAdjointEigenSolver<ComplexMatrix>(a).eigenvalues().reverse();
      REQUIRE(ours.size() == n);
      CHECK((ours - ref).cwiseAbs().maxCoeff() <= 1e-12 * std::max(1.0, ref.cwiseAbs().maxCoeff()));
      for (int i = 1; i < n; ++i) CHECK(ours[i - 1] >= ours[i]);
    }
}

TEST_CASE("Jacobi handles diagonal and repeated spectra") {
  ComplexMatrix d = ComplexMatrix::Zero(3, 3);
  d.diagonal() << 2.0, -1.0, 2.0;
  const RealVector ev = linalg::hermitian_eigenvalues(d);
  CHECK(ev[0] == 2.0);
  CHECK(ev[1] == 2.0);
  CHECK(ev[2] == -1.0);

  // unitary conjugate of a degenerate spectrum
  std::mt19937_64 rng(22);
  const ComplexMatrix q = Eigen::HouseholderQR<ComplexMatrix>(random_matrix(4, rng)).householderQ();
  ComplexMatrix lam = ComplexMatrix::Zero(4, 4);
  lam.diagonal() << 3.0, 3.0, 3.0, 0.5;
  const RealVector ev2 = linalg::hermitian_eigenvalues(q * lam * q.adjoint());
  CHECK(ev2[0] == doctest::Approx(3.0).epsilon(1e-13));
  CHECK(ev2[2] == doctest::Approx(3.0).epsilon(1e-13));
  CHECK(ev2[3] == doctest::Approx(0.5).epsilon(1e-13));
}

TEST_CASE("is_hermitian") {
  ComplexMatrix a(2, 2);
  a << 1.0, Complex(0, 1), Complex(0, -1), 2.0;
  CHECK(linalg::is_hermitian(a, 1e-14));
  a(0, 1) += 1e-6;
  CHECK_FALSE(linalg::is_hermitian(a, 1e-8));
}

TEST_CASE("LU determinant matches cofactor expansion") {
  std::mt19937_64 rng(23);
  for (int n = 1; n <= 6; ++n)
    for (int trial = 0; trial < 20; ++trial) {
      const ComplexMatrix a = random_matrix(n, rng);
      const Complex ref = oracle::cofactor_determinant(a);
      CHECK(std::abs(linalg::determinant(a) - ref) <= 1e-12 * std::max(1.0, std::abs(ref)));
    }
  // needs pivoting: zero leading entry
  ComplexMatrix p(2, 2);
  p << 0.0, 2.0, 3.0, 1.0;
  CHECK(std::abs(linalg::determinant(p) - Complex(-6.0)) <= 1e-15);
  CHECK(linalg::determinant(ComplexMatrix::Zero(3, 3)) == Complex(0.0));
}

TEST_CASE("elementary symmetric functions match subset sums") {
  std::mt19937_64 rng(24);
  std::normal_distribution<double> g;
  for (int n = 1; n <= 7; ++n) {
    RealVector lambda(n);
    for (int i = 0; i < n; ++i) lambda[i] = g(rng);
    const auto e = linalg::elementary_symmetric(lambda);
    REQUIRE(e.size() == static_cast<std::size_t>(n + 1));
    CHECK(e[0] == 1.0);
    for (int j = 1; j <= n; ++j)
      CHECK(e[j] == doctest::Approx(oracle::elementary_symmetric_subsets(lambda, j)).epsilon(1e-12));
  }
}

TEST_CASE("binomial") {
  CHECK(linalg::binomial(5, 0) == 1.0);
  CHECK(linalg::binomial(5, 2) == 10.0);
  CHECK(linalg::binomial(6, 3) == 20.0);
  CHECK(linalg::binomial(3, 4) == 0.0);
}
