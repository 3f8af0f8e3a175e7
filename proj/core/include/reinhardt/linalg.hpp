#pragma once

#include <vector>

#include "reinhardt/types.hpp"

namespace reinhardt::linalg {

/// Eigenvalues of a Hermitian matrix by cyclic complex Jacobi rotations,
/// sorted descending. Only the lower/upper consistency of the input is assumed,
/// not checked; use is_hermitian() first when that matters.
RealVector hermitian_eigenvalues(const ComplexMatrix& a, int max_sweeps = 60);

bool is_hermitian(const ComplexMatrix& a, double tol);

/// Determinant by LU factorization with partial pivoting.
Complex determinant(ComplexMatrix a);

/// e_0..e_n of the given values (e_0 = 1).
std::vector<double> elementary_symmetric(const RealVector& values);

/// Binomial coefficient C(n, k) as a double.
double binomial(int n, int k);

}  // namespace reinhardt::linalg
