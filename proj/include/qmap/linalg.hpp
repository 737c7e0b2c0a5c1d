/*
 * This code is part of qmap.
 *
 * Licensed under the Apache License, Version 2.0. You may obtain a copy of
 * this license at http://www.apache.org/licenses/LICENSE-2.0.
 */

#pragma once

#include <Eigen/Dense>
#include <complex>
#include <functional>
#include <vector>

#include "qmap/errors.hpp"

namespace qmap {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;
using RVector = Eigen::VectorXd;

/// Subsystem dimensions of a bipartite space H1 (x) H2. Composite indices are
/// row-major: index = i1 * d2 + i2. Every bipartite operation in this library
/// shares that convention.
struct Dims {
  int d1 = 0;
  int d2 = 0;

  int total() const { return d1 * d2; }
  bool operator==(const Dims& o) const { return d1 == o.d1 && d2 == o.d2; }
};

/// Max-abs-entry norm, the reference norm for tolerance checks.
double max_abs(const Matrix& m);

/// Squared Frobenius norm, Tr[M^dagger M].
double frobenius_sq(const Matrix& m);

bool is_hermitian(const Matrix& m, double tol);

/// Relative Hermiticity tolerance: 1e-10 * ||M||_maxabs (absolute floor 1e-14
/// for near-zero matrices).
double hermiticity_tolerance(const Matrix& m);

struct Eigensystem {
  RVector values;   // ascending
  Matrix vectors;   // unitary, columns are eigenvectors
};

/// Hermitian eigendecomposition. The input is symmetrized as (M + M^dagger)/2
/// before decomposition; inputs outside the Hermiticity tolerance are
/// rejected. Contract: M = V diag(values) V^dagger within 1e-9 * max(1,||M||).
Eigensystem hermitian_eig(const Matrix& m);

/// f(M) through the spectral resolution: V diag(f(lambda_i)) V^dagger.
/// Throws Domain if f is undefined (non-finite) at some eigenvalue.
Matrix matrix_func(const Matrix& m, const std::function<double(double)>& f);

/// Largest singular value.
double op_norm(const Matrix& m);

/// Kronecker product, row-major subsystem ordering.
Matrix kron(const Matrix& a, const Matrix& b);

/// Trace out subsystem `which` (1 or 2). Trace-preserving.
Matrix partial_trace(const Matrix& m, Dims dims, int which);

/// Transpose subsystem `which` (1 or 2). An involution; entry permutation
/// only, so applying it twice is bit-exact.
Matrix partial_transpose(const Matrix& m, Dims dims, int which);

/// Orthonormal basis of the traceless Hermitian matrices in dimension d
/// (generalized Gell-Mann matrices, d^2 - 1 of them), normalized so that
/// Tr[G_a G_b] = delta_ab. Order: symmetric pairs (j<k, lexicographic), then
/// antisymmetric pairs (same order), then the d-1 diagonal matrices.
std::vector<Matrix> traceless_hermitian_basis(int d);

}  // namespace qmap
