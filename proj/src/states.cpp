/*
 * This code is part of qmap.
 *
 * Licensed under the Apache License, Version 2.0. You may obtain a copy of
 * this license at http://www.apache.org/licenses/LICENSE-2.0.
 */

#include "qmap/states.hpp"

#include <cmath>
#include <sstream>

#include "qmap/rng.hpp"

namespace qmap {

DensityMatrix validate_density(const Matrix& m, std::optional<Dims> dims) {
  if (m.rows() != m.cols())
    throw Error(ErrorCode::ShapeMismatch, "state matrix is not square");
  if (!m.allFinite())
    throw Error(ErrorCode::InvalidArgument, "state has non-finite entries");
  if (dims && dims->total() != m.rows())
    throw Error(ErrorCode::DimensionMismatch,
                "dims product " + std::to_string(dims->total()) +
                    " != matrix dimension " + std::to_string(m.rows()));
  if (!is_hermitian(m, hermiticity_tolerance(m)))
    throw Error(ErrorCode::NotHermitian, "state matrix is not Hermitian");
  Matrix sym = 0.5 * (m + m.adjoint().eval());

  double trace = sym.trace().real();
  if (std::abs(trace - 1.0) > 1e-9) {
    std::ostringstream os;
    os << "trace is " << trace;
    throw Error(ErrorCode::TraceNotOne, os.str());
  }
  Eigen::SelfAdjointEigenSolver<Matrix> solver(sym, Eigen::EigenvaluesOnly);
  double min_eig = solver.eigenvalues().minCoeff();
  if (min_eig < -1e-9) {
    std::ostringstream os;
    os << "minimum eigenvalue is " << min_eig;
    throw Error(ErrorCode::NotPositive, os.str());
  }
  return DensityMatrix(std::move(sym), dims);
}

DensityMatrix DensityMatrix::with_dims(Dims dims) const {
  return validate_density(mat_, dims);
}

DensityMatrix pure_state(const CVector& psi, std::optional<Dims> dims) {
  double n = psi.norm();
  if (n < 1e-300)
    throw Error(ErrorCode::InvalidArgument, "pure-state vector is zero");
  CVector u = psi / n;
  return validate_density(u * u.adjoint(), dims);
}

DensityMatrix bell_state() {
  CVector v = CVector::Zero(4);
  v[0] = v[3] = 1.0 / std::sqrt(2.0);
  return pure_state(v, Dims{2, 2});
}

DensityMatrix werner_state(double p) {
  if (p < -1.0 / 3.0 || p > 1.0)
    throw Error(ErrorCode::InvalidArgument,
                "werner parameter must lie in [-1/3, 1]");
  Matrix m = p * bell_state().matrix() + (1.0 - p) * Matrix::Identity(4, 4) / 4.0;
  return validate_density(m, Dims{2, 2});
}

DensityMatrix maximally_mixed(int d, std::optional<Dims> dims) {
  if (d <= 0) throw Error(ErrorCode::InvalidArgument, "dimension must be positive");
  return validate_density(Matrix::Identity(d, d) / static_cast<double>(d), dims);
}

DensityMatrix hs_example_sigma() {
  Matrix m = Matrix::Zero(4, 4);
  m(0, 0) = m(1, 1) = 0.5;
  return validate_density(m);
}

DensityMatrix hs_example_rho() {
  Matrix m = Matrix::Zero(4, 4);
  m(2, 2) = m(3, 3) = 0.5;
  return validate_density(m);
}

DensityMatrix random_density(int d, int rank, std::uint64_t seed,
                             std::optional<Dims> dims) {
  if (d <= 0 || rank <= 0 || rank > d)
    throw Error(ErrorCode::InvalidArgument,
                "need 0 < rank <= d for a random density matrix");
  Prng rng(seed);
  Matrix g(d, rank);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < rank; ++j) g(i, j) = rng.cgauss();
  Matrix m = g * g.adjoint();
  m /= m.trace().real();
  return validate_density(m, dims);
}

double purity(const DensityMatrix& sigma) {
  return (sigma.matrix() * sigma.matrix()).trace().real();
}

}  // namespace qmap
