/*
 * This code is part of qmap.
 *
 * Licensed under the Apache License, Version 2.0. You may obtain a copy of
 * this license at http://www.apache.org/licenses/LICENSE-2.0.
 */

#include "qmap/linalg.hpp"

#include <cmath>
#include <sstream>

namespace qmap {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::NotHermitian: return "NotHermitian";
    case ErrorCode::NotPositive: return "NotPositive";
    case ErrorCode::TraceNotOne: return "TraceNotOne";
    case ErrorCode::NotTracePreserving: return "NotTracePreserving";
    case ErrorCode::ShapeMismatch: return "ShapeMismatch";
    case ErrorCode::NormExceedsOne: return "NormExceedsOne";
    case ErrorCode::NotPositiveOperand: return "NotPositiveOperand";
    case ErrorCode::Domain: return "Domain";
    case ErrorCode::DegenerateInput: return "DegenerateInput";
    case ErrorCode::MissingDims: return "MissingDims";
    case ErrorCode::InvalidEnsemble: return "InvalidEnsemble";
    case ErrorCode::NotUnitary: return "NotUnitary";
    case ErrorCode::NotLocalForm: return "NotLocalForm";
    case ErrorCode::DegenerateDirection: return "DegenerateDirection";
    case ErrorCode::Parse: return "Parse";
    case ErrorCode::Io: return "Io";
  }
  return "Unknown";
}

double max_abs(const Matrix& m) {
  return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

double frobenius_sq(const Matrix& m) { return m.squaredNorm(); }

double hermiticity_tolerance(const Matrix& m) {
  return std::max(1e-10 * max_abs(m), 1e-14);
}

bool is_hermitian(const Matrix& m, double tol) {
  if (m.rows() != m.cols()) return false;
  return max_abs(m - m.adjoint()) <= tol;
}

static void require_square(const Matrix& m) {
  if (m.rows() != m.cols())
    throw Error(ErrorCode::ShapeMismatch, "matrix is not square");
}

static void require_finite(const Matrix& m) {
  if (!m.allFinite())
    throw Error(ErrorCode::InvalidArgument, "matrix has non-finite entries");
}

Eigensystem hermitian_eig(const Matrix& m) {
  require_square(m);
  require_finite(m);
  if (!is_hermitian(m, hermiticity_tolerance(m))) {
    std::ostringstream os;
    os << "asymmetry " << max_abs(m - m.adjoint()) << " exceeds tolerance "
       << hermiticity_tolerance(m);
    throw Error(ErrorCode::NotHermitian, os.str());
  }
  Matrix sym = 0.5 * (m + m.adjoint().eval());
  Eigen::SelfAdjointEigenSolver<Matrix> solver(sym);
  if (solver.info() != Eigen::Success)
    throw Error(ErrorCode::InvalidArgument, "eigendecomposition failed");
  return {solver.eigenvalues(), solver.eigenvectors()};
}

Matrix matrix_func(const Matrix& m, const std::function<double(double)>& f) {
  Eigensystem es = hermitian_eig(m);
  RVector fv(es.values.size());
  for (Eigen::Index i = 0; i < es.values.size(); ++i) {
    double y = f(es.values[i]);
    if (!std::isfinite(y)) {
      std::ostringstream os;
      os << "f undefined at eigenvalue " << es.values[i];
      throw Error(ErrorCode::Domain, os.str());
    }
    fv[i] = y;
  }
  Matrix out = es.vectors * fv.asDiagonal() * es.vectors.adjoint();
  return 0.5 * (out + out.adjoint().eval());
}

double op_norm(const Matrix& m) {
  require_finite(m);
  if (m.size() == 0) return 0.0;
  // sqrt of the top eigenvalue of M^dagger M; self-adjoint solve is
  // deterministic and accurate at these sizes
  Eigen::SelfAdjointEigenSolver<Matrix> solver(m.adjoint() * m);
  double top = solver.eigenvalues().maxCoeff();
  return std::sqrt(std::max(top, 0.0));
}

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

static void require_dims(const Matrix& m, Dims dims) {
  require_square(m);
  if (dims.d1 <= 0 || dims.d2 <= 0)
    throw Error(ErrorCode::InvalidArgument, "subsystem dimensions must be positive");
  if (m.rows() != dims.total())
    throw Error(ErrorCode::DimensionMismatch,
                "matrix dimension " + std::to_string(m.rows()) +
                    " != d1*d2 = " + std::to_string(dims.total()));
}

Matrix partial_trace(const Matrix& m, Dims dims, int which) {
  require_dims(m, dims);
  const int d1 = dims.d1, d2 = dims.d2;
  if (which == 2) {
    Matrix out = Matrix::Zero(d1, d1);
    for (int i1 = 0; i1 < d1; ++i1)
      for (int j1 = 0; j1 < d1; ++j1)
        for (int k = 0; k < d2; ++k)
          out(i1, j1) += m(i1 * d2 + k, j1 * d2 + k);
    return out;
  }
  if (which == 1) {
    Matrix out = Matrix::Zero(d2, d2);
    for (int i2 = 0; i2 < d2; ++i2)
      for (int j2 = 0; j2 < d2; ++j2)
        for (int k = 0; k < d1; ++k)
          out(i2, j2) += m(k * d2 + i2, k * d2 + j2);
    return out;
  }
  throw Error(ErrorCode::InvalidArgument, "subsystem id must be 1 or 2");
}

Matrix partial_transpose(const Matrix& m, Dims dims, int which) {
  require_dims(m, dims);
  const int d1 = dims.d1, d2 = dims.d2;
  Matrix out(m.rows(), m.cols());
  for (int i1 = 0; i1 < d1; ++i1)
    for (int i2 = 0; i2 < d2; ++i2)
      for (int j1 = 0; j1 < d1; ++j1)
        for (int j2 = 0; j2 < d2; ++j2) {
          if (which == 2)
            out(i1 * d2 + i2, j1 * d2 + j2) = m(i1 * d2 + j2, j1 * d2 + i2);
          else if (which == 1)
            out(i1 * d2 + i2, j1 * d2 + j2) = m(j1 * d2 + i2, i1 * d2 + j2);
          else
            throw Error(ErrorCode::InvalidArgument, "subsystem id must be 1 or 2");
        }
  return out;
}

std::vector<Matrix> traceless_hermitian_basis(int d) {
  if (d < 2) throw Error(ErrorCode::InvalidArgument, "dimension must be >= 2");
  std::vector<Matrix> basis;
  basis.reserve(static_cast<std::size_t>(d) * d - 1);
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  for (int j = 0; j < d; ++j)
    for (int k = j + 1; k < d; ++k) {
      Matrix g = Matrix::Zero(d, d);
      g(j, k) = inv_sqrt2;
      g(k, j) = inv_sqrt2;
      basis.push_back(g);
    }
  for (int j = 0; j < d; ++j)
    for (int k = j + 1; k < d; ++k) {
      Matrix g = Matrix::Zero(d, d);
      g(j, k) = Complex(0, -inv_sqrt2);
      g(k, j) = Complex(0, inv_sqrt2);
      basis.push_back(g);
    }
  for (int l = 1; l < d; ++l) {
    Matrix g = Matrix::Zero(d, d);
    double norm = 1.0 / std::sqrt(static_cast<double>(l) * (l + 1));
    for (int j = 0; j < l; ++j) g(j, j) = norm;
    g(l, l) = -static_cast<double>(l) * norm;
    basis.push_back(g);
  }
  return basis;
}

}  // namespace qmap
