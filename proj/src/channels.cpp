/*
 * This code is part of qmap.
 *
 * Licensed under the Apache License, Version 2.0. You may obtain a copy of
 * this license at http://www.apache.org/licenses/LICENSE-2.0.
 */

#include "qmap/channels.hpp"

#include <cmath>
#include <sstream>

#include "qmap/rng.hpp"

namespace qmap {

KrausChannel KrausChannel::from_kraus(std::vector<Matrix> ops) {
  if (ops.empty())
    throw Error(ErrorCode::InvalidArgument, "Kraus list is empty");
  const Eigen::Index out = ops.front().rows();
  const Eigen::Index in = ops.front().cols();
  for (const Matrix& v : ops) {
    if (v.rows() != out || v.cols() != in)
      throw Error(ErrorCode::ShapeMismatch, "Kraus operators differ in shape");
    if (!v.allFinite())
      throw Error(ErrorCode::InvalidArgument, "Kraus operator has non-finite entries");
  }
  Matrix completeness = Matrix::Zero(in, in);
  for (const Matrix& v : ops) completeness += v.adjoint() * v;
  double dev = max_abs(completeness - Matrix::Identity(in, in));
  if (dev > 1e-9) {
    std::ostringstream os;
    os << "sum V^dagger V deviates from identity by " << dev;
    throw Error(ErrorCode::NotTracePreserving, os.str());
  }
  return KrausChannel(static_cast<int>(in), static_cast<int>(out), std::move(ops));
}

Matrix KrausChannel::apply_raw(const Matrix& x) const {
  if (x.rows() != in_dim_ || x.cols() != in_dim_)
    throw Error(ErrorCode::DimensionMismatch,
                "operand dimension " + std::to_string(x.rows()) +
                    " != channel input dimension " + std::to_string(in_dim_));
  Matrix out = Matrix::Zero(out_dim_, out_dim_);
  for (const Matrix& v : kraus_) out += v * x * v.adjoint();
  return out;
}

DensityMatrix KrausChannel::apply(const DensityMatrix& sigma) const {
  return validate_density(apply_raw(sigma.matrix()));
}

Matrix KrausChannel::image_of_identity() const {
  Matrix out = Matrix::Zero(out_dim_, out_dim_);
  for (const Matrix& v : kraus_) out += v * v.adjoint();
  return out;
}

Matrix SuperOperator::apply(const Matrix& x) const {
  if (x.rows() != in_dim || x.cols() != in_dim)
    throw Error(ErrorCode::DimensionMismatch, "operand does not match superoperator");
  Eigen::Map<const CVector> vec(x.data(), x.size());
  CVector out = mat * vec;
  return Eigen::Map<const Matrix>(out.data(), out_dim, out_dim);
}

Matrix SuperOperator::image_of_identity() const {
  return apply(Matrix::Identity(in_dim, in_dim));
}

Matrix choi(const KrausChannel& theta) {
  const int n = theta.in_dim();
  const int m = theta.out_dim();
  Matrix c = Matrix::Zero(n * m, n * m);
  for (int k = 0; k < n; ++k)
    for (int l = 0; l < n; ++l) {
      Matrix e = Matrix::Zero(n, n);
      e(k, l) = 1.0;
      Matrix img = theta.apply_raw(e);
      // E_kl (x) Theta(E_kl): block (k, l) of the output
      c.block(k * m, l * m, m, m) += img;
    }
  return c;
}

CpReport is_cp(const Matrix& choi_matrix) {
  if (!is_hermitian(choi_matrix, hermiticity_tolerance(choi_matrix)))
    throw Error(ErrorCode::NotHermitian, "Choi matrix is not Hermitian");
  if (choi_matrix.size() == 0) return {true, 0.0};
  Matrix sym = 0.5 * (choi_matrix + choi_matrix.adjoint().eval());
  Eigen::SelfAdjointEigenSolver<Matrix> solver(sym, Eigen::EigenvaluesOnly);
  double min_eig = solver.eigenvalues().minCoeff();
  return {min_eig >= -1e-9 * std::max(1.0, max_abs(choi_matrix)), min_eig};
}

double channel_norm(const KrausChannel& theta) {
  return op_norm(theta.image_of_identity());
}

bool is_unital(const KrausChannel& theta) {
  Matrix img = theta.image_of_identity();
  return max_abs(img - Matrix::Identity(img.rows(), img.cols())) <= 1e-9;
}

KrausChannel identity_channel(int d) {
  if (d <= 0) throw Error(ErrorCode::InvalidArgument, "dimension must be positive");
  return KrausChannel::from_kraus({Matrix::Identity(d, d)});
}

KrausChannel depolarizing_channel(int d, double lambda) {
  if (d <= 0) throw Error(ErrorCode::InvalidArgument, "dimension must be positive");
  if (lambda < 0.0 || lambda > 1.0)
    throw Error(ErrorCode::InvalidArgument, "depolarizing parameter must lie in [0, 1]");
  std::vector<Matrix> ops;
  ops.push_back(std::sqrt(lambda) * Matrix::Identity(d, d));
  double w = std::sqrt((1.0 - lambda) / d);
  if (w > 0.0) {
    for (int j = 0; j < d; ++j)
      for (int k = 0; k < d; ++k) {
        Matrix e = Matrix::Zero(d, d);
        e(j, k) = w;
        ops.push_back(e);
      }
  }
  return KrausChannel::from_kraus(std::move(ops));
}

KrausChannel amplitude_damping_channel(double gamma) {
  if (gamma < 0.0 || gamma > 1.0)
    throw Error(ErrorCode::InvalidArgument, "damping parameter must lie in [0, 1]");
  Matrix k0 = Matrix::Zero(2, 2), k1 = Matrix::Zero(2, 2);
  k0(0, 0) = 1.0;
  k0(1, 1) = std::sqrt(1.0 - gamma);
  k1(0, 1) = std::sqrt(gamma);
  return KrausChannel::from_kraus({k0, k1});
}

// Haar isometry C^cols -> C^rows via QR of a Ginibre matrix, R-diagonal
// phases absorbed so the distribution is exactly Haar.
static Matrix haar_isometry(int rows, int cols, Prng& rng) {
  Matrix g(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) g(i, j) = rng.cgauss();
  Eigen::HouseholderQR<Matrix> qr(g);
  Matrix q = qr.householderQ() * Matrix::Identity(rows, cols);
  Matrix r = qr.matrixQR().topRows(cols).triangularView<Eigen::Upper>();
  for (int j = 0; j < cols; ++j) {
    Complex rjj = r(j, j);
    Complex phase = std::abs(rjj) > 0.0 ? rjj / std::abs(rjj) : Complex(1, 0);
    q.col(j) *= phase;
  }
  return q;
}

KrausChannel random_channel(int d, int k, std::uint64_t seed) {
  if (d <= 0 || k <= 0)
    throw Error(ErrorCode::InvalidArgument, "dimension and Kraus count must be positive");
  Prng rng(seed);
  Matrix v = haar_isometry(d * k, d, rng);
  std::vector<Matrix> ops;
  ops.reserve(k);
  for (int i = 0; i < k; ++i) ops.push_back(v.block(i * d, 0, d, d));
  return KrausChannel::from_kraus(std::move(ops));
}

Matrix random_unitary(int d, std::uint64_t seed) {
  if (d <= 0) throw Error(ErrorCode::InvalidArgument, "dimension must be positive");
  Prng rng(seed);
  return haar_isometry(d, d, rng);
}

KrausChannel random_mixed_unitary_channel(int d, int k, std::uint64_t seed) {
  if (d <= 0 || k <= 0)
    throw Error(ErrorCode::InvalidArgument, "dimension and unitary count must be positive");
  Prng rng(seed);
  std::vector<double> w(k);
  double total = 0.0;
  for (double& x : w) {
    x = -std::log(1.0 - rng.uniform());  // Dirichlet(1,...,1) weights
    total += x;
  }
  std::vector<Matrix> ops;
  ops.reserve(k);
  for (int i = 0; i < k; ++i)
    ops.push_back(std::sqrt(w[i] / total) * haar_isometry(d, d, rng));
  return KrausChannel::from_kraus(std::move(ops));
}

ExpansionExample hs_expansion_example() {
  Matrix a = Matrix::Zero(4, 4), b = Matrix::Zero(4, 4);
  a(1, 0) = 1.0;
  a(3, 2) = 1.0;
  b(1, 1) = 1.0;
  b(3, 3) = 1.0;
  return {KrausChannel::from_kraus({a, b}), hs_example_sigma(), hs_example_rho()};
}

std::vector<Matrix> local_product_family(const std::vector<Matrix>& a_ops,
                                         const std::vector<Matrix>& b_ops) {
  if (a_ops.size() != b_ops.size())
    throw Error(ErrorCode::ShapeMismatch, "local operator lists differ in length");
  if (a_ops.empty())
    throw Error(ErrorCode::InvalidArgument, "local operator lists are empty");
  std::vector<Matrix> out;
  out.reserve(a_ops.size());
  for (std::size_t i = 0; i < a_ops.size(); ++i) {
    if (a_ops[i].rows() != a_ops.front().rows() ||
        a_ops[i].cols() != a_ops.front().cols() ||
        b_ops[i].rows() != b_ops.front().rows() ||
        b_ops[i].cols() != b_ops.front().cols())
      throw Error(ErrorCode::ShapeMismatch, "local operators differ in shape");
    out.push_back(kron(a_ops[i], b_ops[i]));
  }
  return out;
}

SuperOperator to_superoperator(const KrausChannel& theta) {
  const int n = theta.in_dim();
  const int m = theta.out_dim();
  Matrix s = Matrix::Zero(m * m, n * n);
  for (const Matrix& v : theta.kraus()) s += kron(v.conjugate(), v);
  return {n, m, std::move(s)};
}

KrausChannel compose(const KrausChannel& second, const KrausChannel& first) {
  if (first.out_dim() != second.in_dim())
    throw Error(ErrorCode::DimensionMismatch,
                "inner dimensions of composed channels do not match");
  std::vector<Matrix> ops;
  ops.reserve(first.kraus().size() * second.kraus().size());
  for (const Matrix& w : second.kraus())
    for (const Matrix& v : first.kraus()) ops.push_back(w * v);
  return KrausChannel::from_kraus(std::move(ops));
}

}  // namespace qmap
