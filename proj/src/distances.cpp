/*
 * This code is part of qmap.
 *
 * Licensed under the Apache License, Version 2.0. You may obtain a copy of
 * this license at http://www.apache.org/licenses/LICENSE-2.0.
 */

#include "qmap/distances.hpp"

#include <cmath>
#include <limits>
#include <sstream>

namespace qmap {

namespace {

constexpr double kSupportThreshold = 1e-12;

void require_equal_dims(const DensityMatrix& a, const DensityMatrix& b) {
  if (a.dim() != b.dim())
    throw Error(ErrorCode::DimensionMismatch,
                "states have dimensions " + std::to_string(a.dim()) + " and " +
                    std::to_string(b.dim()));
}

}  // namespace

const char* distance_kind_name(DistanceKind kind) {
  switch (kind) {
    case DistanceKind::HilbertSchmidt: return "hilbert_schmidt";
    case DistanceKind::Trace: return "trace";
    case DistanceKind::Bures: return "bures";
    case DistanceKind::RelativeEntropy: return "relative_entropy";
  }
  return "unknown";
}

DistanceKind distance_kind_from_name(const std::string& name) {
  if (name == "hilbert_schmidt") return DistanceKind::HilbertSchmidt;
  if (name == "trace") return DistanceKind::Trace;
  if (name == "bures") return DistanceKind::Bures;
  if (name == "relative_entropy") return DistanceKind::RelativeEntropy;
  throw Error(ErrorCode::InvalidArgument, "unknown distance kind '" + name + "'");
}

double d_hs(const DensityMatrix& sigma, const DensityMatrix& rho) {
  require_equal_dims(sigma, rho);
  return frobenius_sq(sigma.matrix() - rho.matrix());
}

double trace_distance(const DensityMatrix& sigma, const DensityMatrix& rho) {
  require_equal_dims(sigma, rho);
  Eigensystem es = hermitian_eig(sigma.matrix() - rho.matrix());
  return 0.5 * es.values.cwiseAbs().sum();
}

double bures(const DensityMatrix& sigma, const DensityMatrix& rho) {
  require_equal_dims(sigma, rho);
  auto clipped_sqrt = [](double x) { return std::sqrt(std::max(x, 0.0)); };
  Matrix root_sigma = matrix_func(sigma.matrix(), clipped_sqrt);
  Matrix inner = root_sigma * rho.matrix() * root_sigma;
  Eigensystem es = hermitian_eig(inner);
  double sqrt_f = 0.0;
  for (Eigen::Index i = 0; i < es.values.size(); ++i)
    sqrt_f += clipped_sqrt(es.values[i]);
  return 2.0 * (1.0 - sqrt_f);
}

double rel_entropy(const DensityMatrix& sigma, const DensityMatrix& rho) {
  require_equal_dims(sigma, rho);
  Eigensystem s = hermitian_eig(sigma.matrix());
  Eigensystem r = hermitian_eig(rho.matrix());

  // support(sigma) must lie inside support(rho)
  double null_mass = 0.0;
  for (Eigen::Index j = 0; j < r.values.size(); ++j) {
    if (r.values[j] > kSupportThreshold) continue;
    CVector v = r.vectors.col(j);
    null_mass += (v.adjoint() * sigma.matrix() * v)(0, 0).real();
  }
  if (null_mass > 1e-10) return std::numeric_limits<double>::infinity();

  double value = 0.0;
  for (Eigen::Index i = 0; i < s.values.size(); ++i) {
    double li = s.values[i];
    if (li <= kSupportThreshold) continue;  // 0 log 0 = 0
    value += li * std::log(li);
    for (Eigen::Index j = 0; j < r.values.size(); ++j) {
      double mj = r.values[j];
      if (mj <= kSupportThreshold) continue;
      double overlap = std::norm(r.vectors.col(j).dot(s.vectors.col(i)));
      value -= li * overlap * std::log(mj);
    }
  }
  return value;
}

double distance(DistanceKind kind, const DensityMatrix& sigma,
                const DensityMatrix& rho) {
  switch (kind) {
    case DistanceKind::HilbertSchmidt: return d_hs(sigma, rho);
    case DistanceKind::Trace: return trace_distance(sigma, rho);
    case DistanceKind::Bures: return bures(sigma, rho);
    case DistanceKind::RelativeEntropy: return rel_entropy(sigma, rho);
  }
  throw Error(ErrorCode::InvalidArgument, "unknown distance kind");
}

double contraction_ratio(DistanceKind kind, const KrausChannel& theta,
                         const DensityMatrix& sigma, const DensityMatrix& rho) {
  double before = distance(kind, sigma, rho);
  if (!(before > 1e-12))
    throw Error(ErrorCode::DegenerateInput,
                "distance before the channel is below the degeneracy threshold");
  double after = distance(kind, theta.apply(sigma), theta.apply(rho));
  return after / before;
}

BoundReport make_bound_report(double lhs, double rhs) {
  BoundReport report;
  report.lhs = lhs;
  report.rhs = rhs;
  report.ratio = rhs != 0.0 ? lhs / rhs : (lhs == 0.0 ? 1.0 : std::numeric_limits<double>::infinity());
  report.holds = lhs <= rhs + 1e-9 * std::max(1.0, rhs);
  report.slack = rhs - lhs;
  return report;
}

BoundReport kadison_bound_check(const KrausChannel& theta,
                                const DensityMatrix& sigma,
                                const DensityMatrix& rho) {
  double before = d_hs(sigma, rho);
  double after = d_hs(theta.apply(sigma), theta.apply(rho));
  return make_bound_report(after, channel_norm(theta) * before);
}

double convex_square(double x) { return x * x; }

double convex_xlogx(double x) {
  if (x <= 0.0) return 0.0;
  return x * std::log(x);
}

namespace {

// Shared body once Phi(A) is available; checks ||Phi(I)|| <= 1 and A PSD.
BoundReport lindblad_body(const Matrix& image_of_identity, const Matrix& a,
                          const Matrix& phi_a,
                          const std::function<double(double)>& f) {
  double norm = op_norm(image_of_identity);
  if (norm > 1.0 + 1e-9) {
    std::ostringstream os;
    os << "map norm " << norm << " exceeds 1";
    throw Error(ErrorCode::NormExceedsOne, os.str());
  }
  Eigensystem ea = hermitian_eig(a);  // throws NotHermitian for bad operands
  if (ea.values.minCoeff() < -1e-9 * std::max(1.0, max_abs(a)))
    throw Error(ErrorCode::NotPositiveOperand,
                "operand has negative eigenvalues");
  double rhs = 0.0;
  for (Eigen::Index i = 0; i < ea.values.size(); ++i)
    rhs += f(std::max(ea.values[i], 0.0));
  Eigensystem ei = hermitian_eig(phi_a);
  double lhs = 0.0;
  for (Eigen::Index i = 0; i < ei.values.size(); ++i)
    lhs += f(std::max(ei.values[i], 0.0));
  return make_bound_report(lhs, rhs);
}

}  // namespace

BoundReport lindblad_check(const KrausChannel& phi, const Matrix& a,
                           const std::function<double(double)>& f) {
  if (a.rows() != phi.in_dim() || a.cols() != phi.in_dim())
    throw Error(ErrorCode::DimensionMismatch, "operand does not match channel");
  return lindblad_body(phi.image_of_identity(), a, phi.apply_raw(a), f);
}

BoundReport lindblad_check(const SuperOperator& phi, const Matrix& a,
                           const std::function<double(double)>& f) {
  if (a.rows() != phi.in_dim || a.cols() != phi.in_dim)
    throw Error(ErrorCode::DimensionMismatch, "operand does not match superoperator");
  return lindblad_body(phi.image_of_identity(), a, phi.apply(a), f);
}

}  // namespace qmap
