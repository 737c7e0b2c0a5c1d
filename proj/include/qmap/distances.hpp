/*
 * This code is part of qmap.
 *
 * Licensed under the Apache License, Version 2.0. You may obtain a copy of
 * this license at http://www.apache.org/licenses/LICENSE-2.0.
 */

#pragma once

#include <functional>
#include <string>

#include "qmap/channels.hpp"

namespace qmap {

enum class DistanceKind {
  HilbertSchmidt,
  Trace,
  Bures,
  RelativeEntropy,
};

const char* distance_kind_name(DistanceKind kind);
DistanceKind distance_kind_from_name(const std::string& name);

/// Hilbert-Schmidt distance Tr[(sigma - rho)^2] (the squared Frobenius
/// distance; not a metric, but symmetric, nonnegative and zero iff equal).
double d_hs(const DensityMatrix& sigma, const DensityMatrix& rho);

/// (1/2) sum |lambda_i(sigma - rho)|, in [0, 1].
double trace_distance(const DensityMatrix& sigma, const DensityMatrix& rho);

/// 2 (1 - sqrt(F)) with fidelity F = (Tr sqrt(sqrt(sigma) rho sqrt(sigma)))^2.
/// Negative eigenvalues of inner products are clipped at 0 before sqrt.
double bures(const DensityMatrix& sigma, const DensityMatrix& rho);

/// Tr[sigma (log sigma - log rho)], natural log, with 0 log 0 := 0.
/// Returns +infinity when supp(sigma) is not contained in supp(rho)
/// (eigenvalue threshold 1e-12). Infinity is a value, not an error.
double rel_entropy(const DensityMatrix& sigma, const DensityMatrix& rho);

double distance(DistanceKind kind, const DensityMatrix& sigma,
                const DensityMatrix& rho);

/// D(Theta sigma, Theta rho) / D(sigma, rho). Throws DegenerateInput when
/// the denominator is <= 1e-12, DimensionMismatch on shape errors.
double contraction_ratio(DistanceKind kind, const KrausChannel& theta,
                         const DensityMatrix& sigma, const DensityMatrix& rho);

/// Outcome of an operator-inequality check. holds <=> lhs <= rhs +
/// 1e-9 * max(1, rhs); ratio is lhs/rhs (bound utilization, 1 = attained);
/// slack is rhs - lhs.
struct BoundReport {
  double lhs = 0.0;
  double rhs = 0.0;
  double ratio = 0.0;
  bool holds = false;
  double slack = 0.0;
};

BoundReport make_bound_report(double lhs, double rhs);

/// D_HS(Theta sigma, Theta rho) vs ||Theta|| * D_HS(sigma, rho).
BoundReport kadison_bound_check(const KrausChannel& theta,
                                const DensityMatrix& sigma,
                                const DensityMatrix& rho);

/// Tr[f(Phi A)] vs Tr[f(A)] for a positive trace-preserving map with
/// ||Phi|| <= 1 and a PSD operand A; f convex with f(0) = 0. The norm
/// precondition is checked through Phi(I) and its violation is an error
/// (NormExceedsOne); positivity of a raw superoperator map is
/// caller-asserted. Throws NotPositiveOperand if A is not PSD.
BoundReport lindblad_check(const KrausChannel& phi, const Matrix& a,
                           const std::function<double(double)>& f);
BoundReport lindblad_check(const SuperOperator& phi, const Matrix& a,
                           const std::function<double(double)>& f);

/// The two convex functions used by the built-in checks: x^2 and x log x
/// (0 log 0 := 0, negative roundoff eigenvalues clipped to 0).
double convex_square(double x);
double convex_xlogx(double x);

}  // namespace qmap
