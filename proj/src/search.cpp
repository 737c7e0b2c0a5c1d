/*
 * This code is part of qmap.
 *
 * Licensed under the Apache License, Version 2.0. You may obtain a copy of
 * this license at http://www.apache.org/licenses/LICENSE-2.0.
 */

#include "qmap/search.hpp"

#include <cmath>

#include "qmap/rng.hpp"

namespace qmap {

namespace {

// Real matrix of the channel restricted to traceless Hermitian space:
// R_ab = <G_a, Theta(G_b)>. Trace preservation keeps the субspace invariant.
Eigen::MatrixXd traceless_restriction(const KrausChannel& theta) {
  const int d = theta.in_dim();
  std::vector<Matrix> basis = traceless_hermitian_basis(d);
  const int n = static_cast<int>(basis.size());
  SuperOperator sup = to_superoperator(theta);
  Eigen::MatrixXd r(n, n);
  for (int b = 0; b < n; ++b) {
    Matrix img = sup.apply(basis[b]);
    for (int a = 0; a < n; ++a)
      r(a, b) = (basis[a] * img).trace().real();
  }
  return r;
}

}  // namespace

double exact_max_ratio(const KrausChannel& theta) {
  if (theta.in_dim() != theta.out_dim())
    throw Error(ErrorCode::DimensionMismatch,
                "worst-case ratio needs equal input and output dimensions");
  Eigen::MatrixXd r = traceless_restriction(theta);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(r.transpose() * r,
                                                    Eigen::EigenvaluesOnly);
  return std::max(es.eigenvalues().maxCoeff(), 0.0);
}

StatePair extract_state_pair(const KrausChannel& theta) {
  if (theta.in_dim() != theta.out_dim())
    throw Error(ErrorCode::DimensionMismatch,
                "worst-case ratio needs equal input and output dimensions");
  const int d = theta.in_dim();
  std::vector<Matrix> basis = traceless_hermitian_basis(d);
  Eigen::MatrixXd r = traceless_restriction(theta);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(r.transpose() * r);

  // descending through the singular directions
  for (Eigen::Index idx = es.eigenvalues().size() - 1; idx >= 0; --idx) {
    Eigen::VectorXd v = es.eigenvectors().col(idx);
    Matrix h = Matrix::Zero(d, d);
    for (int a = 0; a < static_cast<int>(basis.size()); ++a) h += v[a] * basis[a];
    Eigensystem eh = hermitian_eig(h);
    Matrix pos = Matrix::Zero(d, d), neg = Matrix::Zero(d, d);
    for (Eigen::Index i = 0; i < eh.values.size(); ++i) {
      Matrix proj = eh.vectors.col(i) * eh.vectors.col(i).adjoint();
      if (eh.values[i] > 0.0)
        pos += eh.values[i] * proj;
      else
        neg -= eh.values[i] * proj;
    }
    double tp = pos.trace().real(), tn = neg.trace().real();
    if (tp < 1e-12 || tn < 1e-12) continue;
    StatePair pair{validate_density(pos / tp), validate_density(neg / tn), 0.0};
    pair.ratio = d_hs(theta.apply(pair.sigma), theta.apply(pair.rho)) /
                 d_hs(pair.sigma, pair.rho);
    return pair;
  }
  throw Error(ErrorCode::DegenerateDirection,
              "every singular direction has a vanishing positive or negative part");
}

SearchReport search_violations(int d, int k, long budget, std::uint64_t seed,
                               const std::optional<KrausChannel>& warm_start) {
  if (d <= 0 || k <= 0 || budget < 1)
    throw Error(ErrorCode::InvalidArgument,
                "need positive dimension, Kraus count and budget");
  if (warm_start && (warm_start->in_dim() != d || warm_start->out_dim() != d))
    throw Error(ErrorCode::DimensionMismatch, "warm start dimension differs");

  Prng rng(seed);
  auto fresh = [&]() {
    Matrix g(d * k, d);
    for (int i = 0; i < d * k; ++i)
      for (int j = 0; j < d; ++j) g(i, j) = rng.cgauss();
    Eigen::HouseholderQR<Matrix> qr(g);
    Matrix q = qr.householderQ() * Matrix::Identity(d * k, d);
    Matrix rr = qr.matrixQR().topRows(d).triangularView<Eigen::Upper>();
    for (int j = 0; j < d; ++j) {
      Complex rjj = rr(j, j);
      q.col(j) *= std::abs(rjj) > 0.0 ? rjj / std::abs(rjj) : Complex(1, 0);
    }
    std::vector<Matrix> ops;
    for (int i = 0; i < k; ++i) ops.push_back(q.block(i * d, 0, d, d));
    return KrausChannel::from_kraus(std::move(ops));
  };
  auto perturb = [&](const KrausChannel& base, double step) {
    const int rows = d * static_cast<int>(base.kraus().size());
    Matrix stacked(rows, d);
    for (std::size_t i = 0; i < base.kraus().size(); ++i)
      stacked.block(static_cast<int>(i) * d, 0, d, d) = base.kraus()[i];
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < d; ++j) stacked(i, j) += step * rng.cgauss();
    Eigen::HouseholderQR<Matrix> qr(stacked);
    Matrix q = qr.householderQ() * Matrix::Identity(rows, d);
    Matrix rr = qr.matrixQR().topRows(d).triangularView<Eigen::Upper>();
    for (int j = 0; j < d; ++j) {
      Complex rjj = rr(j, j);
      q.col(j) *= std::abs(rjj) > 0.0 ? rjj / std::abs(rjj) : Complex(1, 0);
    }
    std::vector<Matrix> ops;
    for (std::size_t i = 0; i < base.kraus().size(); ++i)
      ops.push_back(q.block(static_cast<int>(i) * d, 0, d, d));
    return KrausChannel::from_kraus(std::move(ops));
  };

  KrausChannel best = warm_start ? *warm_start : fresh();
  double best_score = exact_max_ratio(best);
  std::vector<std::pair<long, double>> history{{0, best_score}};
  long evaluated = 1;

  double step = 0.05;
  int failures = 0;
  for (long s = 1; s < budget; ++s) {
    KrausChannel candidate = (s % 25 == 0) ? fresh() : perturb(best, step);
    double score = exact_max_ratio(candidate);
    ++evaluated;
    if (score > best_score) {
      best = candidate;
      best_score = score;
      history.emplace_back(s, score);
      failures = 0;
    } else if (++failures >= 20) {
      step = std::max(0.5 * step, 1e-4);
      failures = 0;
    }
  }

  StatePair pair = extract_state_pair(best);
  SearchReport report{pair.ratio,  std::move(best), std::move(pair.sigma),
                      std::move(pair.rho), 0.0, evaluated, seed,
                      std::move(history)};
  report.bound = channel_norm(report.channel);
  return report;
}

}  // namespace qmap
