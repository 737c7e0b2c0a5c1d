/*
 * This code is part of qmap.
 *
 * Licensed under the Apache License, Version 2.0. You may obtain a copy of
 * this license at http://www.apache.org/licenses/LICENSE-2.0.
 */

#include "qmap/entanglement.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "qmap/rng.hpp"

namespace qmap {

DensityMatrix ensemble_to_density(const SeparableEnsemble& ensemble) {
  const auto& dims = ensemble.dims;
  if (dims.d1 <= 0 || dims.d2 <= 0)
    throw Error(ErrorCode::InvalidEnsemble, "ensemble dims must be positive");
  if (ensemble.terms.empty())
    throw Error(ErrorCode::InvalidEnsemble, "ensemble has no terms");
  double total = 0.0;
  for (const ProductTerm& t : ensemble.terms) {
    if (t.p < -1e-12)
      throw Error(ErrorCode::InvalidEnsemble, "negative ensemble weight");
    if (t.a.size() != dims.d1 || t.b.size() != dims.d2)
      throw Error(ErrorCode::InvalidEnsemble, "term vector has wrong dimension");
    if (std::abs(t.a.norm() - 1.0) > 1e-10 || std::abs(t.b.norm() - 1.0) > 1e-10)
      throw Error(ErrorCode::InvalidEnsemble, "term vectors must be unit");
    total += t.p;
  }
  if (std::abs(total - 1.0) > 1e-10)
    throw Error(ErrorCode::InvalidEnsemble, "weights sum to " + std::to_string(total));

  const int d = dims.total();
  Matrix rho = Matrix::Zero(d, d);
  for (const ProductTerm& t : ensemble.terms) {
    if (t.p <= 0.0) continue;
    CVector v = CVector(d);
    for (int i = 0; i < dims.d1; ++i)
      for (int j = 0; j < dims.d2; ++j) v[i * dims.d2 + j] = t.a[i] * t.b[j];
    rho.noalias() += t.p * (v * v.adjoint());
  }
  return validate_density(rho, dims);
}

PptReport ppt_check(const DensityMatrix& sigma) {
  if (!sigma.dims())
    throw Error(ErrorCode::MissingDims, "state carries no bipartite dims");
  Matrix pt = partial_transpose(sigma.matrix(), *sigma.dims(), 2);
  Eigen::SelfAdjointEigenSolver<Matrix> solver(pt, Eigen::EigenvaluesOnly);
  double min_eig = solver.eigenvalues().minCoeff();
  return {min_eig >= -1e-9, min_eig};
}

namespace {

// Euclidean projection onto the probability simplex.
RVector project_simplex(const RVector& v) {
  const Eigen::Index n = v.size();
  std::vector<double> u(v.data(), v.data() + n);
  std::sort(u.begin(), u.end(), std::greater<double>());
  double css = 0.0, tau = 0.0;
  int rho_idx = 0;
  for (Eigen::Index i = 0; i < n; ++i) {
    css += u[i];
    double t = (css - 1.0) / static_cast<double>(i + 1);
    if (u[i] - t > 0.0) {
      rho_idx = static_cast<int>(i + 1);
      tau = t;
    }
  }
  (void)rho_idx;
  return (v.array() - tau).cwiseMax(0.0);
}

CVector random_unit_vector(int d, Prng& rng) {
  CVector v(d);
  for (int i = 0; i < d; ++i) v[i] = rng.cgauss();
  double n = v.norm();
  while (n < 1e-12) {
    for (int i = 0; i < d; ++i) v[i] = rng.cgauss();
    n = v.norm();
  }
  return v / n;
}

// Working state of one optimizer run. The objective
//   f = Tr[s^2] - 2 sum_k p_k c_k + sum_kl p_k p_l Q_kl,
//   c_k = <v_k|s|v_k>, Q_kl = |<v_k|v_l>|^2, v_k = a_k (x) b_k,
// is maintained through the Gram matrix Q so candidate moves cost O(K d).
class EnsembleRun {
 public:
  EnsembleRun(const Matrix& sigma, Dims dims, int terms, Prng& rng)
      : sigma_(sigma), dims_(dims), k_(terms) {
    tr_s2_ = frobenius_sq(sigma);
    a_.resize(k_);
    b_.resize(k_);
    v_.resize(k_);
    for (int k = 0; k < k_; ++k) {
      a_[k] = random_unit_vector(dims.d1, rng);
      b_[k] = random_unit_vector(dims.d2, rng);
      v_[k] = product_vector(a_[k], b_[k]);
    }
    p_ = RVector::Constant(k_, 1.0 / k_);
    rebuild_gram();
  }

  double objective() const {
    return tr_s2_ - 2.0 * p_.dot(c_) + p_.dot(q_ * p_);
  }

  void weight_step(int pg_iters) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(q_, Eigen::EigenvaluesOnly);
    double lip = 2.0 * std::max(es.eigenvalues().maxCoeff(), 1e-12);
    for (int it = 0; it < pg_iters; ++it) {
      RVector grad = 2.0 * (q_ * p_ - c_);
      p_ = project_simplex(p_ - grad / lip);
    }
  }

  // One round of sphere steps over all terms; returns true if any move was
  // accepted.
  bool vector_step(double init_step, int backtrack_limit) {
    bool any = false;
    Matrix w = residual();
    for (int k = 0; k < k_; ++k) {
      if (p_[k] < 1e-12) continue;
      if (try_move(k, true, w, init_step, backtrack_limit)) {
        any = true;
        w = residual();
      }
      if (try_move(k, false, w, init_step, backtrack_limit)) {
        any = true;
        w = residual();
      }
    }
    return any;
  }

  SeparableEnsemble ensemble() const {
    SeparableEnsemble e;
    e.dims = dims_;
    for (int k = 0; k < k_; ++k) {
      if (p_[k] <= 0.0) continue;
      e.terms.push_back({p_[k], a_[k], b_[k]});
    }
    if (e.terms.empty()) e.terms.push_back({1.0, a_[0], b_[0]});
    // compensate dropped zero weights exactly
    double total = 0.0;
    for (auto& t : e.terms) total += t.p;
    for (auto& t : e.terms) t.p /= total;
    return e;
  }

 private:
  CVector product_vector(const CVector& a, const CVector& b) const {
    CVector v(dims_.total());
    for (int i = 0; i < dims_.d1; ++i)
      for (int j = 0; j < dims_.d2; ++j) v[i * dims_.d2 + j] = a[i] * b[j];
    return v;
  }

  void rebuild_gram() {
    q_ = Eigen::MatrixXd(k_, k_);
    c_ = RVector(k_);
    for (int k = 0; k < k_; ++k) {
      c_[k] = (v_[k].adjoint() * sigma_ * v_[k])(0, 0).real();
      for (int l = 0; l <= k; ++l) {
        double o = std::norm(v_[k].dot(v_[l]));
        q_(k, l) = o;
        q_(l, k) = o;
      }
    }
  }

  Matrix residual() const {  // sigma - rho(ensemble)
    Matrix rho = Matrix::Zero(dims_.total(), dims_.total());
    for (int k = 0; k < k_; ++k) {
      if (p_[k] <= 0.0) continue;
      rho.noalias() += p_[k] * (v_[k] * v_[k].adjoint());
    }
    return sigma_ - rho;
  }

  // Objective if v_k were replaced by v (unit); ov_out[l] = |<v_l|v>|^2.
  double candidate_objective(int k, const CVector& v, RVector& ov_out,
                             double& c_out) const {
    ov_out = RVector(k_);
    for (int l = 0; l < k_; ++l) ov_out[l] = std::norm(v_[l].dot(v));
    ov_out[k] = 1.0;
    c_out = (v.adjoint() * sigma_ * v)(0, 0).real();
    double qk_p = q_.row(k).dot(p_);
    double ov_p = ov_out.dot(p_);
    double delta_quad = 2.0 * p_[k] * (ov_p - qk_p);
    double delta_lin = -2.0 * p_[k] * (c_out - c_[k]);
    return objective() + delta_quad + delta_lin;
  }

  void commit(int k, const CVector& a_or_b, bool is_a, const CVector& v,
              const RVector& ov, double c_new) {
    if (is_a)
      a_[k] = a_or_b;
    else
      b_[k] = a_or_b;
    v_[k] = v;
    for (int l = 0; l < k_; ++l) {
      q_(k, l) = ov[l];
      q_(l, k) = ov[l];
    }
    q_(k, k) = 1.0;
    c_[k] = c_new;
  }

  bool try_move(int k, bool is_a, const Matrix& w, double init_step,
                int backtrack_limit) {
    const int d1 = dims_.d1, d2 = dims_.d2;
    // gradient of the objective w.r.t. the conjugate factor vector is
    // -2 p_k G a with G the residual sandwiched by the other factor
    CVector dir;
    if (is_a) {
      Matrix g = Matrix::Zero(d1, d1);
      for (int i = 0; i < d1; ++i)
        for (int j = 0; j < d1; ++j) {
          Complex acc = 0.0;
          for (int x = 0; x < d2; ++x)
            for (int y = 0; y < d2; ++y)
              acc += w(i * d2 + x, j * d2 + y) * std::conj(b_[k][x]) * b_[k][y];
          g(i, j) = acc;
        }
      dir = 2.0 * p_[k] * (g * a_[k]);
    } else {
      Matrix h = Matrix::Zero(d2, d2);
      for (int x = 0; x < d2; ++x)
        for (int y = 0; y < d2; ++y) {
          Complex acc = 0.0;
          for (int i = 0; i < d1; ++i)
            for (int j = 0; j < d1; ++j)
              acc += w(i * d2 + x, j * d2 + y) * std::conj(a_[k][i]) * a_[k][j];
          h(x, y) = acc;
        }
      dir = 2.0 * p_[k] * (h * b_[k]);
    }
    if (dir.norm() <= 1e-14) return false;

    double f0 = objective();
    double eta = init_step;
    const CVector& base = is_a ? a_[k] : b_[k];
    for (int t = 0; t < backtrack_limit; ++t, eta *= 0.5) {
      CVector cand = base + eta * dir;
      double n = cand.norm();
      if (n <= 1e-15) continue;
      cand /= n;
      CVector v = is_a ? product_vector(cand, b_[k]) : product_vector(a_[k], cand);
      RVector ov;
      double c_new;
      double fc = candidate_objective(k, v, ov, c_new);
      if (fc < f0 - 1e-16) {
        commit(k, cand, is_a, v, ov, c_new);
        return true;
      }
    }
    return false;
  }

  const Matrix& sigma_;
  Dims dims_;
  int k_;
  double tr_s2_ = 0.0;
  std::vector<CVector> a_, b_, v_;
  RVector p_;
  Eigen::MatrixXd q_;
  RVector c_;
};

struct RunResult {
  SeparableEnsemble ensemble;
  double hs_value = 0.0;
  long iterations = 0;
  bool stalled = false;
};

RunResult run_once(const Matrix& sigma, Dims dims, int terms,
                   const OptimizerConfig& cfg, Prng& rng) {
  EnsembleRun run(sigma, dims, terms, rng);
  double f = run.objective();
  int stall = 0;
  RunResult out;
  long iter = 0;
  for (iter = 1; iter <= cfg.max_iters; ++iter) {
    run.weight_step(cfg.weight_pg_iters);
    run.vector_step(cfg.vector_step, cfg.backtrack_limit);
    double fn = run.objective();
    if (f - fn < cfg.stall_tol) {
      if (++stall >= cfg.stall_iters) {
        out.stalled = true;
        break;
      }
    } else {
      stall = 0;
    }
    f = fn;
  }
  out.iterations = std::min(iter, static_cast<long>(cfg.max_iters));
  out.ensemble = run.ensemble();
  out.hs_value = f;
  return out;
}

}  // namespace

SeparableEnsemble random_separable_ensemble(Dims dims, int terms,
                                            std::uint64_t seed) {
  if (terms <= 0)
    throw Error(ErrorCode::InvalidArgument, "ensemble needs at least one term");
  Prng rng(seed);
  SeparableEnsemble e;
  e.dims = dims;
  double total = 0.0;
  std::vector<double> w(terms);
  for (double& x : w) {
    x = -std::log(1.0 - rng.uniform());
    total += x;
  }
  for (int k = 0; k < terms; ++k)
    e.terms.push_back({w[k] / total, random_unit_vector(dims.d1, rng),
                       random_unit_vector(dims.d2, rng)});
  return e;
}

EntanglementEstimate estimate_entanglement(const DensityMatrix& sigma,
                                           DistanceKind kind,
                                           const OptimizerConfig& cfg) {
  if (!sigma.dims())
    throw Error(ErrorCode::MissingDims, "state carries no bipartite dims");
  const Dims dims = *sigma.dims();
  const int terms =
      cfg.ensemble_size > 0 ? cfg.ensemble_size : dims.total() * dims.total();
  if (cfg.restarts <= 0)
    throw Error(ErrorCode::InvalidArgument, "restarts must be positive");

  EntanglementEstimate est;
  double best = std::numeric_limits<double>::infinity();
  bool winner_stalled = false;
  long total_iters = 0;
  for (int r = 0; r < cfg.restarts; ++r) {
    Prng rng(cfg.seed, static_cast<std::uint64_t>(r));
    RunResult run = run_once(sigma.matrix(), dims, terms, cfg, rng);
    total_iters += run.iterations;
    double value = run.hs_value;
    if (kind != DistanceKind::HilbertSchmidt)
      value = distance(kind, sigma, ensemble_to_density(run.ensemble));
    if (value < best) {
      best = value;
      est.witness = run.ensemble;
      winner_stalled = run.stalled;
    }
  }
  // the witness certifies the bound: recompute the distance it achieves
  est.upper = distance(kind, sigma, ensemble_to_density(est.witness));
  est.iterations = total_iters;
  est.converged = winner_stalled;
  if (kind == DistanceKind::HilbertSchmidt) {
    PptProjection proj = closest_ppt(sigma);
    est.lower = proj.dist;
    est.converged = est.converged && proj.converged;
  }
  return est;
}

namespace {

// Frobenius projection onto {X Hermitian, X >= 0, Tr X = 1}: spectral
// simplex projection (the set is unitarily invariant, so the projection
// shares the eigenvectors of the input).
Matrix project_state_set(const Matrix& x) {
  Matrix sym = 0.5 * (x + x.adjoint().eval());
  Eigen::SelfAdjointEigenSolver<Matrix> es(sym);
  RVector w = project_simplex(es.eigenvalues());
  return es.eigenvectors() * w.asDiagonal() * es.eigenvectors().adjoint();
}

// Frobenius projection onto {X : X^{T2} >= 0}; the partial transpose is an
// isometry of the Hilbert-Schmidt inner product.
Matrix project_ppt_cone(const Matrix& x, Dims dims) {
  Matrix sym = 0.5 * (x + x.adjoint().eval());
  Matrix pt = partial_transpose(sym, dims, 2);
  Eigen::SelfAdjointEigenSolver<Matrix> es(pt);
  RVector w = es.eigenvalues().cwiseMax(0.0);
  Matrix clipped = es.eigenvectors() * w.asDiagonal() * es.eigenvectors().adjoint();
  return partial_transpose(clipped, dims, 2);
}

double ppt_residual(const Matrix& x, Dims dims) {
  Matrix pt = partial_transpose(x, dims, 2);
  Eigen::SelfAdjointEigenSolver<Matrix> es(pt, Eigen::EigenvaluesOnly);
  return es.eigenvalues().minCoeff();
}

}  // namespace

PptProjection closest_ppt(const DensityMatrix& sigma, double feasibility_tol,
                          long max_iters) {
  if (!sigma.dims())
    throw Error(ErrorCode::MissingDims, "state carries no bipartite dims");
  if (feasibility_tol <= 0.0)
    throw Error(ErrorCode::InvalidArgument, "feasibility tolerance must be positive");
  const Dims dims = *sigma.dims();
  const int d = dims.total();

  Matrix x = sigma.matrix();
  Matrix p = Matrix::Zero(d, d), q = Matrix::Zero(d, d);
  Matrix y = x;
  bool converged = false;
  long it = 0;
  for (it = 1; it <= max_iters; ++it) {
    y = project_state_set(x + p);
    p = x + p - y;
    Matrix x2 = project_ppt_cone(y + q, dims);
    q = y + q - x2;
    double change = max_abs(x2 - x);
    x = x2;
    if (change < 1e-11 && ppt_residual(y, dims) >= -feasibility_tol) {
      converged = true;
      break;
    }
  }
  // end on the state-set side: y is an exact density matrix, PPT within tol
  PptProjection out{validate_density(y, dims), 0.0, std::min(it, max_iters),
                    converged};
  out.dist = d_hs(sigma, out.state);
  return out;
}

E1Report check_e1(DistanceKind kind, int n_samples, std::uint64_t seed,
                  Dims dims, const OptimizerConfig& cfg) {
  if (n_samples <= 0)
    throw Error(ErrorCode::InvalidArgument, "sample count must be positive");
  E1Report report;
  report.samples = n_samples;
  for (int i = 0; i < n_samples; ++i) {
    SeparableEnsemble e = random_separable_ensemble(
        dims, dims.total(), Prng::mix(seed, 2 * static_cast<std::uint64_t>(i)));
    DensityMatrix sigma = ensemble_to_density(e);
    OptimizerConfig run_cfg = cfg;
    run_cfg.seed = Prng::mix(seed, 2 * static_cast<std::uint64_t>(i) + 1);
    EntanglementEstimate est = estimate_entanglement(sigma, kind, run_cfg);
    report.uppers.push_back(est.upper);
    report.max_upper = std::max(report.max_upper, est.upper);
  }
  report.pass = report.max_upper <= report.tolerance;
  return report;
}

E2Report check_e2(DistanceKind kind,
                  const std::vector<std::pair<Matrix, Matrix>>& family,
                  const DensityMatrix& sigma, const OptimizerConfig& cfg) {
  if (!sigma.dims())
    throw Error(ErrorCode::MissingDims, "state carries no bipartite dims");
  const Dims dims = *sigma.dims();
  std::vector<Matrix> a_ops, b_ops;
  for (const auto& [a, b] : family) {
    if (a.rows() != dims.d1 || a.cols() != dims.d1 || b.rows() != dims.d2 ||
        b.cols() != dims.d2)
      throw Error(ErrorCode::NotLocalForm,
                  "family operators do not act factor-wise on the given dims");
    a_ops.push_back(a);
    b_ops.push_back(b);
  }
  KrausChannel channel =
      KrausChannel::from_kraus(local_product_family(a_ops, b_ops));

  E2Report report;
  report.before = estimate_entanglement(sigma, kind, cfg).upper;

  DensityMatrix total = validate_density(channel.apply_raw(sigma.matrix()), dims);
  report.total_after = estimate_entanglement(total, kind, cfg).upper;

  for (const Matrix& v : channel.kraus()) {
    Matrix branch = v * sigma.matrix() * v.adjoint();
    double weight = branch.trace().real();
    if (weight < 1e-10) continue;  // zero-probability branch
    DensityMatrix branch_state = validate_density(branch / weight, dims);
    double value = estimate_entanglement(branch_state, kind, cfg).upper;
    report.branch_weights.push_back(weight);
    report.branch_values.push_back(value);
    report.average_after += weight * value;
  }
  return report;
}

E3Report check_e3(DistanceKind kind, const DensityMatrix& sigma,
                  const Matrix& u1, const Matrix& u2,
                  const OptimizerConfig& cfg) {
  if (!sigma.dims())
    throw Error(ErrorCode::MissingDims, "state carries no bipartite dims");
  const Dims dims = *sigma.dims();
  auto require_unitary = [](const Matrix& u, int d) {
    if (u.rows() != d || u.cols() != d ||
        max_abs(u.adjoint() * u - Matrix::Identity(d, d)) > 1e-10)
      throw Error(ErrorCode::NotUnitary, "local operator is not unitary");
  };
  require_unitary(u1, dims.d1);
  require_unitary(u2, dims.d2);

  Matrix u = kron(u1, u2);
  DensityMatrix rotated =
      validate_density(u * sigma.matrix() * u.adjoint(), dims);

  E3Report report;
  for (int j = 0; j < 5; ++j) {
    DensityMatrix partner = random_density(
        dims.total(), dims.total(),
        Prng::mix(cfg.seed, 100 + static_cast<std::uint64_t>(j)), dims);
    DensityMatrix partner_rot =
        validate_density(u * partner.matrix() * u.adjoint(), dims);
    double gap = std::abs(distance(kind, rotated, partner_rot) -
                          distance(kind, sigma, partner));
    report.distance_gap = std::max(report.distance_gap, gap);
  }
  report.distance_ok = report.distance_gap <= 1e-9;

  double before = estimate_entanglement(sigma, kind, cfg).upper;
  double after = estimate_entanglement(rotated, kind, cfg).upper;
  report.estimate_gap = std::abs(after - before);
  report.estimate_ok = report.estimate_gap <= 2e-3;
  return report;
}

}  // namespace qmap
