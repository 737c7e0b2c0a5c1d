/*
 * This code is part of qmap.
 *
 * Licensed under the Apache License, Version 2.0. You may obtain a copy of
 * this license at http://www.apache.org/licenses/LICENSE-2.0.
 */

#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "qmap/distances.hpp"

namespace qmap {

/// Convex combination of pure product states: weights on the simplex, unit
/// vectors on each factor.
struct ProductTerm {
  double p = 0.0;
  CVector a;
  CVector b;
};

struct SeparableEnsemble {
  Dims dims;
  std::vector<ProductTerm> terms;
};

/// sum_k p_k |a_k><a_k| (x) |b_k><b_k|. Throws InvalidEnsemble if the
/// weights or vectors violate the ensemble invariants.
DensityMatrix ensemble_to_density(const SeparableEnsemble& ensemble);

struct PptReport {
  bool ppt = false;
  double min_eigenvalue = 0.0;  // of sigma^{T2}
};

/// Positivity of the partial transpose; a separability oracle at (2,2) and
/// (2,3). Throws MissingDims when the state carries no bipartite dims.
PptReport ppt_check(const DensityMatrix& sigma);

struct OptimizerConfig {
  int ensemble_size = 0;        // 0 = (d1*d2)^2, the Caratheodory-type default
  int restarts = 20;
  int max_iters = 10000;
  int stall_iters = 50;         // stop after this many sub-tol improvements
  double stall_tol = 1e-10;
  int weight_pg_iters = 60;     // projected-gradient passes per outer round
  double vector_step = 4.0;     // initial backtracking step on the spheres
  int backtrack_limit = 40;
  std::uint64_t seed = 0;
};

struct EntanglementEstimate {
  double upper = 0.0;
  std::optional<double> lower;
  SeparableEnsemble witness;
  long iterations = 0;
  bool converged = false;
};

/// Distance from sigma to the separable set: upper bound from a multi-start
/// alternating ensemble optimizer (the witness certifies it), lower bound
/// from the Hilbert-Schmidt projection onto the PPT set (PPT contains the
/// separable set). Non-HS kinds evaluate the requested distance on the
/// optimizer's witnesses and return the upper bound only.
EntanglementEstimate estimate_entanglement(const DensityMatrix& sigma,
                                           DistanceKind kind,
                                           const OptimizerConfig& cfg = {});

struct PptProjection {
  DensityMatrix state;
  double dist = 0.0;  // d_hs(sigma, state)
  long iterations = 0;
  bool converged = false;
};

/// Dykstra alternating projections between the density-matrix set and
/// {X : X^{T2} >= 0} in Hilbert-Schmidt geometry. Returns the nearest PPT
/// state; on hitting the iteration limit returns the best iterate with
/// converged = false.
PptProjection closest_ppt(const DensityMatrix& sigma,
                          double feasibility_tol = 1e-8,
                          long max_iters = 50000);

struct E1Report {
  int samples = 0;
  double max_upper = 0.0;
  double tolerance = 1e-5;
  bool pass = false;
  std::vector<double> uppers;
};

/// Estimates the measure on random separable states; all values should
/// vanish within tolerance.
E1Report check_e1(DistanceKind kind, int n_samples, std::uint64_t seed,
                  Dims dims = {2, 2}, const OptimizerConfig& cfg = {});

struct E2Report {
  double before = 0.0;
  double total_after = 0.0;
  double average_after = 0.0;
  std::vector<double> branch_weights;
  std::vector<double> branch_values;
};

/// Evaluates both monotonicity conditions for a local Kraus family
/// {A_i (x) B_i} through the estimator. Reports only; the conditions are
/// not asserted. Branch weights below 1e-10 are skipped in the average.
E2Report check_e2(DistanceKind kind,
                  const std::vector<std::pair<Matrix, Matrix>>& family,
                  const DensityMatrix& sigma, const OptimizerConfig& cfg = {});

struct E3Report {
  double distance_gap = 0.0;   // worst |d(rotated pair) - d(pair)|
  double estimate_gap = 0.0;   // |estimate(rotated) - estimate(sigma)|
  bool distance_ok = false;    // gap <= 1e-9
  bool estimate_ok = false;    // gap <= 2e-3 (matched-seed runs)
};

/// Local-basis invariance: the distance-level identity is asserted at 1e-9
/// over sampled partner states; the estimator-level equality is checked at
/// the matched-seed tolerance. Throws NotUnitary for non-unitary inputs.
E3Report check_e3(DistanceKind kind, const DensityMatrix& sigma,
                  const Matrix& u1, const Matrix& u2,
                  const OptimizerConfig& cfg = {});

/// Random separable state built from a seeded random ensemble of
/// `terms` product states (Dirichlet(1) weights, Haar-like unit vectors).
SeparableEnsemble random_separable_ensemble(Dims dims, int terms,
                                            std::uint64_t seed);

}  // namespace qmap
