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

/// Worst-case Hilbert-Schmidt contraction ratio of a channel:
///   sup over state pairs of  D_HS(Theta sigma, Theta rho) / D_HS(sigma, rho).
/// Computed exactly as the squared top singular value of the superoperator
/// restricted to the traceless Hermitian subspace (every traceless Hermitian
/// direction is proportional to a difference of states).
double exact_max_ratio(const KrausChannel& theta);

struct StatePair {
  DensityMatrix sigma;
  DensityMatrix rho;
  double ratio = 0.0;
};

/// Maximizing state pair from the top singular direction: the traceless
/// Hermitian maximizer is split into its positive and negative parts, each
/// normalized to unit trace. Falls back through lower singular directions
/// and throws DegenerateDirection only if every one has a vanishing part.
StatePair extract_state_pair(const KrausChannel& theta);

struct SearchReport {
  double best_ratio = 0.0;
  KrausChannel channel;
  DensityMatrix sigma;
  DensityMatrix rho;
  double bound = 0.0;  // channel_norm of the reported channel
  long samples_evaluated = 0;
  std::uint64_t seed = 0;
  std::vector<std::pair<long, double>> history;  // (sample index, ratio) improvements
};

/// Stochastic search over channel space for Hilbert-Schmidt expansion.
/// Each sample is scored by its exact worst-case ratio; the proposal mix is
/// hill-climbing (Gaussian perturbation of the stacked Kraus isometry,
/// re-orthonormalized, step 0.05 halved after 20 consecutive failures) with
/// periodic fresh random channels. Deterministic per seed.
SearchReport search_violations(int d, int k, long budget, std::uint64_t seed,
                               const std::optional<KrausChannel>& warm_start = {});

}  // namespace qmap
