/*
 * This code is part of qmap.
 *
 * Licensed under the Apache License, Version 2.0. You may obtain a copy of
 * this license at http://www.apache.org/licenses/LICENSE-2.0.
 */

#pragma once

#include <cstdint>
#include <optional>

#include "qmap/linalg.hpp"

namespace qmap {

/// A validated density matrix: Hermitian within 1e-10 * ||.||_maxabs,
/// minimum eigenvalue >= -1e-9, unit trace within 1e-9. The stored matrix is
/// the symmetrized input. Optionally carries bipartite dimensions.
class DensityMatrix {
 public:
  const Matrix& matrix() const { return mat_; }
  int dim() const { return static_cast<int>(mat_.rows()); }
  const std::optional<Dims>& dims() const { return dims_; }

  DensityMatrix with_dims(Dims dims) const;

  friend DensityMatrix validate_density(const Matrix& m,
                                        std::optional<Dims> dims);

 private:
  DensityMatrix(Matrix m, std::optional<Dims> dims)
      : mat_(std::move(m)), dims_(dims) {}

  Matrix mat_;
  std::optional<Dims> dims_;
};

/// Checks all three state invariants and wraps the (symmetrized) matrix.
/// Throws NotHermitian / NotPositive / TraceNotOne / DimensionMismatch.
DensityMatrix validate_density(const Matrix& m, std::optional<Dims> dims = {});

DensityMatrix pure_state(const CVector& psi, std::optional<Dims> dims = {});

/// |Phi+><Phi+| with |Phi+> = (|00> + |11>)/sqrt(2), dims (2,2).
DensityMatrix bell_state();

/// p * bell + (1 - p) * I/4 on two qubits; p in [-1/3, 1].
DensityMatrix werner_state(double p);

DensityMatrix maximally_mixed(int d, std::optional<Dims> dims = {});

/// The two diagonal 4x4 states of the built-in Hilbert-Schmidt expansion
/// example: diag(1/2,1/2,0,0) and diag(0,0,1/2,1/2).
DensityMatrix hs_example_sigma();
DensityMatrix hs_example_rho();

/// Ginibre-induced random state: G G^dagger / Tr[G G^dagger] with G a
/// d x rank matrix of independent standard complex Gaussians. At rank = d
/// this is the Hilbert-Schmidt measure. Deterministic per seed.
DensityMatrix random_density(int d, int rank, std::uint64_t seed,
                             std::optional<Dims> dims = {});

/// Tr[sigma^2], in (0, 1].
double purity(const DensityMatrix& sigma);

}  // namespace qmap
