/*
 * This code is part of qmap.
 *
 * Licensed under the Apache License, Version 2.0. You may obtain a copy of
 * this license at http://www.apache.org/licenses/LICENSE-2.0.
 */

#pragma once

#include <cstdint>
#include <vector>

#include "qmap/states.hpp"

namespace qmap {

/// A completely positive trace-preserving map in Kraus form,
/// Theta(X) = sum_i V_i X V_i^dagger with sum_i V_i^dagger V_i = I within
/// 1e-9 (max-abs norm). Kraus operators are out_dim x in_dim.
class KrausChannel {
 public:
  /// Validates shapes and the completeness relation.
  /// Throws ShapeMismatch / NotTracePreserving.
  static KrausChannel from_kraus(std::vector<Matrix> ops);

  int in_dim() const { return in_dim_; }
  int out_dim() const { return out_dim_; }
  const std::vector<Matrix>& kraus() const { return kraus_; }

  /// sum_i V_i X V_i^dagger, no state validation.
  Matrix apply_raw(const Matrix& x) const;

  /// Channel action on a state; the output is validated.
  DensityMatrix apply(const DensityMatrix& sigma) const;

  /// Theta(I), the image of the identity (= sum_i V_i V_i^dagger).
  Matrix image_of_identity() const;

 private:
  KrausChannel(int in_dim, int out_dim, std::vector<Matrix> ops)
      : in_dim_(in_dim), out_dim_(out_dim), kraus_(std::move(ops)) {}

  int in_dim_;
  int out_dim_;
  std::vector<Matrix> kraus_;
};

/// Matrix of a linear map on operators under column-stacking:
/// vec(Theta(X)) = mat * vec(X). For a Kraus channel the matrix is
/// sum_i conj(V_i) (x) V_i.
struct SuperOperator {
  int in_dim = 0;
  int out_dim = 0;
  Matrix mat;  // (out_dim^2) x (in_dim^2)

  Matrix apply(const Matrix& x) const;
  Matrix image_of_identity() const;
};

/// Unnormalized Choi matrix C = sum_kl E_kl (x) Theta(E_kl); the first
/// tensor factor is the input index. C is positive semidefinite iff the map
/// is completely positive; Tr C = in_dim for trace-preserving maps.
Matrix choi(const KrausChannel& theta);

struct CpReport {
  bool cp = false;
  double min_eigenvalue = 0.0;
};

/// CP test on a Choi matrix: true iff the minimum eigenvalue is
/// >= -1e-9 * max(1, ||C||_maxabs). Throws NotHermitian.
CpReport is_cp(const Matrix& choi_matrix);

/// ||Theta|| := ||Theta(I)||_op, the operator norm of a positive map
/// (Russo-Dye). Equals 1 exactly when the channel is unital.
double channel_norm(const KrausChannel& theta);

/// Theta(I) = I within 1e-9.
bool is_unital(const KrausChannel& theta);

KrausChannel identity_channel(int d);

/// X -> lambda X + (1 - lambda) Tr[X] I/d; acts as the scalar lambda on the
/// traceless part. Kraus-representable (CP) for lambda in [0, 1].
KrausChannel depolarizing_channel(int d, double lambda);

/// Amplitude damping on a qubit with decay probability gamma.
KrausChannel amplitude_damping_channel(double gamma);

/// Haar-random channel: Kraus blocks of a Haar isometry C^d -> C^{dk},
/// obtained by QR of a seeded (dk) x d complex Ginibre matrix with
/// R-diagonal phase fixing. Deterministic per seed.
KrausChannel random_channel(int d, int k, std::uint64_t seed);

/// Random mixture of Haar unitaries {sqrt(p_i) U_i}; always unital.
KrausChannel random_mixed_unitary_channel(int d, int k, std::uint64_t seed);

/// Haar-random unitary (QR of a Ginibre matrix, phases fixed).
Matrix random_unitary(int d, std::uint64_t seed);

/// The built-in 4x4 expansion example: a CPTP map and a state pair for
/// which the Hilbert-Schmidt distance doubles. All entries are exact in
/// double precision.
struct ExpansionExample {
  KrausChannel channel;
  DensityMatrix sigma;
  DensityMatrix rho;
};
ExpansionExample hs_expansion_example();

/// [kron(A_i, B_i)] from paired lists of local operators. Completeness is
/// not implied; feed the result to KrausChannel::from_kraus to validate.
std::vector<Matrix> local_product_family(const std::vector<Matrix>& a_ops,
                                         const std::vector<Matrix>& b_ops);

SuperOperator to_superoperator(const KrausChannel& theta);

/// Kraus set {W_j V_i} of the composite second o first.
KrausChannel compose(const KrausChannel& second, const KrausChannel& first);

}  // namespace qmap
