/*
 * This code is part of qmap.
 *
 * Licensed under the Apache License, Version 2.0. You may obtain a copy of
 * this license at http://www.apache.org/licenses/LICENSE-2.0.
 */

#pragma once

#include <complex>
#include <cstdint>
#include <random>

namespace qmap {

/// Seeded random source used everywhere randomness is needed.
///
/// The generator is pinned for reproducibility: an mt19937_64 engine seeded
/// through the SplitMix64 finalizer, uniforms drawn as 53-bit doubles and
/// Gaussians produced by Box-Muller. Results are bit-identical for a given
/// (seed, stream) across runs.
class Prng {
 public:
  explicit Prng(std::uint64_t seed) : engine_(mix(seed, 0)) {}
  Prng(std::uint64_t seed, std::uint64_t stream) : engine_(mix(seed, stream)) {}

  /// SplitMix64 finalizer over the (seed, stream) pair; this is the
  /// documented sub-seed scheme for parallel/independent sampling.
  static std::uint64_t mix(std::uint64_t seed, std::uint64_t stream) {
    std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (stream + 1);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  std::uint64_t next_u64() { return engine_(); }

  /// Uniform double in [0, 1) with 53 random bits.
  double uniform() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  /// Standard normal via Box-Muller (both branches consumed in order).
  double gauss() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    double u1 = uniform();
    while (u1 <= 0.0) u1 = uniform();
    double u2 = uniform();
    double r = std::sqrt(-2.0 * std::log(u1));
    double t = 2.0 * pi * u2;
    spare_ = r * std::sin(t);
    have_spare_ = true;
    return r * std::cos(t);
  }

  /// Complex Gaussian with independent N(0,1) real and imaginary parts.
  std::complex<double> cgauss() {
    double re = gauss();
    double im = gauss();
    return {re, im};
  }

 private:
  static constexpr double pi = 3.14159265358979323846;
  std::mt19937_64 engine_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace qmap
