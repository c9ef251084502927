// Copyright 2026 The LatentLab Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef LATENTLAB_RNG_HPP_
#define LATENTLAB_RNG_HPP_

#include <Eigen/Core>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>

namespace latentlab {

/// Deterministic random source. mt19937_64 is fully specified by the
/// standard and the uniform/normal mappings below are our own, so streams
/// are bit-reproducible across platforms and compilers (std::normal_distribution
/// is not, which is why we avoid it).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(mix(seed)) {}

  /// Independent substream, e.g. one per worker or per sample chunk.
  /// Results are reduced in fixed order by callers, so outputs do not
  /// depend on thread count.
  static Rng stream(std::uint64_t seed, std::uint64_t stream_id) {
    return Rng(mix(mix(seed) + 0x9e3779b97f4a7c15ULL * (stream_id + 1)));
  }

  /// Uniform in [0, 1) with 53 random bits.
  double uniform() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  /// Standard normal via Box-Muller. Consumes exactly two engine draws per
  /// call (no cached spare), keeping call sequences reproducible.
  double normal() {
    double u1 = 1.0 - uniform();  // (0, 1]
    double u2 = uniform();
    double r = std::sqrt(-2.0 * std::log(u1));
    return r * std::cos(2.0 * std::numbers::pi * u2);
  }

  Eigen::VectorXd normal_vector(int n) {
    Eigen::VectorXd v(n);
    for (int i = 0; i < n; ++i) v[i] = normal();
    return v;
  }

  std::uint64_t next_u64() { return engine_(); }

 private:
  // splitmix64 finalizer; decorrelates nearby seeds.
  static std::uint64_t mix(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
  }

  std::mt19937_64 engine_;
};

}  // namespace latentlab

#endif  // LATENTLAB_RNG_HPP_
