// Copyright polycover contributors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <random>

#include "polycover/types.hpp"

namespace polycover {

/// Determinism contract: a 64-bit seed pins every random draw of a run.
struct RngSeed {
  std::uint64_t value = 0;
};

/// Deterministic uniform generator. mt19937_64 is fully specified by the
/// standard and the double mapping below is explicit, so identical seeds give
/// identical streams on every platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  std::uint64_t next_u64() { return gen_(); }

  /// Uniform on [0, 1) with 53 random bits.
  double uniform01() { return (next_u64() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

  /// Uniform point in an axis-aligned box, one coordinate per draw.
  Point point_in_box(const Box& box) {
    Point q(box.dim());
    for (int i = 0; i < box.dim(); ++i) {
      q[i] = uniform(box.lower[i], box.upper[i]);
    }
    return q;
  }

  /// splitmix64 mix of (seed, stream), for carving independent substreams
  /// out of one user-facing seed.
  static std::uint64_t derive(std::uint64_t seed, std::uint64_t stream);

 private:
  std::mt19937_64 gen_;
};

}  // namespace polycover
