/*
 * Copyright (c) 2026 the qqstab authors
 * SPDX-License-Identifier: Apache-2.0
 */
#pragma once

#include <cstdint>

namespace qqstab::rng {

/// splitmix64 finalizer: one deterministic, well-mixed 64-bit step.
/// Used both as a stream generator (advance a state) and as a hash combiner.
inline std::uint64_t mix(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

/// Advances `state` and returns the next raw 64-bit value.
inline std::uint64_t next(std::uint64_t& state) {
  state += 0x9e3779b97f4a7c15ULL;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

/// Uniform double in [0,1) with 53 random bits.
inline double unit01(std::uint64_t& state) {
  return static_cast<double>(next(state) >> 11) * 0x1.0p-53;
}

/// Uniform double in [lo,hi).
inline double uniform(std::uint64_t& state, double lo, double hi) {
  return lo + (hi - lo) * unit01(state);
}

}  // namespace qqstab::rng
