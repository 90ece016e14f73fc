#pragma once

// Portable randomness. Every draw is defined in terms of std::mt19937_64,
// whose output sequence is fixed by the standard, so a seed reproduces the
// same edge sets on any conforming toolchain. The std::*_distribution
// adaptors are deliberately not used: their algorithms are unspecified.

#include <cstdint>
#include <random>

#include "netmed/netcore.hpp"

namespace netmed {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  // Uniform on [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  bool bernoulli(double p) { return uniform() < p; }

  // Uniform on [0, n), unbiased by rejection. n must be positive.
  std::uint64_t below(std::uint64_t n);

 private:
  std::mt19937_64 engine_;
};

// Counter-based child seed: a pure function of (master, stream, index), so
// parallel jobs can be scheduled in any order without changing results.
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream,
                          std::uint64_t index);

// Stream identifiers used with derive_seed across the library.
namespace streams {
inline constexpr std::uint64_t kGenerate = 1;
inline constexpr std::uint64_t kPairwiseNull = 2;
inline constexpr std::uint64_t kSelectiveS = 3;
inline constexpr std::uint64_t kSelectiveM = 4;
inline constexpr std::uint64_t kFullRewire = 5;
inline constexpr std::uint64_t kSelectiveRS = 6;
inline constexpr std::uint64_t kSelectiveRM = 7;
inline constexpr std::uint64_t kMaxEffectS = 8;
inline constexpr std::uint64_t kMaxEffectM = 9;
}  // namespace streams

// Uniformly random subset of `count` pairs outside `excluded`.
// Throws NoVacantPair if fewer than `count` such pairs exist.
EdgeSet sample_outside(const EdgeSet& excluded, std::size_t count, Rng& rng);

// Uniformly random `count`-subset of `from`.
EdgeSet sample_subset(const EdgeSet& from, std::size_t count, Rng& rng);

// Uniform G(N, M) edge set.
EdgeSet random_edge_set(NodeUniverse universe, std::size_t m, Rng& rng);

// Degree-preserving randomization by repeated double-edge swaps; attempts
// that would create a self-loop or a multi-edge are rejected.
EdgeSet degree_preserving_shuffle(const EdgeSet& edges, Rng& rng,
                                  std::size_t swaps_per_edge = 10);

}  // namespace netmed
