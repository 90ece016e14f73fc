#pragma once

// Network-Jaccard similarity, its conditioned (partial) variant, and the net
// difference between the two.
//
//   NJ(A,B)      = |a ∩ b| / |a ∪ b|
//   NJ_p(A,B|C)  = |(a ∩ b) \ c| / |(a ∪ b) \ c|
//   Δ(A,B;C)     = NJ_p(A,B|C) − NJ(A,B)
//
// Δ ≈ 0 when C is unrelated to the A–B relation, Δ < 0 when C mediates or
// confounds it, and Δ > 0 when C acts as a suppressor.

#include <cstddef>
#include <cstdint>

#include "netmed/netcore.hpp"

namespace netmed {

// A similarity in [0, 1].
class Similarity {
 public:
  explicit Similarity(double value);
  double value() const noexcept { return value_; }
  // d = 1 − NJ
  double distance() const noexcept { return 1.0 - value_; }

 private:
  double value_;
};

// A net difference in [−1, 1].
class NetDifference {
 public:
  explicit NetDifference(double value);
  double value() const noexcept { return value_; }

 private:
  double value_;
};

// Set sizes entering NJ and NJ_p, gathered in one pass over a, b and c.
struct TriadCounts {
  std::size_t intersection = 0;        // |a ∩ b|
  std::size_t union_ = 0;              // |a ∪ b|
  std::size_t intersection_free = 0;   // |(a ∩ b) \ c|
  std::size_t union_free = 0;          // |(a ∪ b) \ c|
};

TriadCounts count_triad(const EdgeSet& a, const EdgeSet& b, const EdgeSet& c);

// Throws EmptyUnion when a and b are both empty.
Similarity nj(const EdgeSet& a, const EdgeSet& b);
// Throws EmptyConditionedUnion when c covers a ∪ b.
Similarity nj_partial(const EdgeSet& a, const EdgeSet& b, const EdgeSet& c);
NetDifference delta(const EdgeSet& a, const EdgeSet& b, const EdgeSet& c);
double distance(const EdgeSet& a, const EdgeSet& b);

struct TriadMeasures {
  Similarity nj;
  Similarity nj_partial;
  NetDifference delta;
};

// NJ, NJ_p and Δ from a single pass; same errors as the individual calls.
TriadMeasures measure(const EdgeSet& a, const EdgeSet& b, const EdgeSet& c);
TriadMeasures measure(const Triplet& triplet);

enum class NullRandomization {
  kEdgeCount,         // uniform G(N, M) per layer
  kDegreePreserving,  // double-edge swaps per layer
};

struct PairwiseNullOptions {
  std::size_t realizations = 500;
  std::uint64_t seed = 1;
  NullRandomization randomization = NullRandomization::kEdgeCount;
  // Redraws allowed for a realization whose randomized pair has an empty union.
  std::size_t retry_budget = 100;
  unsigned workers = 1;
};

struct PairwiseNullSummary {
  Similarity observed_nj;
  double null_mean = 0.0;
  double null_std = 0.0;  // sample standard deviation
  std::size_t n_randomizations = 0;
  std::size_t skipped = 0;
};

// Observed NJ(a, b) against NJ of independently randomized copies of both
// layers. Throws EmptyUnion for the observed pair and InsufficientPairs when
// fewer than two randomized realizations survive.
PairwiseNullSummary pairwise_null(const EdgeSet& a, const EdgeSet& b,
                                  const PairwiseNullOptions& options);

}  // namespace netmed
