#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace netmed {

// Sample moments of an ensemble. `std` uses the n−1 (sample) denominator and
// is 0 for a single value. Inputs are sorted before accumulation, so every
// field is invariant under permutation of the input, bit for bit.
struct EnsembleSummary {
  std::size_t n = 0;
  double mean = 0.0;
  double std = 0.0;
  double min = 0.0;
  double max = 0.0;

  // Standard error of the mean.
  double stderr_mean() const;
};

// Throws EmptyEnsemble.
EnsembleSummary summarize(std::span<const double> values);

double mean(std::span<const double> values);
double sample_std(std::span<const double> values);

// Bins are half-open [edge_i, edge_{i+1}) except the last, which is closed.
struct Histogram {
  std::vector<double> bin_edges;
  std::vector<std::size_t> counts;
  std::size_t underflow = 0;
  std::size_t overflow = 0;

  std::size_t total() const;
};

inline constexpr std::size_t kDefaultHistogramBins = 30;

// Equal-width bins over [min, max] of the data; a degenerate range is widened
// to [v − 0.5, v + 0.5].
Histogram histogram(std::span<const double> values,
                    std::size_t bins = kDefaultHistogramBins);
// Explicit edges; values outside them go to underflow/overflow.
// Throws NonMonotonicEdges unless edges are strictly increasing.
Histogram histogram(std::span<const double> values, std::span<const double> edges);

}  // namespace netmed
