#include "netmed/stats.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "netmed/errors.hpp"

namespace netmed {
namespace {

std::vector<double> sorted_copy(std::span<const double> values) {
  if (values.empty()) throw EmptyEnsemble("ensemble has no values");
  std::vector<double> sorted(values.begin(), values.end());
  std::sort(sorted.begin(), sorted.end());
  return sorted;
}

double sorted_mean(const std::vector<double>& sorted) {
  return std::accumulate(sorted.begin(), sorted.end(), 0.0) /
         static_cast<double>(sorted.size());
}

double sorted_std(const std::vector<double>& sorted, double mu) {
  if (sorted.size() < 2) return 0.0;
  double ss = 0.0;
  for (double v : sorted) ss += (v - mu) * (v - mu);
  return std::sqrt(ss / static_cast<double>(sorted.size() - 1));
}

}  // namespace

double EnsembleSummary::stderr_mean() const {
  return n == 0 ? 0.0 : std / std::sqrt(static_cast<double>(n));
}

EnsembleSummary summarize(std::span<const double> values) {
  const auto sorted = sorted_copy(values);
  EnsembleSummary s;
  s.n = sorted.size();
  s.mean = sorted_mean(sorted);
  s.std = sorted_std(sorted, s.mean);
  s.min = sorted.front();
  s.max = sorted.back();
  // Rounding can push the mean a hair outside [min, max] for constant input.
  s.mean = std::clamp(s.mean, s.min, s.max);
  return s;
}

double mean(std::span<const double> values) { return summarize(values).mean; }

double sample_std(std::span<const double> values) { return summarize(values).std; }

std::size_t Histogram::total() const {
  return std::accumulate(counts.begin(), counts.end(), std::size_t{0}) + underflow +
         overflow;
}

Histogram histogram(std::span<const double> values, std::size_t bins) {
  if (bins == 0) throw InvalidArgument("histogram needs at least one bin");
  const auto summary = summarize(values);
  double lo = summary.min;
  double hi = summary.max;
  if (!(hi > lo)) {
    lo -= 0.5;
    hi += 0.5;
  }
  std::vector<double> edges(bins + 1);
  for (std::size_t k = 0; k <= bins; ++k) {
    edges[k] = lo + (hi - lo) * static_cast<double>(k) / static_cast<double>(bins);
  }
  edges.back() = hi;
  return histogram(values, edges);
}

Histogram histogram(std::span<const double> values, std::span<const double> edges) {
  if (values.empty()) throw EmptyEnsemble("ensemble has no values");
  if (edges.size() < 2) throw NonMonotonicEdges("need at least two bin edges");
  for (std::size_t k = 1; k < edges.size(); ++k) {
    if (!(edges[k] > edges[k - 1])) {
      throw NonMonotonicEdges("bin edges must be strictly increasing (edge " +
                              std::to_string(k) + ")");
    }
  }

  Histogram h;
  h.bin_edges.assign(edges.begin(), edges.end());
  h.counts.assign(edges.size() - 1, 0);
  for (double v : values) {
    if (v < edges.front()) {
      ++h.underflow;
    } else if (v > edges.back()) {
      ++h.overflow;
    } else if (v == edges.back()) {
      ++h.counts.back();
    } else {
      // First edge strictly greater than v closes v's bin.
      const auto upper = std::upper_bound(edges.begin(), edges.end(), v);
      ++h.counts[static_cast<std::size_t>(upper - edges.begin()) - 1];
    }
  }
  return h;
}

}  // namespace netmed
