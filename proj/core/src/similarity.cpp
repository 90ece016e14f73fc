#include "netmed/similarity.hpp"

#include <cmath>
#include <string>
#include <vector>

#include "netmed/errors.hpp"
#include "netmed/parallel.hpp"
#include "netmed/random.hpp"
#include "netmed/stats.hpp"

namespace netmed {
namespace {

double ratio(std::size_t num, std::size_t den) {
  return static_cast<double>(num) / static_cast<double>(den);
}

void require_nonempty_union(std::size_t union_size) {
  if (union_size == 0) throw EmptyUnion("NJ undefined: both edge sets are empty");
}

void require_nonempty_free_union(std::size_t union_free) {
  if (union_free == 0) {
    throw EmptyConditionedUnion("NJ_p undefined: conditioning set covers a ∪ b");
  }
}

EdgeSet randomize(const EdgeSet& layer, NullRandomization mode, Rng& rng) {
  switch (mode) {
    case NullRandomization::kEdgeCount:
      return random_edge_set(layer.universe(), layer.size(), rng);
    case NullRandomization::kDegreePreserving:
      return degree_preserving_shuffle(layer, rng);
  }
  return layer;
}

}  // namespace

Similarity::Similarity(double value) : value_(value) {
  if (!(value >= 0.0 && value <= 1.0)) {
    throw InvalidArgument("similarity " + std::to_string(value) + " outside [0, 1]");
  }
}

NetDifference::NetDifference(double value) : value_(value) {
  if (!(value >= -1.0 && value <= 1.0)) {
    throw InvalidArgument("net difference " + std::to_string(value) +
                          " outside [-1, 1]");
  }
}

TriadCounts count_triad(const EdgeSet& a, const EdgeSet& b, const EdgeSet& c) {
  require_same_universe(a, b);
  require_same_universe(a, c);
  TriadCounts counts;
  auto ai = a.begin();
  auto bi = b.begin();
  auto ci = c.begin();
  while (ai != a.end() || bi != b.end()) {
    PairIndex k;
    bool in_both = false;
    if (bi == b.end() || (ai != a.end() && *ai < *bi)) {
      k = *ai++;
    } else if (ai == a.end() || *bi < *ai) {
      k = *bi++;
    } else {
      k = *ai;
      ++ai;
      ++bi;
      in_both = true;
    }
    while (ci != c.end() && *ci < k) ++ci;
    const bool in_c = ci != c.end() && *ci == k;

    ++counts.union_;
    if (in_both) ++counts.intersection;
    if (!in_c) {
      ++counts.union_free;
      if (in_both) ++counts.intersection_free;
    }
  }
  return counts;
}

Similarity nj(const EdgeSet& a, const EdgeSet& b) {
  const std::size_t common = intersection_size(a, b);
  const std::size_t either = a.size() + b.size() - common;
  require_nonempty_union(either);
  return Similarity(ratio(common, either));
}

Similarity nj_partial(const EdgeSet& a, const EdgeSet& b, const EdgeSet& c) {
  const TriadCounts counts = count_triad(a, b, c);
  require_nonempty_free_union(counts.union_free);
  return Similarity(ratio(counts.intersection_free, counts.union_free));
}

NetDifference delta(const EdgeSet& a, const EdgeSet& b, const EdgeSet& c) {
  return measure(a, b, c).delta;
}

double distance(const EdgeSet& a, const EdgeSet& b) { return nj(a, b).distance(); }

TriadMeasures measure(const EdgeSet& a, const EdgeSet& b, const EdgeSet& c) {
  const TriadCounts counts = count_triad(a, b, c);
  require_nonempty_union(counts.union_);
  require_nonempty_free_union(counts.union_free);
  const Similarity full(ratio(counts.intersection, counts.union_));
  const Similarity partial(ratio(counts.intersection_free, counts.union_free));
  return TriadMeasures{full, partial, NetDifference(partial.value() - full.value())};
}

TriadMeasures measure(const Triplet& triplet) {
  return measure(triplet.a, triplet.b, triplet.c);
}

PairwiseNullSummary pairwise_null(const EdgeSet& a, const EdgeSet& b,
                                  const PairwiseNullOptions& options) {
  if (options.realizations < 2) {
    throw InvalidArgument("pairwise null needs at least 2 realizations");
  }
  const Similarity observed = nj(a, b);

  // NaN marks a realization that exhausted its retry budget.
  std::vector<double> values(options.realizations);
  parallel_for(options.realizations, options.workers, [&](std::size_t r) {
    Rng rng(derive_seed(options.seed, streams::kPairwiseNull, r));
    values[r] = std::nan("");
    for (std::size_t attempt = 0; attempt <= options.retry_budget; ++attempt) {
      const EdgeSet ra = randomize(a, options.randomization, rng);
      const EdgeSet rb = randomize(b, options.randomization, rng);
      const std::size_t common = intersection_size(ra, rb);
      const std::size_t either = ra.size() + rb.size() - common;
      if (either > 0) {
        values[r] = ratio(common, either);
        break;
      }
    }
  });

  std::vector<double> kept;
  kept.reserve(values.size());
  for (double v : values) {
    if (!std::isnan(v)) kept.push_back(v);
  }
  if (kept.size() < 2) {
    throw InsufficientPairs("only " + std::to_string(kept.size()) +
                            " randomized pairs had a non-empty union");
  }
  const EnsembleSummary summary = summarize(kept);
  return PairwiseNullSummary{observed, summary.mean, summary.std, kept.size(),
                             values.size() - kept.size()};
}

}  // namespace netmed
