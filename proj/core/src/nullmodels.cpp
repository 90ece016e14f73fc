#include "netmed/nullmodels.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "netmed/errors.hpp"
#include "netmed/parallel.hpp"
#include "netmed/random.hpp"
#include "netmed/similarity.hpp"
#include "netmed/stats.hpp"
#include "pair_mask.hpp"

namespace netmed {
namespace {

constexpr PairIndex kVacancyListLimit = PairIndex{1} << 22;

std::optional<double> try_delta(const EdgeSet& a, const EdgeSet& b, const EdgeSet& c) {
  try {
    return measure(a, b, c).delta.value();
  } catch (const Error& e) {
    if (e.category() != ErrorCategory::kDegenerate) throw;
    return std::nullopt;
  }
}

std::uint64_t stream_of(RewireMode mode, bool randomized) {
  if (mode == RewireMode::kSuppressionRemoval) {
    return randomized ? streams::kSelectiveRS : streams::kSelectiveS;
  }
  return randomized ? streams::kSelectiveRM : streams::kSelectiveM;
}

// (sign-adjusted) X_max, or 0 if it is indistinguishable from zero.
double clamp_effect(double raw, RewireMode mode) {
  const double clamped = mode == RewireMode::kMediationRemoval ? std::min(raw, 0.0)
                                                               : std::max(raw, 0.0);
  return std::abs(clamped) < kMaxEffectFloor ? 0.0 : clamped;
}

}  // namespace

std::string_view to_string(RewireMode mode) {
  return mode == RewireMode::kSuppressionRemoval ? "S" : "M";
}

EdgeSet rewire_targets(const EdgeSet& a, const EdgeSet& c, RewireMode mode,
                       SuppressionCondition condition) {
  if (mode == RewireMode::kMediationRemoval) return intersect(a, c);
  return condition == SuppressionCondition::kSymmetric ? symmetric_difference(a, c)
                                                       : subtract(a, c);
}

EdgeSet full_rewire(const EdgeSet& b, std::uint64_t seed) {
  Rng rng(seed);
  return random_edge_set(b.universe(), b.size(), rng);
}

EdgeSet relocate_targets(const EdgeSet& b, const EdgeSet& targets, std::uint64_t seed) {
  const EdgeSet moving = intersect(b, targets);
  if (moving.empty()) return b;

  const NodeUniverse& universe = b.universe();
  const PairIndex total = universe.pair_count();
  const PairIndex vacant = total - b.size();
  if (vacant == 0) {
    throw NoVacantPair("edge set is complete; no pair can receive a moved edge");
  }

  Rng rng(seed);
  std::vector<PairIndex> landed;
  landed.reserve(moving.size());

  if (4 * vacant >= total || total > kVacancyListLimit) {
    detail::PairMask present(b);
    for (PairIndex from : moving) {
      PairIndex to;
      do {
        to = rng.below(total);
      } while (to == from || present.contains(to));
      present.erase(from);
      present.insert(to);
      landed.push_back(to);
    }
  } else {
    // Explicit vacancy list. Each move picks a slot, then hands the slot to the
    // pair it just vacated, so the vacated pair is excluded from its own draw.
    std::vector<PairIndex> vacancies;
    vacancies.reserve(vacant);
    auto skip = b.begin();
    for (PairIndex k = 0; k < total; ++k) {
      if (skip != b.end() && *skip == k) {
        ++skip;
      } else {
        vacancies.push_back(k);
      }
    }
    for (PairIndex from : moving) {
      const auto slot = static_cast<std::size_t>(rng.below(vacancies.size()));
      landed.push_back(vacancies[slot]);
      vacancies[slot] = from;
    }
  }

  // Landing pairs are distinct and disjoint from the kept edges.
  const EdgeSet kept = subtract(b, moving);
  std::sort(landed.begin(), landed.end());
  std::vector<PairIndex> out(b.size());
  std::merge(kept.begin(), kept.end(), landed.begin(), landed.end(), out.begin());
  return EdgeSet::from_sorted_unique(universe, std::move(out));
}

EdgeSet selective_rewire(const EdgeSet& a, const EdgeSet& b, const EdgeSet& c,
                         RewireMode mode, std::uint64_t seed,
                         SuppressionCondition condition) {
  require_same_universe(a, b);
  require_same_universe(a, c);
  return relocate_targets(b, rewire_targets(a, c, mode, condition), seed);
}

double max_effect(const EdgeSet& a, const EdgeSet& b, const EdgeSet& c, RewireMode mode,
                  std::uint64_t seed, std::size_t surrogates,
                  SuppressionCondition condition) {
  require_same_universe(a, b);
  require_same_universe(a, c);
  if (surrogates == 0) throw InvalidArgument("max_effect needs at least one surrogate");

  const EdgeSet fill = rewire_targets(a, c, mode, condition);
  const std::size_t m = b.size();
  const std::size_t free_pairs = b.universe().pair_count() - fill.size();
  // Only one surrogate exists when the fill set and remainder are both forced.
  const bool forced = fill.size() == m || (fill.size() < m && m - fill.size() == free_pairs);
  const std::size_t count = forced ? 1 : surrogates;

  double sum = 0.0;
  for (std::size_t s = 0; s < count; ++s) {
    Rng rng(derive_seed(seed, 0, s));
    EdgeSet surrogate = fill.size() >= m
                            ? sample_subset(fill, m, rng)
                            : unite(fill, sample_outside(fill, m - fill.size(), rng));
    sum += delta(a, surrogate, c).value();
  }
  return sum / static_cast<double>(count);
}

static std::optional<RewiredDeltas> rewire_once(const EdgeSet& a, const EdgeSet& b,
                                                const EdgeSet& c, const EdgeSet& s_targets,
                                                const EdgeSet& m_targets,
                                                std::uint64_t seed,
                                                std::size_t realization) {
  auto seed_for = [&](RewireMode mode, bool randomized) {
    return derive_seed(seed, stream_of(mode, randomized), realization);
  };

  const EdgeSet b2 = full_rewire(b, derive_seed(seed, streams::kFullRewire, realization));
  const auto ds = try_delta(
      a, relocate_targets(b, s_targets, seed_for(RewireMode::kSuppressionRemoval, false)), c);
  const auto dm = try_delta(
      a, relocate_targets(b, m_targets, seed_for(RewireMode::kMediationRemoval, false)), c);
  const auto drs = try_delta(
      a, relocate_targets(b2, s_targets, seed_for(RewireMode::kSuppressionRemoval, true)), c);
  const auto drm = try_delta(
      a, relocate_targets(b2, m_targets, seed_for(RewireMode::kMediationRemoval, true)), c);
  const auto dfull = try_delta(a, b2, c);
  if (!ds || !dm || !drs || !drm || !dfull) return std::nullopt;
  return RewiredDeltas{*ds, *dm, *drs, *drm, *dfull};
}

std::optional<RewiredDeltas> rewired_deltas(const EdgeSet& a, const EdgeSet& b,
                                            const EdgeSet& c, std::uint64_t seed,
                                            std::size_t realization,
                                            SuppressionCondition condition) {
  require_same_universe(a, b);
  require_same_universe(a, c);
  return rewire_once(a, b, c,
                     rewire_targets(a, c, RewireMode::kSuppressionRemoval, condition),
                     rewire_targets(a, c, RewireMode::kMediationRemoval, condition), seed,
                     realization);
}

TriadReport triad_indices(const EdgeSet& a, const EdgeSet& b, const EdgeSet& c,
                          const TriadOptions& options) {
  if (options.realizations < 2) {
    throw InvalidArgument("triad analysis needs at least 2 realizations");
  }
  TriadReport report;
  report.delta0 = delta(a, b, c).value();

  const EdgeSet s_targets =
      rewire_targets(a, c, RewireMode::kSuppressionRemoval, options.condition);
  const EdgeSet m_targets =
      rewire_targets(a, c, RewireMode::kMediationRemoval, options.condition);

  std::vector<std::optional<RewiredDeltas>> runs(options.realizations);
  parallel_for(options.realizations, options.workers, [&](std::size_t r) {
    runs[r] = rewire_once(a, b, c, s_targets, m_targets, options.seed, r);
  });
  for (const auto& run : runs) {
    if (!run) {
      ++report.skipped;
      continue;
    }
    report.delta_s.push_back(run->s);
    report.delta_m.push_back(run->m);
    report.delta_rs.push_back(run->rs);
    report.delta_rm.push_back(run->rm);
  }
  if (report.delta_s.size() < 2) {
    throw InsufficientPairs("only " + std::to_string(report.delta_s.size()) +
                            " rewiring realizations had a defined net difference");
  }

  report.m_max = m_targets.empty()
                     ? 0.0
                     : clamp_effect(max_effect(a, b, c, RewireMode::kMediationRemoval,
                                               derive_seed(options.seed, streams::kMaxEffectM, 0),
                                               options.surrogates, options.condition),
                                    RewireMode::kMediationRemoval);
  report.s_max = s_targets.empty()
                     ? 0.0
                     : clamp_effect(max_effect(a, b, c, RewireMode::kSuppressionRemoval,
                                               derive_seed(options.seed, streams::kMaxEffectS, 0),
                                               options.surrogates, options.condition),
                                    RewireMode::kSuppressionRemoval);

  const EnsembleSummary s = summarize(report.delta_s);
  const EnsembleSummary m = summarize(report.delta_m);
  const EnsembleSummary rs = summarize(report.delta_rs);
  const EnsembleSummary rm = summarize(report.delta_rm);

  constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
  constexpr double kInf = std::numeric_limits<double>::infinity();

  report.m_bar_defined = report.m_max != 0.0;
  report.m_bar = report.m_bar_defined ? (s.mean - rs.mean) / report.m_max : kNaN;
  report.s_bar_defined = report.s_max != 0.0;
  report.s_bar = report.s_bar_defined ? (m.mean - rm.mean) / report.s_max : kNaN;

  report.sigma_s_finite = rs.std > 0.0;
  report.sigma_s = report.sigma_s_finite ? std::abs(s.mean - rs.mean) / rs.std : kInf;
  report.sigma_m_finite = rm.std > 0.0;
  report.sigma_m = report.sigma_m_finite ? std::abs(m.mean - rm.mean) / rm.std : kInf;
  return report;
}

}  // namespace netmed
