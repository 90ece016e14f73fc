#pragma once

// Selective-rewiring null models that separate mediation from suppression.
//
// Suppression removal (S) relocates the edges of B lying in A ⊕ C; mediation
// removal (M) relocates those lying in A ∩ C. Running the same removal on a
// fully randomized copy B2 of B estimates the finite-size residual, and the
// normalized indices are
//
//   m̄ = (⟨Δ_S⟩ − ⟨Δ_RS⟩) / M_max      s̄ = (⟨Δ_M⟩ − ⟨Δ_RM⟩) / S_max
//   σ_X = |⟨Δ_X⟩ − ⟨Δ_RX⟩| / std(Δ_RX)
//
// with M_max ≤ 0 ≤ S_max the extremal net differences attainable at |B| edges.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "netmed/netcore.hpp"

namespace netmed {

enum class RewireMode {
  kSuppressionRemoval,  // S
  kMediationRemoval,    // M
};

std::string_view to_string(RewireMode mode);

// Which pairs count as suppression-implicated in mode S.
enum class SuppressionCondition {
  kSymmetric,  // in exactly one of A, C
  kOneSided,   // in A but not in C
};

// Pairs whose B-edges a removal in `mode` relocates.
EdgeSet rewire_targets(const EdgeSet& a, const EdgeSet& c, RewireMode mode,
                       SuppressionCondition condition = SuppressionCondition::kSymmetric);

// Uniform random edge set with |b| edges over b's universe.
EdgeSet full_rewire(const EdgeSet& b, std::uint64_t seed);

// Each edge of b in the target set, taken in pair order, is deleted and
// re-inserted at a pair drawn uniformly among the pairs absent at that moment
// (its own vacated pair excluded). Landing pairs are unconstrained.
// Throws NoVacantPair if an edge must move but b is complete.
EdgeSet selective_rewire(const EdgeSet& a, const EdgeSet& b, const EdgeSet& c,
                         RewireMode mode, std::uint64_t seed,
                         SuppressionCondition condition = SuppressionCondition::kSymmetric);

// Same, with the target set precomputed.
EdgeSet relocate_targets(const EdgeSet& b, const EdgeSet& targets, std::uint64_t seed);

inline constexpr std::size_t kDefaultSurrogates = 20;

// Mean Δ(a, B*, c) over extremal surrogates B* with |b| edges: the target set
// of `mode` is filled first (a random subset if it is larger than |b|) and
// the remainder is placed uniformly outside it.
double max_effect(const EdgeSet& a, const EdgeSet& b, const EdgeSet& c, RewireMode mode,
                  std::uint64_t seed, std::size_t surrogates = kDefaultSurrogates,
                  SuppressionCondition condition = SuppressionCondition::kSymmetric);

struct RewiredDeltas {
  double s = 0.0;   // Δ_S
  double m = 0.0;   // Δ_M
  double rs = 0.0;  // Δ_RS
  double rm = 0.0;  // Δ_RM
  double full = 0.0;  // Δ(A, B2; C), B2 fully randomized
};

// One null-model realization with index `realization`; nullopt if any of the
// net differences is undefined.
std::optional<RewiredDeltas> rewired_deltas(
    const EdgeSet& a, const EdgeSet& b, const EdgeSet& c, std::uint64_t seed,
    std::size_t realization,
    SuppressionCondition condition = SuppressionCondition::kSymmetric);

struct TriadOptions {
  std::size_t realizations = 500;
  std::uint64_t seed = 1;
  unsigned workers = 1;
  std::size_t surrogates = kDefaultSurrogates;
  SuppressionCondition condition = SuppressionCondition::kSymmetric;
};

// |X_max| below this counts as zero.
inline constexpr double kMaxEffectFloor = 1e-9;

struct TriadReport {
  double delta0 = 0.0;
  std::vector<double> delta_s;
  std::vector<double> delta_m;
  std::vector<double> delta_rs;
  std::vector<double> delta_rm;

  double m_max = 0.0;  // ≤ 0
  double s_max = 0.0;  // ≥ 0
  double m_bar = 0.0;  // NaN when !m_bar_defined
  double s_bar = 0.0;  // NaN when !s_bar_defined
  double sigma_s = 0.0;  // +inf when !sigma_s_finite
  double sigma_m = 0.0;  // +inf when !sigma_m_finite

  bool m_bar_defined = true;   // false: ZeroMaxEffect
  bool s_bar_defined = true;
  bool sigma_s_finite = true;  // false: ZeroNullVariance
  bool sigma_m_finite = true;

  std::size_t skipped = 0;
};

// Throws what delta(a, b, c) throws, and InsufficientPairs if fewer than two
// realizations are usable.
TriadReport triad_indices(const EdgeSet& a, const EdgeSet& b, const EdgeSet& c,
                          const TriadOptions& options);

}  // namespace netmed
