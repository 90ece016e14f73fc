#include "netmed/random.hpp"

#include <algorithm>
#include <unordered_set>

#include "netmed/errors.hpp"
#include "pair_mask.hpp"

namespace netmed {
namespace {

// Above this many pairs, vacancies are never enumerated when rejection works.
constexpr PairIndex kDenseEnumerationLimit = PairIndex{1} << 22;

std::uint64_t splitmix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// Moves a uniform `count`-subset of `pool` to its front (partial Fisher-Yates).
void partial_shuffle(std::vector<PairIndex>& pool, std::size_t count, Rng& rng) {
  for (std::size_t k = 0; k < count; ++k) {
    const auto pick = k + static_cast<std::size_t>(rng.below(pool.size() - k));
    std::swap(pool[k], pool[pick]);
  }
}

}  // namespace

std::uint64_t Rng::below(std::uint64_t n) {
  const std::uint64_t threshold = (0 - n) % n;
  for (;;) {
    const std::uint64_t r = next();
    if (r >= threshold) return r % n;
  }
}

std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream,
                          std::uint64_t index) {
  return splitmix64(splitmix64(splitmix64(master) ^ stream) ^ index);
}

EdgeSet sample_outside(const EdgeSet& excluded, std::size_t count, Rng& rng) {
  const NodeUniverse& universe = excluded.universe();
  const PairIndex total = universe.pair_count();
  const PairIndex vacant = total - excluded.size();
  if (count > vacant) {
    throw NoVacantPair("need " + std::to_string(count) + " vacant pairs, only " +
                       std::to_string(vacant) + " exist");
  }
  if (count == 0) return EdgeSet(universe);

  const bool rejection = 2 * count <= vacant &&
                         (4 * vacant >= total || total > kDenseEnumerationLimit);
  if (!rejection) {
    std::vector<PairIndex> pool;
    pool.reserve(vacant);
    auto skip = excluded.begin();
    for (PairIndex k = 0; k < total; ++k) {
      if (skip != excluded.end() && *skip == k) {
        ++skip;
      } else {
        pool.push_back(k);
      }
    }
    partial_shuffle(pool, count, rng);
    pool.resize(count);
    return EdgeSet::from_indices(universe, std::move(pool));
  }

  // At least an eighth of all draws are hits here.
  detail::PairMask taken(excluded);
  std::vector<PairIndex> out;
  out.reserve(count);
  while (out.size() < count) {
    const PairIndex k = rng.below(total);
    if (taken.contains(k)) continue;
    taken.insert(k);
    out.push_back(k);
  }
  return EdgeSet::from_indices(universe, std::move(out));
}

EdgeSet sample_subset(const EdgeSet& from, std::size_t count, Rng& rng) {
  if (count > from.size()) {
    throw InvalidArgument("cannot draw " + std::to_string(count) + " of " +
                          std::to_string(from.size()) + " edges");
  }
  std::vector<PairIndex> pool(from.begin(), from.end());
  partial_shuffle(pool, count, rng);
  pool.resize(count);
  return EdgeSet::from_indices(from.universe(), std::move(pool));
}

EdgeSet random_edge_set(NodeUniverse universe, std::size_t m, Rng& rng) {
  return sample_outside(EdgeSet(universe), m, rng);
}

EdgeSet degree_preserving_shuffle(const EdgeSet& edges, Rng& rng,
                                  std::size_t swaps_per_edge) {
  if (edges.size() < 2) return edges;
  const NodeUniverse& universe = edges.universe();
  std::vector<NodePair> pairs = edges.pairs();
  std::unordered_set<PairIndex> present(edges.begin(), edges.end());

  const std::size_t attempts = swaps_per_edge * pairs.size();
  for (std::size_t t = 0; t < attempts; ++t) {
    const auto e1 = static_cast<std::size_t>(rng.below(pairs.size()));
    const auto e2 = static_cast<std::size_t>(rng.below(pairs.size()));
    if (e1 == e2) continue;
    const NodeIndex u = pairs[e1].i;
    const NodeIndex v = pairs[e1].j;
    NodeIndex x = pairs[e2].i;
    NodeIndex y = pairs[e2].j;
    if (rng.bernoulli(0.5)) std::swap(x, y);
    // (u,v),(x,y) -> (u,x),(v,y)
    if (u == x || v == y) continue;
    const NodePair n1 = NodePair::of(u, x);
    const NodePair n2 = NodePair::of(v, y);
    const PairIndex k1 = universe.index_of(n1);
    const PairIndex k2 = universe.index_of(n2);
    if (k1 == k2 || present.count(k1) || present.count(k2)) continue;
    present.erase(universe.index_of(pairs[e1]));
    present.erase(universe.index_of(pairs[e2]));
    present.insert(k1);
    present.insert(k2);
    pairs[e1] = n1;
    pairs[e2] = n2;
  }
  return EdgeSet::from_pairs(universe, pairs);
}

}  // namespace netmed
