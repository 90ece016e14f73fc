#include "netmed/netcore.hpp"

#include <algorithm>
#include <cmath>
#include <iterator>

#include "netmed/errors.hpp"

namespace netmed {
namespace {

// First pair index of row i.
PairIndex row_start(PairIndex n, PairIndex i) { return i * (2 * n - i - 1) / 2; }

template <typename Merge>
EdgeSet merge_with(const EdgeSet& x, const EdgeSet& y, Merge merge) {
  require_same_universe(x, y);
  std::vector<PairIndex> out;
  out.reserve(std::max(x.size(), y.size()));
  merge(x.begin(), x.end(), y.begin(), y.end(), std::back_inserter(out));
  return EdgeSet::from_sorted_unique(x.universe(), std::move(out));
}

}  // namespace

NodePair NodePair::of(NodeIndex u, NodeIndex v) {
  if (u == v) {
    throw InvalidArgument("self-loop (" + std::to_string(u) + "," +
                          std::to_string(v) + ") is not a node pair");
  }
  return u < v ? NodePair{u, v} : NodePair{v, u};
}

NodeUniverse::NodeUniverse(NodeIndex n_nodes)
    : n_nodes_(n_nodes),
      pair_count_(static_cast<PairIndex>(n_nodes) * (n_nodes - 1ULL) / 2) {
  if (n_nodes < 2) {
    throw InvalidArgument("node universe needs at least 2 nodes, got " +
                          std::to_string(n_nodes));
  }
}

PairIndex NodeUniverse::index_of(const NodePair& pair) const {
  if (!contains(pair)) {
    throw InvalidArgument("pair (" + std::to_string(pair.i) + "," +
                          std::to_string(pair.j) + ") outside universe of " +
                          std::to_string(n_nodes_) + " nodes");
  }
  return row_start(n_nodes_, pair.i) + (pair.j - pair.i - 1);
}

NodePair NodeUniverse::pair_at(PairIndex index) const {
  if (index >= pair_count_) {
    throw InvalidArgument("pair index " + std::to_string(index) + " out of range");
  }
  const auto n = static_cast<PairIndex>(n_nodes_);
  // Largest i with row_start(i) <= index; the closed form is only a first guess.
  const double nd = static_cast<double>(n);
  const double disc = (2 * nd - 1) * (2 * nd - 1) - 8.0 * static_cast<double>(index);
  auto i = static_cast<PairIndex>(std::max(0.0, std::floor(((2 * nd - 1) - std::sqrt(std::max(disc, 0.0))) / 2)));
  i = std::min(i, n - 2);
  while (i > 0 && row_start(n, i) > index) --i;
  while (i + 1 < n - 1 && row_start(n, i + 1) <= index) ++i;
  const PairIndex j = index - row_start(n, i) + i + 1;
  return NodePair{static_cast<NodeIndex>(i), static_cast<NodeIndex>(j)};
}

EdgeSet EdgeSet::from_pairs(NodeUniverse universe, std::span<const NodePair> pairs) {
  std::vector<PairIndex> indices;
  indices.reserve(pairs.size());
  for (const auto& pair : pairs) indices.push_back(universe.index_of(pair));
  std::sort(indices.begin(), indices.end());
  indices.erase(std::unique(indices.begin(), indices.end()), indices.end());
  return EdgeSet(universe, std::move(indices));
}

EdgeSet EdgeSet::from_indices(NodeUniverse universe, std::vector<PairIndex> indices) {
  std::sort(indices.begin(), indices.end());
  indices.erase(std::unique(indices.begin(), indices.end()), indices.end());
  if (!indices.empty() && indices.back() >= universe.pair_count()) {
    throw InvalidArgument("pair index " + std::to_string(indices.back()) +
                          " out of range");
  }
  return EdgeSet(universe, std::move(indices));
}

EdgeSet EdgeSet::from_sorted_unique(NodeUniverse universe,
                                    std::vector<PairIndex> sorted_unique) {
  return EdgeSet(universe, std::move(sorted_unique));
}

EdgeSet EdgeSet::complete(NodeUniverse universe) {
  std::vector<PairIndex> all(universe.pair_count());
  for (PairIndex k = 0; k < all.size(); ++k) all[k] = k;
  return EdgeSet(universe, std::move(all));
}

bool EdgeSet::contains(const NodePair& pair) const {
  return universe_.contains(pair) && contains_index(universe_.index_of(pair));
}

bool EdgeSet::contains_index(PairIndex index) const {
  return std::binary_search(edges_.begin(), edges_.end(), index);
}

std::vector<NodePair> EdgeSet::pairs() const {
  std::vector<NodePair> out;
  out.reserve(edges_.size());
  // Walk rows incrementally instead of inverting every index.
  const PairIndex n = universe_.n_nodes();
  PairIndex row = 0;
  for (PairIndex index : edges_) {
    while (row_start(n, row + 1) <= index) ++row;
    out.push_back({static_cast<NodeIndex>(row),
                   static_cast<NodeIndex>(index - row_start(n, row) + row + 1)});
  }
  return out;
}

void require_same_universe(const EdgeSet& x, const EdgeSet& y) {
  if (!(x.universe() == y.universe())) {
    throw UniverseMismatch("edge sets live on universes of " +
                           std::to_string(x.universe().n_nodes()) + " and " +
                           std::to_string(y.universe().n_nodes()) + " nodes");
  }
}

EdgeSet intersect(const EdgeSet& x, const EdgeSet& y) {
  return merge_with(x, y, [](auto... args) { return std::set_intersection(args...); });
}

EdgeSet unite(const EdgeSet& x, const EdgeSet& y) {
  return merge_with(x, y, [](auto... args) { return std::set_union(args...); });
}

EdgeSet subtract(const EdgeSet& x, const EdgeSet& y) {
  return merge_with(x, y, [](auto... args) { return std::set_difference(args...); });
}

EdgeSet symmetric_difference(const EdgeSet& x, const EdgeSet& y) {
  return merge_with(
      x, y, [](auto... args) { return std::set_symmetric_difference(args...); });
}

std::size_t intersection_size(const EdgeSet& x, const EdgeSet& y) {
  require_same_universe(x, y);
  std::size_t count = 0;
  auto xi = x.begin();
  auto yi = y.begin();
  while (xi != x.end() && yi != y.end()) {
    if (*xi < *yi) {
      ++xi;
    } else if (*yi < *xi) {
      ++yi;
    } else {
      ++count;
      ++xi;
      ++yi;
    }
  }
  return count;
}

std::size_t union_size(const EdgeSet& x, const EdgeSet& y) {
  return x.size() + y.size() - intersection_size(x, y);
}

bool is_subset(const EdgeSet& x, const EdgeSet& of) {
  require_same_universe(x, of);
  return std::includes(of.begin(), of.end(), x.begin(), x.end());
}

Triplet::Triplet(EdgeSet a_, EdgeSet b_, EdgeSet c_, std::array<std::string, 3> labels_)
    : a(std::move(a_)), b(std::move(b_)), c(std::move(c_)), labels(std::move(labels_)) {
  require_same_universe(a, b);
  require_same_universe(a, c);
}

}  // namespace netmed
