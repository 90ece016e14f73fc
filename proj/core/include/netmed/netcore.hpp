#pragma once

// Edge sets of simple undirected graphs over a fixed, dense node universe,
// and the set algebra every measure in the library is written in terms of.

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace netmed {

using NodeIndex = std::uint32_t;

// Position of an unordered pair (i, j), i < j, in row-major order:
// (0,1), (0,2), ..., (0,N-1), (1,2), ...
using PairIndex = std::uint64_t;

struct NodePair {
  NodeIndex i = 0;
  NodeIndex j = 1;

  // Canonicalizes (u, v) to i < j. Throws InvalidArgument for u == v.
  static NodePair of(NodeIndex u, NodeIndex v);

  friend bool operator==(const NodePair&, const NodePair&) = default;
  friend auto operator<=>(const NodePair&, const NodePair&) = default;
};

class NodeUniverse {
 public:
  // Throws InvalidArgument if n_nodes < 2.
  explicit NodeUniverse(NodeIndex n_nodes);

  NodeIndex n_nodes() const noexcept { return n_nodes_; }
  // N(N-1)/2, the number of distinct node pairs.
  PairIndex pair_count() const noexcept { return pair_count_; }

  bool contains(const NodePair& pair) const noexcept {
    return pair.i < pair.j && pair.j < n_nodes_;
  }

  PairIndex index_of(const NodePair& pair) const;
  NodePair pair_at(PairIndex index) const;

  friend bool operator==(const NodeUniverse& x, const NodeUniverse& y) noexcept {
    return x.n_nodes_ == y.n_nodes_;
  }

 private:
  NodeIndex n_nodes_;
  PairIndex pair_count_;
};

// Immutable set of node pairs, stored as strictly increasing pair indices.
class EdgeSet {
 public:
  using const_iterator = std::vector<PairIndex>::const_iterator;

  explicit EdgeSet(NodeUniverse universe) : universe_(universe) {}

  // Duplicates are merged. Throws InvalidArgument for out-of-universe pairs.
  static EdgeSet from_pairs(NodeUniverse universe, std::span<const NodePair> pairs);
  static EdgeSet from_indices(NodeUniverse universe, std::vector<PairIndex> indices);
  // Skips validation; `sorted_unique` must be strictly increasing and < pair_count.
  static EdgeSet from_sorted_unique(NodeUniverse universe,
                                    std::vector<PairIndex> sorted_unique);
  static EdgeSet complete(NodeUniverse universe);

  const NodeUniverse& universe() const noexcept { return universe_; }
  std::size_t size() const noexcept { return edges_.size(); }
  bool empty() const noexcept { return edges_.empty(); }

  bool contains(const NodePair& pair) const;
  bool contains_index(PairIndex index) const;

  std::span<const PairIndex> indices() const noexcept { return edges_; }
  std::vector<NodePair> pairs() const;

  const_iterator begin() const noexcept { return edges_.begin(); }
  const_iterator end() const noexcept { return edges_.end(); }

  friend bool operator==(const EdgeSet& x, const EdgeSet& y) {
    return x.universe_ == y.universe_ && x.edges_ == y.edges_;
  }

 private:
  EdgeSet(NodeUniverse universe, std::vector<PairIndex> edges)
      : universe_(universe), edges_(std::move(edges)) {}

  NodeUniverse universe_;
  std::vector<PairIndex> edges_;
};

// All binary operations throw UniverseMismatch when the universes differ.
EdgeSet intersect(const EdgeSet& x, const EdgeSet& y);
EdgeSet unite(const EdgeSet& x, const EdgeSet& y);
EdgeSet subtract(const EdgeSet& x, const EdgeSet& y);
EdgeSet symmetric_difference(const EdgeSet& x, const EdgeSet& y);

std::size_t intersection_size(const EdgeSet& x, const EdgeSet& y);
std::size_t union_size(const EdgeSet& x, const EdgeSet& y);
bool is_subset(const EdgeSet& x, const EdgeSet& of);

void require_same_universe(const EdgeSet& x, const EdgeSet& y);

// Three layers over one node universe, in role order (A, B, C).
struct Triplet {
  Triplet(EdgeSet a, EdgeSet b, EdgeSet c,
          std::array<std::string, 3> labels = {"A", "B", "C"});

  const NodeUniverse& universe() const noexcept { return a.universe(); }

  EdgeSet a;
  EdgeSet b;
  EdgeSet c;
  std::array<std::string, 3> labels;
};

}  // namespace netmed
