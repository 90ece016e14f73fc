#pragma once

// Multiplex edge lists.
//
// Text format, one record per line, whitespace separated:
//
//   <layer> <node> <node> [weight]
//
// Lines starting with '#' and blank lines are ignored. A missing weight is 1.
// Records are undirected: (u, v) and (v, u) name the same pair and repeated
// records have their weights summed. Self-loops are dropped and counted.
//
// Node identifiers are opaque tokens. Dense indices follow the sorted order
// of the identifiers (numerically if every identifier is an integer), so the
// indexing does not depend on record order.

#include <array>
#include <cstddef>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "netmed/netcore.hpp"

namespace netmed {

struct WeightedEdge {
  NodePair pair;
  double weight = 1.0;

  friend bool operator==(const WeightedEdge&, const WeightedEdge&) = default;
};

struct MultiplexDataset {
  std::vector<std::string> node_names;  // index -> identifier
  // Edges per layer, sorted by canonical pair.
  std::map<std::string, std::vector<WeightedEdge>> layers;
  std::size_t dropped_self_loops = 0;

  NodeUniverse universe() const;
  std::vector<std::string> layer_names() const;
  const std::vector<WeightedEdge>& layer(const std::string& name) const;
};

// Throws ParseError (with line number) and EmptyInput. `node_list`, when
// given, contributes nodes that may be isolated in every layer; its lines
// hold an identifier as the first token, and a leading "nodeID" header line
// is skipped.
MultiplexDataset parse_multiplex(std::istream& input,
                                 std::istream* node_list = nullptr);
MultiplexDataset load_multiplex(const std::string& path,
                                const std::optional<std::string>& node_list_path = {});

// Sorted, diff-stable output that parse_multiplex reads back exactly.
void write_multiplex(std::ostream& out, const MultiplexDataset& dataset);

// Pairs of a layer with weight > 0.
EdgeSet binarize(const MultiplexDataset& dataset, const std::string& layer);

// roles = {A, B, C}. Throws UnknownLayer.
Triplet extract_triplet(const MultiplexDataset& dataset,
                        const std::array<std::string, 3>& roles);

inline constexpr std::size_t kDefaultWindowCount = 7;

struct WeightWindows {
  // windows[0] holds the strongest (largest-weight) edges.
  std::vector<EdgeSet> windows;
  // bounds[w] = {min weight, max weight} of window w.
  std::vector<std::pair<double, double>> bounds;
};

// Splits a layer's edges, sorted by decreasing weight with ties broken by
// canonical pair order, into k contiguous groups whose sizes differ by at
// most one; the strongest windows take the remainder. Throws UnknownLayer and
// TooFewEdges.
WeightWindows weight_windows(const MultiplexDataset& dataset, const std::string& layer,
                             std::size_t k = kDefaultWindowCount);

}  // namespace netmed
