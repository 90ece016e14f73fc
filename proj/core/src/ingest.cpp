#include "netmed/ingest.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>
#include <unordered_map>

#include "netmed/errors.hpp"

namespace netmed {
namespace {

struct Record {
  std::size_t line;
  std::string layer;
  std::string u;
  std::string v;
  double weight;
};

std::optional<long long> as_integer(const std::string& token) {
  long long value = 0;
  const char* end = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(token.data(), end, value);
  if (ec != std::errc() || ptr != end) return std::nullopt;
  return value;
}

double parse_weight(const std::string& token, std::size_t line) {
  double value = 0.0;
  const char* end = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(token.data(), end, value);
  if (ec != std::errc() || ptr != end) {
    throw ParseError(line, "weight '" + token + "' is not a number");
  }
  if (!std::isfinite(value)) throw ParseError(line, "weight must be finite");
  return value;
}

bool is_skippable(const std::string& line) {
  const auto first = line.find_first_not_of(" \t\r");
  return first == std::string::npos || line[first] == '#';
}

std::vector<std::string> tokenize(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> tokens;
  for (std::string token; in >> token;) tokens.push_back(std::move(token));
  return tokens;
}

std::vector<std::string> order_nodes(const std::set<std::string>& names) {
  std::vector<std::string> ordered(names.begin(), names.end());
  const bool numeric = std::all_of(ordered.begin(), ordered.end(),
                                   [](const auto& n) { return as_integer(n).has_value(); });
  if (numeric) {
    std::sort(ordered.begin(), ordered.end(), [](const auto& x, const auto& y) {
      return *as_integer(x) < *as_integer(y);
    });
  }
  return ordered;
}

std::string format_weight(double w) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", w);
  return buf;
}

}  // namespace

NodeUniverse MultiplexDataset::universe() const {
  return NodeUniverse(static_cast<NodeIndex>(node_names.size()));
}

std::vector<std::string> MultiplexDataset::layer_names() const {
  std::vector<std::string> names;
  for (const auto& [name, edges] : layers) names.push_back(name);
  return names;
}

const std::vector<WeightedEdge>& MultiplexDataset::layer(const std::string& name) const {
  const auto it = layers.find(name);
  if (it == layers.end()) throw UnknownLayer("no layer named '" + name + "'");
  return it->second;
}

MultiplexDataset parse_multiplex(std::istream& input, std::istream* node_list) {
  std::vector<Record> records;
  std::set<std::string> names;
  MultiplexDataset dataset;

  std::string line;
  for (std::size_t number = 1; std::getline(input, line); ++number) {
    if (is_skippable(line)) continue;
    auto tokens = tokenize(line);
    if (tokens.size() != 3 && tokens.size() != 4) {
      throw ParseError(number, "expected 'layer node node [weight]', got " +
                                   std::to_string(tokens.size()) + " fields");
    }
    const double weight = tokens.size() == 4 ? parse_weight(tokens[3], number) : 1.0;
    names.insert(tokens[1]);
    names.insert(tokens[2]);
    if (tokens[1] == tokens[2]) {
      ++dataset.dropped_self_loops;
      continue;
    }
    records.push_back({number, std::move(tokens[0]), std::move(tokens[1]),
                       std::move(tokens[2]), weight});
  }

  if (node_list != nullptr) {
    bool first = true;
    while (std::getline(*node_list, line)) {
      if (is_skippable(line)) continue;
      const auto tokens = tokenize(line);
      if (first && tokens.front() == "nodeID") {
        first = false;
        continue;
      }
      first = false;
      names.insert(tokens.front());
    }
  }

  if (records.empty() && dataset.dropped_self_loops == 0) {
    throw EmptyInput("no edge records found");
  }
  if (names.size() < 2) throw EmptyInput("fewer than two distinct nodes");

  dataset.node_names = order_nodes(names);
  std::unordered_map<std::string, NodeIndex> index;
  for (NodeIndex k = 0; k < dataset.node_names.size(); ++k) {
    index.emplace(dataset.node_names[k], k);
  }

  std::map<std::string, std::map<NodePair, double>> merged;
  for (const auto& r : records) {
    const NodePair pair = NodePair::of(index.at(r.u), index.at(r.v));
    merged[r.layer][pair] += r.weight;
  }
  for (auto& [layer, edges] : merged) {
    auto& out = dataset.layers[layer];
    out.reserve(edges.size());
    for (const auto& [pair, weight] : edges) out.push_back({pair, weight});
  }
  return dataset;
}

MultiplexDataset load_multiplex(const std::string& path,
                                const std::optional<std::string>& node_list_path) {
  std::ifstream in(path);
  if (!in) throw EmptyInput("cannot open '" + path + "'");
  if (!node_list_path) return parse_multiplex(in);
  std::ifstream nodes(*node_list_path);
  if (!nodes) throw EmptyInput("cannot open '" + *node_list_path + "'");
  return parse_multiplex(in, &nodes);
}

void write_multiplex(std::ostream& out, const MultiplexDataset& dataset) {
  out << "# layer node node weight\n";
  for (const auto& [layer, edges] : dataset.layers) {
    for (const auto& e : edges) {
      out << layer << ' ' << dataset.node_names[e.pair.i] << ' '
          << dataset.node_names[e.pair.j] << ' ' << format_weight(e.weight) << '\n';
    }
  }
}

EdgeSet binarize(const MultiplexDataset& dataset, const std::string& layer) {
  const NodeUniverse universe = dataset.universe();
  std::vector<PairIndex> indices;
  for (const auto& e : dataset.layer(layer)) {
    if (e.weight > 0.0) indices.push_back(universe.index_of(e.pair));
  }
  return EdgeSet::from_indices(universe, std::move(indices));
}

Triplet extract_triplet(const MultiplexDataset& dataset,
                        const std::array<std::string, 3>& roles) {
  return Triplet(binarize(dataset, roles[0]), binarize(dataset, roles[1]),
                 binarize(dataset, roles[2]), roles);
}

WeightWindows weight_windows(const MultiplexDataset& dataset, const std::string& layer,
                             std::size_t k) {
  if (k == 0) throw InvalidArgument("need at least one window");
  std::vector<WeightedEdge> edges = dataset.layer(layer);
  if (edges.size() < k) {
    throw TooFewEdges("layer '" + layer + "' has " + std::to_string(edges.size()) +
                      " edges, fewer than " + std::to_string(k) + " windows");
  }
  std::stable_sort(edges.begin(), edges.end(), [](const auto& x, const auto& y) {
    return x.weight > y.weight;
  });

  const NodeUniverse universe = dataset.universe();
  const std::size_t base = edges.size() / k;
  const std::size_t extra = edges.size() % k;
  WeightWindows out;
  std::size_t begin = 0;
  for (std::size_t w = 0; w < k; ++w) {
    const std::size_t size = base + (w < extra ? 1 : 0);
    std::vector<PairIndex> indices;
    indices.reserve(size);
    for (std::size_t e = begin; e < begin + size; ++e) {
      indices.push_back(universe.index_of(edges[e].pair));
    }
    out.windows.push_back(EdgeSet::from_indices(universe, std::move(indices)));
    out.bounds.emplace_back(edges[begin + size - 1].weight, edges[begin].weight);
    begin += size;
  }
  return out;
}

}  // namespace netmed
