#include "polardim/adjacency.hpp"

#include <algorithm>
#include <string>

#include "polardim/error.hpp"

namespace polardim {

bool SparseAdjacency::has_edge(NodeIndex u, NodeIndex v) const {
  if (u >= n_nodes_ || v >= n_nodes_) return false;
  const auto row = neighbors(u);
  return std::binary_search(row.begin(), row.end(), v);
}

std::vector<EdgePair> SparseAdjacency::entries() const {
  std::vector<EdgePair> out;
  out.reserve(entry_count());
  for_each_entry([&](NodeIndex u, NodeIndex v) { out.emplace_back(u, v); });
  return out;
}

SparseAdjacency SparseAdjacency::from_pairs(std::size_t n_nodes,
                                            std::vector<EdgePair> pairs,
                                            bool directed,
                                            std::vector<std::string> node_labels) {
  if (n_nodes == 0) throw ParameterError("graph must have at least one node");

  // Drop self-loops, mirror when undirected, then sort + dedupe.
  std::erase_if(pairs, [](const EdgePair& e) { return e.first == e.second; });
  if (!directed) {
    const std::size_t m = pairs.size();
    pairs.reserve(2 * m);
    for (std::size_t i = 0; i < m; ++i) {
      pairs.emplace_back(pairs[i].second, pairs[i].first);
    }
  }
  std::sort(pairs.begin(), pairs.end());
  pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());

  SparseAdjacency a;
  a.n_nodes_ = n_nodes;
  a.directed_ = directed;
  a.node_labels_ = std::move(node_labels);
  a.row_offsets_.assign(n_nodes + 1, 0);
  a.col_indices_.reserve(pairs.size());
  for (const auto& [u, v] : pairs) a.row_offsets_[u + 1]++;
  for (std::size_t i = 0; i < n_nodes; ++i) a.row_offsets_[i + 1] += a.row_offsets_[i];
  for (const auto& [u, v] : pairs) a.col_indices_.push_back(v);
  return a;
}

SparseAdjacency build_adjacency(std::size_t n_nodes,
                                std::span<const EdgePair> edge_pairs,
                                bool directed,
                                std::vector<std::string> node_labels) {
  if (n_nodes == 0) throw ParameterError("graph must have at least one node");
  for (const auto& [u, v] : edge_pairs) {
    if (u >= n_nodes || v >= n_nodes) {
      throw ParameterError("edge (" + std::to_string(u) + ", " + std::to_string(v) +
                           ") is out of range for " + std::to_string(n_nodes) + " nodes");
    }
  }
  return SparseAdjacency::from_pairs(
      n_nodes, std::vector<EdgePair>(edge_pairs.begin(), edge_pairs.end()), directed,
      std::move(node_labels));
}

}  // namespace polardim
