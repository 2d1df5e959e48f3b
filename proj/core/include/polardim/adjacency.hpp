#ifndef POLARDIM_ADJACENCY_HPP
#define POLARDIM_ADJACENCY_HPP

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace polardim {

using NodeIndex = std::uint32_t;
using EdgePair = std::pair<NodeIndex, NodeIndex>;

/// Unweighted simple graph stored as a compressed sparse adjacency
/// pattern. Immutable after construction and safe to share across
/// threads.
///
/// Invariants maintained by construction:
///   - entries are unique ordered pairs (row, col), row-major sorted;
///   - no self-loops;
///   - undirected graphs store both orientations of every edge, so the
///     entry set is symmetric.
class SparseAdjacency {
 public:
  SparseAdjacency() = default;

  std::size_t n_nodes() const { return n_nodes_; }
  bool directed() const { return directed_; }

  /// Number of stored (row, col) entries; for undirected graphs every
  /// edge counts twice.
  std::size_t entry_count() const { return col_indices_.size(); }

  /// Number of edges in the usual sense: unordered pairs when
  /// undirected, ordered pairs when directed.
  std::size_t n_edges() const {
    return directed_ ? entry_count() : entry_count() / 2;
  }

  /// Out-neighbours of u, sorted ascending.
  std::span<const NodeIndex> neighbors(NodeIndex u) const {
    return {col_indices_.data() + row_offsets_[u],
            col_indices_.data() + row_offsets_[u + 1]};
  }

  bool has_edge(NodeIndex u, NodeIndex v) const;

  /// Optional external identifiers, indexed by node; empty when the
  /// graph was built from bare indices.
  const std::vector<std::string>& node_labels() const { return node_labels_; }

  /// Visits every stored entry in row-major order.
  template <typename Fn>
  void for_each_entry(Fn&& fn) const {
    for (NodeIndex u = 0; u < n_nodes_; ++u) {
      for (std::size_t p = row_offsets_[u]; p < row_offsets_[u + 1]; ++p) {
        fn(u, col_indices_[p]);
      }
    }
  }

  /// Materialises the entry list (row-major sorted).
  std::vector<EdgePair> entries() const;

  /// Canonicalising constructor used by the builders: drops self-loops,
  /// collapses duplicates, and mirrors edges when undirected. Indices
  /// must already be < n_nodes.
  static SparseAdjacency from_pairs(std::size_t n_nodes,
                                    std::vector<EdgePair> pairs,
                                    bool directed,
                                    std::vector<std::string> node_labels = {});

 private:
  std::size_t n_nodes_ = 0;
  bool directed_ = false;
  std::vector<std::size_t> row_offsets_;  // size n_nodes + 1
  std::vector<NodeIndex> col_indices_;
  std::vector<std::string> node_labels_;
};

/// Builds a simple graph from raw edge pairs. Validates that every index
/// is < n_nodes (ParameterError naming the offending pair otherwise);
/// self-loops are dropped, duplicates collapsed, and for undirected
/// graphs each input pair implies its reverse.
SparseAdjacency build_adjacency(std::size_t n_nodes,
                                std::span<const EdgePair> edge_pairs,
                                bool directed,
                                std::vector<std::string> node_labels = {});

}  // namespace polardim

#endif  // POLARDIM_ADJACENCY_HPP
