#ifndef POLARDIM_PIPELINE_HPP
#define POLARDIM_PIPELINE_HPP

#include <cstdint>
#include <functional>
#include <vector>

#include "polardim/adjacency.hpp"

namespace polardim {

/// Number of nodes in the largest (weakly) connected component.
std::size_t giant_component_size(const SparseAdjacency& a);

/// Induced subgraph on the largest connected component, using weak
/// connectivity for directed graphs. Size ties break toward the
/// component containing the smallest node index; surviving nodes keep
/// their relative order (and labels).
SparseAdjacency giant_component(const SparseAdjacency& a);

/// Node bootstrap over a fixed base graph: replicate r samples n node
/// indices with replacement and inherits an edge (i, j) wherever the
/// base graph links sampled[i] to sampled[j] and i != j. Two copies of
/// the same node are never linked to each other, since the base graph
/// has no self-loops to inherit. Replicates are deterministic functions
/// of (seed, index), so they can be generated in parallel and in any
/// order.
class BootstrapSampler {
 public:
  BootstrapSampler(SparseAdjacency base, std::uint64_t seed);

  const SparseAdjacency& base() const { return base_; }

  /// The node multiset drawn for a replicate (sampled[i] = original
  /// index of replicate node i).
  std::vector<NodeIndex> sample_nodes(std::size_t replicate_index) const;

  SparseAdjacency replicate(std::size_t replicate_index) const;

 private:
  SparseAdjacency base_;
  std::uint64_t seed_;
};

/// Sequentially streams `replicates` bootstrap networks into fn.
/// Throws ParameterError when replicates == 0 or the graph is empty.
void bootstrap_networks(const SparseAdjacency& a, std::size_t replicates, std::uint64_t seed,
                        const std::function<void(std::size_t, SparseAdjacency&&)>& fn);

}  // namespace polardim

#endif  // POLARDIM_PIPELINE_HPP
