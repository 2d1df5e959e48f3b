#include "polardim/pipeline.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <utility>

#include "polardim/error.hpp"
#include "polardim/rng.hpp"

namespace polardim {

namespace {

struct UnionFind {
  std::vector<NodeIndex> parent;

  explicit UnionFind(std::size_t n) : parent(n) {
    std::iota(parent.begin(), parent.end(), NodeIndex{0});
  }

  NodeIndex find(NodeIndex x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }

  void unite(NodeIndex a, NodeIndex b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

// Root of the winning component: largest size, ties to the component
// holding the smallest node index. Roots are component minima here, so
// comparing roots settles ties deterministically.
NodeIndex giant_root(const SparseAdjacency& a, UnionFind& uf) {
  const std::size_t n = a.n_nodes();
  a.for_each_entry([&](NodeIndex u, NodeIndex v) { uf.unite(u, v); });

  std::vector<std::size_t> size(n, 0);
  for (NodeIndex v = 0; v < n; ++v) size[uf.find(v)]++;

  NodeIndex best = 0;
  for (NodeIndex root = 1; root < n; ++root) {
    if (size[root] > size[best]) best = root;
  }
  return best;
}

}  // namespace

std::size_t giant_component_size(const SparseAdjacency& a) {
  if (a.n_nodes() == 0) return 0;
  UnionFind uf(a.n_nodes());
  const NodeIndex root = giant_root(a, uf);
  std::size_t count = 0;
  for (NodeIndex v = 0; v < a.n_nodes(); ++v) {
    if (uf.find(v) == root) count++;
  }
  return count;
}

SparseAdjacency giant_component(const SparseAdjacency& a) {
  if (a.n_nodes() == 0) throw ParameterError("giant component of an empty graph");
  UnionFind uf(a.n_nodes());
  const NodeIndex root = giant_root(a, uf);

  const NodeIndex kAbsent = static_cast<NodeIndex>(a.n_nodes());
  std::vector<NodeIndex> remap(a.n_nodes(), kAbsent);
  std::vector<std::string> labels;
  const bool has_labels = !a.node_labels().empty();
  NodeIndex next = 0;
  for (NodeIndex v = 0; v < a.n_nodes(); ++v) {
    if (uf.find(v) == root) {
      remap[v] = next++;
      if (has_labels) labels.push_back(a.node_labels()[v]);
    }
  }

  std::vector<EdgePair> pairs;
  a.for_each_entry([&](NodeIndex u, NodeIndex v) {
    if (remap[u] != kAbsent && remap[v] != kAbsent) pairs.emplace_back(remap[u], remap[v]);
  });
  return SparseAdjacency::from_pairs(next, std::move(pairs), a.directed(), std::move(labels));
}

BootstrapSampler::BootstrapSampler(SparseAdjacency base, std::uint64_t seed)
    : base_(std::move(base)), seed_(seed) {
  if (base_.n_nodes() == 0) throw ParameterError("bootstrap over an empty graph");
}

std::vector<NodeIndex> BootstrapSampler::sample_nodes(std::size_t replicate_index) const {
  const std::size_t n = base_.n_nodes();
  std::mt19937_64 rng(derive_seed(seed_, replicate_index));
  std::vector<NodeIndex> sampled(n);
  for (std::size_t i = 0; i < n; ++i) {
    sampled[i] = static_cast<NodeIndex>(uniform_index(rng, n));
  }
  return sampled;
}

SparseAdjacency BootstrapSampler::replicate(std::size_t replicate_index) const {
  const std::size_t n = base_.n_nodes();
  const std::vector<NodeIndex> sampled = sample_nodes(replicate_index);

  // positions[v] = replicate slots that drew original node v; walking
  // base edges once keeps this O(edges) instead of O(n^2).
  std::vector<std::vector<NodeIndex>> positions(n);
  for (std::size_t i = 0; i < n; ++i) {
    positions[sampled[i]].push_back(static_cast<NodeIndex>(i));
  }

  std::vector<EdgePair> pairs;
  pairs.reserve(base_.entry_count());
  base_.for_each_entry([&](NodeIndex u, NodeIndex v) {
    if (!base_.directed() && u > v) return;  // mirrored on construction
    for (NodeIndex i : positions[u]) {
      for (NodeIndex j : positions[v]) {
        if (i != j) pairs.emplace_back(i, j);
      }
    }
  });
  return SparseAdjacency::from_pairs(n, std::move(pairs), base_.directed());
}

void bootstrap_networks(const SparseAdjacency& a, std::size_t replicates, std::uint64_t seed,
                        const std::function<void(std::size_t, SparseAdjacency&&)>& fn) {
  if (replicates == 0) throw ParameterError("bootstrap needs at least 1 replicate");
  BootstrapSampler sampler(a, seed);
  for (std::size_t r = 0; r < replicates; ++r) {
    fn(r, sampler.replicate(r));
  }
}

}  // namespace polardim
