#include "polardim/embedding.hpp"

#include <cmath>
#include <string>

#include "polardim/error.hpp"

namespace polardim {

RdpgEmbedding embed(const SparseAdjacency& a, std::size_t d, const SvdOptions& options) {
  if (d == 0) throw ParameterError("embedding dimension d must be at least 1");
  if (d > a.n_nodes()) {
    throw ParameterError("embedding dimension d=" + std::to_string(d) +
                         " exceeds the node count " + std::to_string(a.n_nodes()));
  }

  SvdFactors f = svd_factors(a, d, options);
  const auto di = static_cast<Eigen::Index>(d);
  Eigen::VectorXd root(di);
  for (Eigen::Index i = 0; i < di; ++i) root(i) = std::sqrt(f.values[static_cast<std::size_t>(i)]);

  RdpgEmbedding emb;
  emb.d = d;
  emb.left_positions = f.left * root.asDiagonal();
  emb.right_positions = root.asDiagonal() * f.right.transpose();
  return emb;
}

}  // namespace polardim
