#ifndef POLARDIM_EMBEDDING_HPP
#define POLARDIM_EMBEDDING_HPP

#include <Eigen/Core>
#include <cstddef>

#include "polardim/adjacency.hpp"
#include "polardim/svd.hpp"

namespace polardim {

/// Latent-position estimates of a d-truncated SVD embedding:
/// left_positions = U|_d sqrt(S) (n x d) and
/// right_positions = sqrt(S) (V|_d)^T (d x n), so that
/// left_positions * right_positions is the best rank-d approximation of
/// the adjacency matrix in Frobenius norm.
struct RdpgEmbedding {
  Eigen::MatrixXd left_positions;   // n_nodes x d
  Eigen::MatrixXd right_positions;  // d x n_nodes
  std::size_t d = 0;

  /// Estimated interaction probability for the ordered pair (i, j).
  /// Values are reported raw and may fall outside [0, 1].
  double interaction(NodeIndex i, NodeIndex j) const {
    return left_positions.row(i).dot(right_positions.col(j));
  }

  /// Dense reconstruction L * R of the adjacency matrix.
  Eigen::MatrixXd reconstruct() const { return left_positions * right_positions; }
};

/// Rank-d embedding of the graph. Requires 1 <= d <= n_nodes.
RdpgEmbedding embed(const SparseAdjacency& a, std::size_t d, const SvdOptions& options = {});

}  // namespace polardim

#endif  // POLARDIM_EMBEDDING_HPP
