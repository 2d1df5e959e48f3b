#ifndef POLARDIM_SVD_HPP
#define POLARDIM_SVD_HPP

#include <Eigen/Core>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "polardim/adjacency.hpp"

namespace polardim {

/// Knobs for the truncated SVD solver. Defaults are chosen so that runs
/// are reproducible bit-for-bit given the same seed and inputs.
struct SvdOptions {
  /// Ritz residual tolerance, relative to the largest singular value.
  double tolerance = 1e-10;
  /// Cap on the Krylov subspace dimension; 0 means "grow up to the full
  /// matrix dimension", which guarantees convergence.
  std::size_t max_subspace = 0;
  /// Seed for the random start vector (and any restart vectors).
  std::uint64_t seed = 0x243F6A8885A308D3ull;
};

/// The k largest singular values of an adjacency matrix, descending.
/// When rank(A) < k the missing values are exact zeros, so the length is
/// always min(k, n_nodes).
struct SingularSpectrum {
  std::vector<double> values;
  std::size_t k_requested = 0;
  std::size_t n_nodes = 0;
  bool converged = false;

  std::size_t k() const { return values.size(); }
};

/// Truncated factorisation A ~ left * diag(values) * right^T with
/// orthonormal columns on both sides.
struct SvdFactors {
  Eigen::MatrixXd left;    // n_nodes x K
  std::vector<double> values;
  Eigen::MatrixXd right;   // n_nodes x K
  bool converged = false;
};

/// Computes the k largest singular values of the adjacency matrix by
/// Golub-Kahan-Lanczos bidiagonalisation with full reorthogonalisation.
/// The empty graph yields an all-zero spectrum, not an error.
SingularSpectrum truncated_svd(const SparseAdjacency& a, std::size_t k,
                               const SvdOptions& options = {});

/// As truncated_svd, but also returns the singular vectors.
SvdFactors svd_factors(const SparseAdjacency& a, std::size_t k,
                       const SvdOptions& options = {});

}  // namespace polardim

#endif  // POLARDIM_SVD_HPP
