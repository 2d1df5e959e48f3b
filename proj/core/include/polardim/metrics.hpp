#ifndef POLARDIM_METRICS_HPP
#define POLARDIM_METRICS_HPP

#include <cstddef>
#include <span>
#include <vector>

#include "polardim/svd.hpp"

namespace polardim {

/// Embedding dimension chosen by the profile-likelihood elbow, together
/// with the full curve it maximised.
struct DimensionEstimate {
  std::size_t d_hat = 0;
  /// profile_loglik[i] is the log-likelihood of candidate d = i + 1,
  /// for d in {1, ..., K-1}.
  std::vector<double> profile_loglik;
  std::size_t k_used = 0;

  double loglik_at(std::size_t d) const { return profile_loglik.at(d - 1); }
};

/// Pielou-normalised SVD entropy in [0, 1].
struct EntropyReport {
  double entropy = 0.0;
  /// Sum of the singular values used (the nuclear norm of the truncated
  /// spectrum); the values are normalised by this before the entropy.
  double normaliser = 0.0;
  std::size_t k_used = 0;
};

/// Elbow estimate of the embedding dimension for a descending singular
/// value sequence. For every candidate split d, one Gaussian is fitted to
/// the largest d values and one to the remaining K-d, with independent
/// means and a shared pooled (maximum-likelihood) variance; d_hat is the
/// split maximising the summed log-likelihood, ties going to the
/// smallest d. The pooled variance is floored at 1e-12 * values[0]^2 so
/// constant sequences stay finite. Requires K >= 3.
///
/// The result is K-sensitive by design: feeding the top 100 values and
/// the top 1000 values of the same graph can give different d_hat, so
/// k_used is always recorded alongside the estimate.
DimensionEstimate estimate_dimension(std::span<const double> values);
DimensionEstimate estimate_dimension(const SingularSpectrum& spectrum);

/// Pielou-normalised SVD entropy of a descending singular value
/// sequence: with s_i = sigma_i / sum(sigma), J = -(ln K)^-1 * sum s_i ln s_i,
/// using the convention 0 ln 0 = 0. Requires K >= 2 and at least one
/// positive value (all-zero spectra have no defined entropy).
EntropyReport svd_entropy(std::span<const double> values);
EntropyReport svd_entropy(const SingularSpectrum& spectrum);

}  // namespace polardim

#endif  // POLARDIM_METRICS_HPP
