#include "polardim/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "polardim/error.hpp"

namespace polardim {

DimensionEstimate estimate_dimension(std::span<const double> values) {
  const std::size_t K = values.size();
  if (K < 3) {
    throw ParameterError("elbow estimation needs at least 3 singular values, got " +
                         std::to_string(K));
  }

  // Prefix sums make every candidate split O(1).
  std::vector<double> sum(K + 1, 0.0), sumsq(K + 1, 0.0);
  for (std::size_t i = 0; i < K; ++i) {
    sum[i + 1] = sum[i] + values[i];
    sumsq[i + 1] = sumsq[i] + values[i] * values[i];
  }

  const double floor = std::max(1e-12 * values[0] * values[0], 1e-300);
  const double kd = static_cast<double>(K);

  DimensionEstimate est;
  est.k_used = K;
  est.profile_loglik.resize(K - 1);
  double best = -std::numeric_limits<double>::infinity();
  for (std::size_t d = 1; d < K; ++d) {
    const double n1 = static_cast<double>(d);
    const double n2 = kd - n1;
    const double ss1 = std::max(0.0, sumsq[d] - sum[d] * sum[d] / n1);
    const double ss2 =
        std::max(0.0, (sumsq[K] - sumsq[d]) - (sum[K] - sum[d]) * (sum[K] - sum[d]) / n2);
    const double variance = std::max((ss1 + ss2) / kd, floor);
    const double loglik =
        -0.5 * kd * std::log(2.0 * std::numbers::pi * variance) - (ss1 + ss2) / (2.0 * variance);
    est.profile_loglik[d - 1] = loglik;
    if (loglik > best) {  // strict: ties resolve to the smallest d
      best = loglik;
      est.d_hat = d;
    }
  }
  return est;
}

DimensionEstimate estimate_dimension(const SingularSpectrum& spectrum) {
  return estimate_dimension(std::span<const double>(spectrum.values));
}

EntropyReport svd_entropy(std::span<const double> values) {
  const std::size_t K = values.size();
  if (K < 2) {
    throw ParameterError("SVD entropy needs at least 2 singular values, got " +
                         std::to_string(K));
  }
  double total = 0.0;
  for (double v : values) total += v;
  if (!(total > 0.0)) {
    throw UndefinedEntropyError("SVD entropy is undefined for an all-zero spectrum");
  }

  double shannon = 0.0;
  for (double v : values) {
    if (v > 0.0) {
      const double s = v / total;
      shannon -= s * std::log(s);
    }
  }

  EntropyReport report;
  report.normaliser = total;
  report.k_used = K;
  report.entropy = std::clamp(shannon / std::log(static_cast<double>(K)), 0.0, 1.0);
  return report;
}

EntropyReport svd_entropy(const SingularSpectrum& spectrum) {
  return svd_entropy(std::span<const double>(spectrum.values));
}

}  // namespace polardim
