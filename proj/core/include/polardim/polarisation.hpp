#ifndef POLARDIM_POLARISATION_HPP
#define POLARDIM_POLARISATION_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "polardim/metrics.hpp"

namespace polardim {

/// Per-window estimates, in chronological order.
struct WindowMetrics {
  std::string label;
  DimensionEstimate dimension;
  EntropyReport entropy;
};

/// Delta between two consecutive windows. A strict decrease of d_hat is
/// flagged "polarising"; entropy deltas are carried as complementary
/// evidence only and never drive the flag.
struct WindowDelta {
  std::string from;
  std::string to;
  std::int64_t delta_d = 0;
  double delta_entropy = 0.0;
  std::string trend;  // "polarising" | "stable" | "depolarising"
};

struct PolarisationVerdict {
  std::size_t k_used = 0;
  std::vector<WindowDelta> steps;
  std::int64_t net_delta_d = 0;
  double net_delta_entropy = 0.0;
  /// Overall verdict from the net change of d_hat between the first and
  /// last window.
  std::string verdict;
};

/// Compares a time-ordered series of per-window estimates. Requires at
/// least two windows, all computed with the same k_used
/// (ComparabilityError otherwise).
PolarisationVerdict compare_windows(const std::vector<WindowMetrics>& windows);

}  // namespace polardim

#endif  // POLARDIM_POLARISATION_HPP
