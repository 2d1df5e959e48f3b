#include "polardim/polarisation.hpp"

#include <string>

#include "polardim/error.hpp"

namespace polardim {

namespace {

const char* trend_of(std::int64_t delta_d) {
  if (delta_d < 0) return "polarising";
  if (delta_d > 0) return "depolarising";
  return "stable";
}

}  // namespace

PolarisationVerdict compare_windows(const std::vector<WindowMetrics>& windows) {
  if (windows.size() < 2) {
    throw ParameterError("window comparison needs at least 2 windows, got " +
                         std::to_string(windows.size()));
  }
  const std::size_t k = windows.front().dimension.k_used;
  for (const auto& w : windows) {
    if (w.dimension.k_used != k || w.entropy.k_used != k) {
      throw ComparabilityError("window '" + w.label +
                               "' was computed with a different k than '" +
                               windows.front().label + "'; estimates are not comparable");
    }
  }

  PolarisationVerdict verdict;
  verdict.k_used = k;
  for (std::size_t i = 1; i < windows.size(); ++i) {
    const auto& prev = windows[i - 1];
    const auto& cur = windows[i];
    WindowDelta step;
    step.from = prev.label;
    step.to = cur.label;
    step.delta_d = static_cast<std::int64_t>(cur.dimension.d_hat) -
                   static_cast<std::int64_t>(prev.dimension.d_hat);
    step.delta_entropy = cur.entropy.entropy - prev.entropy.entropy;
    step.trend = trend_of(step.delta_d);
    verdict.steps.push_back(std::move(step));
  }

  verdict.net_delta_d = static_cast<std::int64_t>(windows.back().dimension.d_hat) -
                        static_cast<std::int64_t>(windows.front().dimension.d_hat);
  verdict.net_delta_entropy =
      windows.back().entropy.entropy - windows.front().entropy.entropy;
  verdict.verdict = trend_of(verdict.net_delta_d);
  return verdict;
}

}  // namespace polardim
