#ifndef POLARDIM_SBM_HPP
#define POLARDIM_SBM_HPP

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "polardim/adjacency.hpp"

namespace polardim {

/// Stochastic block model: nodes partitioned into blocks, every
/// unordered cross-node pair linked independently with the probability
/// of its block pair.
struct SbmConfig {
  std::vector<std::size_t> block_sizes;
  std::vector<std::vector<double>> link_probs;  // square, symmetric, in [0,1]
  std::uint64_t seed = 0;
};

/// Throws ParameterError when the config violates its invariants
/// (zero-size block, non-square or asymmetric link_probs, probability
/// outside [0,1], fewer than 2 nodes).
void validate(const SbmConfig& config);

/// Samples an undirected simple graph; deterministic given the seed.
SparseAdjacency sample_sbm(const SbmConfig& config);

/// One replicate of one experiment cell.
struct ExperimentResult {
  std::string config_id;
  double in_prob = 0.0;
  double out_prob = 0.0;
  double split = 0.5;  // minority block share of the network
  std::size_t replicate = 0;
  std::size_t d_hat = 0;
  double entropy = 0.0;
  double gc_fraction = 0.0;
};

struct SweepOptions {
  std::size_t n = 1000;
  std::size_t replicates = 100;
  std::size_t k_for_elbow = 100;
  std::uint64_t seed = 1;
  unsigned threads = 1;
};

/// Full factorial sweep over in-group x between-group link
/// probabilities with two equal blocks. Metrics are computed on the full
/// sampled graph (not its giant component); gc_fraction records how much
/// of it the giant component covers. Rows come back in deterministic
/// (config, replicate) order with per-replicate seeds derived from
/// (seed, config index, replicate), so the table is identical for any
/// thread count.
std::vector<ExperimentResult> run_engagement_sweep(std::span<const double> in_probs,
                                                   std::span<const double> out_probs,
                                                   const SweepOptions& options);

/// Sweep over group-size imbalance at a fixed between-group probability;
/// each split is the minority block's share of the n nodes.
std::vector<ExperimentResult> run_imbalance_sweep(std::span<const double> in_probs,
                                                  double out_prob,
                                                  std::span<const double> splits,
                                                  const SweepOptions& options);

/// Writes the flat results table: optional "# ..." meta lines, one
/// header line, then tab-separated rows.
void write_results_table(std::ostream& out, std::span<const ExperimentResult> rows,
                         std::span<const std::string> meta_lines);

}  // namespace polardim

#endif  // POLARDIM_SBM_HPP
