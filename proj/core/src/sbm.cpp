#include "polardim/sbm.hpp"

#include <charconv>
#include <cmath>
#include <ostream>
#include <random>

#include "polardim/error.hpp"
#include "polardim/io.hpp"
#include "polardim/metrics.hpp"
#include "polardim/parallel.hpp"
#include "polardim/pipeline.hpp"
#include "polardim/rng.hpp"
#include "polardim/svd.hpp"

namespace polardim {

namespace {

struct SweepCell {
  SbmConfig config;
  std::string id;
  double in_prob;
  double out_prob;
  double split;
};

std::vector<ExperimentResult> run_cells(const std::vector<SweepCell>& cells,
                                        const SweepOptions& opt) {
  if (opt.replicates == 0) throw ParameterError("sweep needs at least 1 replicate");
  const std::size_t k = std::min(opt.k_for_elbow, opt.n);

  std::vector<ExperimentResult> rows(cells.size() * opt.replicates);
  parallel_for(rows.size(), opt.threads, [&](std::size_t t) {
    const std::size_t cell_idx = t / opt.replicates;
    const std::size_t rep = t % opt.replicates;
    const SweepCell& cell = cells[cell_idx];

    SbmConfig config = cell.config;
    config.seed = derive_seed(opt.seed, cell_idx, rep);
    const SparseAdjacency graph = sample_sbm(config);

    SvdOptions svd_opt;
    svd_opt.seed = derive_seed(config.seed, 0x53564453u);  // independent solver stream
    const SingularSpectrum spectrum = truncated_svd(graph, k, svd_opt);

    ExperimentResult& row = rows[t];
    row.config_id = cell.id;
    row.in_prob = cell.in_prob;
    row.out_prob = cell.out_prob;
    row.split = cell.split;
    row.replicate = rep;
    row.d_hat = estimate_dimension(spectrum).d_hat;
    row.entropy = svd_entropy(spectrum).entropy;
    row.gc_fraction = static_cast<double>(giant_component_size(graph)) /
                      static_cast<double>(graph.n_nodes());
  });
  return rows;
}

void check_probability(double p, const char* name) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw ParameterError(std::string(name) + " probability " + format_double(p) +
                         " is outside [0, 1]");
  }
}

}  // namespace

void validate(const SbmConfig& config) {
  const std::size_t blocks = config.block_sizes.size();
  if (blocks == 0) throw ParameterError("SBM needs at least one block");
  std::size_t n = 0;
  for (std::size_t size : config.block_sizes) {
    if (size == 0) throw ParameterError("SBM block sizes must be positive");
    n += size;
  }
  if (n < 2) throw ParameterError("SBM needs at least 2 nodes");
  if (config.link_probs.size() != blocks) {
    throw ParameterError("link_probs must be square with one row per block");
  }
  for (std::size_t i = 0; i < blocks; ++i) {
    if (config.link_probs[i].size() != blocks) {
      throw ParameterError("link_probs must be square with one row per block");
    }
    for (std::size_t j = 0; j < blocks; ++j) {
      check_probability(config.link_probs[i][j], "link");
      if (config.link_probs[i][j] != config.link_probs[j][i]) {
        throw ParameterError("link_probs must be symmetric for undirected generation");
      }
    }
  }
}

SparseAdjacency sample_sbm(const SbmConfig& config) {
  validate(config);
  std::size_t n = 0;
  for (std::size_t size : config.block_sizes) n += size;

  std::vector<std::uint32_t> block_of(n);
  std::size_t at = 0;
  for (std::size_t b = 0; b < config.block_sizes.size(); ++b) {
    for (std::size_t i = 0; i < config.block_sizes[b]; ++i) {
      block_of[at++] = static_cast<std::uint32_t>(b);
    }
  }

  std::mt19937_64 rng(config.seed);
  std::vector<EdgePair> pairs;
  for (NodeIndex u = 0; u + 1 < n; ++u) {
    const auto& row = config.link_probs[block_of[u]];
    for (NodeIndex v = u + 1; v < n; ++v) {
      if (uniform01(rng) < row[block_of[v]]) pairs.emplace_back(u, v);
    }
  }
  return SparseAdjacency::from_pairs(n, std::move(pairs), /*directed=*/false);
}

std::vector<ExperimentResult> run_engagement_sweep(std::span<const double> in_probs,
                                                   std::span<const double> out_probs,
                                                   const SweepOptions& options) {
  if (in_probs.empty() || out_probs.empty()) {
    throw ParameterError("engagement sweep needs at least one in- and one out-probability");
  }
  if (options.n < 2) throw ParameterError("engagement sweep needs n >= 2");
  for (double p : in_probs) check_probability(p, "in-group");
  for (double p : out_probs) check_probability(p, "between-group");

  const std::size_t half = options.n / 2;
  std::vector<SweepCell> cells;
  for (double in_p : in_probs) {
    for (double out_p : out_probs) {
      SweepCell cell;
      cell.config.block_sizes = {half, options.n - half};
      cell.config.link_probs = {{in_p, out_p}, {out_p, in_p}};
      cell.id = "in" + format_double(in_p) + "_out" + format_double(out_p);
      cell.in_prob = in_p;
      cell.out_prob = out_p;
      cell.split = 0.5;
      cells.push_back(std::move(cell));
    }
  }
  return run_cells(cells, options);
}

std::vector<ExperimentResult> run_imbalance_sweep(std::span<const double> in_probs,
                                                  double out_prob,
                                                  std::span<const double> splits,
                                                  const SweepOptions& options) {
  if (in_probs.empty() || splits.empty()) {
    throw ParameterError("imbalance sweep needs at least one in-probability and one split");
  }
  if (options.n < 2) throw ParameterError("imbalance sweep needs n >= 2");
  for (double p : in_probs) check_probability(p, "in-group");
  check_probability(out_prob, "between-group");

  std::vector<SweepCell> cells;
  for (double in_p : in_probs) {
    for (double split : splits) {
      const auto minority = static_cast<std::size_t>(
          std::llround(split * static_cast<double>(options.n)));
      if (minority == 0 || minority >= options.n) {
        throw ParameterError("split " + format_double(split) +
                             " produces an empty block at n = " + std::to_string(options.n));
      }
      SweepCell cell;
      cell.config.block_sizes = {minority, options.n - minority};
      cell.config.link_probs = {{in_p, out_prob}, {out_prob, in_p}};
      cell.id = "in" + format_double(in_p) + "_split" + format_double(split);
      cell.in_prob = in_p;
      cell.out_prob = out_prob;
      cell.split = split;
      cells.push_back(std::move(cell));
    }
  }
  return run_cells(cells, options);
}

void write_results_table(std::ostream& out, std::span<const ExperimentResult> rows,
                         std::span<const std::string> meta_lines) {
  for (const auto& line : meta_lines) out << "# " << line << "\n";
  out << "config_id\tin_prob\tout_prob\tsplit\treplicate\td_hat\tentropy\tgc_fraction\n";
  for (const auto& r : rows) {
    out << r.config_id << '\t' << format_double(r.in_prob) << '\t'
        << format_double(r.out_prob) << '\t' << format_double(r.split) << '\t'
        << r.replicate << '\t' << r.d_hat << '\t' << format_double(r.entropy) << '\t'
        << format_double(r.gc_fraction) << '\n';
  }
}

}  // namespace polardim
