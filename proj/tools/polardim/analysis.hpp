#ifndef POLARDIM_TOOLS_ANALYSIS_HPP
#define POLARDIM_TOOLS_ANALYSIS_HPP

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>
#include <polardim/adjacency.hpp>
#include <polardim/records.hpp>
#include <polardim/svd.hpp>

namespace polardim::cli {

using ordered_json = nlohmann::ordered_json;

enum class InputFormat { auto_detect, edgelist, records };

InputFormat parse_format(const std::string& name);

/// Settings shared by every spectral command.
struct SpectralSettings {
  std::size_t k = 100;
  double tolerance = 1e-10;
  std::size_t max_subspace = 0;
  std::uint64_t seed = 1;
  bool directed = false;

  SvdOptions svd_options(std::uint64_t stream) const;
};

/// Point estimates for one network and its giant component, mirroring
/// the four report columns Dimension / Dimension GC / Entropy /
/// Entropy GC plus the sizes needed to interpret them.
struct AnalysisReport {
  std::string input_digest;
  std::size_t n_nodes = 0;
  std::size_t n_edges = 0;
  std::size_t giant_nodes = 0;
  std::size_t giant_edges = 0;
  std::size_t k_used = 0;
  std::size_t d_hat = 0;
  std::size_t d_hat_gc = 0;
  double entropy = 0.0;
  double entropy_gc = 0.0;
  std::vector<double> spectrum;  // emitted only when requested
  bool has_spectrum = false;

  ordered_json to_json() const;
};

/// Loads a network file. auto_detect distinguishes 2-column edge lists
/// from 4-field interaction records (and JSON-per-line records); a
/// records file yields the network of all records under the default
/// included kinds.
SparseAdjacency load_network(const std::filesystem::path& path, InputFormat format,
                             bool directed);

/// Computes the full-network and giant-component estimates. k is
/// clamped to the relevant node counts (with a warning to stderr when
/// that happens). Throws NumericalError if the solver hits its subspace
/// cap without converging.
AnalysisReport analyze_network(const SparseAdjacency& a, const SpectralSettings& settings,
                               bool emit_spectrum, const std::string& digest);

ordered_json make_meta(const std::string& command, std::uint64_t seed,
                       const std::string& input_digest, ordered_json config);

/// min / 2.5% / 25% / 50% / 75% / 97.5% / max with linear interpolation.
ordered_json quantile_summary(std::vector<double> values);

struct WindowArg {
  std::string label;
  std::int64_t start = 0;
  std::int64_t end = 0;
};

WindowArg parse_window_arg(const std::string& text);
std::vector<InteractionKind> parse_kinds_csv(const std::string& csv);

// Command runners; all write their document to stdout and return 0.
struct EstimateArgs {
  std::filesystem::path input;
  InputFormat format = InputFormat::auto_detect;
  SpectralSettings settings;
  bool emit_spectrum = false;
};
int run_estimate(const EstimateArgs& args);

struct CompareArgs {
  std::filesystem::path records_path;
  std::vector<std::string> window_specs;
  std::string kinds_csv;  // empty = defaults
  SpectralSettings settings;
};
int run_compare(const CompareArgs& args);

struct BootstrapArgs {
  std::filesystem::path input;
  InputFormat format = InputFormat::auto_detect;
  SpectralSettings settings;
  std::size_t replicates = 1000;
  unsigned threads = 1;
  bool emit_rows = false;
};
int run_bootstrap(const BootstrapArgs& args);

struct SbmArgs {
  bool imbalance = false;
  std::vector<double> in_probs{0.30, 0.35, 0.40, 0.45};
  std::vector<double> out_probs{0.01, 0.05, 0.1};  // engagement grid
  double out_prob = 0.05;                          // imbalance grid
  std::vector<double> splits{0.5, 0.2, 0.1, 0.01};
  std::size_t n = 1000;
  std::size_t replicates = 100;
  std::size_t k = 100;
  std::uint64_t seed = 1;
  unsigned threads = 1;
  std::string output = "-";
};
int run_sbm(const SbmArgs& args);

struct SpectrumArgs {
  std::filesystem::path input;
  InputFormat format = InputFormat::auto_detect;
  SpectralSettings settings;
};
int run_spectrum(const SpectrumArgs& args);

}  // namespace polardim::cli

#endif  // POLARDIM_TOOLS_ANALYSIS_HPP
