#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "commwalk/graph.hpp"
#include "commwalk/partition.hpp"
#include "commwalk/rwgp.hpp"

namespace commwalk {

enum class Algorithm { louvain, rwgp_louvain, rwgp1, rwgp2, newman };

/// "louvain", "rwgp-louvain", "rwgp1", "rwgp2", "newman".
std::string_view to_string(Algorithm a);
/// Throws InputError for unknown names.
Algorithm parse_algorithm(std::string_view name);

/// Parameters shared by every detector.
struct DetectParams {
  int t = 15;
  std::uint64_t seed = 0;
  double laziness = 0.0;
  /// Variant used inside rwgp-louvain (rwgp1/rwgp2 fix their own).
  RwgpVariant variant = RwgpVariant::refined;
  double min_gain = 1e-9;
  bool check_monotone = false;
};

/// Runs one detector over all vertices of g.
Partition detect(Algorithm a, const Graph& g, const DetectParams& params);

/// Inclusive integer range; each trial draws uniformly from it.
struct SizeRange {
  std::size_t lo = 0;
  std::size_t hi = 0;
};

struct GeneratorSpec {
  enum class Kind { planted, gaussian, file };
  Kind kind = Kind::planted;
  // planted
  SizeRange groups{20, 20};
  SizeRange group_size{10, 10};
  // gaussian
  SizeRange vertices{500, 500};
  SizeRange mean_size{25, 25};
  double sigma = 2.5;
  // both generators
  double p_in = 0.7;
  double p_out = 0.01;
  // file
  std::filesystem::path graph_path;
  std::filesystem::path truth_path;
};

struct ExperimentSpec {
  std::string id = "experiment";
  GeneratorSpec generator;
  std::vector<Algorithm> algorithms;
  int trials = 10;
  std::uint64_t seed_base = 0;
  DetectParams params;
  /// Record wall time per run. Off by default so that output is reproducible
  /// byte for byte; timed runs also execute trials sequentially.
  bool timing = false;

  /// Throws InputError on an empty algorithm list, trials < 1, t < 1, bad
  /// probabilities or empty ranges.
  void validate() const;
};

struct ResultRow {
  std::string experiment;
  std::uint64_t seed = 0;
  std::string algorithm;
  std::size_t n = 0;
  std::size_t m = 0;
  std::optional<double> p_in;
  std::optional<double> p_out;
  double modularity = 0.0;
  std::optional<double> nmi;
  std::optional<double> wall_ms;
  std::size_t communities = 0;
};

struct TrialFailure {
  int trial = 0;
  std::uint64_t seed = 0;
  std::string algorithm;  // empty when graph generation/loading failed
  std::string message;
};

struct ExperimentOutcome {
  std::vector<ResultRow> rows;
  std::vector<TrialFailure> failures;
};

/// For each trial (seed = seed_base + trial): build the graph, run every
/// algorithm, score it. Rows come out in (trial, algorithm) order regardless
/// of how trials were scheduled. A failing trial is reported and skipped.
ExperimentOutcome run_experiment(const ExperimentSpec& spec);

/// Experiments from JSON: either one experiment object or
/// {"experiments": [ ... ]}. Relative file paths resolve against `base_dir`.
std::vector<ExperimentSpec> parse_experiments(std::string_view json_text,
                                              const std::filesystem::path& base_dir = {});
std::vector<ExperimentSpec> load_experiments(const std::filesystem::path& path);

/// `# key=value` lines describing the run configuration.
std::vector<std::string> describe(const ExperimentSpec& spec);

inline constexpr std::string_view kCsvHeader =
    "experiment,seed,algorithm,n,m,p_in,p_out,modularity,nmi,wall_ms,communities";

/// Metadata lines (each prefixed with "# "), the header, then one line per
/// row. Reals use 7 significant digits; missing values are empty fields.
void emit_csv(std::span<const ResultRow> rows, std::ostream& out, std::span<const std::string> metadata = {});
/// Throws InputError if the destination cannot be written.
void emit_csv(std::span<const ResultRow> rows, const std::filesystem::path& path,
              std::span<const std::string> metadata = {});

/// Parses what emit_csv wrote (comment lines skipped).
std::vector<ResultRow> parse_csv(std::istream& in);

}  // namespace commwalk
