// commwalk: generate planted graphs, detect communities, score partitions and
// run seeded experiment grids.
//
// Exit codes: 0 success, 1 input error, 2 algorithm failure.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "commwalk/errors.hpp"
#include "commwalk/experiment.hpp"
#include "commwalk/gen.hpp"
#include "commwalk/io.hpp"
#include "commwalk/quality.hpp"

namespace {

using namespace commwalk;

constexpr int kInputError = 1;
constexpr int kAlgorithmError = 2;

std::string real(double x) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.7g", x);
  return buf;
}

struct CommonFlags {
  std::string algo = "rwgp-louvain";
  int t = 15;
  std::uint64_t seed = 0;
  double lazy_alpha = 0.0;
  int variant = 2;
  double min_gain = 1e-9;
};

void add_detect_flags(CLI::App* cmd, CommonFlags& f) {
  cmd->add_option("--algo", f.algo, "louvain | rwgp-louvain | rwgp1 | rwgp2 | newman")->capture_default_str();
  cmd->add_option("--t", f.t, "random-walk steps")->capture_default_str()->check(CLI::PositiveNumber);
  cmd->add_option("--seed", f.seed, "seed for visit order / start vertex")->capture_default_str();
  cmd->add_option("--lazy-alpha", f.lazy_alpha, "probability of staying put per walk step")
      ->capture_default_str()
      ->check(CLI::Range(0.0, 0.999999));
  cmd->add_option("--variant", f.variant, "1: sign split only, 2: with modularity sweep")
      ->capture_default_str()
      ->check(CLI::IsMember({1, 2}));
  cmd->add_option("--min-gain", f.min_gain, "stop Louvain when a level gains no more")->capture_default_str();
}

DetectParams to_params(const CommonFlags& f) {
  DetectParams p;
  p.t = f.t;
  p.seed = f.seed;
  p.laziness = f.lazy_alpha;
  p.variant = f.variant == 1 ? RwgpVariant::plain : RwgpVariant::refined;
  p.min_gain = f.min_gain;
  return p;
}

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write " + path);
  out << content;
  if (!out) throw InputError("failed writing " + path);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Random-walk community detection and benchmarking"};
  app.require_subcommand(1);

  // generate
  auto* gen = app.add_subcommand("generate", "write a planted-partition graph and its ground truth");
  std::string model = "planted";
  std::size_t groups = 20, group_size = 10, vertices = 500;
  double mean_size = 25.0, sigma = 2.5, p_in = 0.7, p_out = 0.01;
  std::uint64_t gen_seed = 0;
  std::string gen_out;
  gen->add_option("--model", model, "planted | gaussian")->capture_default_str()->check(
      CLI::IsMember({"planted", "gaussian"}));
  gen->add_option("--l", groups, "planted: number of groups")->capture_default_str();
  gen->add_option("--g", group_size, "planted: vertices per group")->capture_default_str();
  gen->add_option("--n", vertices, "gaussian: number of vertices")->capture_default_str();
  gen->add_option("--mean", mean_size, "gaussian: mean community size")->capture_default_str();
  gen->add_option("--sigma", sigma, "gaussian: standard deviation of community size")->capture_default_str();
  gen->add_option("--p-in", p_in, "intra-group edge probability")->capture_default_str();
  gen->add_option("--p-out", p_out, "inter-group edge probability")->capture_default_str();
  gen->add_option("--seed", gen_seed, "generator seed")->capture_default_str();
  gen->add_option("--out", gen_out, "output prefix; writes PREFIX.edges and PREFIX.truth")->required();

  // detect
  auto* det = app.add_subcommand("detect", "partition one graph and print the communities");
  std::string det_graph, det_out;
  CommonFlags det_flags;
  det->add_option("graph", det_graph, "edge-list file")->required();
  det->add_option("--out", det_out, "write the partition here instead of stdout");
  add_detect_flags(det, det_flags);

  // eval
  auto* ev = app.add_subcommand("eval", "score a partition file (modularity and/or NMI)");
  std::string ev_graph, ev_partition, ev_truth;
  ev->add_option("--graph", ev_graph, "edge-list file defining the vertices")->required();
  ev->add_option("--partition", ev_partition, "partition file to score")->required();
  ev->add_option("--truth", ev_truth, "ground-truth partition file");

  // bench
  auto* bench = app.add_subcommand("bench", "run an experiment grid and write CSV");
  std::string spec_path, bench_out, bench_model = "planted", bench_graph, bench_truth, bench_algos;
  int trials = 10;
  bool timing = false;
  CommonFlags bench_flags;
  bench_flags.seed = 0;
  bench->add_option("--spec", spec_path, "experiment JSON file (flags below are ignored when given)");
  bench->add_option("--out", bench_out, "CSV destination (default stdout)");
  bench->add_option("--model", bench_model, "planted | gaussian | file")->capture_default_str()->check(
      CLI::IsMember({"planted", "gaussian", "file"}));
  bench->add_option("--graph", bench_graph, "file model: edge list");
  bench->add_option("--truth", bench_truth, "file model: ground-truth partition");
  bench->add_option("--algos", bench_algos, "comma-separated algorithms (default: value of --algo)");
  bench->add_option("--trials", trials, "trials per experiment")->capture_default_str();
  bench->add_option("--l", groups, "planted: number of groups")->capture_default_str();
  bench->add_option("--g", group_size, "planted: vertices per group")->capture_default_str();
  bench->add_option("--n", vertices, "gaussian: number of vertices")->capture_default_str();
  bench->add_option("--mean", mean_size, "gaussian: mean community size")->capture_default_str();
  bench->add_option("--sigma", sigma, "gaussian: standard deviation of community size")->capture_default_str();
  bench->add_option("--p-in", p_in, "intra-group edge probability")->capture_default_str();
  bench->add_option("--p-out", p_out, "inter-group edge probability")->capture_default_str();
  bench->add_flag("--timing", timing, "record wall time (output is then not reproducible)");
  add_detect_flags(bench, bench_flags);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kInputError;
  }

  try {
    if (*gen) {
      LabeledGraph lg;
      if (model == "planted") {
        lg = planted_l_partition({groups, group_size, p_in, p_out, gen_seed});
      } else {
        lg = gaussian_random_partition({vertices, mean_size, sigma, p_in, p_out, gen_seed});
      }
      for (const auto& w : lg.warnings) std::cerr << "warning: " << w << '\n';
      const auto labels = numeric_labels(lg.graph.n());
      std::ostringstream edges, truth;
      write_edge_list(edges, lg.graph, labels);
      write_partition(truth, labels, lg.truth);
      write_file(gen_out + ".edges", edges.str());
      write_file(gen_out + ".truth", truth.str());
      std::cout << "n=" << lg.graph.n() << " m=" << lg.graph.edge_count()
                << " communities=" << lg.truth.community_count() << '\n';
      return 0;
    }

    if (*det) {
      const LoadedGraph loaded = load_edge_list(std::filesystem::path(det_graph));
      if (loaded.dropped_self_loops > 0) {
        std::cerr << "warning: dropped " << loaded.dropped_self_loops << " self-loop(s)\n";
      }
      const Algorithm algo = parse_algorithm(det_flags.algo);
      const Partition p = detect(algo, loaded.graph, to_params(det_flags));
      std::ostringstream body;
      body << "# algorithm=" << to_string(algo) << " modularity=" << real(modularity(loaded.graph, p))
           << " communities=" << p.community_count() << '\n';
      write_partition(body, loaded.labels, p);
      if (det_out.empty()) {
        std::cout << body.str();
      } else {
        write_file(det_out, body.str());
        std::cout << "modularity=" << real(modularity(loaded.graph, p)) << " communities=" << p.community_count()
                  << '\n';
      }
      return 0;
    }

    if (*ev) {
      const LoadedGraph loaded = load_edge_list(std::filesystem::path(ev_graph));
      const Partition p = read_partition(std::filesystem::path(ev_partition), loaded.ids);
      std::cout << "modularity=" << real(modularity(loaded.graph, p)) << " communities=" << p.community_count();
      if (!ev_truth.empty()) {
        const Partition truth = read_partition(std::filesystem::path(ev_truth), loaded.ids);
        std::cout << " nmi=" << real(nmi(truth, p));
      }
      std::cout << '\n';
      return 0;
    }

    if (*bench) {
      std::vector<ExperimentSpec> specs;
      if (!spec_path.empty()) {
        specs = load_experiments(spec_path);
      } else {
        ExperimentSpec s;
        s.id = bench_model;
        auto& g = s.generator;
        if (bench_model == "planted") {
          g.kind = GeneratorSpec::Kind::planted;
          g.groups = {groups, groups};
          g.group_size = {group_size, group_size};
        } else if (bench_model == "gaussian") {
          g.kind = GeneratorSpec::Kind::gaussian;
          g.vertices = {vertices, vertices};
          const auto mean = static_cast<std::size_t>(mean_size);
          g.mean_size = {mean, mean};
          g.sigma = sigma;
        } else {
          g.kind = GeneratorSpec::Kind::file;
          g.graph_path = bench_graph;
          g.truth_path = bench_truth;
          s.id = std::filesystem::path(bench_graph).stem().string();
        }
        g.p_in = p_in;
        g.p_out = p_out;
        for (const auto& name : split_list(bench_algos.empty() ? bench_flags.algo : bench_algos)) {
          s.algorithms.push_back(parse_algorithm(name));
        }
        s.trials = trials;
        s.seed_base = bench_flags.seed;
        s.params = to_params(bench_flags);
        s.timing = timing;
        s.validate();
        specs.push_back(std::move(s));
      }

      std::vector<ResultRow> rows;
      std::vector<std::string> metadata;
      bool failed = false;
      for (const auto& s : specs) {
        for (auto& line : describe(s)) metadata.push_back(std::move(line));
        ExperimentOutcome outcome = run_experiment(s);
        for (auto& r : outcome.rows) rows.push_back(std::move(r));
        for (const auto& f : outcome.failures) {
          failed = true;
          std::cerr << "error: " << s.id << " trial " << f.trial << " (seed " << f.seed << ")"
                    << (f.algorithm.empty() ? "" : " " + f.algorithm) << ": " << f.message << '\n';
        }
      }
      if (bench_out.empty()) {
        emit_csv(rows, std::cout, metadata);
      } else {
        emit_csv(rows, std::filesystem::path(bench_out), metadata);
      }
      return failed ? kAlgorithmError : 0;
    }
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const AlgorithmError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kAlgorithmError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kAlgorithmError;
  }
  return 0;
}
