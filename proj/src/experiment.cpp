#include "commwalk/experiment.hpp"

#include <chrono>
#include <cstdio>
#include <exception>
#include <fstream>
#include <istream>
#include <ostream>
#include <random>
#include <set>
#include <sstream>

#include <json.hpp>

#include "commwalk/errors.hpp"
#include "commwalk/gen.hpp"
#include "commwalk/io.hpp"
#include "commwalk/louvain.hpp"
#include "commwalk/quality.hpp"
#include "commwalk/spectral.hpp"

namespace commwalk {

namespace {

using json = nlohmann::json;

std::string format_real(double x) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.7g", x);
  return buf;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string optional_real(const std::optional<double>& x) { return x ? format_real(*x) : std::string(); }

std::size_t draw(std::mt19937_64& rng, SizeRange r) {
  if (r.lo == r.hi) return r.lo;
  return std::uniform_int_distribution<std::size_t>(r.lo, r.hi)(rng);
}

struct TrialGraph {
  Graph graph;
  std::optional<Partition> truth;
};

TrialGraph make_graph(const GeneratorSpec& gen, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  switch (gen.kind) {
    case GeneratorSpec::Kind::planted: {
      PlantedSpec s{draw(rng, gen.groups), draw(rng, gen.group_size), gen.p_in, gen.p_out, seed};
      auto lg = planted_l_partition(s);
      return {std::move(lg.graph), std::move(lg.truth)};
    }
    case GeneratorSpec::Kind::gaussian: {
      GaussianPartitionSpec s{draw(rng, gen.vertices), static_cast<double>(draw(rng, gen.mean_size)), gen.sigma,
                              gen.p_in, gen.p_out, seed};
      auto lg = gaussian_random_partition(s);
      return {std::move(lg.graph), std::move(lg.truth)};
    }
    case GeneratorSpec::Kind::file:
      break;
  }
  throw InputError("make_graph: file generators are loaded once per experiment");
}

struct TrialResult {
  std::vector<ResultRow> rows;
  std::vector<TrialFailure> failures;
};

TrialResult run_trial(const ExperimentSpec& spec, int trial, const TrialGraph* fixed) {
  TrialResult out;
  const std::uint64_t seed = spec.seed_base + static_cast<std::uint64_t>(trial);
  TrialGraph generated;
  const TrialGraph* tg = fixed;
  if (!tg) {
    try {
      generated = make_graph(spec.generator, seed);
    } catch (const std::exception& e) {
      out.failures.push_back({trial, seed, "", e.what()});
      return out;
    }
    tg = &generated;
  }

  const bool synthetic = spec.generator.kind != GeneratorSpec::Kind::file;
  for (Algorithm a : spec.algorithms) {
    DetectParams params = spec.params;
    params.seed = seed;
    try {
      const auto start = std::chrono::steady_clock::now();
      const Partition p = detect(a, tg->graph, params);
      const auto stop = std::chrono::steady_clock::now();

      ResultRow row;
      row.experiment = spec.id;
      row.seed = seed;
      row.algorithm = std::string(to_string(a));
      row.n = tg->graph.n();
      row.m = tg->graph.edge_count();
      if (synthetic) {
        row.p_in = spec.generator.p_in;
        row.p_out = spec.generator.p_out;
      }
      row.modularity = modularity(tg->graph, p);
      if (tg->truth) row.nmi = nmi(*tg->truth, p);
      if (spec.timing) row.wall_ms = std::chrono::duration<double, std::milli>(stop - start).count();
      row.communities = p.community_count();
      out.rows.push_back(std::move(row));
    } catch (const std::exception& e) {
      out.failures.push_back({trial, seed, std::string(to_string(a)), e.what()});
    }
  }
  return out;
}

SizeRange parse_range(const json& j, const char* key) {
  if (j.is_array()) {
    if (j.size() != 2) throw InputError(std::string(key) + ": range must be [lo, hi]");
    return {j[0].get<std::size_t>(), j[1].get<std::size_t>()};
  }
  const auto v = j.get<std::size_t>();
  return {v, v};
}

void reject_unknown(const json& obj, std::initializer_list<const char*> allowed, const char* where) {
  for (const auto& [key, value] : obj.items()) {
    bool known = false;
    for (const char* a : allowed) known = known || key == a;
    if (!known) throw InputError(std::string(where) + ": unknown key `" + key + "`");
  }
}

std::vector<ExperimentSpec> parse_one(const json& j, const std::filesystem::path& base_dir) {
  if (!j.is_object()) throw InputError("experiment must be a JSON object");
  reject_unknown(j,
                 {"id", "generator", "algorithms", "t", "trials", "seed_base", "lazy_alpha", "variant", "min_gain",
                  "timing"},
                 "experiment");
  ExperimentSpec spec;
  spec.id = j.value("id", spec.id);
  spec.trials = j.value("trials", spec.trials);
  spec.seed_base = j.value("seed_base", spec.seed_base);
  spec.params.t = j.value("t", spec.params.t);
  spec.params.laziness = j.value("lazy_alpha", spec.params.laziness);
  spec.params.min_gain = j.value("min_gain", spec.params.min_gain);
  spec.timing = j.value("timing", false);
  const int variant = j.value("variant", 2);
  if (variant != 1 && variant != 2) throw InputError("variant must be 1 or 2");
  spec.params.variant = variant == 1 ? RwgpVariant::plain : RwgpVariant::refined;
  if (j.contains("algorithms")) {
    for (const auto& a : j.at("algorithms")) spec.algorithms.push_back(parse_algorithm(a.get<std::string>()));
  }

  if (!j.contains("generator")) throw InputError("experiment: missing `generator`");
  const json& g = j.at("generator");
  const std::string type = g.value("type", "");
  std::vector<double> p_outs{spec.generator.p_out};
  if (type == "planted" || type == "gaussian") {
    spec.generator.kind = type == "planted" ? GeneratorSpec::Kind::planted : GeneratorSpec::Kind::gaussian;
    if (type == "planted") {
      reject_unknown(g, {"type", "l", "g", "p_in", "p_out"}, "planted generator");
      if (g.contains("l")) spec.generator.groups = parse_range(g.at("l"), "l");
      if (g.contains("g")) spec.generator.group_size = parse_range(g.at("g"), "g");
    } else {
      reject_unknown(g, {"type", "n", "mean", "sigma", "p_in", "p_out"}, "gaussian generator");
      if (g.contains("n")) spec.generator.vertices = parse_range(g.at("n"), "n");
      if (g.contains("mean")) spec.generator.mean_size = parse_range(g.at("mean"), "mean");
      spec.generator.sigma = g.value("sigma", spec.generator.sigma);
    }
    spec.generator.p_in = g.value("p_in", spec.generator.p_in);
    if (g.contains("p_out")) {
      const json& po = g.at("p_out");
      p_outs = po.is_array() ? po.get<std::vector<double>>() : std::vector<double>{po.get<double>()};
    }
  } else if (type == "file") {
    reject_unknown(g, {"type", "graph", "truth"}, "file generator");
    spec.generator.kind = GeneratorSpec::Kind::file;
    auto resolve = [&base_dir](const std::string& p) {
      std::filesystem::path path(p);
      return path.is_relative() && !base_dir.empty() ? base_dir / path : path;
    };
    spec.generator.graph_path = resolve(g.at("graph").get<std::string>());
    if (g.contains("truth")) spec.generator.truth_path = resolve(g.at("truth").get<std::string>());
  } else {
    throw InputError("generator type must be planted, gaussian or file");
  }

  std::vector<ExperimentSpec> out;
  for (double p_out : p_outs) {
    ExperimentSpec s = spec;
    s.generator.p_out = p_out;
    if (p_outs.size() > 1) s.id = spec.id + "/p_out=" + format_real(p_out);
    s.validate();
    out.push_back(std::move(s));
  }
  return out;
}

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> out(1);
  bool quoted = false;
  for (std::size_t k = 0; k < line.size(); ++k) {
    const char c = line[k];
    if (quoted) {
      if (c == '"' && k + 1 < line.size() && line[k + 1] == '"') {
        out.back() += '"';
        ++k;
      } else if (c == '"') {
        quoted = false;
      } else {
        out.back() += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      out.emplace_back();
    } else {
      out.back() += c;
    }
  }
  return out;
}

std::optional<double> parse_optional(const std::string& s) {
  if (s.empty()) return std::nullopt;
  return std::stod(s);
}

}  // namespace

std::string_view to_string(Algorithm a) {
  switch (a) {
    case Algorithm::louvain: return "louvain";
    case Algorithm::rwgp_louvain: return "rwgp-louvain";
    case Algorithm::rwgp1: return "rwgp1";
    case Algorithm::rwgp2: return "rwgp2";
    case Algorithm::newman: return "newman";
  }
  return "unknown";
}

Algorithm parse_algorithm(std::string_view name) {
  for (Algorithm a : {Algorithm::louvain, Algorithm::rwgp_louvain, Algorithm::rwgp1, Algorithm::rwgp2,
                      Algorithm::newman}) {
    if (to_string(a) == name) return a;
  }
  throw InputError("unknown algorithm `" + std::string(name) +
                   "` (expected louvain, rwgp-louvain, rwgp1, rwgp2 or newman)");
}

Partition detect(Algorithm a, const Graph& g, const DetectParams& params) {
  RwgpConfig rw;
  rw.t = params.t;
  rw.laziness = params.laziness;
  rw.seed = params.seed;
  rw.check_monotone = params.check_monotone;

  switch (a) {
    case Algorithm::louvain:
    case Algorithm::rwgp_louvain: {
      LouvainConfig cfg;
      cfg.seed = params.seed;
      cfg.min_gain = params.min_gain;
      cfg.check_monotone = params.check_monotone;
      if (a == Algorithm::rwgp_louvain) {
        rw.variant = params.variant;
        cfg.rwgp = rw;
      }
      return louvain(g, cfg).final;
    }
    case Algorithm::rwgp1:
    case Algorithm::rwgp2: {
      rw.variant = a == Algorithm::rwgp1 ? RwgpVariant::plain : RwgpVariant::refined;
      const auto sets = rwgp_partition(g, rw);
      return Partition::from_sets(g.n(), sets);
    }
    case Algorithm::newman: {
      const auto sets = newman_spectral_partition(g);
      return Partition::from_sets(g.n(), sets);
    }
  }
  throw InputError("unknown algorithm");
}

void ExperimentSpec::validate() const {
  if (algorithms.empty()) throw InputError(id + ": algorithm list is empty");
  if (trials < 1) throw InputError(id + ": trials must be >= 1");
  if (params.t < 1) throw InputError(id + ": t must be >= 1");
  if (!(params.laziness >= 0.0 && params.laziness < 1.0)) throw InputError(id + ": lazy_alpha must lie in [0, 1)");
  if (!(params.min_gain >= 0.0)) throw InputError(id + ": min_gain must be >= 0");
  const auto& g = generator;
  auto check_range = [this](SizeRange r, const char* what) {
    if (r.lo < 1 || r.lo > r.hi) throw InputError(id + ": invalid range for " + what);
  };
  switch (g.kind) {
    case GeneratorSpec::Kind::planted:
      check_range(g.groups, "l");
      check_range(g.group_size, "g");
      break;
    case GeneratorSpec::Kind::gaussian:
      check_range(g.vertices, "n");
      check_range(g.mean_size, "mean");
      if (!(g.sigma >= 0.0)) throw InputError(id + ": sigma must be >= 0");
      break;
    case GeneratorSpec::Kind::file:
      if (g.graph_path.empty()) throw InputError(id + ": file generator needs a graph path");
      break;
  }
  if (g.kind != GeneratorSpec::Kind::file) {
    if (!(g.p_in >= 0.0 && g.p_in <= 1.0) || !(g.p_out >= 0.0 && g.p_out <= 1.0)) {
      throw InputError(id + ": probabilities must lie in [0, 1]");
    }
  }
}

ExperimentOutcome run_experiment(const ExperimentSpec& spec) {
  spec.validate();

  std::optional<TrialGraph> fixed;
  if (spec.generator.kind == GeneratorSpec::Kind::file) {
    LoadedGraph loaded = load_edge_list(spec.generator.graph_path);
    fixed.emplace();
    if (!spec.generator.truth_path.empty()) fixed->truth = read_partition(spec.generator.truth_path, loaded.ids);
    fixed->graph = std::move(loaded.graph);
  }
  const TrialGraph* shared = fixed ? &*fixed : nullptr;

  std::vector<TrialResult> results(static_cast<std::size_t>(spec.trials));
  if (spec.timing) {
    for (int trial = 0; trial < spec.trials; ++trial) results[trial] = run_trial(spec, trial, shared);
  } else {
#pragma omp parallel for schedule(dynamic, 1)
    for (int trial = 0; trial < spec.trials; ++trial) results[trial] = run_trial(spec, trial, shared);
  }

  ExperimentOutcome out;
  for (auto& r : results) {
    for (auto& row : r.rows) out.rows.push_back(std::move(row));
    for (auto& f : r.failures) out.failures.push_back(std::move(f));
  }
  return out;
}

std::vector<ExperimentSpec> parse_experiments(std::string_view json_text, const std::filesystem::path& base_dir) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::exception& e) {
    throw InputError(std::string("experiment spec is not valid JSON: ") + e.what());
  }
  std::vector<ExperimentSpec> out;
  try {
    if (j.is_object() && j.contains("experiments")) {
      reject_unknown(j, {"experiments"}, "experiment file");
      for (const json& e : j.at("experiments")) {
        for (auto& s : parse_one(e, base_dir)) out.push_back(std::move(s));
      }
    } else {
      out = parse_one(j, base_dir);
    }
  } catch (const json::exception& e) {
    throw InputError(std::string("experiment spec: ") + e.what());
  }
  std::set<std::string> ids;
  for (const auto& s : out) {
    if (!ids.insert(s.id).second) throw InputError("duplicate experiment id `" + s.id + "`");
  }
  return out;
}

std::vector<ExperimentSpec> load_experiments(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_experiments(buf.str(), path.parent_path());
}

std::vector<std::string> describe(const ExperimentSpec& spec) {
  const auto& g = spec.generator;
  std::vector<std::string> lines;
  lines.push_back("experiment=" + spec.id);
  std::string algos;
  for (Algorithm a : spec.algorithms) algos += (algos.empty() ? "" : " ") + std::string(to_string(a));
  lines.push_back("algorithms=" + algos);
  auto range = [](SizeRange r) {
    return r.lo == r.hi ? std::to_string(r.lo) : "[" + std::to_string(r.lo) + "," + std::to_string(r.hi) + "]";
  };
  switch (g.kind) {
    case GeneratorSpec::Kind::planted:
      lines.push_back("generator=planted l=" + range(g.groups) + " g=" + range(g.group_size) +
                      " p_in=" + format_real(g.p_in) + " p_out=" + format_real(g.p_out));
      break;
    case GeneratorSpec::Kind::gaussian:
      lines.push_back("generator=gaussian n=" + range(g.vertices) + " mean=" + range(g.mean_size) +
                      " sigma=" + format_real(g.sigma) + " (standard deviation) p_in=" + format_real(g.p_in) +
                      " p_out=" + format_real(g.p_out));
      break;
    case GeneratorSpec::Kind::file:
      lines.push_back("generator=file graph=" + g.graph_path.filename().string() +
                      (g.truth_path.empty() ? "" : " truth=" + g.truth_path.filename().string()));
      break;
  }
  lines.push_back("t=" + std::to_string(spec.params.t) + " lazy_alpha=" + format_real(spec.params.laziness) +
                  " variant=" + (spec.params.variant == RwgpVariant::plain ? "1" : "2") +
                  " min_gain=" + format_real(spec.params.min_gain));
  lines.push_back("trials=" + std::to_string(spec.trials) + " seed_base=" + std::to_string(spec.seed_base) +
                  " start_vertex=max_degree");
  return lines;
}

void emit_csv(std::span<const ResultRow> rows, std::ostream& out, std::span<const std::string> metadata) {
  for (const auto& line : metadata) out << "# " << line << '\n';
  out << kCsvHeader << '\n';
  for (const ResultRow& r : rows) {
    out << csv_field(r.experiment) << ',' << r.seed << ',' << csv_field(r.algorithm) << ',' << r.n << ',' << r.m
        << ',' << optional_real(r.p_in) << ',' << optional_real(r.p_out) << ',' << format_real(r.modularity) << ','
        << optional_real(r.nmi) << ',' << optional_real(r.wall_ms) << ',' << r.communities << '\n';
  }
}

void emit_csv(std::span<const ResultRow> rows, const std::filesystem::path& path,
              std::span<const std::string> metadata) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write " + path.string());
  emit_csv(rows, out, metadata);
  out.flush();
  if (!out) throw InputError("failed writing " + path.string());
}

std::vector<ResultRow> parse_csv(std::istream& in) {
  std::vector<ResultRow> rows;
  std::string line;
  bool header = false;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    if (!header) {
      if (line != kCsvHeader) throw InputError("unexpected CSV header");
      header = true;
      continue;
    }
    const auto f = split_csv_line(line);
    if (f.size() != 11) throw InputError("CSV row has " + std::to_string(f.size()) + " fields");
    ResultRow r;
    r.experiment = f[0];
    r.seed = std::stoull(f[1]);
    r.algorithm = f[2];
    r.n = std::stoull(f[3]);
    r.m = std::stoull(f[4]);
    r.p_in = parse_optional(f[5]);
    r.p_out = parse_optional(f[6]);
    r.modularity = std::stod(f[7]);
    r.nmi = parse_optional(f[8]);
    r.wall_ms = parse_optional(f[9]);
    r.communities = std::stoull(f[10]);
    rows.push_back(std::move(r));
  }
  return rows;
}

}  // namespace commwalk
