#include "commwalk/io.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string_view>

#include "commwalk/errors.hpp"

namespace commwalk {

namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t k = 0;
  while (k < line.size()) {
    while (k < line.size() && std::isspace(static_cast<unsigned char>(line[k]))) ++k;
    const std::size_t start = k;
    while (k < line.size() && !std::isspace(static_cast<unsigned char>(line[k]))) ++k;
    if (k > start) out.push_back(line.substr(start, k - start));
  }
  return out;
}

bool is_comment_or_blank(const std::vector<std::string_view>& tokens) {
  return tokens.empty() || tokens[0].front() == '#' || tokens[0].front() == '%';
}

std::string line_error(std::size_t line, const std::string& what) {
  return "line " + std::to_string(line) + ": " + what;
}

std::ifstream open_input(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path.string());
  return in;
}

}  // namespace

LoadedGraph load_edge_list(std::istream& in) {
  LoadedGraph out;
  std::vector<Edge> edges;
  auto id_of = [&out](std::string_view label) {
    auto [it, fresh] = out.ids.try_emplace(std::string(label), static_cast<vertex_t>(out.labels.size()));
    if (fresh) out.labels.emplace_back(label);
    return it->second;
  };

  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    const auto tokens = split_ws(line);
    if (is_comment_or_blank(tokens)) continue;
    if (tokens.size() != 2 && tokens.size() != 3) {
      throw InputError(line_error(number, "expected `u v [w]`, got " + std::to_string(tokens.size()) + " fields"));
    }
    double w = 1.0;
    if (tokens.size() == 3) {
      const auto* first = tokens[2].data();
      const auto* last = first + tokens[2].size();
      auto [ptr, ec] = std::from_chars(first, last, w);
      if (ec != std::errc() || ptr != last) throw InputError(line_error(number, "weight is not a number"));
      if (!(w > 0.0) || !std::isfinite(w)) throw InputError(line_error(number, "weight must be positive"));
    }
    const vertex_t u = id_of(tokens[0]);
    const vertex_t v = id_of(tokens[1]);
    if (u == v) {
      ++out.dropped_self_loops;
      continue;
    }
    edges.push_back({u, v, w});
  }
  if (edges.empty()) throw InputError("edge list contains no edges");
  out.graph = build_graph(out.labels.size(), edges);
  return out;
}

LoadedGraph load_edge_list(const std::filesystem::path& path) {
  auto in = open_input(path);
  return load_edge_list(in);
}

void write_partition(std::ostream& out, const std::vector<std::string>& labels, const Partition& p) {
  if (labels.size() != p.size()) throw InputError("write_partition: label count does not match partition");
  for (std::size_t v = 0; v < p.size(); ++v) out << labels[v] << ' ' << p[static_cast<vertex_t>(v)] << '\n';
}

Partition read_partition(std::istream& in, const std::unordered_map<std::string, vertex_t>& ids) {
  constexpr std::int64_t kMissing = -1;
  std::vector<std::int64_t> assign(ids.size(), kMissing);
  std::unordered_map<std::string, std::int64_t> communities;
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    const auto tokens = split_ws(line);
    if (is_comment_or_blank(tokens)) continue;
    if (tokens.size() != 2) throw InputError(line_error(number, "expected `label community_id`"));
    auto it = ids.find(std::string(tokens[0]));
    if (it == ids.end()) throw InputError(line_error(number, "unknown vertex label `" + std::string(tokens[0]) + "`"));
    if (assign[it->second] != kMissing) {
      throw InputError(line_error(number, "vertex `" + std::string(tokens[0]) + "` listed twice"));
    }
    assign[it->second] =
        communities.try_emplace(std::string(tokens[1]), static_cast<std::int64_t>(communities.size())).first->second;
  }
  for (std::size_t v = 0; v < assign.size(); ++v) {
    if (assign[v] == kMissing) throw InputError("partition file does not assign every vertex");
  }
  return Partition::from_labels(assign);
}

Partition read_partition(const std::filesystem::path& path, const std::unordered_map<std::string, vertex_t>& ids) {
  auto in = open_input(path);
  return read_partition(in, ids);
}

void write_edge_list(std::ostream& out, const Graph& g, const std::vector<std::string>& labels) {
  for (const Edge& e : g.edges()) {
    out << labels[e.u] << ' ' << labels[e.v];
    if (e.weight != 1.0) {
      char buf[32];
      std::snprintf(buf, sizeof buf, "%.17g", e.weight);
      out << ' ' << buf;
    }
    out << '\n';
  }
}

std::vector<std::string> numeric_labels(std::size_t n) {
  std::vector<std::string> out(n);
  for (std::size_t v = 0; v < n; ++v) out[v] = std::to_string(v);
  return out;
}

}  // namespace commwalk
