#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <unordered_map>
#include <vector>

#include "commwalk/graph.hpp"
#include "commwalk/partition.hpp"

namespace commwalk {

/// Graph read from a text edge list together with its vertex labels.
struct LoadedGraph {
  Graph graph;
  /// labels[v] is the text label of vertex v (first-appearance order).
  std::vector<std::string> labels;
  std::unordered_map<std::string, vertex_t> ids;
  std::size_t dropped_self_loops = 0;
};

/// Reads `u v [w]` lines (whitespace separated, `#` or `%` starts a comment
/// line). Labels are arbitrary strings. Duplicate edges are merged by summing
/// weights; self-loops are dropped and counted. Throws InputError naming the
/// line of a malformed entry, or when the file holds no edge.
LoadedGraph load_edge_list(std::istream& in);
LoadedGraph load_edge_list(const std::filesystem::path& path);

/// One `label community_id` line per vertex.
void write_partition(std::ostream& out, const std::vector<std::string>& labels, const Partition& p);

/// Reads a partition file against known vertex labels. Every vertex must be
/// listed exactly once; community ids are arbitrary tokens.
Partition read_partition(std::istream& in, const std::unordered_map<std::string, vertex_t>& ids);
Partition read_partition(const std::filesystem::path& path, const std::unordered_map<std::string, vertex_t>& ids);

/// Writes `u v` (or `u v w` for non-unit weights) lines using the given labels.
void write_edge_list(std::ostream& out, const Graph& g, const std::vector<std::string>& labels);

/// "0", "1", ... "n-1".
std::vector<std::string> numeric_labels(std::size_t n);

}  // namespace commwalk
