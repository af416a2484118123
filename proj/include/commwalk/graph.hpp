#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <unordered_map>
#include <vector>

namespace commwalk {

using vertex_t = std::uint32_t;

/// Ordered list of distinct vertex ids of some Graph.
using VertexSet = std::vector<vertex_t>;

struct Edge {
  vertex_t u;
  vertex_t v;
  double weight;
};

class Partition;

/// Immutable undirected weighted graph in compressed adjacency form.
///
/// Self-loops live outside the adjacency arrays. A self-loop of weight w adds
/// 2w to the degree of its vertex, so the sum of all degrees equals 2m on
/// aggregated graphs as well as on simple ones.
class Graph {
 public:
  Graph() = default;

  std::size_t n() const noexcept { return self_loops_.size(); }
  /// Number of distinct non-loop edges.
  std::size_t edge_count() const noexcept { return targets_.size() / 2; }
  /// Number of adjacency entries (twice edge_count()).
  std::size_t nnz() const noexcept { return targets_.size(); }

  std::span<const vertex_t> neighbors(vertex_t v) const noexcept {
    return {targets_.data() + offsets_[v], targets_.data() + offsets_[v + 1]};
  }
  std::span<const double> weights(vertex_t v) const noexcept {
    return {weights_.data() + offsets_[v], weights_.data() + offsets_[v + 1]};
  }

  double self_loop(vertex_t v) const noexcept { return self_loops_[v]; }
  double degree(vertex_t v) const noexcept { return degrees_[v]; }
  double total_weight_2m() const noexcept { return total_weight_2m_; }
  bool has_self_loops() const noexcept { return loop_count_ > 0; }

  std::span<const std::size_t> offsets() const noexcept { return offsets_; }
  std::span<const vertex_t> targets() const noexcept { return targets_; }
  std::span<const double> edge_weights() const noexcept { return weights_; }
  std::span<const double> degrees() const noexcept { return degrees_; }
  std::span<const double> self_loops() const noexcept { return self_loops_; }

  /// Weight of edge (u, v), 0 when absent. O(log deg(u)).
  double weight(vertex_t u, vertex_t v) const noexcept;

  /// Distinct edges with u <= v, self-loops included as (v, v, w).
  std::vector<Edge> edges() const;

 private:
  friend Graph build_graph(std::size_t n, std::span<const Edge> edges);

  std::vector<std::size_t> offsets_{0};
  std::vector<vertex_t> targets_;
  std::vector<double> weights_;
  std::vector<double> self_loops_;
  std::vector<double> degrees_;
  double total_weight_2m_ = 0.0;
  std::size_t loop_count_ = 0;
};

/// Builds a graph on vertices 0..n-1. Duplicate (u,v) entries in either
/// orientation are merged by summing their weights; u == v entries accumulate
/// into the self-loop weight. Throws InputError on out-of-range ids or
/// non-positive (or non-finite) weights.
Graph build_graph(std::size_t n, std::span<const Edge> edges);

inline Graph build_graph(std::size_t n, const std::vector<Edge>& edges) {
  return build_graph(n, std::span<const Edge>(edges));
}

struct SubgraphMap {
  Graph sub;
  std::vector<vertex_t> to_parent;
  std::unordered_map<vertex_t, vertex_t> from_parent;

  VertexSet lift(std::span<const vertex_t> sub_vertices) const;
};

/// Graph induced by `c`; sub vertex k is c[k]. Cost is O(|c| + sum of degrees).
SubgraphMap induced_subgraph(const Graph& g, std::span<const vertex_t> c);

/// Maximal connected vertex sets, each ascending, listed by smallest member.
std::vector<VertexSet> connected_components(const Graph& g);

bool is_connected(const Graph& g);

/// Collapses every community of `p` into one vertex. Intra-community edges
/// become self-loops of the supernode; inter-community edges are summed.
Graph aggregate(const Graph& g, const Partition& p);

}  // namespace commwalk
