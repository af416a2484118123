#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "commwalk/graph.hpp"

namespace commwalk {

enum class RwgpVariant {
  plain,    // sign split only
  refined,  // sign split followed by the two-way modularity sweep
};

enum class StartVertex {
  max_degree,  // highest degree in the induced subgraph, ties to the smallest id
  random,      // seeded uniform choice
};

struct RwgpConfig {
  int t = 15;
  RwgpVariant variant = RwgpVariant::refined;
  double laziness = 0.0;
  std::uint64_t seed = 0;
  StartVertex start = StartVertex::max_degree;
  /// Recompute modularity around every accepted split and refinement and
  /// throw std::logic_error if it dropped by more than tol::kMonotone.
  bool check_monotone = false;

  /// Throws InputError unless t >= 1 and laziness lies in [0, 1).
  void validate() const;
};

/// Two disjoint vertex sets in parent ids, each ascending.
struct Bisection {
  VertexSet first;
  VertexSet second;
  int sweeps = 0;
};

/// Splits the subgraph by the sign of its walk signature from sub vertex i0:
/// entries >= 0 go to `first`. The subgraph must be connected and loop-free.
Bisection bisect_by_walk(const SubgraphMap& sub, vertex_t i0, int t, double laziness = 0.0);

/// Gauss-Seidel sweeps over c1 ∪ c2 in ascending id order, moving a vertex to
/// the other side whenever that strictly increases the modularity of `g`.
/// Stops after a sweep without moves or after tol::kRefineSweepCap sweeps.
/// If either side is empty the input is returned unchanged.
Bisection refine_two_way(const Graph& g, std::span<const vertex_t> c1, std::span<const vertex_t> c2);

/// Recursive random-walk bisection of `c`. A split is kept only when both
/// halves are nonempty and Q(C1, g) + Q(C2, g) > Q(C, g); disconnected
/// clusters are first split into their components. The result covers `c`.
std::vector<VertexSet> rwgp_partition(const Graph& g, std::span<const vertex_t> c, const RwgpConfig& cfg);

/// rwgp_partition over every vertex of g.
std::vector<VertexSet> rwgp_partition(const Graph& g, const RwgpConfig& cfg);

namespace detail {

/// Sign assignment for one connected, loop-free induced subgraph:
/// true puts the sub vertex on the first side.
using SplitFn = std::function<std::vector<char>(const SubgraphMap& sub)>;

std::vector<VertexSet> recursive_bisection(const Graph& g, std::span<const vertex_t> c, const SplitFn& split,
                                           bool refine, bool check_monotone);

/// Max-degree vertex of g, ties to the smallest id.
vertex_t max_degree_vertex(const Graph& g);

}  // namespace detail

}  // namespace commwalk
