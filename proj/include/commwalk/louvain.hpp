#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "commwalk/constants.hpp"
#include "commwalk/graph.hpp"
#include "commwalk/partition.hpp"
#include "commwalk/rwgp.hpp"

namespace commwalk {

struct LouvainConfig {
  /// Seeds the vertex visit order of the local-move passes.
  std::uint64_t seed = 0;
  /// Stop when a level improves modularity by no more than this.
  double min_gain = tol::kMinLevelGain;
  /// When set, every level refines its communities with random-walk bisection.
  std::optional<RwgpConfig> rwgp;
  int max_levels = 64;
  /// Recompute modularity after every pass and phase; throw std::logic_error
  /// on a decrease beyond tol::kMonotone.
  bool check_monotone = false;

  void validate() const;
};

struct HierarchyResult {
  Partition final;
  /// Modularity of the original graph after each accepted level.
  std::vector<double> modularity_trace;
  int levels = 0;
};

struct LocalMoveStats {
  int passes = 0;
  std::size_t moves = 0;
};

/// Repeated passes in seeded random order: each vertex leaves its community
/// and joins the neighboring community (or its own) with the largest gain.
/// A move needs a strict improvement over staying; ties go to the smallest id.
/// Community ids of the result are dense in order of first appearance.
Partition local_move_phase(const Graph& g, const Partition& p, std::uint64_t seed, LocalMoveStats* stats = nullptr,
                           bool check_monotone = false);

/// Re-partitions every community of `p` (over the vertices of `g_ori`) with
/// rwgp_partition on `g_ori` and replaces it by the pieces. Communities are
/// processed concurrently; the result does not depend on the thread count.
Partition rwgp_refine_phase(const Graph& g_ori, const Partition& p, const RwgpConfig& cfg);

/// Multi-level Louvain. Runs the random-walk refinement at every level when
/// cfg.rwgp is set. Throws InputError for graphs without edges.
HierarchyResult louvain(const Graph& g, const LouvainConfig& cfg);

/// Louvain with random-walk refinement; throws InputError unless cfg.rwgp is set.
HierarchyResult rwgp_louvain(const Graph& g, const LouvainConfig& cfg);

}  // namespace commwalk
