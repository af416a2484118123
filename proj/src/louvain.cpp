#include "commwalk/louvain.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <numeric>
#include <random>
#include <stdexcept>
#include <string>

#include "commwalk/errors.hpp"
#include "commwalk/quality.hpp"

namespace commwalk {

namespace {

void expect_monotone(double before, double after, const char* where) {
  if (after < before - tol::kMonotone) {
    throw std::logic_error(std::string(where) + ": modularity decreased from " + std::to_string(before) + " to " +
                           std::to_string(after));
  }
}

void require_edges(const Graph& g) {
  if (!(g.total_weight_2m() > 0.0)) throw InputError("louvain: graph has no edges");
}

// Per-community running sums, packed so one lookup touches one cache line.
struct CommunityState {
  double sigma_in = 0.0;
  double sigma_tot = 0.0;
  double link = 0.0;  // weight from the vertex being moved, zero between moves
};

// Visit order is random, so upcoming rows, labels and community sums are
// requested a few vertices early, one dependency level per distance.
void prefetch_ahead(const Graph& g, const std::vector<vertex_t>& comm, const std::vector<CommunityState>& state,
                    const std::vector<vertex_t>& order, std::size_t pos) {
  constexpr std::size_t kVertexDistance = 16;
  constexpr std::size_t kRowDistance = 8;
  constexpr std::size_t kLabelDistance = 4;
  constexpr std::size_t kStateDistance = 2;
  const std::size_t n = order.size();
  const auto offsets = g.offsets();
  const auto targets = g.targets();
  if (pos + kVertexDistance < n) {
    const vertex_t v = order[pos + kVertexDistance];
    __builtin_prefetch(offsets.data() + v);
    __builtin_prefetch(g.degrees().data() + v);
    __builtin_prefetch(g.self_loops().data() + v);
    __builtin_prefetch(comm.data() + v);
  }
  if (pos + kRowDistance < n) {
    const vertex_t v = order[pos + kRowDistance];
    for (std::size_t e = offsets[v]; e < offsets[v + 1]; e += 8) {
      __builtin_prefetch(targets.data() + e);
      __builtin_prefetch(g.edge_weights().data() + e);
    }
  }
  if (pos + kLabelDistance < n) {
    const vertex_t v = order[pos + kLabelDistance];
    for (std::size_t e = offsets[v]; e < offsets[v + 1]; ++e) __builtin_prefetch(comm.data() + targets[e]);
  }
  if (pos + kStateDistance < n) {
    const vertex_t v = order[pos + kStateDistance];
    __builtin_prefetch(state.data() + comm[v]);
    for (std::size_t e = offsets[v]; e < offsets[v + 1]; ++e) __builtin_prefetch(state.data() + comm[targets[e]]);
  }
}

}  // namespace

void LouvainConfig::validate() const {
  if (!(min_gain >= 0.0)) throw InputError("louvain: min_gain must be >= 0");
  if (max_levels < 1) throw InputError("louvain: max_levels must be >= 1");
  if (rwgp) rwgp->validate();
}

Partition local_move_phase(const Graph& g, const Partition& p, std::uint64_t seed, LocalMoveStats* stats,
                           bool check_monotone) {
  require_edges(g);
  const CommunityStats cs = CommunityStats::of(g, p);
  const double m2 = g.total_weight_2m();
  std::vector<vertex_t> comm(p.labels().begin(), p.labels().end());
  std::vector<CommunityState> state(cs.sigma_tot.size());
  for (std::size_t c = 0; c < state.size(); ++c) state[c] = {cs.sigma_in[c], cs.sigma_tot[c], 0.0};

  std::vector<vertex_t> touched;
  std::vector<vertex_t> order(g.n());
  std::iota(order.begin(), order.end(), vertex_t{0});
  std::mt19937_64 rng(seed);

  double q_prev = check_monotone ? modularity(g, p) : 0.0;
  LocalMoveStats local;
  while (local.passes < tol::kLocalMovePassCap) {
    std::shuffle(order.begin(), order.end(), rng);
    std::size_t moved = 0;
    for (std::size_t pos = 0; pos < order.size(); ++pos) {
      prefetch_ahead(g, comm, state, order, pos);
      const vertex_t i = order[pos];
      const vertex_t own = comm[i];
      auto nbrs = g.neighbors(i);
      auto ws = g.weights(i);
      for (std::size_t e = 0; e < nbrs.size(); ++e) {
        const vertex_t c = comm[nbrs[e]];
        if (state[c].link == 0.0) touched.push_back(c);
        state[c].link += ws[e];
      }
      const double k_i = g.degree(i);
      const double loop2 = 2.0 * g.self_loop(i);

      CommunityState& mine = state[own];
      mine.sigma_in -= 2.0 * mine.link + loop2;
      mine.sigma_tot -= k_i;

      const double stay = delta_q_insert(mine.sigma_in, mine.sigma_tot, k_i, mine.link, m2);
      vertex_t best = own;
      double best_gain = stay;
      for (vertex_t c : touched) {
        if (c == own) continue;
        const double gain = delta_q_insert(state[c].sigma_in, state[c].sigma_tot, k_i, state[c].link, m2);
        if (gain - stay <= tol::kMoveGain) continue;
        const bool tie = std::abs(gain - best_gain) <= tol::kMoveGain;
        if (best == own || (!tie && gain > best_gain) || (tie && c < best)) {
          best = c;
          best_gain = gain;
        }
      }

      CommunityState& chosen = state[best];
      chosen.sigma_in += 2.0 * chosen.link + loop2;
      chosen.sigma_tot += k_i;
      comm[i] = best;
      if (best != own) ++moved;

      mine.link = 0.0;
      for (vertex_t c : touched) state[c].link = 0.0;
      touched.clear();
    }
    ++local.passes;
    local.moves += moved;
    if (check_monotone) {
      const double q = modularity(g, Partition::from_labels(comm));
      expect_monotone(q_prev, q, "local move pass");
      q_prev = q;
    }
    if (moved == 0) break;
  }
  if (stats) *stats = local;
  return Partition::from_labels(comm);
}

Partition rwgp_refine_phase(const Graph& g_ori, const Partition& p, const RwgpConfig& cfg) {
  cfg.validate();
  if (p.size() != g_ori.n()) throw InputError("rwgp_refine_phase: partition does not match graph");
  const std::vector<VertexSet> communities = p.members();
  std::vector<std::vector<VertexSet>> pieces(communities.size());
  std::exception_ptr failure;

  const auto count = static_cast<std::int64_t>(communities.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (std::int64_t c = 0; c < count; ++c) {
    try {
      if (communities[c].size() < 2) {
        pieces[c] = {communities[c]};
      } else {
        pieces[c] = rwgp_partition(g_ori, communities[c], cfg);
      }
    } catch (...) {
#pragma omp critical(commwalk_refine_failure)
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);

  std::vector<VertexSet> flat;
  flat.reserve(communities.size());
  for (auto& list : pieces) {
    for (auto& set : list) flat.push_back(std::move(set));
  }
  Partition refined = Partition::from_sets(g_ori.n(), flat);
  if (cfg.check_monotone && g_ori.total_weight_2m() > 0.0) {
    expect_monotone(modularity(g_ori, p), modularity(g_ori, refined), "random-walk refinement phase");
  }
  return refined;
}

HierarchyResult louvain(const Graph& g, const LouvainConfig& cfg) {
  cfg.validate();
  require_edges(g);

  std::optional<RwgpConfig> rw = cfg.rwgp;
  if (rw && cfg.check_monotone) rw->check_monotone = true;

  HierarchyResult result;
  result.final = Partition::singletons(g.n());
  double best_q = modularity(g, result.final);

  Graph level_graph = g;
  std::vector<vertex_t> node_of(g.n());
  std::iota(node_of.begin(), node_of.end(), vertex_t{0});

  for (int level = 0; level < cfg.max_levels; ++level) {
    const Partition local = local_move_phase(level_graph, Partition::singletons(level_graph.n()),
                                             cfg.seed + static_cast<std::uint64_t>(level), nullptr,
                                             cfg.check_monotone);
    std::vector<vertex_t> expanded(g.n());
    for (vertex_t v = 0; v < g.n(); ++v) expanded[v] = local[node_of[v]];
    Partition candidate = Partition::from_labels(expanded);
    if (rw) candidate = rwgp_refine_phase(g, candidate, *rw);

    const double q = modularity(g, candidate);
    ++result.levels;
    const double gain = q - best_q;
    if (cfg.check_monotone) expect_monotone(best_q, q, "louvain level");
    if (gain > 0.0) {
      result.final = candidate;
      best_q = q;
      result.modularity_trace.push_back(q);
    }
    if (gain <= cfg.min_gain) break;

    if (rw) {
      level_graph = aggregate(g, candidate);
      node_of.assign(candidate.labels().begin(), candidate.labels().end());
    } else {
      level_graph = aggregate(level_graph, local);
      for (vertex_t& node : node_of) node = local[node];
    }
  }
  return result;
}

HierarchyResult rwgp_louvain(const Graph& g, const LouvainConfig& cfg) {
  if (!cfg.rwgp) throw InputError("rwgp_louvain: random-walk configuration missing");
  return louvain(g, cfg);
}

}  // namespace commwalk
