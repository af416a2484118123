#include "commwalk/rwgp.hpp"

#include <algorithm>
#include <array>
#include <random>
#include <stdexcept>
#include <string>

#include "commwalk/constants.hpp"
#include "commwalk/errors.hpp"
#include "commwalk/quality.hpp"
#include "commwalk/walk.hpp"

namespace commwalk {

namespace {

struct SideSums {
  std::array<double, 2> sigma_in{0.0, 0.0};
  std::array<double, 2> sigma_tot{0.0, 0.0};
};

// Side 0 is the first set. Sums are relative to the parent graph `g`.
SideSums side_sums(const Graph& g, const SubgraphMap& sub, const std::vector<char>& side) {
  SideSums s;
  const Graph& h = sub.sub;
  for (vertex_t v = 0; v < h.n(); ++v) {
    const int own = side[v] ? 0 : 1;
    double inner = 2.0 * h.self_loop(v);
    auto nbrs = h.neighbors(v);
    auto ws = h.weights(v);
    for (std::size_t e = 0; e < nbrs.size(); ++e) {
      if (side[nbrs[e]] == side[v]) inner += ws[e];
    }
    s.sigma_in[own] += inner;
    s.sigma_tot[own] += g.degree(sub.to_parent[v]);
  }
  return s;
}

double whole_term(const Graph& g, const SubgraphMap& sub) {
  double tot = 0.0;
  for (vertex_t p : sub.to_parent) tot += g.degree(p);
  return modularity_term(sub.sub.total_weight_2m(), tot, g.total_weight_2m());
}

double split_terms(const Graph& g, const SideSums& s) {
  double q = 0.0;
  for (int k = 0; k < 2; ++k) {
    if (s.sigma_tot[k] > 0.0 || s.sigma_in[k] > 0.0) {
      q += modularity_term(s.sigma_in[k], s.sigma_tot[k], g.total_weight_2m());
    }
  }
  return q;
}

bool both_sides(const std::vector<char>& side) {
  bool a = false, b = false;
  for (char s : side) (s ? a : b) = true;
  return a && b;
}

// side[v] != 0 puts sub vertex v on the first side. Returns the sweep count.
int refine_sides(const Graph& g, const SubgraphMap& sub, std::vector<char>& side) {
  if (!both_sides(side)) return 0;
  const Graph& h = sub.sub;
  const double m2 = g.total_weight_2m();
  SideSums s = side_sums(g, sub, side);

  int sweeps = 0;
  int moves = 1;
  while (moves != 0 && sweeps < tol::kRefineSweepCap) {
    moves = 0;
    ++sweeps;
    for (vertex_t v = 0; v < h.n(); ++v) {
      const int own = side[v] ? 0 : 1;
      const int other = 1 - own;
      std::array<double, 2> k_in{0.0, 0.0};
      auto nbrs = h.neighbors(v);
      auto ws = h.weights(v);
      for (std::size_t e = 0; e < nbrs.size(); ++e) k_in[side[nbrs[e]] ? 0 : 1] += ws[e];
      const double k_i = g.degree(sub.to_parent[v]);
      const double loop2 = 2.0 * h.self_loop(v);

      const double stay = delta_q_insert(s.sigma_in[own] - 2.0 * k_in[own] - loop2, s.sigma_tot[own] - k_i, k_i,
                                         k_in[own], m2);
      const double move = delta_q_insert(s.sigma_in[other], s.sigma_tot[other], k_i, k_in[other], m2);
      if (move - stay > tol::kMoveGain) {
        s.sigma_in[own] -= 2.0 * k_in[own] + loop2;
        s.sigma_tot[own] -= k_i;
        s.sigma_in[other] += 2.0 * k_in[other] + loop2;
        s.sigma_tot[other] += k_i;
        side[v] = static_cast<char>(other == 0);
        ++moves;
      }
    }
  }
  return sweeps;
}

Bisection to_bisection(const SubgraphMap& sub, const std::vector<char>& side, int sweeps) {
  Bisection b;
  b.sweeps = sweeps;
  for (vertex_t v = 0; v < sub.sub.n(); ++v) (side[v] ? b.first : b.second).push_back(sub.to_parent[v]);
  std::sort(b.first.begin(), b.first.end());
  std::sort(b.second.begin(), b.second.end());
  return b;
}

std::vector<char> walk_sides(const SubgraphMap& sub, vertex_t i0, int t, double laziness) {
  const WalkSignature sig = detail::walk_signature_unchecked(sub.sub, i0, t, laziness);
  std::vector<char> side(sig.values.size());
  for (std::size_t j = 0; j < side.size(); ++j) side[j] = sig.values[j] >= 0.0 ? 1 : 0;
  return side;
}

void expect_monotone(double before, double after, const char* where) {
  if (after < before - tol::kMonotone) {
    throw std::logic_error(std::string(where) + ": modularity decreased from " + std::to_string(before) + " to " +
                           std::to_string(after));
  }
}

std::uint64_t mix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

}  // namespace

void RwgpConfig::validate() const {
  if (t < 1) throw InputError("rwgp: step count t must be >= 1");
  if (!(laziness >= 0.0 && laziness < 1.0)) throw InputError("rwgp: laziness must lie in [0, 1)");
}

namespace detail {

vertex_t max_degree_vertex(const Graph& g) {
  vertex_t best = 0;
  for (vertex_t v = 1; v < g.n(); ++v) {
    if (g.degree(v) > g.degree(best)) best = v;
  }
  return best;
}

std::vector<VertexSet> recursive_bisection(const Graph& g, std::span<const vertex_t> c, const SplitFn& split,
                                           bool refine, bool check_monotone) {
  if (c.empty()) throw InputError("partition: empty vertex set");
  for (vertex_t v : c) {
    if (v >= g.n()) throw InputError("partition: vertex id " + std::to_string(v) + " out of range");
  }
  std::vector<VertexSet> out;
  std::vector<VertexSet> pending;
  pending.emplace_back(c.begin(), c.end());
  std::sort(pending.back().begin(), pending.back().end());

  while (!pending.empty()) {
    VertexSet cluster = std::move(pending.back());
    pending.pop_back();
    if (cluster.size() == 1) {
      out.push_back(std::move(cluster));
      continue;
    }
    const SubgraphMap sub = induced_subgraph(g, cluster);
    if (sub.sub.has_self_loops()) throw InputError("rwgp: input graph has self-loops");

    auto comps = connected_components(sub.sub);
    if (comps.size() > 1) {
      for (auto it = comps.rbegin(); it != comps.rend(); ++it) pending.push_back(sub.lift(*it));
      continue;
    }

    std::vector<char> side = split(sub);
    const double q_whole = whole_term(g, sub);
    if (refine) {
      const double before = split_terms(g, side_sums(g, sub, side));
      refine_sides(g, sub, side);
      if (check_monotone) expect_monotone(before, split_terms(g, side_sums(g, sub, side)), "two-way refinement");
    }

    const double q_split = split_terms(g, side_sums(g, sub, side));
    if (both_sides(side) && q_split > q_whole + tol::kSplitGain) {
      if (check_monotone) expect_monotone(q_whole, q_split, "split acceptance");
      Bisection b = to_bisection(sub, side, 0);
      pending.push_back(std::move(b.second));
      pending.push_back(std::move(b.first));
    } else {
      out.push_back(std::move(cluster));
    }
  }
  return out;
}

}  // namespace detail

Bisection bisect_by_walk(const SubgraphMap& sub, vertex_t i0, int t, double laziness) {
  if (i0 >= sub.sub.n()) throw InputError("bisect_by_walk: start vertex out of range");
  if (t < 1) throw InputError("bisect_by_walk: step count must be >= 1");
  if (!(laziness >= 0.0 && laziness < 1.0)) throw InputError("bisect_by_walk: laziness must lie in [0, 1)");
  detail::require_walkable(sub.sub);
  return to_bisection(sub, walk_sides(sub, i0, t, laziness), 0);
}

Bisection refine_two_way(const Graph& g, std::span<const vertex_t> c1, std::span<const vertex_t> c2) {
  VertexSet all(c1.begin(), c1.end());
  all.insert(all.end(), c2.begin(), c2.end());
  if (c1.empty() || c2.empty()) {
    Bisection b{VertexSet(c1.begin(), c1.end()), VertexSet(c2.begin(), c2.end()), 0};
    std::sort(b.first.begin(), b.first.end());
    std::sort(b.second.begin(), b.second.end());
    return b;
  }
  std::sort(all.begin(), all.end());
  const SubgraphMap sub = induced_subgraph(g, all);
  std::vector<char> side(all.size(), 0);
  for (vertex_t v : c1) side[sub.from_parent.at(v)] = 1;
  const int sweeps = refine_sides(g, sub, side);
  return to_bisection(sub, side, sweeps);
}

std::vector<VertexSet> rwgp_partition(const Graph& g, std::span<const vertex_t> c, const RwgpConfig& cfg) {
  cfg.validate();
  auto split = [&cfg](const SubgraphMap& sub) {
    vertex_t i0 = 0;
    if (cfg.start == StartVertex::random) {
      std::mt19937_64 rng(mix(cfg.seed ^ mix(sub.to_parent.front()) ^ sub.to_parent.size()));
      i0 = static_cast<vertex_t>(std::uniform_int_distribution<std::size_t>(0, sub.sub.n() - 1)(rng));
    } else {
      i0 = detail::max_degree_vertex(sub.sub);
    }
    return walk_sides(sub, i0, cfg.t, cfg.laziness);
  };
  return detail::recursive_bisection(g, c, split, cfg.variant == RwgpVariant::refined, cfg.check_monotone);
}

std::vector<VertexSet> rwgp_partition(const Graph& g, const RwgpConfig& cfg) {
  VertexSet all(g.n());
  for (vertex_t v = 0; v < g.n(); ++v) all[v] = v;
  return rwgp_partition(g, all, cfg);
}

}  // namespace commwalk
