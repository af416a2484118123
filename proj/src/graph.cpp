#include "commwalk/graph.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <tuple>

#include "commwalk/errors.hpp"
#include "commwalk/partition.hpp"

namespace commwalk {

double Graph::weight(vertex_t u, vertex_t v) const noexcept {
  if (u == v) return self_loops_[u];
  auto nbrs = neighbors(u);
  auto it = std::lower_bound(nbrs.begin(), nbrs.end(), v);
  if (it == nbrs.end() || *it != v) return 0.0;
  return weights_[offsets_[u] + static_cast<std::size_t>(it - nbrs.begin())];
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count() + loop_count_);
  for (vertex_t u = 0; u < n(); ++u) {
    if (self_loops_[u] > 0.0) out.push_back({u, u, self_loops_[u]});
    auto nbrs = neighbors(u);
    auto ws = weights(u);
    for (std::size_t k = 0; k < nbrs.size(); ++k) {
      if (u < nbrs[k]) out.push_back({u, nbrs[k], ws[k]});
    }
  }
  return out;
}

Graph build_graph(std::size_t n, std::span<const Edge> edges) {
  Graph g;
  g.self_loops_.assign(n, 0.0);
  g.degrees_.assign(n, 0.0);

  std::vector<Edge> plain;
  plain.reserve(edges.size());
  for (const Edge& e : edges) {
    if (e.u >= n || e.v >= n) {
      throw InputError("edge (" + std::to_string(e.u) + ", " + std::to_string(e.v) +
                       ") references a vertex outside [0, " + std::to_string(n) + ")");
    }
    if (!(e.weight > 0.0) || !std::isfinite(e.weight)) {
      throw InputError("edge (" + std::to_string(e.u) + ", " + std::to_string(e.v) +
                       ") has non-positive weight");
    }
    if (e.u == e.v) {
      g.self_loops_[e.u] += e.weight;
    } else {
      plain.push_back({std::min(e.u, e.v), std::max(e.u, e.v), e.weight});
    }
  }

  std::sort(plain.begin(), plain.end(), [](const Edge& a, const Edge& b) {
    return std::tie(a.u, a.v) < std::tie(b.u, b.v);
  });
  std::size_t merged = 0;
  for (std::size_t k = 0; k < plain.size(); ++k) {
    if (merged > 0 && plain[merged - 1].u == plain[k].u && plain[merged - 1].v == plain[k].v) {
      plain[merged - 1].weight += plain[k].weight;
    } else {
      plain[merged++] = plain[k];
    }
  }
  plain.resize(merged);

  g.offsets_.assign(n + 1, 0);
  for (const Edge& e : plain) {
    ++g.offsets_[e.u + 1];
    ++g.offsets_[e.v + 1];
  }
  for (std::size_t v = 0; v < n; ++v) g.offsets_[v + 1] += g.offsets_[v];

  g.targets_.resize(2 * plain.size());
  g.weights_.resize(2 * plain.size());
  std::vector<std::size_t> cursor(g.offsets_.begin(), g.offsets_.end() - 1);
  // Edges are sorted by (u, v) with u < v, so filling both directions in this
  // order leaves every neighbor list ascending.
  for (const Edge& e : plain) {
    g.targets_[cursor[e.v]] = e.u;
    g.weights_[cursor[e.v]++] = e.weight;
  }
  for (const Edge& e : plain) {
    g.targets_[cursor[e.u]] = e.v;
    g.weights_[cursor[e.u]++] = e.weight;
  }

  double total = 0.0;
  for (vertex_t v = 0; v < n; ++v) {
    double d = 2.0 * g.self_loops_[v];
    for (double w : g.weights(v)) d += w;
    g.degrees_[v] = d;
    total += d;
    if (g.self_loops_[v] > 0.0) ++g.loop_count_;
  }
  g.total_weight_2m_ = total;
  return g;
}

VertexSet SubgraphMap::lift(std::span<const vertex_t> sub_vertices) const {
  VertexSet out;
  out.reserve(sub_vertices.size());
  for (vertex_t s : sub_vertices) out.push_back(to_parent[s]);
  return out;
}

SubgraphMap induced_subgraph(const Graph& g, std::span<const vertex_t> c) {
  if (c.empty()) throw InputError("induced_subgraph: empty vertex set");
  SubgraphMap map;
  map.to_parent.assign(c.begin(), c.end());
  map.from_parent.reserve(c.size());
  for (std::size_t k = 0; k < c.size(); ++k) {
    if (c[k] >= g.n()) throw InputError("induced_subgraph: vertex id out of range");
    if (!map.from_parent.emplace(c[k], static_cast<vertex_t>(k)).second) {
      throw InputError("induced_subgraph: duplicate vertex " + std::to_string(c[k]));
    }
  }

  std::vector<Edge> edges;
  for (std::size_t k = 0; k < c.size(); ++k) {
    const vertex_t u = c[k];
    if (g.self_loop(u) > 0.0) edges.push_back({static_cast<vertex_t>(k), static_cast<vertex_t>(k), g.self_loop(u)});
    auto nbrs = g.neighbors(u);
    auto ws = g.weights(u);
    for (std::size_t e = 0; e < nbrs.size(); ++e) {
      if (nbrs[e] <= u) continue;
      auto it = map.from_parent.find(nbrs[e]);
      if (it != map.from_parent.end()) edges.push_back({static_cast<vertex_t>(k), it->second, ws[e]});
    }
  }
  map.sub = build_graph(c.size(), edges);
  return map;
}

std::vector<VertexSet> connected_components(const Graph& g) {
  constexpr vertex_t kUnseen = static_cast<vertex_t>(-1);
  std::vector<vertex_t> comp(g.n(), kUnseen);
  std::vector<VertexSet> out;
  std::vector<vertex_t> stack;
  for (vertex_t root = 0; root < g.n(); ++root) {
    if (comp[root] != kUnseen) continue;
    const auto id = static_cast<vertex_t>(out.size());
    VertexSet members;
    comp[root] = id;
    stack.push_back(root);
    while (!stack.empty()) {
      vertex_t v = stack.back();
      stack.pop_back();
      members.push_back(v);
      for (vertex_t w : g.neighbors(v)) {
        if (comp[w] == kUnseen) {
          comp[w] = id;
          stack.push_back(w);
        }
      }
    }
    std::sort(members.begin(), members.end());
    out.push_back(std::move(members));
  }
  return out;
}

bool is_connected(const Graph& g) {
  if (g.n() <= 1) return true;
  std::vector<char> seen(g.n(), 0);
  std::vector<vertex_t> stack{0};
  seen[0] = 1;
  std::size_t reached = 1;
  while (!stack.empty()) {
    vertex_t v = stack.back();
    stack.pop_back();
    for (vertex_t w : g.neighbors(v)) {
      if (!seen[w]) {
        seen[w] = 1;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  return reached == g.n();
}

Graph aggregate(const Graph& g, const Partition& p) {
  if (p.size() != g.n()) {
    throw InputError("aggregate: partition covers " + std::to_string(p.size()) +
                     " vertices, graph has " + std::to_string(g.n()));
  }
  std::vector<Edge> edges;
  edges.reserve(g.edge_count() + g.n());
  for (vertex_t u = 0; u < g.n(); ++u) {
    const vertex_t cu = p[u];
    if (g.self_loop(u) > 0.0) edges.push_back({cu, cu, g.self_loop(u)});
    auto nbrs = g.neighbors(u);
    auto ws = g.weights(u);
    for (std::size_t e = 0; e < nbrs.size(); ++e) {
      if (nbrs[e] > u) edges.push_back({cu, p[nbrs[e]], ws[e]});
    }
  }
  return build_graph(p.community_count(), edges);
}

}  // namespace commwalk
