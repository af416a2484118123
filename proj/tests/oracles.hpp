#pragma once

// Test-only reference computations. Nothing here calls into the library's
// algorithm code paths; graphs are only read through their public accessors.

#include <cmath>
#include <cstddef>
#include <functional>
#include <random>
#include <vector>

#include "commwalk/graph.hpp"
#include "commwalk/partition.hpp"

namespace oracle {

using commwalk::Edge;
using commwalk::Graph;
using commwalk::vertex_t;

using Matrix = std::vector<std::vector<double>>;

/// Dense adjacency with A_ii = 2 * self-loop weight, so row sums are degrees.
inline Matrix adjacency(const Graph& g) {
  const std::size_t n = g.n();
  Matrix a(n, std::vector<double>(n, 0.0));
  for (const Edge& e : g.edges()) {
    if (e.u == e.v) {
      a[e.u][e.u] += 2.0 * e.weight;
    } else {
      a[e.u][e.v] += e.weight;
      a[e.v][e.u] += e.weight;
    }
  }
  return a;
}

/// Q = 1/2m * sum_ij (A_ij - k_i k_j / 2m) [c_i == c_j]
inline double modularity(const Matrix& a, const std::vector<vertex_t>& labels) {
  const std::size_t n = a.size();
  std::vector<double> k(n, 0.0);
  double m2 = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) k[i] += a[i][j];
    m2 += k[i];
  }
  double q = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (labels[i] == labels[j]) q += a[i][j] - k[i] * k[j] / m2;
  return q / m2;
}

inline double modularity(const Graph& g, const commwalk::Partition& p) {
  return modularity(adjacency(g), std::vector<vertex_t>(p.labels().begin(), p.labels().end()));
}

/// Row i0 of P^t by dense matrix powering (P^t computed as a full matrix).
inline std::vector<double> dense_row_power(const Graph& g, vertex_t i0, int t) {
  const Matrix a = adjacency(g);
  const std::size_t n = a.size();
  Matrix p(n, std::vector<double>(n));
  for (std::size_t i = 0; i < n; ++i) {
    double d = 0.0;
    for (double x : a[i]) d += x;
    for (std::size_t j = 0; j < n; ++j) p[i][j] = a[i][j] / d;
  }
  Matrix power(n, std::vector<double>(n, 0.0));
  for (std::size_t i = 0; i < n; ++i) power[i][i] = 1.0;
  for (int s = 0; s < t; ++s) {
    Matrix next(n, std::vector<double>(n, 0.0));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t j = 0; j < n; ++j) next[i][j] += power[i][k] * p[k][j];
    power = std::move(next);
  }
  return power[i0];
}

/// Best modularity over all set partitions (restricted growth strings). n <= 10.
inline double exhaustive_best_modularity(const Graph& g) {
  const Matrix a = adjacency(g);
  const std::size_t n = a.size();
  std::vector<double> k(n, 0.0);
  double m2 = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (double x : a[i]) k[i] += x;
    m2 += k[i];
  }
  Matrix b(n, std::vector<double>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) b[i][j] = (a[i][j] - k[i] * k[j] / m2) / m2;

  std::vector<vertex_t> label(n, 0);
  double best = -1.0;
  // Incremental: contribution of vertex v given labels of 0..v-1.
  std::function<void(std::size_t, vertex_t, double)> rec = [&](std::size_t v, vertex_t used, double q) {
    if (v == n) {
      best = std::max(best, q);
      return;
    }
    for (vertex_t c = 0; c <= used && c < n; ++c) {
      label[v] = c;
      double add = b[v][v];
      for (std::size_t u = 0; u < v; ++u)
        if (label[u] == c) add += 2.0 * b[u][v];
      rec(v + 1, std::max<vertex_t>(used, c + 1), q + add);
    }
  };
  rec(0, 0, 0.0);
  return best;
}

/// G(n, p) with unit weights.
inline Graph random_graph(std::size_t n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  std::vector<Edge> edges;
  for (vertex_t u = 0; u < n; ++u)
    for (vertex_t v = u + 1; v < n; ++v)
      if (coin(rng)) edges.push_back({u, v, 1.0});
  return commwalk::build_graph(n, edges);
}

/// Simple unit-weight graph: a random spanning tree plus G(n, p) edges.
inline Graph random_connected_graph(std::size_t n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  std::vector<char> present(n * n, 0);
  std::vector<Edge> edges;
  for (vertex_t v = 1; v < n; ++v) {
    const vertex_t u = std::uniform_int_distribution<vertex_t>(0, v - 1)(rng);
    present[u * n + v] = 1;
    edges.push_back({u, v, 1.0});
  }
  for (vertex_t u = 0; u < n; ++u)
    for (vertex_t v = u + 1; v < n; ++v)
      if (coin(rng) && !present[u * n + v]) edges.push_back({u, v, 1.0});
  return commwalk::build_graph(n, edges);
}

/// Two random groups: dense inside, sparse across, plus a spanning path. Unit weights.
inline Graph random_two_block_graph(std::size_t n, double p_in, double p_out, std::mt19937_64& rng) {
  std::vector<Edge> edges;
  for (vertex_t v = 1; v < n; ++v) edges.push_back({v - 1, v, 1.0});
  const std::size_t half = n / 2;
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (vertex_t u = 0; u < n; ++u)
    for (vertex_t v = u + 2; v < n; ++v) {
      const bool same = (u < half) == (v < half);
      if (unit(rng) < (same ? p_in : p_out)) edges.push_back({u, v, 1.0});
    }
  return commwalk::build_graph(n, edges);
}

inline bool is_bipartite(const Graph& g) {
  std::vector<int> color(g.n(), -1);
  for (vertex_t s = 0; s < g.n(); ++s) {
    if (color[s] != -1) continue;
    color[s] = 0;
    std::vector<vertex_t> stack{s};
    while (!stack.empty()) {
      vertex_t v = stack.back();
      stack.pop_back();
      for (vertex_t w : g.neighbors(v)) {
        if (color[w] == -1) {
          color[w] = 1 - color[v];
          stack.push_back(w);
        } else if (color[w] == color[v]) {
          return false;
        }
      }
    }
  }
  return true;
}

/// Random labeling of n vertices into at most k labels, densified.
inline commwalk::Partition random_partition(std::size_t n, std::size_t k, std::mt19937_64& rng) {
  std::vector<vertex_t> labels(n);
  std::uniform_int_distribution<vertex_t> pick(0, static_cast<vertex_t>(k - 1));
  for (auto& l : labels) l = pick(rng);
  return commwalk::Partition::from_labels(labels);
}

/// Same split up to swapping the two sides; `a` and `b` are side flags.
inline bool same_split(const std::vector<char>& a, const std::vector<char>& b) {
  bool direct = true, swapped = true;
  for (std::size_t k = 0; k < a.size(); ++k) {
    direct = direct && (a[k] != 0) == (b[k] != 0);
    swapped = swapped && (a[k] != 0) != (b[k] != 0);
  }
  return direct || swapped;
}

}  // namespace oracle

#include "commwalk/spectral.hpp"

namespace oracle {

struct SpectralCase {
  Graph graph;
  std::vector<char> fiedler_side;  // sign of D^{-1/2} s2, zero counts as nonnegative
  double gap = 0.0;                // lambda2 - lambda3
  double lambda2 = 0.0;
  double lambda_min = 0.0;  // most negative eigenvalue

  /// The walk's slowest decaying deviation is the second eigenvector only
  /// when no negative eigenvalue is larger in modulus.
  bool second_dominates() const { return lambda2 > std::abs(lambda_min); }
};

/// Random connected, non-bipartite two-block graphs with lambda2 - lambda3 > min_gap.
inline std::vector<SpectralCase> spectral_cases(std::size_t count, std::uint64_t seed, double min_gap = 0.05) {
  std::mt19937_64 rng(seed);
  std::vector<SpectralCase> out;
  while (out.size() < count) {
    const std::size_t n = std::uniform_int_distribution<std::size_t>(8, 30)(rng);
    const double p_in = std::uniform_real_distribution<double>(0.4, 0.9)(rng);
    const double p_out = std::uniform_real_distribution<double>(0.02, 0.15)(rng);
    Graph g = random_two_block_graph(n, p_in, p_out, rng);
    if (!commwalk::is_connected(g) || is_bipartite(g)) continue;
    auto eig = commwalk::dense_eigensystem(g);
    const double gap = eig[1].value - eig[2].value;
    if (gap <= min_gap) continue;
    SpectralCase c{g, std::vector<char>(n), gap, eig[1].value, eig.back().value};
    for (vertex_t v = 0; v < n; ++v) c.fiedler_side[v] = eig[1].vector[v] / std::sqrt(g.degree(v)) >= 0.0 ? 1 : 0;
    out.push_back(std::move(c));
  }
  return out;
}

}  // namespace oracle
