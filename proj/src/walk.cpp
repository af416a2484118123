#include "commwalk/walk.hpp"

#include <string>
#include <utility>

#include "commwalk/errors.hpp"
#include "commwalk/kernels.hpp"

namespace commwalk {

namespace {

void check_args(const Graph& g, vertex_t i0, int t, double alpha, int min_t) {
  if (i0 >= g.n()) throw InputError("walk: source vertex " + std::to_string(i0) + " out of range");
  if (t < min_t) throw InputError("walk: step count must be >= " + std::to_string(min_t));
  if (!(alpha >= 0.0 && alpha < 1.0)) throw InputError("walk: laziness must lie in [0, 1)");
}

std::vector<double> stationary_unchecked(const Graph& g) {
  std::vector<double> phi(g.n());
  const double total = g.total_weight_2m();
  for (vertex_t v = 0; v < g.n(); ++v) phi[v] = g.degree(v) / total;
  return phi;
}

}  // namespace

namespace detail {

void require_walkable(const Graph& g) {
  if (g.n() == 0) throw InputError("walk: empty graph");
  if (g.has_self_loops()) throw InputError("walk: self-loops are not supported");
  for (vertex_t v = 0; v < g.n(); ++v) {
    if (g.degree(v) <= 0.0) throw InputError("walk: vertex " + std::to_string(v) + " is isolated");
  }
  if (!is_connected(g)) throw InputError("walk: graph is disconnected");
}

WalkSignature walk_signature_unchecked(const Graph& g, vertex_t i0, int t, double alpha) {
  const std::size_t n = g.n();
  const std::vector<double> phi = stationary_unchecked(g);
  std::vector<double> cur(n), next(n), scratch(n);
  for (std::size_t j = 0; j < n; ++j) cur[j] = -phi[j];
  cur[i0] += 1.0;
  for (int step = 0; step < t; ++step) {
    kernels::walk_step(g, cur, scratch, next, alpha);
    double drift = 0.0;
    for (double x : next) drift += x;
    for (std::size_t j = 0; j < n; ++j) next[j] -= drift * phi[j];
    std::swap(cur, next);
  }
  return {i0, t, std::move(cur)};
}

}  // namespace detail

std::vector<double> transition_row_power(const Graph& g, vertex_t i0, int t, double alpha) {
  check_args(g, i0, t, alpha, 0);
  detail::require_walkable(g);
  const std::size_t n = g.n();
  std::vector<double> cur(n, 0.0), next(n), scratch(n);
  cur[i0] = 1.0;
  for (int step = 0; step < t; ++step) {
    kernels::walk_step(g, cur, scratch, next, alpha);
    std::swap(cur, next);
  }
  return cur;
}

std::vector<double> stationary_distribution(const Graph& g) {
  detail::require_walkable(g);
  return stationary_unchecked(g);
}

WalkSignature walk_signature(const Graph& g, vertex_t i0, int t, double alpha) {
  check_args(g, i0, t, alpha, 1);
  detail::require_walkable(g);
  return detail::walk_signature_unchecked(g, i0, t, alpha);
}

}  // namespace commwalk
