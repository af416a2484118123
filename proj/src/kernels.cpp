#include "commwalk/kernels.hpp"

#include <omp.h>

#include <cstddef>
#include <cstdint>

#include "commwalk/constants.hpp"

namespace commwalk::kernels {

namespace {

inline double pull(const Graph& g, std::span<const double> scaled, vertex_t j) {
  const auto off = g.offsets();
  const auto tgt = g.targets();
  const auto wts = g.edge_weights();
  double acc = 0.0;
  for (std::size_t e = off[j]; e < off[j + 1]; ++e) acc += wts[e] * scaled[tgt[e]];
  return acc;
}

inline double same_label_weight(const Graph& g, std::span<const vertex_t> labels, vertex_t v) {
  const auto off = g.offsets();
  const auto tgt = g.targets();
  const auto wts = g.edge_weights();
  const vertex_t own = labels[v];
  double acc = 0.0;
  for (std::size_t e = off[v]; e < off[v + 1]; ++e) {
    if (labels[tgt[e]] == own) acc += wts[e];
  }
  return acc;
}

}  // namespace

void walk_step_serial(const Graph& g, std::span<const double> cur, std::span<double> scaled,
                      std::span<double> next, double alpha) {
  const auto n = g.n();
  const auto deg = g.degrees();
  for (std::size_t k = 0; k < n; ++k) scaled[k] = cur[k] / deg[k];
  for (std::size_t j = 0; j < n; ++j) {
    next[j] = alpha * cur[j] + (1.0 - alpha) * pull(g, scaled, static_cast<vertex_t>(j));
  }
}

void walk_step_omp(const Graph& g, std::span<const double> cur, std::span<double> scaled,
                   std::span<double> next, double alpha) {
  const auto n = static_cast<std::int64_t>(g.n());
  const auto deg = g.degrees();
#pragma omp parallel
  {
#pragma omp for schedule(static)
    for (std::int64_t k = 0; k < n; ++k) scaled[k] = cur[k] / deg[k];
#pragma omp for schedule(dynamic, 1024)
    for (std::int64_t j = 0; j < n; ++j) {
      next[j] = alpha * cur[j] + (1.0 - alpha) * pull(g, scaled, static_cast<vertex_t>(j));
    }
  }
}

void internal_weight_serial(const Graph& g, std::span<const vertex_t> labels, std::span<double> out) {
  for (std::size_t v = 0; v < g.n(); ++v) out[v] = same_label_weight(g, labels, static_cast<vertex_t>(v));
}

void internal_weight_omp(const Graph& g, std::span<const vertex_t> labels, std::span<double> out) {
  const auto n = static_cast<std::int64_t>(g.n());
#pragma omp parallel for schedule(dynamic, 1024)
  for (std::int64_t v = 0; v < n; ++v) out[v] = same_label_weight(g, labels, static_cast<vertex_t>(v));
}

bool use_parallel(const Graph& g) {
  return g.nnz() >= tol::kParallelNnz && !omp_in_parallel() && omp_get_max_threads() > 1;
}

}  // namespace commwalk::kernels
