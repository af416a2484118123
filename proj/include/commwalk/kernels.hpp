#pragma once

#include <span>

#include "commwalk/graph.hpp"

// Data-parallel inner loops. Every kernel has a serial reference and an
// OpenMP version; both compute each output entry with the same operation
// order, so their results are bitwise identical for any thread count.

namespace commwalk::kernels {

/// One step of the (optionally lazy) random walk on a row vector:
///   next = alpha * cur + (1 - alpha) * cur * D^-1 A
/// `scaled` is scratch of size n. Requires a loop-free graph with d(v) > 0.
void walk_step_serial(const Graph& g, std::span<const double> cur, std::span<double> scaled,
                      std::span<double> next, double alpha);
void walk_step_omp(const Graph& g, std::span<const double> cur, std::span<double> scaled,
                   std::span<double> next, double alpha);

/// out[v] = total weight of non-loop edges from v to vertices with the same label.
void internal_weight_serial(const Graph& g, std::span<const vertex_t> labels, std::span<double> out);
void internal_weight_omp(const Graph& g, std::span<const vertex_t> labels, std::span<double> out);

/// Whether the dispatching wrappers below would pick the OpenMP version.
bool use_parallel(const Graph& g);

inline void walk_step(const Graph& g, std::span<const double> cur, std::span<double> scaled,
                      std::span<double> next, double alpha) {
  if (use_parallel(g)) {
    walk_step_omp(g, cur, scaled, next, alpha);
  } else {
    walk_step_serial(g, cur, scaled, next, alpha);
  }
}

inline void internal_weight(const Graph& g, std::span<const vertex_t> labels, std::span<double> out) {
  if (use_parallel(g)) {
    internal_weight_omp(g, labels, out);
  } else {
    internal_weight_serial(g, labels, out);
  }
}

}  // namespace commwalk::kernels
