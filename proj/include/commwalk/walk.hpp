#pragma once

#include <vector>

#include "commwalk/graph.hpp"

namespace commwalk {

/// P^t_{i0.} - phi for the simple random walk P = D^-1 A.
struct WalkSignature {
  vertex_t source = 0;
  int t = 0;
  std::vector<double> values;
};

/// Row i0 of P^t by t successive vector-times-sparse-matrix steps.
/// With laziness alpha each step stays put with probability alpha.
/// Throws InputError if g is disconnected, has an isolated vertex or a
/// self-loop, or if t < 0 or alpha is outside [0, 1).
std::vector<double> transition_row_power(const Graph& g, vertex_t i0, int t, double alpha = 0.0);

/// phi_i = d(i) / sum_k d(k).
std::vector<double> stationary_distribution(const Graph& g);

/// P^t_{i0.} - phi for t >= 1.
///
/// The difference is propagated directly: r_0 = e_{i0} - phi and
/// r_{k+1} = r_k P, re-projected after every step so that sum(r) = 0. Since
/// phi P = phi this equals the difference of the two functions above, but
/// keeps full relative precision when |P^t - phi| falls far below 1e-16,
/// which is where the signs matter for large t.
WalkSignature walk_signature(const Graph& g, vertex_t i0, int t, double alpha = 0.0);

namespace detail {

/// Throws InputError unless g is a connected loop-free graph without isolated vertices.
void require_walkable(const Graph& g);

/// walk_signature without the O(n + m) input validation.
WalkSignature walk_signature_unchecked(const Graph& g, vertex_t i0, int t, double alpha);

}  // namespace detail

}  // namespace commwalk
