#pragma once

#include <span>
#include <vector>

#include "commwalk/graph.hpp"

namespace commwalk {

/// Eigenpair of the normalized adjacency L = D^-1/2 A D^-1/2. The vector has
/// unit norm and its first nonzero component is positive.
struct EigenPair {
  double value = 0.0;
  std::vector<double> vector;
};

struct SecondEigenpair {
  EigenPair pair;
  /// Estimate of lambda2 - lambda3 (0 for n == 2).
  double gap_estimate = 0.0;
  /// lambda2 is (numerically) repeated, so the vector is one of many.
  bool degenerate = false;
  int iterations = 0;
};

/// (lambda2, s2) of L by power iteration on (L + I) / 2 with the known leading
/// pair (1, D^1/2 1 / |.|) deflated. Throws InputError for inputs that are not
/// connected, loop-free graphs with n >= 2, and ConvergenceError when the
/// iteration stalls.
SecondEigenpair second_eigenpair(const Graph& g);

/// Dense L as a row-major n x n matrix.
std::vector<double> normalized_adjacency_dense(const Graph& g);

/// All eigenpairs of a symmetric row-major n x n matrix by cyclic Jacobi
/// rotations, sorted by descending eigenvalue. Intended for small n.
std::vector<EigenPair> jacobi_eigensystem(std::span<const double> matrix, std::size_t n);

/// jacobi_eigensystem of L.
std::vector<EigenPair> dense_eigensystem(const Graph& g);

/// Newman's recursive spectral bisection: split each cluster by the sign of
/// D^-1/2 s2 of its induced subgraph, keep splits that raise modularity.
std::vector<VertexSet> newman_spectral_partition(const Graph& g, std::span<const vertex_t> c);
std::vector<VertexSet> newman_spectral_partition(const Graph& g);

}  // namespace commwalk
