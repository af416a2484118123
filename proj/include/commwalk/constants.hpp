#pragma once

#include <cstddef>

namespace commwalk::tol {

/// Allowed drift of a probability row away from total mass 1.
inline constexpr double kProbabilitySum = 1e-12;

/// Slack on the split acceptance test Q(C1) + Q(C2) > Q(C).
inline constexpr double kSplitGain = 1e-12;

/// Minimum improvement over staying for a Louvain local move.
inline constexpr double kMoveGain = 1e-13;

/// Allowed modularity decrease when monotonicity checks are enabled.
inline constexpr double kMonotone = 1e-12;

/// Default level-over-level modularity gain below which Louvain stops.
inline constexpr double kMinLevelGain = 1e-9;

/// Cap on Gauss-Seidel sweeps of the two-way refinement.
inline constexpr int kRefineSweepCap = 100;

/// Cap on local-move passes per Louvain level.
inline constexpr int kLocalMovePassCap = 1000;

/// Eigenvector change below which power iteration is converged.
inline constexpr double kEigenConverged = 1e-10;
inline constexpr int kEigenMaxIterations = 100000;
/// After this many iterations a change above kEigenPlateau means the
/// leading pair of the deflated operator is (nearly) degenerate.
inline constexpr int kEigenPlateauIterations = 10000;
inline constexpr double kEigenPlateau = 1e-6;
/// |lambda2 - lambda3| below which the second eigenpair is flagged degenerate.
inline constexpr double kEigenDegenerateGap = 1e-6;

/// Graphs with at least this many adjacency entries use the OpenMP kernels.
inline constexpr std::size_t kParallelNnz = std::size_t{1} << 15;

}  // namespace commwalk::tol
