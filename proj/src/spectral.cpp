#include "commwalk/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "commwalk/constants.hpp"
#include "commwalk/errors.hpp"
#include "commwalk/rwgp.hpp"
#include "commwalk/walk.hpp"

namespace commwalk {

namespace {

double dot(std::span<const double> a, std::span<const double> b) {
  double s = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) s += a[k] * b[k];
  return s;
}

double normalize(std::vector<double>& x) {
  const double norm = std::sqrt(dot(x, x));
  if (norm > 0.0) {
    for (double& v : x) v /= norm;
  }
  return norm;
}

void orthogonalize(std::vector<double>& x, std::span<const std::vector<double>> basis) {
  for (const auto& b : basis) {
    const double c = dot(x, b);
    for (std::size_t k = 0; k < x.size(); ++k) x[k] -= c * b[k];
  }
}

void canonical_sign(std::vector<double>& x) {
  for (double v : x) {
    if (std::abs(v) > 1e-12) {
      if (v < 0.0) {
        for (double& w : x) w = -w;
      }
      return;
    }
  }
}

// y = (L + I) / 2 * x
void shifted_apply(const Graph& g, std::span<const double> inv_sqrt_deg, std::span<const double> x,
                   std::span<double> y) {
  for (vertex_t i = 0; i < g.n(); ++i) {
    auto nbrs = g.neighbors(i);
    auto ws = g.weights(i);
    double acc = 0.0;
    for (std::size_t e = 0; e < nbrs.size(); ++e) acc += ws[e] * inv_sqrt_deg[nbrs[e]] * x[nbrs[e]];
    y[i] = 0.5 * (acc * inv_sqrt_deg[i] + x[i]);
  }
}

struct PowerResult {
  double value = 0.0;  // eigenvalue of L
  std::vector<double> vector;
  int iterations = 0;
  bool converged = false;
  bool plateau = false;
};

// Deflated power iteration for the top eigenpair of (L + I) / 2 orthogonal to `basis`.
PowerResult deflated_power(const Graph& g, std::span<const double> inv_sqrt_deg,
                           std::span<const std::vector<double>> basis, int max_iterations, double tolerance,
                           bool detect_plateau) {
  const std::size_t n = g.n();
  PowerResult r;
  std::vector<double> x(n), y(n);
  for (std::size_t j = 0; j < n; ++j) {
    x[j] = 1.0 + static_cast<double>((j * 2654435761ULL) % 1009) / 1009.0;
  }
  orthogonalize(x, basis);
  normalize(x);

  double mu = 0.0;
  for (int it = 1; it <= max_iterations; ++it) {
    shifted_apply(g, inv_sqrt_deg, x, y);
    orthogonalize(y, basis);
    mu = dot(x, y);
    const double norm = normalize(y);
    r.iterations = it;
    if (norm < 1e-14) {
      // Every remaining eigenvalue of the shifted operator is 0, so x is an
      // eigenvector of L with eigenvalue -1.
      mu = 0.0;
      r.converged = true;
      break;
    }
    double change = 0.0;
    for (std::size_t k = 0; k < n; ++k) change = std::max(change, std::abs(y[k] - x[k]));
    std::swap(x, y);
    if (change < tolerance) {
      r.converged = true;
      break;
    }
    if (detect_plateau && it >= tol::kEigenPlateauIterations && change > tol::kEigenPlateau) {
      r.plateau = true;
      break;
    }
  }
  r.value = 2.0 * mu - 1.0;
  r.vector = std::move(x);
  return r;
}

void require_spectral_input(const Graph& g) {
  if (g.n() < 2) throw InputError("second_eigenpair: need at least two vertices");
  detail::require_walkable(g);
}

std::vector<double> inverse_sqrt_degrees(const Graph& g) {
  std::vector<double> out(g.n());
  for (vertex_t v = 0; v < g.n(); ++v) out[v] = 1.0 / std::sqrt(g.degree(v));
  return out;
}

std::vector<double> leading_vector(const Graph& g) {
  std::vector<double> s1(g.n());
  for (vertex_t v = 0; v < g.n(); ++v) s1[v] = std::sqrt(g.degree(v));
  normalize(s1);
  return s1;
}

PowerResult second_pair_unchecked(const Graph& g, std::span<const double> inv_sqrt_deg,
                                  const std::vector<double>& s1) {
  std::vector<std::vector<double>> basis{s1};
  PowerResult r = deflated_power(g, inv_sqrt_deg, basis, tol::kEigenMaxIterations, tol::kEigenConverged, true);
  canonical_sign(r.vector);
  return r;
}

}  // namespace

SecondEigenpair second_eigenpair(const Graph& g) {
  require_spectral_input(g);
  const auto inv_sqrt_deg = inverse_sqrt_degrees(g);
  const auto s1 = leading_vector(g);
  PowerResult second = second_pair_unchecked(g, inv_sqrt_deg, s1);

  SecondEigenpair out;
  out.iterations = second.iterations;
  if (g.n() > 2) {
    std::vector<std::vector<double>> basis{s1, second.vector};
    const PowerResult third = deflated_power(g, inv_sqrt_deg, basis, tol::kEigenMaxIterations / 10, 1e-8, false);
    out.gap_estimate = second.value - third.value;
  }
  if (!second.converged) {
    throw ConvergenceError("second_eigenpair: power iteration did not converge after " +
                               std::to_string(second.iterations) + " iterations (lambda2 - lambda3 ~ " +
                               std::to_string(out.gap_estimate) + ")",
                           out.gap_estimate);
  }
  out.degenerate = g.n() > 2 && std::abs(out.gap_estimate) < tol::kEigenDegenerateGap;
  out.pair = {second.value, std::move(second.vector)};
  return out;
}

std::vector<double> normalized_adjacency_dense(const Graph& g) {
  const std::size_t n = g.n();
  std::vector<double> m(n * n, 0.0);
  for (vertex_t i = 0; i < n; ++i) {
    auto nbrs = g.neighbors(i);
    auto ws = g.weights(i);
    for (std::size_t e = 0; e < nbrs.size(); ++e) {
      m[i * n + nbrs[e]] = ws[e] / std::sqrt(g.degree(i) * g.degree(nbrs[e]));
    }
    if (g.self_loop(i) > 0.0) m[i * n + i] = 2.0 * g.self_loop(i) / g.degree(i);
  }
  return m;
}

std::vector<EigenPair> jacobi_eigensystem(std::span<const double> matrix, std::size_t n) {
  std::vector<double> a(matrix.begin(), matrix.end());
  std::vector<double> v(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i) v[i * n + i] = 1.0;

  auto off_norm = [&] {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (i != j) s += a[i * n + j] * a[i * n + j];
    return std::sqrt(s);
  };
  double scale = 0.0;
  for (double x : a) scale += x * x;
  scale = std::sqrt(scale);

  for (int sweep = 0; sweep < 100 && off_norm() > 1e-15 * std::max(scale, 1.0); ++sweep) {
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = a[p * n + q];
        if (std::abs(apq) < 1e-300) continue;
        const double theta = (a[q * n + q] - a[p * n + p]) / (2.0 * apq);
        const double t = std::copysign(1.0, theta) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (std::size_t k = 0; k < n; ++k) {
          const double akp = a[k * n + p], akq = a[k * n + q];
          a[k * n + p] = c * akp - s * akq;
          a[k * n + q] = s * akp + c * akq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double apk = a[p * n + k], aqk = a[q * n + k];
          a[p * n + k] = c * apk - s * aqk;
          a[q * n + k] = s * apk + c * aqk;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double vkp = v[k * n + p], vkq = v[k * n + q];
          v[k * n + p] = c * vkp - s * vkq;
          v[k * n + q] = s * vkp + c * vkq;
        }
      }
    }
  }

  std::vector<EigenPair> out(n);
  for (std::size_t k = 0; k < n; ++k) {
    out[k].value = a[k * n + k];
    out[k].vector.resize(n);
    for (std::size_t i = 0; i < n; ++i) out[k].vector[i] = v[i * n + k];
    normalize(out[k].vector);
    canonical_sign(out[k].vector);
  }
  std::stable_sort(out.begin(), out.end(), [](const EigenPair& x, const EigenPair& y) { return x.value > y.value; });
  return out;
}

std::vector<EigenPair> dense_eigensystem(const Graph& g) {
  return jacobi_eigensystem(normalized_adjacency_dense(g), g.n());
}

std::vector<VertexSet> newman_spectral_partition(const Graph& g, std::span<const vertex_t> c) {
  auto split = [](const SubgraphMap& sub) {
    const Graph& h = sub.sub;
    const auto inv_sqrt_deg = inverse_sqrt_degrees(h);
    const auto s1 = leading_vector(h);
    PowerResult r = second_pair_unchecked(h, inv_sqrt_deg, s1);
    if (!r.converged) {
      throw ConvergenceError("newman_spectral_partition: power iteration did not converge on a cluster of " +
                                 std::to_string(h.n()) + " vertices",
                             0.0);
    }
    std::vector<char> side(h.n());
    for (vertex_t v = 0; v < h.n(); ++v) side[v] = r.vector[v] * inv_sqrt_deg[v] >= 0.0 ? 1 : 0;
    return side;
  };
  return detail::recursive_bisection(g, c, split, false, false);
}

std::vector<VertexSet> newman_spectral_partition(const Graph& g) {
  VertexSet all(g.n());
  std::iota(all.begin(), all.end(), vertex_t{0});
  return newman_spectral_partition(g, all);
}

}  // namespace commwalk
