#pragma once

#include <span>
#include <vector>

#include "commwalk/graph.hpp"
#include "commwalk/partition.hpp"

namespace commwalk {

/// Per-community running sums for O(deg(i)) gain evaluation.
///   sigma_in:  twice the intra-community edge weight (self-loops count 2w)
///   sigma_tot: sum of member degrees
struct CommunityStats {
  std::vector<double> sigma_in;
  std::vector<double> sigma_tot;
  double total_weight_2m = 0.0;

  static CommunityStats of(const Graph& g, const Partition& p);
};

/// e_C - a_C^2 with e_C = sigma_in / 2m and a_C = sigma_tot / 2m.
inline double modularity_term(double sigma_in, double sigma_tot, double total_weight_2m) {
  const double a = sigma_tot / total_weight_2m;
  return sigma_in / total_weight_2m - a * a;
}

/// Q(P) = sum over communities of e_C - a_C^2. Throws InputError when the
/// graph has no edge weight or the partition does not match the graph.
double modularity(const Graph& g, const Partition& p);

/// Contribution e_C - a_C^2 of one vertex set, normalised by the 2m of `g`
/// (never by the 2m of a subgraph the set was found in).
double community_modularity(const Graph& g, std::span<const vertex_t> c);

/// Modularity change from placing vertex i (degree k_i, currently in no
/// community) into a community with sums (sigma_in, sigma_tot), where
/// k_i_in is the weight of the edges between i and that community:
///
///   [(S_in + 2 k_in)/2m - ((S_tot + k_i)/2m)^2] - [S_in/2m - (S_tot/2m)^2 - (k_i/2m)^2]
inline double delta_q_insert(double sigma_in, double sigma_tot, double k_i, double k_i_in,
                             double total_weight_2m) {
  const double m2 = total_weight_2m;
  const double after = (sigma_in + 2.0 * k_i_in) / m2 - ((sigma_tot + k_i) / m2) * ((sigma_tot + k_i) / m2);
  const double before = sigma_in / m2 - (sigma_tot / m2) * (sigma_tot / m2) - (k_i / m2) * (k_i / m2);
  return after - before;
}

/// Gain of inserting i into community c of `stats`; i must not be counted in c.
/// Throws InputError if c is out of range.
double delta_q_insert(const Graph& g, const CommunityStats& stats, vertex_t i, vertex_t c, double k_i_in);

/// Gain of taking i out of its own community c (i counted in c's sums) and
/// leaving it alone: the negation of inserting i back into C \ {i}.
/// k_i_in is the weight between i and the other members of c.
double delta_q_remove(const Graph& g, const CommunityStats& stats, vertex_t i, vertex_t c, double k_i_in);

/// 2 MI(a, b) / (H(a) + H(b)) with natural logarithms. Labels are arbitrary.
/// Both labelings single-class gives 1; exactly one single-class gives 0.
/// Throws InputError on empty input or length mismatch.
double nmi(std::span<const vertex_t> a, std::span<const vertex_t> b);

inline double nmi(const Partition& a, const Partition& b) { return nmi(a.labels(), b.labels()); }

}  // namespace commwalk
