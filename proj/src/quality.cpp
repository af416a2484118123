#include "commwalk/quality.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <map>
#include <unordered_set>

#include "commwalk/errors.hpp"
#include "commwalk/kernels.hpp"

namespace commwalk {

namespace {

void require_weight(const Graph& g) {
  if (!(g.total_weight_2m() > 0.0)) throw InputError("modularity: graph has no edges");
}

void require_cover(const Graph& g, const Partition& p) {
  if (p.size() != g.n()) {
    throw InputError("partition covers " + std::to_string(p.size()) + " vertices, graph has " +
                     std::to_string(g.n()));
  }
}

}  // namespace

CommunityStats CommunityStats::of(const Graph& g, const Partition& p) {
  require_cover(g, p);
  CommunityStats s;
  s.sigma_in.assign(p.community_count(), 0.0);
  s.sigma_tot.assign(p.community_count(), 0.0);
  s.total_weight_2m = g.total_weight_2m();
  std::vector<double> inner(g.n());
  kernels::internal_weight(g, p.labels(), inner);
  for (vertex_t v = 0; v < g.n(); ++v) {
    s.sigma_in[p[v]] += inner[v] + 2.0 * g.self_loop(v);
    s.sigma_tot[p[v]] += g.degree(v);
  }
  return s;
}

double modularity(const Graph& g, const Partition& p) {
  require_weight(g);
  const CommunityStats s = CommunityStats::of(g, p);
  double q = 0.0;
  for (std::size_t c = 0; c < s.sigma_in.size(); ++c) {
    q += modularity_term(s.sigma_in[c], s.sigma_tot[c], s.total_weight_2m);
  }
  return q;
}

double community_modularity(const Graph& g, std::span<const vertex_t> c) {
  require_weight(g);
  if (c.empty()) throw InputError("community_modularity: empty vertex set");
  std::unordered_set<vertex_t> members;
  members.reserve(c.size());
  for (vertex_t v : c) {
    if (v >= g.n()) throw InputError("community_modularity: vertex id out of range");
    if (!members.insert(v).second) throw InputError("community_modularity: duplicate vertex");
  }
  double sigma_in = 0.0;
  double sigma_tot = 0.0;
  for (vertex_t v : c) {
    sigma_tot += g.degree(v);
    double inner = 0.0;
    auto nbrs = g.neighbors(v);
    auto ws = g.weights(v);
    for (std::size_t e = 0; e < nbrs.size(); ++e) {
      if (members.contains(nbrs[e])) inner += ws[e];
    }
    sigma_in += inner + 2.0 * g.self_loop(v);
  }
  return modularity_term(sigma_in, sigma_tot, g.total_weight_2m());
}

double delta_q_insert(const Graph& g, const CommunityStats& stats, vertex_t i, vertex_t c, double k_i_in) {
  if (c >= stats.sigma_tot.size()) throw InputError("delta_q_insert: community id out of range");
  return delta_q_insert(stats.sigma_in[c], stats.sigma_tot[c], g.degree(i), k_i_in, stats.total_weight_2m);
}

double delta_q_remove(const Graph& g, const CommunityStats& stats, vertex_t i, vertex_t c, double k_i_in) {
  if (c >= stats.sigma_tot.size()) throw InputError("delta_q_remove: community id out of range");
  const double sigma_in = stats.sigma_in[c] - 2.0 * k_i_in - 2.0 * g.self_loop(i);
  const double sigma_tot = stats.sigma_tot[c] - g.degree(i);
  return -delta_q_insert(sigma_in, sigma_tot, g.degree(i), k_i_in, stats.total_weight_2m);
}

double nmi(std::span<const vertex_t> a, std::span<const vertex_t> b) {
  if (a.size() != b.size()) throw InputError("nmi: labelings differ in length");
  if (a.empty()) throw InputError("nmi: empty labeling");

  const Partition pa = Partition::from_labels(a);
  const Partition pb = Partition::from_labels(b);
  const std::size_t ka = pa.community_count();
  const std::size_t kb = pb.community_count();
  if (ka == 1 && kb == 1) return 1.0;
  if (ka == 1 || kb == 1) return 0.0;

  std::vector<double> count_a(ka, 0.0), count_b(kb, 0.0);
  std::map<std::uint64_t, double> joint;
  for (std::size_t v = 0; v < a.size(); ++v) {
    count_a[pa[static_cast<vertex_t>(v)]] += 1.0;
    count_b[pb[static_cast<vertex_t>(v)]] += 1.0;
    joint[static_cast<std::uint64_t>(pa[static_cast<vertex_t>(v)]) * kb + pb[static_cast<vertex_t>(v)]] += 1.0;
  }

  const double total = static_cast<double>(a.size());
  auto entropy = [total](const std::vector<double>& counts) {
    double h = 0.0;
    for (double c : counts) {
      if (c > 0.0) h -= (c / total) * std::log(c / total);
    }
    return h;
  };
  double mi = 0.0;
  for (const auto& [key, c] : joint) {
    const double ca = count_a[key / kb];
    const double cb = count_b[key % kb];
    mi += (c / total) * std::log(total * c / (ca * cb));
  }
  const double value = 2.0 * mi / (entropy(count_a) + entropy(count_b));
  return std::clamp(value, 0.0, 1.0);
}

}  // namespace commwalk
