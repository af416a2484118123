#include "commwalk/gen.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <span>
#include <string>

#include "commwalk/errors.hpp"

namespace commwalk {

namespace {

void require_probability(double p, const char* name) {
  if (!(p >= 0.0 && p <= 1.0)) throw InputError(std::string(name) + " must lie in [0, 1]");
}

// Visits every index in [begin, end) independently with probability p by
// geometric skipping, so the cost is O(1 + expected hits).
template <class Rng, class Visit>
void bernoulli_range(Rng& rng, std::size_t begin, std::size_t end, double p, Visit&& visit) {
  if (p <= 0.0 || begin >= end) return;
  if (p >= 1.0) {
    for (std::size_t k = begin; k < end; ++k) visit(k);
    return;
  }
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const double log_q = std::log1p(-p);
  std::size_t k = begin;
  while (true) {
    const double u = 1.0 - unit(rng);  // (0, 1]
    const double skip = std::floor(std::log(u) / log_q);
    if (skip >= static_cast<double>(end - k)) return;
    k += static_cast<std::size_t>(skip);
    visit(k);
    if (++k >= end) return;
  }
}

}  // namespace

LabeledGraph block_model(std::span<const std::size_t> sizes, double p_in, double p_out, std::uint64_t seed) {
  require_probability(p_in, "p_in");
  require_probability(p_out, "p_out");
  std::size_t n = 0;
  for (std::size_t s : sizes) n += s;
  if (n > std::numeric_limits<vertex_t>::max()) throw InputError("generator: too many vertices");

  std::vector<vertex_t> label(n);
  std::vector<std::size_t> group_end(n);
  {
    std::size_t v = 0;
    for (std::size_t c = 0; c < sizes.size(); ++c) {
      for (std::size_t k = 0; k < sizes[c]; ++k, ++v) {
        label[v] = static_cast<vertex_t>(c);
        group_end[v] = v - k + sizes[c];
      }
    }
  }

  std::mt19937_64 rng(seed);
  std::vector<Edge> edges;
  for (std::size_t u = 0; u < n; ++u) {
    auto add = [&](std::size_t v) { edges.push_back({static_cast<vertex_t>(u), static_cast<vertex_t>(v), 1.0}); };
    bernoulli_range(rng, u + 1, group_end[u], p_in, add);
    bernoulli_range(rng, group_end[u], n, p_out, add);
  }

  LabeledGraph out{build_graph(n, edges), Partition::from_labels(label), {}};
  if (p_out > p_in) out.warnings.push_back("p_out exceeds p_in; the planted groups are not communities");
  return out;
}

LabeledGraph planted_l_partition(const PlantedSpec& spec) {
  if (spec.l * spec.g < 2) throw InputError("planted_l_partition: need l * g >= 2");
  std::vector<std::size_t> sizes(spec.l, spec.g);
  return block_model(sizes, spec.p_in, spec.p_out, spec.seed);
}

std::vector<std::size_t> gaussian_community_sizes(const GaussianPartitionSpec& spec) {
  if (spec.n < 2) throw InputError("gaussian_random_partition: need n >= 2");
  if (!(spec.mean_size >= 1.0)) throw InputError("gaussian_random_partition: mean size must be >= 1");
  if (!(spec.sigma >= 0.0)) throw InputError("gaussian_random_partition: sigma must be >= 0");

  // Sizes use their own stream so the edge draws do not depend on how many
  // sizes were needed.
  std::mt19937_64 rng(spec.seed ^ 0x5bd1e9955bd1e995ULL);
  std::normal_distribution<double> size_dist(spec.mean_size, spec.sigma);
  std::vector<std::size_t> sizes;
  std::size_t covered = 0;
  while (covered < spec.n) {
    const double draw = spec.sigma > 0.0 ? size_dist(rng) : spec.mean_size;
    auto size = static_cast<std::size_t>(std::max(1.0, std::round(draw)));
    size = std::min(size, spec.n - covered);
    sizes.push_back(size);
    covered += size;
  }
  return sizes;
}

LabeledGraph gaussian_random_partition(const GaussianPartitionSpec& spec) {
  const auto sizes = gaussian_community_sizes(spec);
  return block_model(sizes, spec.p_in, spec.p_out, spec.seed);
}

}  // namespace commwalk
