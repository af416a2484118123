#include <cmath>
#include <numeric>
#include <vector>

#include "commwalk/errors.hpp"
#include "commwalk/gen.hpp"
#include "doctest.h"

using namespace commwalk;

namespace {

bool same_graph(const Graph& a, const Graph& b) {
  if (a.n() != b.n() || a.nnz() != b.nnz()) return false;
  return std::equal(a.targets().begin(), a.targets().end(), b.targets().begin()) &&
         std::equal(a.offsets().begin(), a.offsets().end(), b.offsets().begin());
}

}  // namespace

TEST_CASE("planted partition deterministic limits") {
  LabeledGraph two = planted_l_partition({2, 3, 1.0, 0.0, 5});
  CHECK(two.graph.n() == 6);
  CHECK(two.graph.edge_count() == 6);
  for (vertex_t u = 0; u < 6; ++u)
    for (vertex_t v = 0; v < 6; ++v)
      if (u != v) CHECK((two.graph.weight(u, v) == 1.0) == (u / 3 == v / 3));
  CHECK(two.truth == Partition::from_labels(std::vector<int>{0, 0, 0, 1, 1, 1}));

  LabeledGraph k5 = planted_l_partition({1, 5, 1.0, 0.0, 1});
  CHECK(k5.graph.edge_count() == 10);
  CHECK(k5.truth.community_count() == 1);
}

TEST_CASE("planted partition mean degree") {
  const double expected = 0.7 * 9 + 0.01 * 10 * 19;
  CHECK(std::abs(expected - 8.2) < 1e-12);
  double sum = 0.0;
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    LabeledGraph lg = planted_l_partition({20, 10, 0.7, 0.01, seed});
    sum += lg.graph.total_weight_2m() / static_cast<double>(lg.graph.n());
  }
  CHECK(std::abs(sum / 10.0 - expected) <= 0.1 * expected);
}

TEST_CASE("planted edge frequencies match the probabilities") {
  const double p_in = 0.6, p_out = 0.15;
  const std::size_t l = 3, g = 4;
  double intra = 0, inter = 0, intra_pairs = 0, inter_pairs = 0;
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    LabeledGraph lg = planted_l_partition({l, g, p_in, p_out, seed});
    const Graph& gr = lg.graph;
    for (vertex_t u = 0; u < gr.n(); ++u) {
      CHECK(gr.self_loop(u) == 0.0);
      for (vertex_t v = u + 1; v < gr.n(); ++v) {
        const bool same = lg.truth[u] == lg.truth[v];
        const bool edge = gr.weight(u, v) > 0.0;
        CHECK(gr.weight(u, v) == gr.weight(v, u));
        (same ? intra_pairs : inter_pairs) += 1;
        if (edge) (same ? intra : inter) += 1;
      }
    }
  }
  const double se_in = std::sqrt(p_in * (1 - p_in) / intra_pairs);
  const double se_out = std::sqrt(p_out * (1 - p_out) / inter_pairs);
  CHECK(std::abs(intra / intra_pairs - p_in) <= 3 * se_in);
  CHECK(std::abs(inter / inter_pairs - p_out) <= 3 * se_out);
}

TEST_CASE("gaussian partition sizes") {
  SUBCASE("zero spread gives equal groups") {
    GaussianPartitionSpec spec{100, 25, 0.0, 0.7, 0.01, 3};
    auto sizes = gaussian_community_sizes(spec);
    CHECK(sizes == std::vector<std::size_t>{25, 25, 25, 25});
    LabeledGraph lg = gaussian_random_partition(spec);
    for (vertex_t v = 0; v < 100; ++v) CHECK(lg.truth[v] == v / 25);
  }
  SUBCASE("sum and mean") {
    double total_mean = 0.0;
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
      auto sizes = gaussian_community_sizes({500, 25, 2.5, 0.7, 0.01, seed});
      CHECK(std::accumulate(sizes.begin(), sizes.end(), std::size_t{0}) == 500);
      for (std::size_t s : sizes) CHECK(s >= 1);
      total_mean += 500.0 / static_cast<double>(sizes.size());
    }
    CHECK(std::abs(total_mean / 10.0 - 25.0) <= 0.15 * 25.0);
  }
  SUBCASE("first draw truncated") {
    auto sizes = gaussian_community_sizes({10, 100, 2.5, 0.7, 0.01, 0});
    CHECK(sizes == std::vector<std::size_t>{10});
  }
}

TEST_CASE("generators are deterministic per seed") {
  LabeledGraph a = planted_l_partition({5, 8, 0.5, 0.1, 42});
  LabeledGraph b = planted_l_partition({5, 8, 0.5, 0.1, 42});
  LabeledGraph c = planted_l_partition({5, 8, 0.5, 0.1, 43});
  CHECK(same_graph(a.graph, b.graph));
  CHECK_FALSE(same_graph(a.graph, c.graph));
  LabeledGraph x = gaussian_random_partition({200, 20, 3, 0.5, 0.02, 9});
  LabeledGraph y = gaussian_random_partition({200, 20, 3, 0.5, 0.02, 9});
  CHECK(same_graph(x.graph, y.graph));
  CHECK(x.truth == y.truth);
}

TEST_CASE("generator validation") {
  CHECK_THROWS_AS(planted_l_partition({1, 1, 0.5, 0.1, 0}), InputError);
  CHECK_THROWS_AS(planted_l_partition({2, 2, 1.5, 0.1, 0}), InputError);
  CHECK_THROWS_AS(gaussian_random_partition({1, 5, 1, 0.5, 0.1, 0}), InputError);
  CHECK_THROWS_AS(gaussian_random_partition({10, 0.5, 1, 0.5, 0.1, 0}), InputError);
  CHECK_THROWS_AS(gaussian_random_partition({10, 5, -1, 0.5, 0.1, 0}), InputError);
  LabeledGraph inverted = planted_l_partition({2, 3, 0.1, 0.5, 0});
  CHECK(inverted.warnings.size() == 1);
}
