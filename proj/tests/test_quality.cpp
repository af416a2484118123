#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <vector>

#include "commwalk/errors.hpp"
#include "commwalk/quality.hpp"
#include "doctest.h"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace commwalk;

namespace {

Partition two_triangles_partition() { return Partition::from_labels(std::vector<int>{0, 0, 0, 1, 1, 1}); }

double move_and_measure(const Graph& g, const Partition& p, vertex_t i, vertex_t target) {
  std::vector<vertex_t> labels(p.labels().begin(), p.labels().end());
  labels[i] = target;
  return modularity(g, Partition::from_labels(labels));
}

double weight_into(const Graph& g, const Partition& p, vertex_t i, vertex_t c) {
  double k = 0.0;
  auto nbrs = g.neighbors(i);
  auto ws = g.weights(i);
  for (std::size_t e = 0; e < nbrs.size(); ++e)
    if (p[nbrs[e]] == c) k += ws[e];
  return k;
}

}  // namespace

TEST_CASE("modularity examples") {
  CHECK(modularity(fixtures::barbell(), Partition::whole(6)) == doctest::Approx(0.0).epsilon(1e-15));
  CHECK(std::abs(modularity(fixtures::triangle(), Partition::singletons(3)) - (-1.0 / 3.0)) < 1e-15);
  CHECK(std::abs(modularity(fixtures::barbell(), two_triangles_partition()) - 5.0 / 14.0) < 1e-15);
  CHECK_THROWS_AS(modularity(build_graph(3, std::vector<Edge>{}), Partition::whole(3)), InputError);
  CHECK_THROWS_AS(modularity(fixtures::triangle(), Partition::whole(4)), InputError);
}

TEST_CASE("community_modularity examples") {
  Graph g = fixtures::barbell();
  CHECK(std::abs(community_modularity(g, std::vector<vertex_t>{0, 1, 2, 3, 4, 5})) < 1e-15);
  CHECK(std::abs(community_modularity(g, std::vector<vertex_t>{0, 1, 2}) - 5.0 / 28.0) < 1e-15);
  const double bridge = 2.0 / 14.0 - (6.0 / 14.0) * (6.0 / 14.0);
  CHECK(std::abs(community_modularity(g, std::vector<vertex_t>{2, 3}) - bridge) < 1e-15);
  CHECK(bridge == doctest::Approx(-0.0408).epsilon(1e-3));
  CHECK_THROWS_AS(community_modularity(g, std::vector<vertex_t>{}), InputError);
  CHECK_THROWS_AS(community_modularity(g, std::vector<vertex_t>{1, 1}), InputError);
  CHECK_THROWS_AS(community_modularity(g, std::vector<vertex_t>{6}), InputError);
}

TEST_CASE("delta_q_insert examples") {
  CHECK(std::abs(delta_q_insert(0.0, 2.0, 2.0, 1.0, 6.0) - 1.0 / 9.0) < 1e-15);
  CHECK(delta_q_insert(0.0, 0.0, 3.0, 0.0, 10.0) == doctest::Approx(0.0).epsilon(1e-15));

  Graph g = fixtures::triangle();
  CommunityStats stats = CommunityStats::of(g, Partition::singletons(3));
  CHECK(std::abs(delta_q_insert(g, stats, 0, 1, 1.0) - 1.0 / 9.0) < 1e-15);
}

TEST_CASE("modularity agrees with the dense definition") {
  std::mt19937_64 rng(21);
  for (int rep = 0; rep < 20; ++rep) {
    Graph g = oracle::random_connected_graph(20, 0.2, rng);
    Partition p = oracle::random_partition(20, 4, rng);
    CHECK(std::abs(modularity(g, p) - oracle::modularity(g, p)) < 1e-12);
  }
  // weighted with self-loops
  Graph w = build_graph(4, std::vector<Edge>{{0, 0, 2}, {0, 1, 0.5}, {1, 2, 3}, {2, 3, 1.5}, {3, 3, 1}});
  Partition p = Partition::from_labels(std::vector<int>{0, 0, 1, 1});
  CHECK(std::abs(modularity(w, p) - oracle::modularity(w, p)) < 1e-12);
}

TEST_CASE("additivity over communities") {
  std::mt19937_64 rng(22);
  for (int rep = 0; rep < 50; ++rep) {
    Graph g = oracle::random_connected_graph(12, 0.3, rng);
    Partition p = oracle::random_partition(12, 4, rng);
    double sum = 0.0;
    for (const VertexSet& c : p.members()) sum += community_modularity(g, c);
    CHECK(std::abs(sum - modularity(g, p)) < 1e-12);
  }
}

TEST_CASE("single-vertex move gains match recomputation") {
  std::mt19937_64 rng(23);
  for (int rep = 0; rep < 100; ++rep) {
    Graph g = oracle::random_connected_graph(12, 0.3, rng);
    Partition p = oracle::random_partition(12, 4, rng);
    if (p.community_count() < 2) continue;
    const vertex_t i = std::uniform_int_distribution<vertex_t>(0, 11)(rng);
    vertex_t target = std::uniform_int_distribution<vertex_t>(0, static_cast<vertex_t>(p.community_count() - 2))(rng);
    if (target >= p[i]) ++target;
    CommunityStats stats = CommunityStats::of(g, p);
    const double removal = delta_q_remove(g, stats, i, p[i], weight_into(g, p, i, p[i]));
    const double insertion = delta_q_insert(g, stats, i, target, weight_into(g, p, i, target));
    const double direct = move_and_measure(g, p, i, target) - modularity(g, p);
    CHECK(std::abs(removal + insertion - direct) < 1e-10);
  }
}

TEST_CASE("modularity is invariant under relabeling") {
  std::mt19937_64 rng(24);
  for (int rep = 0; rep < 20; ++rep) {
    Graph g = oracle::random_connected_graph(15, 0.25, rng);
    Partition p = oracle::random_partition(15, 5, rng);
    std::vector<vertex_t> perm(p.community_count());
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<vertex_t> relabeled(15);
    for (vertex_t v = 0; v < 15; ++v) relabeled[v] = perm[p[v]] + 100;
    CHECK(std::abs(modularity(g, p) - modularity(g, Partition::from_labels(relabeled))) < 1e-15);
  }
}

TEST_CASE("nmi examples") {
  using L = std::vector<vertex_t>;
  CHECK(nmi(L{0, 1, 2, 0, 1}, L{0, 1, 2, 0, 1}) == doctest::Approx(1.0));
  CHECK(nmi(L{0, 0, 1, 1}, L{1, 1, 0, 0}) == doctest::Approx(1.0));
  CHECK(std::abs(nmi(L{0, 0, 1, 1}, L{0, 1, 0, 1})) < 1e-15);
  CHECK(nmi(L{0, 0, 0}, L{4, 4, 4}) == 1.0);
  CHECK(nmi(L{0, 0, 0}, L{0, 1, 1}) == 0.0);
  CHECK_THROWS_AS(nmi(L{0, 1}, L{0}), InputError);
  CHECK_THROWS_AS(nmi(L{}, L{}), InputError);
}

TEST_CASE("nmi matches a direct entropy computation") {
  // (0,0,1,1,1) vs (0,0,0,1,1): table [[2,0],[1,2]]
  const double h_a = -(0.4 * std::log(0.4) + 0.6 * std::log(0.6));
  const double mi = 0.4 * std::log(0.4 / (0.4 * 0.6)) + 0.2 * std::log(0.2 / (0.6 * 0.6)) +
                    0.4 * std::log(0.4 / (0.6 * 0.4));
  const double expected = 2.0 * mi / (2.0 * h_a);
  using L = std::vector<vertex_t>;
  CHECK(std::abs(nmi(L{0, 0, 1, 1, 1}, L{0, 0, 0, 1, 1}) - expected) < 1e-14);
}

TEST_CASE("nmi bounds, symmetry and permutation invariance") {
  std::mt19937_64 rng(25);
  for (int rep = 0; rep < 1000; ++rep) {
    const std::size_t n = std::uniform_int_distribution<std::size_t>(1, 50)(rng);
    const vertex_t ka = std::uniform_int_distribution<vertex_t>(1, 6)(rng);
    const vertex_t kb = std::uniform_int_distribution<vertex_t>(1, 6)(rng);
    std::vector<vertex_t> a(n), b(n);
    for (auto& x : a) x = std::uniform_int_distribution<vertex_t>(0, ka - 1)(rng);
    for (auto& x : b) x = std::uniform_int_distribution<vertex_t>(0, kb - 1)(rng);
    const double ab = nmi(a, b);
    CHECK(ab >= 0.0);
    CHECK(ab <= 1.0);
    CHECK(std::abs(ab - nmi(b, a)) < 1e-12);
    std::vector<vertex_t> shifted(n);
    for (std::size_t k = 0; k < n; ++k) shifted[k] = (a[k] + 3) % 7 + 10;
    CHECK(std::abs(ab - nmi(shifted, b)) < 1e-12);
    // permuting vertices in both labelings together
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), rng);
    std::vector<vertex_t> pa(n), pb(n);
    for (std::size_t k = 0; k < n; ++k) {
      pa[k] = a[order[k]];
      pb[k] = b[order[k]];
    }
    CHECK(std::abs(ab - nmi(pa, pb)) < 1e-12);
  }
}
