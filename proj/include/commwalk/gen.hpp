#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "commwalk/graph.hpp"
#include "commwalk/partition.hpp"

namespace commwalk {

/// l groups of g vertices; intra-group pairs are edges with probability
/// p_in, inter-group pairs with p_out.
struct PlantedSpec {
  std::size_t l = 2;
  std::size_t g = 2;
  double p_in = 0.7;
  double p_out = 0.01;
  std::uint64_t seed = 0;
};

/// Community sizes drawn from Normal(mean_size, sigma), rounded to the nearest
/// integer and clamped to >= 1, until they cover n vertices; the last one is
/// truncated. sigma is a standard deviation.
struct GaussianPartitionSpec {
  std::size_t n = 100;
  double mean_size = 25.0;
  double sigma = 2.5;
  double p_in = 0.7;
  double p_out = 0.01;
  std::uint64_t seed = 0;
};

struct LabeledGraph {
  Graph graph;
  Partition truth;
  /// Non-fatal remarks about the parameters (e.g. p_out > p_in).
  std::vector<std::string> warnings;
};

/// Vertex v belongs to group v / g. Unit weights, no self-loops. May be disconnected.
LabeledGraph planted_l_partition(const PlantedSpec& spec);

LabeledGraph gaussian_random_partition(const GaussianPartitionSpec& spec);

/// Community sizes the Gaussian generator would use for this spec.
std::vector<std::size_t> gaussian_community_sizes(const GaussianPartitionSpec& spec);

/// Independent Bernoulli(p_in / p_out) edges between every pair of vertices
/// given the block sizes. Deterministic for a given seed.
LabeledGraph block_model(std::span<const std::size_t> sizes, double p_in, double p_out, std::uint64_t seed);

}  // namespace commwalk
