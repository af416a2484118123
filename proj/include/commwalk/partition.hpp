#pragma once

#include <concepts>
#include <cstddef>
#include <cstdint>
#include <span>
#include <unordered_map>
#include <vector>

#include "commwalk/graph.hpp"

namespace commwalk {

/// Assignment of every vertex to exactly one community, ids dense in 0..k-1.
class Partition {
 public:
  Partition() = default;

  /// Relabels arbitrary integer labels densely in order of first appearance.
  template <std::integral T>
  static Partition from_labels(std::span<const T> labels);
  template <std::integral T>
  static Partition from_labels(const std::vector<T>& labels) {
    return from_labels(std::span<const T>(labels));
  }
  /// Community k is the k-th nonempty set. Throws InputError unless the sets
  /// are disjoint and cover 0..n-1.
  static Partition from_sets(std::size_t n, std::span<const VertexSet> sets);
  static Partition singletons(std::size_t n);
  static Partition whole(std::size_t n);

  std::size_t size() const noexcept { return assign_.size(); }
  std::size_t community_count() const noexcept { return count_; }
  vertex_t operator[](vertex_t v) const noexcept { return assign_[v]; }
  std::span<const vertex_t> labels() const noexcept { return assign_; }

  /// Members of each community, ascending, indexed by community id.
  std::vector<VertexSet> members() const;

  bool operator==(const Partition&) const = default;

 private:
  std::vector<vertex_t> assign_;
  std::size_t count_ = 0;
};

template <std::integral T>
Partition Partition::from_labels(std::span<const T> labels) {
  Partition p;
  p.assign_.resize(labels.size());
  std::unordered_map<T, vertex_t> dense;
  for (std::size_t v = 0; v < labels.size(); ++v) {
    p.assign_[v] = dense.try_emplace(labels[v], static_cast<vertex_t>(dense.size())).first->second;
  }
  p.count_ = dense.size();
  return p;
}

}  // namespace commwalk
