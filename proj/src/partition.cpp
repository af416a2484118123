#include "commwalk/partition.hpp"

#include <string>
#include <utility>

#include "commwalk/errors.hpp"

namespace commwalk {

Partition Partition::from_sets(std::size_t n, std::span<const VertexSet> sets) {
  constexpr vertex_t kUnassigned = static_cast<vertex_t>(-1);
  std::vector<vertex_t> labels(n, kUnassigned);
  vertex_t id = 0;
  for (const VertexSet& set : sets) {
    if (set.empty()) continue;
    for (vertex_t v : set) {
      if (v >= n) throw InputError("partition: vertex " + std::to_string(v) + " out of range");
      if (labels[v] != kUnassigned) {
        throw InputError("partition: vertex " + std::to_string(v) + " assigned twice");
      }
      labels[v] = id;
    }
    ++id;
  }
  for (std::size_t v = 0; v < n; ++v) {
    if (labels[v] == kUnassigned) {
      throw InputError("partition: vertex " + std::to_string(v) + " not covered");
    }
  }
  Partition p;
  p.assign_ = std::move(labels);
  p.count_ = id;
  return p;
}

Partition Partition::singletons(std::size_t n) {
  Partition p;
  p.assign_.resize(n);
  for (std::size_t v = 0; v < n; ++v) p.assign_[v] = static_cast<vertex_t>(v);
  p.count_ = n;
  return p;
}

Partition Partition::whole(std::size_t n) {
  Partition p;
  p.assign_.assign(n, 0);
  p.count_ = n > 0 ? 1 : 0;
  return p;
}

std::vector<VertexSet> Partition::members() const {
  std::vector<VertexSet> out(count_);
  for (std::size_t v = 0; v < assign_.size(); ++v) out[assign_[v]].push_back(static_cast<vertex_t>(v));
  return out;
}

}  // namespace commwalk
