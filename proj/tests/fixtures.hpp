#pragma once

#include <vector>

#include "commwalk/graph.hpp"

namespace fixtures {

using commwalk::Edge;
using commwalk::Graph;

inline Graph triangle() { return commwalk::build_graph(3, std::vector<Edge>{{0, 1, 1}, {1, 2, 1}, {0, 2, 1}}); }

inline Graph path3() { return commwalk::build_graph(3, std::vector<Edge>{{0, 1, 1}, {1, 2, 1}}); }

inline Graph star4() { return commwalk::build_graph(4, std::vector<Edge>{{0, 1, 1}, {0, 2, 1}, {0, 3, 1}}); }

/// Triangles {0,1,2} and {3,4,5} joined by the edge 2-3.
inline Graph barbell() {
  return commwalk::build_graph(
      6, std::vector<Edge>{{0, 1, 1}, {1, 2, 1}, {0, 2, 1}, {3, 4, 1}, {4, 5, 1}, {3, 5, 1}, {2, 3, 1}});
}

inline Graph two_triangles() {
  return commwalk::build_graph(6,
                               std::vector<Edge>{{0, 1, 1}, {1, 2, 1}, {0, 2, 1}, {3, 4, 1}, {4, 5, 1}, {3, 5, 1}});
}

/// K4 on {0..3} and K4 on {4..7} joined by the edge 3-4.
inline Graph two_k4() {
  std::vector<Edge> e;
  for (commwalk::vertex_t base : {0u, 4u})
    for (commwalk::vertex_t u = 0; u < 4; ++u)
      for (commwalk::vertex_t v = u + 1; v < 4; ++v) e.push_back({base + u, base + v, 1});
  e.push_back({3, 4, 1});
  return commwalk::build_graph(8, e);
}

inline Graph complete(std::size_t n) {
  std::vector<Edge> e;
  for (commwalk::vertex_t u = 0; u < n; ++u)
    for (commwalk::vertex_t v = u + 1; v < n; ++v) e.push_back({u, v, 1});
  return commwalk::build_graph(n, e);
}

}  // namespace fixtures
