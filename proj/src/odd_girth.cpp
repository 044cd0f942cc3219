#include "rtw/certify.hpp"

namespace rtw {

// For every root, grow BFS layers as bitsets; an edge inside layer d closes
// an odd closed walk of length 2d+1. The minimum over all roots is the odd
// girth.
std::size_t odd_girth(const BitGraph& g) {
  const std::size_t n = g.n();
  std::size_t best = kInfiniteGirth;
  VertexSet frontier(n), visited(n), next(n);
  for (Vertex root = 0; root < n; ++root) {
    frontier = VertexSet(n, {root});
    visited = frontier;
    for (std::size_t depth = 0; !frontier.empty(); ++depth) {
      if (best != kInfiniteGirth && 2 * depth + 1 >= best) break;
      if (find_edge_within(g, frontier)) {
        best = 2 * depth + 1;
        break;
      }
      next = VertexSet(n);
      frontier.for_each([&](Vertex v) { next |= g.neighbors(v); });
      next -= visited;
      visited |= next;
      std::swap(frontier, next);
    }
  }
  return best;
}

}  // namespace rtw
