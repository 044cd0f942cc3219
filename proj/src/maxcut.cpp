#include <set>

#include "rtw/certify.hpp"
#include "rtw/error.hpp"
#include "rtw/rng.hpp"

namespace rtw {

PeelResult peel_min_degree(const BitGraph& g, std::size_t m, std::size_t n) {
  if (n != g.n()) throw InputError("peel_min_degree: n must equal the vertex count");
  if (m < 1) throw InputError("peel_min_degree: m must be at least 1");
  if (m > g.edge_count()) throw InputError("peel_min_degree: graph has fewer than m edges");

  // deg <= m/n  <=>  deg * n <= m, kept in integers.
  auto low = [&](std::size_t deg) { return deg * n <= m; };
  std::vector<std::size_t> deg(n);
  std::set<Vertex> queue;
  for (Vertex v = 0; v < n; ++v) {
    deg[v] = g.degree(v);
    if (low(deg[v])) queue.insert(v);
  }
  PeelResult out;
  out.surviving = VertexSet::full(n);
  std::size_t edges = g.edge_count();
  while (!queue.empty()) {
    const Vertex v = *queue.begin();
    queue.erase(queue.begin());
    out.surviving.erase(v);
    edges -= deg[v];
    (g.neighbors(v) & out.surviving).for_each([&](Vertex w) {
      if (--deg[w], low(deg[w])) queue.insert(w);
    });
  }
  out.n_prime = out.surviving.size();
  out.e_prime = edges;
  out.min_degree = 0;
  bool first = true;
  out.surviving.for_each([&](Vertex v) {
    if (first || deg[v] < out.min_degree) out.min_degree = deg[v];
    first = false;
  });
  return out;
}

bool is_locally_optimal(const BitGraph& g, const Bipartition& cut) {
  for (Vertex v = 0; v < g.n(); ++v) {
    const VertexSet& own = cut.left.contains(v) ? cut.left : cut.right;
    const VertexSet& other = cut.left.contains(v) ? cut.right : cut.left;
    if (cross_degree(g, v, own) > cross_degree(g, v, other)) return false;
  }
  return true;
}

MaxCutResult local_max_cut_from(const BitGraph& g, const VertexSet& start_left) {
  const std::size_t n = g.n();
  VertexSet left = start_left;
  std::vector<std::size_t> same(n), cross(n);
  std::set<Vertex> unhappy;
  for (Vertex v = 0; v < n; ++v) {
    const std::size_t in_left = g.neighbors(v).intersection_size(left);
    same[v] = left.contains(v) ? in_left : g.degree(v) - in_left;
    cross[v] = g.degree(v) - same[v];
    if (same[v] > cross[v]) unhappy.insert(v);
  }
  while (!unhappy.empty()) {
    const Vertex v = *unhappy.begin();
    unhappy.erase(unhappy.begin());
    const bool was_left = left.contains(v);
    if (was_left) left.erase(v); else left.insert(v);
    std::swap(same[v], cross[v]);
    g.neighbors(v).for_each([&](Vertex w) {
      // w shared v's old side iff its membership equals v's old membership.
      if (left.contains(w) == was_left) {
        --same[w];
        ++cross[w];
      } else {
        ++same[w];
        --cross[w];
      }
      if (same[w] > cross[w]) unhappy.insert(w); else unhappy.erase(w);
    });
  }
  MaxCutResult out;
  out.cut = Bipartition::from_left(left);
  out.crossing = crossing_edges(g, out.cut.left, out.cut.right);
  out.locally_optimal = is_locally_optimal(g, out.cut);
  return out;
}

MaxCutResult local_max_cut(const BitGraph& g, std::uint64_t seed) {
  Rng rng = make_rng(seed, "maxcut");
  VertexSet start(g.n());
  for (Vertex v = 0; v < g.n(); ++v)
    if (rng() & 1U) start.insert(v);
  return local_max_cut_from(g, start);
}

}  // namespace rtw
