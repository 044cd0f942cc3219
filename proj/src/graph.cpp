#include "rtw/graph.hpp"

#include <algorithm>
#include <sstream>

#include "rtw/error.hpp"

namespace rtw {

BitGraph::BitGraph(std::size_t n) : adj_(n, VertexSet(n)) {}

void BitGraph::check_vertex(Vertex v) const {
  if (v >= adj_.size()) {
    std::ostringstream os;
    os << "vertex " << v << " out of range for n=" << adj_.size();
    throw InputError(os.str());
  }
}

bool BitGraph::add_edge(Vertex u, Vertex v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw InputError("self-loop at vertex " + std::to_string(u));
  if (adj_[u].contains(v)) return false;
  adj_[u].insert(v);
  adj_[v].insert(u);
  ++edges_;
  return true;
}

bool BitGraph::remove_edge(Vertex u, Vertex v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v || !adj_[u].contains(v)) return false;
  adj_[u].erase(v);
  adj_[v].erase(u);
  --edges_;
  return true;
}

std::vector<Edge> BitGraph::edges() const {
  std::vector<Edge> out;
  out.reserve(edges_);
  for (Vertex u = 0; u < adj_.size(); ++u) {
    for (Vertex v = adj_[u].next(u + 1); v < adj_.size(); v = adj_[u].next(v + 1))
      out.emplace_back(u, v);
  }
  return out;
}

std::size_t BitGraph::min_degree() const {
  if (adj_.empty()) return 0;
  std::size_t best = adj_[0].size();
  for (const auto& row : adj_) best = std::min(best, row.size());
  return best;
}

BitGraph build_graph(std::size_t n, const std::vector<Edge>& edges) {
  BitGraph g(n);
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

std::size_t codegree(const BitGraph& g, Vertex u, Vertex v) {
  if (u == v) throw InputError("codegree requires distinct vertices");
  return g.neighbors(u).intersection_size(g.neighbors(v));
}

std::size_t cross_degree(const BitGraph& g, Vertex v, const VertexSet& s) {
  return g.neighbors(v).intersection_size(s);
}

std::uint64_t crossing_edges(const BitGraph& g, const VertexSet& x, const VertexSet& y) {
  std::uint64_t c = 0;
  x.for_each([&](Vertex v) { c += g.neighbors(v).intersection_size(y); });
  return c;
}

Ratio density_between(const BitGraph& g, const VertexSet& x, const VertexSet& y) {
  if (x.empty() || y.empty()) throw InputError("density_between: empty side");
  if (x.intersects(y)) throw InputError("density_between: sides overlap");
  return Ratio{crossing_edges(g, x, y),
               static_cast<std::uint64_t>(x.size()) * static_cast<std::uint64_t>(y.size())};
}

std::uint64_t edges_within(const BitGraph& g, const VertexSet& s) {
  std::uint64_t twice = 0;
  s.for_each([&](Vertex v) { twice += g.neighbors(v).intersection_size(s); });
  return twice / 2;
}

InducedSubgraph induced_subgraph(const BitGraph& g, const VertexSet& keep) {
  InducedSubgraph out;
  out.labels = keep.to_vector();
  std::vector<Vertex> index(g.n(), 0);
  for (Vertex i = 0; i < out.labels.size(); ++i) index[out.labels[i]] = i;
  out.graph = BitGraph(out.labels.size());
  for (Vertex i = 0; i < out.labels.size(); ++i) {
    const VertexSet row = g.neighbors(out.labels[i]) & keep;
    row.for_each([&](Vertex w) {
      if (index[w] > i) out.graph.add_edge(i, index[w]);
    });
  }
  return out;
}

std::string audit(const BitGraph& g) {
  std::size_t degree_sum = 0;
  for (Vertex u = 0; u < g.n(); ++u) {
    const auto& row = g.neighbors(u);
    if (row.universe() != g.n()) return "row universe mismatch at " + std::to_string(u);
    if (row.contains(u)) return "self-loop at " + std::to_string(u);
    std::string defect;
    row.for_each([&](Vertex v) {
      if (defect.empty() && !g.neighbors(v).contains(u))
        defect = "asymmetric pair " + std::to_string(u) + "," + std::to_string(v);
    });
    if (!defect.empty()) return defect;
    degree_sum += row.size();
  }
  if (degree_sum != 2 * g.edge_count()) return "edge count does not match popcounts";
  return {};
}

}  // namespace rtw
