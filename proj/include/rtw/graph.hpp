#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "rtw/vertex_set.hpp"

namespace rtw {

using Edge = std::pair<Vertex, Vertex>;

/// Exact nonnegative fraction; never reduced, so num/den keep their meaning
/// (crossing edges over |X||Y|).
struct Ratio {
  std::uint64_t num = 0;
  std::uint64_t den = 1;

  double value() const { return static_cast<double>(num) / static_cast<double>(den); }
  friend bool operator==(const Ratio& a, const Ratio& b) {
    return static_cast<unsigned __int128>(a.num) * b.den ==
           static_cast<unsigned __int128>(b.num) * a.den;
  }
  friend std::strong_ordering operator<=>(const Ratio& a, const Ratio& b) {
    auto l = static_cast<unsigned __int128>(a.num) * b.den;
    auto r = static_cast<unsigned __int128>(b.num) * a.den;
    return l <=> r;
  }
};

/// Simple undirected graph on 0..n-1 with bitset adjacency rows.
class BitGraph {
public:
  BitGraph() = default;
  /// Edgeless graph on n vertices.
  explicit BitGraph(std::size_t n);

  std::size_t n() const { return adj_.size(); }
  std::size_t edge_count() const { return edges_; }

  const VertexSet& neighbors(Vertex v) const { return adj_[v]; }
  bool adjacent(Vertex u, Vertex v) const { return adj_[u].contains(v); }
  std::size_t degree(Vertex v) const { return adj_[v].size(); }

  /// Adds {u,v}; returns false if already present. Self-loops and range
  /// errors throw InputError.
  bool add_edge(Vertex u, Vertex v);
  /// Returns false if the edge was absent.
  bool remove_edge(Vertex u, Vertex v);

  /// Edges (u<v) in lexicographic order.
  std::vector<Edge> edges() const;
  std::size_t min_degree() const;

  friend bool operator==(const BitGraph&, const BitGraph&) = default;

private:
  void check_vertex(Vertex v) const;

  std::vector<VertexSet> adj_;
  std::size_t edges_ = 0;
};

/// Graph with duplicate edges collapsed. Throws InputError on self-loops or
/// out-of-range endpoints.
BitGraph build_graph(std::size_t n, const std::vector<Edge>& edges);

/// |N(u) ∩ N(v)|. Throws InputError when u == v.
std::size_t codegree(const BitGraph& g, Vertex u, Vertex v);

/// |N(v) ∩ s|.
std::size_t cross_degree(const BitGraph& g, Vertex v, const VertexSet& s);

/// Number of edges with one endpoint in x and the other in y (x, y disjoint).
std::uint64_t crossing_edges(const BitGraph& g, const VertexSet& x, const VertexSet& y);

/// Edge density between disjoint nonempty sets, as an exact fraction.
Ratio density_between(const BitGraph& g, const VertexSet& x, const VertexSet& y);

/// Number of edges with both endpoints in s.
std::uint64_t edges_within(const BitGraph& g, const VertexSet& s);

/// Subgraph induced by `keep`, relabelled to 0..|keep|-1 in increasing id
/// order; `labels[i]` is the original id of new vertex i.
struct InducedSubgraph {
  BitGraph graph;
  std::vector<Vertex> labels;
};
InducedSubgraph induced_subgraph(const BitGraph& g, const VertexSet& keep);

/// Structural audit: symmetry, irreflexivity, and the cached edge count.
/// Returns an empty string when sound, otherwise a description of the defect.
std::string audit(const BitGraph& g);

}  // namespace rtw
