#include <algorithm>

#include "rtw/certify.hpp"

namespace rtw {
namespace {

/// Number of cliques in a greedy clique cover of `cand`; an upper bound on
/// the independence number of G[cand].
std::size_t clique_cover_size(const BitGraph& g, const VertexSet& cand, VertexSet& scratch_rest,
                              VertexSet& scratch_clique) {
  const auto n = static_cast<Vertex>(g.n());
  scratch_rest = cand;
  std::size_t cliques = 0;
  for (Vertex v = scratch_rest.first(); v < n; v = scratch_rest.next(v)) {
    scratch_rest.erase(v);
    scratch_clique.assign_intersection(scratch_rest, g.neighbors(v));
    for (Vertex w = scratch_clique.first(); w < n; w = scratch_clique.next(w)) {
      scratch_rest.erase(w);
      scratch_clique &= g.neighbors(w);
    }
    ++cliques;
  }
  return cliques;
}

class MisSearch {
public:
  MisSearch(const BitGraph& g, std::uint64_t budget)
      : g_(g), budget_(budget), rest_(g.n()), clique_(g.n()) {}

  MisResult run() {
    MisBounds seed = mis_bounds(g_);
    best_ = seed.witness;
    std::vector<Vertex> current;
    const bool done = expand(VertexSet::full(g_.n()), current);
    std::sort(best_.begin(), best_.end());
    return MisResult{done, best_.size(), best_, nodes_};
  }

private:
  /// Returns false when the budget ran out.
  bool expand(VertexSet cand, std::vector<Vertex>& current) {
    if (++nodes_ > budget_) return false;
    const auto n = static_cast<Vertex>(g_.n());
    if (cand.empty()) {
      if (current.size() > best_.size()) best_ = current;
      return true;
    }
    if (current.size() + clique_cover_size(g_, cand, rest_, clique_) <= best_.size()) return true;

    Vertex pivot = n;
    std::size_t pivot_degree = 0;
    for (Vertex v = cand.first(); v < n; v = cand.next(v + 1)) {
      const std::size_t d = g_.neighbors(v).intersection_size(cand);
      if (pivot == n || d > pivot_degree) {
        pivot = v;
        pivot_degree = d;
      }
    }
    if (pivot_degree == 0) {
      // Candidates are pairwise nonadjacent: take them all.
      const std::size_t before = current.size();
      cand.for_each([&](Vertex v) { current.push_back(v); });
      if (current.size() > best_.size()) best_ = current;
      current.resize(before);
      return true;
    }

    VertexSet with = cand - g_.neighbors(pivot);
    with.erase(pivot);
    current.push_back(pivot);
    const bool ok = expand(std::move(with), current);
    current.pop_back();
    if (!ok) return false;

    cand.erase(pivot);
    return expand(std::move(cand), current);
  }

  const BitGraph& g_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  std::vector<Vertex> best_;
  VertexSet rest_;
  VertexSet clique_;
};

}  // namespace

MisResult exact_mis(const BitGraph& g, std::uint64_t budget) {
  return MisSearch(g, budget).run();
}

MisBounds mis_bounds(const BitGraph& g) {
  const std::size_t n = g.n();
  const auto nv = static_cast<Vertex>(n);
  MisBounds out;

  // Min-degree greedy.
  VertexSet alive = VertexSet::full(n);
  VertexSet in_set(n);
  while (!alive.empty()) {
    Vertex pick = nv;
    std::size_t pick_degree = 0;
    for (Vertex v = alive.first(); v < nv; v = alive.next(v + 1)) {
      const std::size_t d = g.neighbors(v).intersection_size(alive);
      if (pick == nv || d < pick_degree) {
        pick = v;
        pick_degree = d;
      }
    }
    in_set.insert(pick);
    alive.erase(pick);
    alive -= g.neighbors(pick);
  }

  // (1,2)-swaps: drop one member, add two nonadjacent vertices whose only
  // neighbour in the set was that member.
  bool improved = true;
  while (improved) {
    improved = false;
    for (Vertex v = in_set.first(); v < nv && !improved; v = in_set.next(v + 1)) {
      VertexSet others = in_set;
      others.erase(v);
      std::vector<Vertex> tight;
      g.neighbors(v).for_each([&](Vertex w) {
        if (!in_set.contains(w) && !g.neighbors(w).intersects(others)) tight.push_back(w);
      });
      for (std::size_t a = 0; a < tight.size() && !improved; ++a)
        for (std::size_t b = a + 1; b < tight.size() && !improved; ++b)
          if (!g.adjacent(tight[a], tight[b])) {
            in_set.erase(v);
            in_set.insert(tight[a]);
            in_set.insert(tight[b]);
            improved = true;
          }
    }
    if (improved) {
      for (Vertex w = 0; w < nv; ++w)
        if (!in_set.contains(w) && !g.neighbors(w).intersects(in_set)) in_set.insert(w);
    }
  }
  out.witness = in_set.to_vector();
  out.lower = out.witness.size();

  VertexSet rest(n);
  VertexSet clique(n);
  out.upper = clique_cover_size(g, VertexSet::full(n), rest, clique);
  return out;
}

}  // namespace rtw
