#pragma once

// Shared fixtures and brute-force oracles for the test binaries. Nothing here
// calls into the code under test except BitGraph construction.

#include <cstdint>
#include <random>
#include <vector>

#include "rtw/graph.hpp"

namespace testing_support {

using rtw::BitGraph;
using rtw::Vertex;

inline BitGraph random_graph(std::size_t n, double p, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(p);
  BitGraph g(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (coin(rng)) g.add_edge(u, v);
  return g;
}

inline BitGraph cycle(std::size_t n) {
  BitGraph g(n);
  for (Vertex v = 0; v < n; ++v) g.add_edge(v, static_cast<Vertex>((v + 1) % n));
  return g;
}

inline BitGraph complete(std::size_t n) {
  BitGraph g(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

// Complete multipartite graph with parts given by v % parts.
inline BitGraph complete_multipartite(std::size_t n, std::size_t parts) {
  BitGraph g(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (u % parts != v % parts) g.add_edge(u, v);
  return g;
}

// K_{a,b} with the first a vertices on the left.
inline BitGraph complete_bipartite(std::size_t a, std::size_t b) {
  BitGraph g(a + b);
  for (Vertex u = 0; u < a; ++u)
    for (Vertex v = static_cast<Vertex>(a); v < a + b; ++v) g.add_edge(u, v);
  return g;
}

inline BitGraph petersen() {
  BitGraph g(10);
  for (Vertex i = 0; i < 5; ++i) {
    g.add_edge(i, (i + 1) % 5);
    g.add_edge(i, i + 5);
    g.add_edge(i + 5, (i + 2) % 5 + 5);
  }
  return g;
}

inline std::size_t brute_force_alpha(const BitGraph& g) {
  const std::size_t n = g.n();
  std::vector<std::uint32_t> adj(n, 0);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = 0; v < n; ++v)
      if (g.adjacent(u, v)) adj[u] |= 1U << v;
  std::size_t best = 0;
  for (std::uint32_t mask = 0; mask < (1U << n); ++mask) {
    bool ok = true;
    for (Vertex v = 0; v < n && ok; ++v)
      if ((mask >> v & 1U) && (adj[v] & mask)) ok = false;
    if (ok) best = std::max<std::size_t>(best, static_cast<std::size_t>(__builtin_popcount(mask)));
  }
  return best;
}

inline bool brute_force_has_k4(const BitGraph& g) {
  const std::size_t n = g.n();
  for (Vertex a = 0; a < n; ++a)
    for (Vertex b = a + 1; b < n; ++b)
      for (Vertex c = b + 1; c < n; ++c)
        for (Vertex d = c + 1; d < n; ++d)
          if (g.adjacent(a, b) && g.adjacent(a, c) && g.adjacent(a, d) && g.adjacent(b, c) &&
              g.adjacent(b, d) && g.adjacent(c, d))
            return true;
  return false;
}

// Shortest odd closed walk length equals the odd girth. Dynamic programming
// over (length, endpoint) parity from every start vertex.
inline std::size_t brute_force_odd_girth(const BitGraph& g) {
  const std::size_t n = g.n();
  for (std::size_t len = 3; len <= n; len += 2) {
    for (Vertex s = 0; s < n; ++s) {
      std::vector<char> reach(n, 0);
      reach[s] = 1;
      for (std::size_t step = 0; step < len; ++step) {
        std::vector<char> next(n, 0);
        for (Vertex u = 0; u < n; ++u)
          if (reach[u])
            for (Vertex v = 0; v < n; ++v)
              if (g.adjacent(u, v)) next[v] = 1;
        reach.swap(next);
      }
      if (reach[s]) return len;
    }
  }
  return SIZE_MAX;
}

}  // namespace testing_support
