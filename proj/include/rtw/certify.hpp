#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "rtw/graph.hpp"

namespace rtw {

enum class CertificateKind {
  NoWitness,
  K4,
  TriangleInSide,
  IndependentSet,
  DensityViolation,
  CodegreeViolation,
  LTriangleViolation,
};

std::string to_string(CertificateKind kind);

/// Witness of a structural claim (or of its absence). `vertices` is sorted
/// ascending; `context` echoes the parameters that produced it.
struct Certificate {
  CertificateKind kind = CertificateKind::NoWitness;
  std::vector<Vertex> vertices;
  std::map<std::string, double> context;

  bool is_witness() const { return kind != CertificateKind::NoWitness; }
  static Certificate none() { return {}; }
};

/// Re-checks a certificate against the graph: K4 vertices pairwise adjacent,
/// independent sets pairwise nonadjacent, side triangles inside `side` when
/// given. Context-only kinds check that the listed vertices exist.
bool revalidate(const BitGraph& g, const Certificate& c, const VertexSet* side = nullptr);

nlohmann::json certificate_to_json(const Certificate& c);

/// Lexicographically least K4, or NoWitness.
Certificate find_k4(const BitGraph& g);

/// Lexicographically least triangle with all three vertices in `side`.
Certificate find_triangle_in(const BitGraph& g, const VertexSet& side);

/// Any edge with both endpoints in s, lexicographically least.
std::optional<Edge> find_edge_within(const BitGraph& g, const VertexSet& s);

bool is_independent(const BitGraph& g, const std::vector<Vertex>& vs);

struct MisResult {
  bool exact = false;            // false: node budget exhausted
  std::size_t alpha = 0;         // exact value, or best lower bound found
  std::vector<Vertex> witness;   // an independent set of size alpha
  std::uint64_t nodes = 0;
};

/// Exact maximum independent set by branch and bound: branch on a
/// maximum-degree vertex (least id on ties), include-first; prune with a
/// greedy clique cover of the candidates. Returns exact == false once more
/// than `budget` search nodes are expanded.
MisResult exact_mis(const BitGraph& g,
                    std::uint64_t budget = std::numeric_limits<std::uint64_t>::max());

/// Labeled bracket on the independence number for graphs beyond exact reach.
struct MisBounds {
  std::size_t lower = 0;          // size of an explicit independent set
  std::vector<Vertex> witness;
  std::size_t upper = 0;          // greedy clique-cover bound
};
MisBounds mis_bounds(const BitGraph& g);

struct PeelResult {
  VertexSet surviving;
  std::size_t n_prime = 0;
  std::size_t e_prime = 0;
  std::size_t min_degree = 0;
};

/// Repeatedly deletes the least vertex of degree <= m/n (compared exactly).
/// Requires m >= 1 and m <= e(g).
PeelResult peel_min_degree(const BitGraph& g, std::size_t m, std::size_t n);

struct MaxCutResult {
  Bipartition cut;
  std::uint64_t crossing = 0;
  bool locally_optimal = false;
};

/// One-flip local search from a seeded random bipartition: moves the least
/// vertex whose same-side degree exceeds its cross-degree until none is left.
MaxCutResult local_max_cut(const BitGraph& g, std::uint64_t seed);
/// Same, from a caller-supplied starting side assignment.
MaxCutResult local_max_cut_from(const BitGraph& g, const VertexSet& start_left);

/// True when every vertex has cross-degree >= same-side degree.
bool is_locally_optimal(const BitGraph& g, const Bipartition& cut);

/// Scans edges for codegree > alpha; drills the first offender down to a K4
/// (edge in the common neighbourhood) or an independent set of size > alpha.
Certificate check_codegree_bound(const BitGraph& g, std::size_t alpha);

/// Pair-density certifier: if d(x,y) > 1/2 + gamma*t, searches the set A of
/// heavy x-vertices for a K4 or an independent set larger than gamma*n.
Certificate check_pair_density(const BitGraph& g, const VertexSet& x, const VertexSet& y,
                               double gamma, double t);

/// Triangle L-degree certifier with the inclusion-exclusion drill-down.
Certificate check_L_triangle(const BitGraph& g, const VertexSet& L, std::size_t alpha);

inline constexpr std::size_t kInfiniteGirth = std::numeric_limits<std::size_t>::max();

/// Length of the shortest odd cycle, or kInfiniteGirth for bipartite graphs.
std::size_t odd_girth(const BitGraph& g);

/// 1/2 n^{1-1/k} with k = (odd_girth - 3)/2; odd_girth must be odd and >= 5.
double shearer_bound(std::size_t n, std::size_t odd_girth);

struct ChainEntry {
  std::size_t i = 0;              // walk position (0-based)
  std::size_t k = 0;              // checks positions i and i + 2k - 1
  std::size_t intersection = 0;   // |Y_i ∩ Y_{i+2k-1}|
  double bound = 0.0;             // gamma_k |Y|
  bool holds = true;
};

struct ChainReport {
  std::vector<ChainEntry> entries;
  std::optional<std::size_t> first_violation;  // index into entries
};

/// gamma_k = (10 + 40020 (k - 1)) gamma.
double chain_gamma(std::size_t k, double gamma);

/// Checks |Y_i ∩ Y_{i+2k-1}| <= gamma_k |Y| along a walk inside X, where
/// Y_i is the Y-neighbourhood of the i-th walk vertex.
ChainReport check_intersection_chain(const BitGraph& g, const VertexSet& X, const VertexSet& Y,
                                     double gamma, const std::vector<Vertex>& walk);

}  // namespace rtw
