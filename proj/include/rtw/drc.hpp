#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "rtw/graph.hpp"

namespace rtw {

/// Sampling parameters of the thresholded dependent-random-choice round.
struct DRCParams {
  std::size_t t = 1;       // sample size, drawn from B with replacement
  double epsilon = 0.1;    // threshold slack: keep u with >= (1/2 + epsilon) t sampled neighbours
  double gamma = 0.01;     // success when the kept independent set exceeds gamma * n
  double C = 1.0;          // degree-slack constant
  double K = 40.0;         // 4C^2 + 20C + 16
  std::uint64_t seed = 0;

  /// Derives K; InputError unless t >= 1 and 0 < epsilon < 1/2.
  static DRCParams make(std::size_t t, double epsilon, double gamma, double C, std::uint64_t seed);
  /// Constants of the asymptotic argument for a graph of order n:
  /// C = 2000, gamma = log log n / (200 K log n), t = 200 K log^2 n / log log n,
  /// epsilon = 10 gamma.
  static nlohmann::json paper_constants(std::size_t n);
};

enum class DRCKind { IndependentSet, K4, Fail };
std::string to_string(DRCKind kind);

struct DRCOutcome {
  DRCKind kind = DRCKind::Fail;
  std::vector<Vertex> witness;
  std::size_t u0_size = 0;       // vertices of A over the threshold
  std::size_t pruned = 0;        // vertices removed for a sparse common B-neighbourhood
  std::size_t u_size = 0;        // survivors
  std::size_t a_size = 0;
  std::size_t b_size = 0;
  std::vector<Vertex> sample;    // the multiset T, in draw order
};

/// One seeded round: sample T ⊂ B (with replacement), keep U0 = vertices of A
/// with >= (1/2 + eps) t neighbours in T, prune pairs with common
/// B-neighbourhood <= eps |B| (the later vertex goes), and turn what is left
/// into a K4, an independent set, or Fail.
DRCOutcome drc_round(const BitGraph& g, const VertexSet& A, const VertexSet& B, const DRCParams& p);

bool revalidate(const BitGraph& g, const DRCOutcome& o);

nlohmann::json outcome_to_json(const DRCOutcome& o, std::uint64_t seed);

struct HalfDensityPair {
  VertexSet A;
  VertexSet B;
};

struct HalfDensitySearch {
  std::optional<HalfDensityPair> pair;  // empty on Fail
  std::size_t a_size = 0;               // achieved sizes, also reported on Fail
  std::size_t b_size = 0;
  std::size_t survivors = 0;            // after min-degree peeling
};

/// Peel to min degree >= e/n, take a locally optimal cut of the survivor,
/// and keep the vertices of one side whose degree into the other side is at
/// least (1/2 - 20000 gamma) of it. Succeeds when |A| >= n/16 and
/// |B| >= n/10. Requires e(g) >= n^2/8.
HalfDensitySearch find_half_density_pair(const BitGraph& g, double gamma, std::uint64_t seed);

}  // namespace rtw
