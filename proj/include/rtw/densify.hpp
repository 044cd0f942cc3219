#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>

#include <boost/multiprecision/cpp_int.hpp>

#include "rtw/be_construct.hpp"

namespace rtw {

using Rational = boost::multiprecision::cpp_rational;

struct DensifyParams {
  std::size_t d = 0;        // layer size per side, 0 <= d <= n/2
  std::size_t trials = 1;   // random starting candidates for the layer search
  std::uint64_t seed = 0;
};

struct LayerChoice {
  VertexSet u1;  // subset of X
  VertexSet u2;  // subset of Y
  std::size_t e_g0 = 0;  // edges of G avoiding u1 ∪ u2
};

struct DensifyRecord {
  LayerChoice layers;
  std::size_t e_before = 0;
  std::size_t e_after = 0;
  Rational lemma_rhs;        // (1-2d/n)^2 e_before + dn - d^2 - n
  Rational averaging_floor;  // (1-2d/n)^2 e_before - n
};

/// Picks U1 ⊆ X, U2 ⊆ Y of size d keeping as many edges of G - (U1 ∪ U2) as
/// the search finds: `trials` random starts, each improved by single-vertex
/// swaps; the best start wins, ties broken by the lexicographically smaller
/// (U1, U2).
LayerChoice choose_layer_sets(const NiceGraph& g, const DensifyParams& p);

/// Splices the complete-bipartite layer: edges inside X touching U1 and
/// inside Y touching U2 are dropped, U1 is joined to all of Y and U2 to
/// X \ U1. The result is re-verified nice.
std::pair<NiceGraph, DensifyRecord> densify(const NiceGraph& g, const DensifyParams& p);

/// Same splice for a caller-chosen layer.
NiceGraph apply_layers(const NiceGraph& g, const VertexSet& u1, const VertexSet& u2);

/// (1 - 2d/n)^2 S + dn - d^2 - n, exactly. Needs n >= 6 even and d <= n/2.
Rational eval_lemma_hybrid(std::uint64_t S, std::uint64_t n, std::uint64_t d);

/// (1 - 2d/n)^2 S - n, the random-deletion floor on the surviving edges.
Rational layer_averaging_floor(std::uint64_t S, std::uint64_t n, std::uint64_t d);

struct Corollary92 {
  long double margin_factor;  // 1 + 48 delta^2 - 8/n - 128 delta^3
  long double value;          // (n^2/8) * margin_factor
  bool holds;                 // margin_factor >= 1
};
/// Needs n even >= 6 and n^{-1/2} <= delta <= 1/4.
Corollary92 eval_corollary_92(std::uint64_t n, long double delta);

/// (n^2/8)(1 + 4a - 4a^2 - 8 delta). Needs n even >= 6, 1/(delta n) <= a <= 1/2.
long double eval_corollary_94(std::uint64_t n, long double delta, long double a);

}  // namespace rtw
