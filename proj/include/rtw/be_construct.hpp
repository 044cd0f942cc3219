#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>

#include <json.hpp>

#include "rtw/certify.hpp"
#include "rtw/geometry.hpp"
#include "rtw/graph.hpp"

namespace rtw {

/// Parameters of the sphere construction. mu = epsilon / sqrt(h).
struct BEParams {
  std::size_t n = 0;
  std::size_t h = 0;
  double epsilon = 0.0;
  double mu = 0.0;
  std::uint64_t seed = 0;
  bool paired = false;  // use one sampled point for both x_i and y_i

  /// Validates and derives mu; InputError on odd n, h < 2, epsilon outside (0,1),
  /// or mu >= 2 - sqrt(3), where a side can hold a triangle.
  static BEParams make(std::size_t n, std::size_t h, double epsilon, std::uint64_t seed,
                       bool paired = false);
};

/// Graph with an equal split X = left, Y = right whose sides are
/// triangle-free and which is K4-free as a whole.
///
/// The constructor only checks the split sizes; the structural contract is
/// checked by verify_nice, which every producer runs before handing a graph
/// out.
class NiceGraph {
public:
  NiceGraph(BitGraph graph, VertexSet left, std::string provenance = {});

  const BitGraph& graph() const { return graph_; }
  const Bipartition& split() const { return split_; }
  const VertexSet& x() const { return split_.left; }
  const VertexSet& y() const { return split_.right; }
  const std::string& provenance() const { return provenance_; }

private:
  BitGraph graph_;
  Bipartition split_;
  std::string provenance_;
};

/// NoWitness, a side triangle, or a K4.
Certificate verify_nice(const NiceGraph& g);

struct BEGraph {
  NiceGraph nice;
  BEParams params;
  SpherePointSet x_points;
  SpherePointSet y_points;
};

/// Edge rules over the two point sets: x_i y_j when |x_i - y_j| < sqrt2 - mu,
/// x_i x_j when |x_i - x_j| > 2 - mu, y_i y_j likewise. Vertices 0..n/2-1 are X.
BitGraph be_edges(const SpherePointSet& xs, const SpherePointSet& ys, double mu);

/// Samples the point sets from named sub-streams of params.seed and applies
/// be_edges.
BEGraph build_be_graph(const BEParams& params);

struct BETheory {
  double independence_bound;  // 2 n e^{-epsilon sqrt(h) / 4}
  double min_degree_bound;    // (1/4 - 2 epsilon) n
  std::string regime;         // n >= (C sqrt(h)/epsilon)^h with C unspecified
};
/// Accepts epsilon = 0 as a formula boundary.
BETheory be_theoretical_bounds(std::size_t n, std::size_t h, double epsilon);

struct BESummary {
  std::size_t edges = 0;
  std::size_t min_degree = 0;
  double density_xy = 0.0;       // crossing edges / (n/2)^2
  double density_xx = 0.0;       // edges inside X / C(n/2, 2)
  double density_yy = 0.0;
  double cap_prediction = 0.0;   // expected cross density: cap_measure(h, sqrt2 - mu)
};
BESummary summarize(const BEGraph& be);

nlohmann::json params_to_json(const BEParams& p);
nlohmann::json construction_record(const BEGraph& be, const BESummary& s);

}  // namespace rtw
