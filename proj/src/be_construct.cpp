#include "rtw/be_construct.hpp"

#include <cmath>
#include <numbers>

#include "rtw/error.hpp"
#include "rtw/graph_io.hpp"
#include "rtw/parallel.hpp"
#include "rtw/rng.hpp"

namespace rtw {

BEParams BEParams::make(std::size_t n, std::size_t h, double epsilon, std::uint64_t seed,
                        bool paired) {
  if (n == 0 || n % 2 != 0) throw InputError("BE construction needs a positive even n");
  if (h < 2) throw InputError("BE construction needs h >= 2");
  if (!(epsilon > 0.0 && epsilon < 1.0)) throw InputError("BE construction needs 0 < epsilon < 1");
  const double mu = epsilon / std::sqrt(static_cast<double>(h));
  // Three points pairwise farther than 2 - mu force 3(2 - mu)^2 < 9, which is
  // only contradictory while mu < 2 - sqrt(3).
  if (!(mu < 2.0 - std::sqrt(3.0)))
    throw InputError("BE construction needs epsilon/sqrt(h) < 2 - sqrt(3) for triangle-free sides");
  return BEParams{n, h, epsilon, mu, seed, paired};
}

NiceGraph::NiceGraph(BitGraph graph, VertexSet left, std::string provenance)
    : graph_(std::move(graph)), split_(Bipartition::from_left(left)),
      provenance_(std::move(provenance)) {
  if (split_.left.universe() != graph_.n()) throw InputError("split universe does not match graph");
  if (graph_.n() % 2 != 0 || split_.left.size() * 2 != graph_.n())
    throw InputError("nice graph needs sides of order n/2");
}

Certificate verify_nice(const NiceGraph& g) {
  Certificate c = find_triangle_in(g.graph(), g.x());
  if (c.is_witness()) return c;
  c = find_triangle_in(g.graph(), g.y());
  if (c.is_witness()) return c;
  return find_k4(g.graph());
}

BitGraph be_edges(const SpherePointSet& xs, const SpherePointSet& ys, double mu) {
  if (xs.size() != ys.size()) throw InputError("be_edges: point sets differ in size");
  if (xs.dimension() != ys.dimension()) throw InputError("be_edges: dimension mismatch");
  const std::size_t half = xs.size();
  const double cross_limit = std::numbers::sqrt2 - mu;
  const double side_limit = 2.0 - mu;
  // Strict comparisons on distances, as the rules are stated.
  auto cross_edge = [&](std::size_t i, std::size_t j) {
    return std::sqrt(squared_distance(xs.point(i), ys.point(j))) < cross_limit;
  };
  auto x_edge = [&](std::size_t i, std::size_t j) {
    return std::sqrt(squared_distance(xs.point(i), xs.point(j))) > side_limit;
  };
  auto y_edge = [&](std::size_t i, std::size_t j) {
    return std::sqrt(squared_distance(ys.point(i), ys.point(j))) > side_limit;
  };

  // Row blocks are evaluated independently; edges are inserted afterwards in
  // row order so the result does not depend on the worker count.
  std::vector<std::vector<Vertex>> rows(2 * half);
  parallel_for(half, [&](std::size_t i) {
    auto& xr = rows[i];
    for (std::size_t j = i + 1; j < half; ++j)
      if (x_edge(i, j)) xr.push_back(static_cast<Vertex>(j));
    for (std::size_t j = 0; j < half; ++j)
      if (cross_edge(i, j)) xr.push_back(static_cast<Vertex>(half + j));
    auto& yr = rows[half + i];
    for (std::size_t j = i + 1; j < half; ++j)
      if (y_edge(i, j)) yr.push_back(static_cast<Vertex>(half + j));
  });
  BitGraph g(2 * half);
  for (std::size_t u = 0; u < rows.size(); ++u)
    for (Vertex v : rows[u]) g.add_edge(static_cast<Vertex>(u), v);
  return g;
}

BEGraph build_be_graph(const BEParams& p) {
  const BEParams params = BEParams::make(p.n, p.h, p.epsilon, p.seed, p.paired);
  const std::size_t half = params.n / 2;
  SpherePointSet xs = sample_sphere_points(params.h, half, derive_seed(params.seed, "construct.x"));
  SpherePointSet ys = params.paired
                          ? xs
                          : sample_sphere_points(params.h, half,
                                                 derive_seed(params.seed, "construct.y"));
  BitGraph g = be_edges(xs, ys, params.mu);
  std::string provenance = "BE(n=" + std::to_string(params.n) + ",h=" + std::to_string(params.h) +
                           ",epsilon=" + nlohmann::json(params.epsilon).dump() +
                           ",seed=" + std::to_string(params.seed) +
                           (params.paired ? ",paired)" : ")");
  NiceGraph nice(std::move(g), VertexSet::from_range(params.n, 0, static_cast<Vertex>(half)),
                 std::move(provenance));
  return BEGraph{std::move(nice), params, std::move(xs), std::move(ys)};
}

BETheory be_theoretical_bounds(std::size_t n, std::size_t h, double epsilon) {
  const double nn = static_cast<double>(n);
  return BETheory{
      2.0 * nn * std::exp(-epsilon * std::sqrt(static_cast<double>(h)) / 4.0),
      (0.25 - 2.0 * epsilon) * nn,
      "unknown: requires n >= (C sqrt(h)/epsilon)^h for an unspecified constant C",
  };
}

BESummary summarize(const BEGraph& be) {
  const BitGraph& g = be.nice.graph();
  const double half = static_cast<double>(g.n() / 2);
  BESummary s;
  s.edges = g.edge_count();
  s.min_degree = g.min_degree();
  s.density_xy = density_between(g, be.nice.x(), be.nice.y()).value();
  const double pairs = half * (half - 1.0) / 2.0;
  if (pairs > 0) {
    s.density_xx = static_cast<double>(edges_within(g, be.nice.x())) / pairs;
    s.density_yy = static_cast<double>(edges_within(g, be.nice.y())) / pairs;
  }
  s.cap_prediction = cap_measure(be.params.h, std::numbers::sqrt2 - be.params.mu);
  return s;
}

nlohmann::json params_to_json(const BEParams& p) {
  return {{"n", p.n}, {"h", p.h},       {"epsilon", p.epsilon},
          {"mu", p.mu}, {"seed", p.seed}, {"paired", p.paired}};
}

nlohmann::json construction_record(const BEGraph& be, const BESummary& s) {
  const BETheory theory = be_theoretical_bounds(be.params.n, be.params.h, be.params.epsilon);
  return {
      {"params", params_to_json(be.params)},
      {"graph", graph_to_json(be.nice.graph(), &be.nice.x())},
      {"summary",
       {{"edges", s.edges},
        {"min_degree", s.min_degree},
        {"density_xy", s.density_xy},
        {"density_xx", s.density_xx},
        {"density_yy", s.density_yy},
        {"cap_prediction", s.cap_prediction}}},
      {"theory",
       {{"independence_bound", theory.independence_bound},
        {"min_degree_bound", theory.min_degree_bound},
        {"regime", theory.regime}}},
  };
}

}  // namespace rtw
