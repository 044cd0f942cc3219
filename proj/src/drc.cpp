#include "rtw/drc.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "rtw/certify.hpp"
#include "rtw/error.hpp"
#include "rtw/rng.hpp"

namespace rtw {

DRCParams DRCParams::make(std::size_t t, double epsilon, double gamma, double C,
                          std::uint64_t seed) {
  if (t < 1) throw InputError("DRC: t must be at least 1");
  if (!(epsilon > 0.0 && epsilon < 0.5)) throw InputError("DRC: epsilon must lie in (0, 1/2)");
  if (!(gamma > 0.0)) throw InputError("DRC: gamma must be positive");
  return DRCParams{t, epsilon, gamma, C, 4.0 * C * C + 20.0 * C + 16.0, seed};
}

nlohmann::json DRCParams::paper_constants(std::size_t n) {
  const double C = 2000.0;
  const double K = 4.0 * C * C + 20.0 * C + 16.0;
  const double ln = std::log(static_cast<double>(n));
  const double lln = std::log(ln);
  const double gamma = lln / (200.0 * K * ln);
  return {{"C", C},
          {"K", K},
          {"gamma", gamma},
          {"t", 200.0 * K * ln * ln / lln},
          {"epsilon", 10.0 * gamma},
          {"n", n}};
}

std::string to_string(DRCKind kind) {
  switch (kind) {
    case DRCKind::IndependentSet: return "IndependentSet";
    case DRCKind::K4: return "K4";
    case DRCKind::Fail: return "Fail";
  }
  return "Unknown";
}

DRCOutcome drc_round(const BitGraph& g, const VertexSet& A, const VertexSet& B,
                     const DRCParams& p) {
  if (A.empty() || B.empty()) throw InputError("drc_round: A and B must be nonempty");
  if (A.intersects(B)) throw InputError("drc_round: A and B overlap");
  const auto n = static_cast<Vertex>(g.n());
  DRCOutcome out;
  out.a_size = A.size();
  out.b_size = B.size();

  const std::vector<Vertex> b_list = B.to_vector();
  Rng rng = make_rng(p.seed, "drc");
  std::uniform_int_distribution<std::size_t> pick(0, b_list.size() - 1);
  std::vector<std::uint32_t> multiplicity(g.n(), 0);
  out.sample.reserve(p.t);
  for (std::size_t i = 0; i < p.t; ++i) {
    const Vertex b = b_list[pick(rng)];
    out.sample.push_back(b);
    ++multiplicity[b];
  }
  std::vector<Vertex> distinct = out.sample;
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());

  // Keep u when its sampled neighbours, counted with multiplicity, reach
  // (1/2 + eps) t.
  const long double threshold = (0.5L + p.epsilon) * static_cast<long double>(p.t);
  VertexSet kept(g.n());
  A.for_each([&](Vertex u) {
    std::size_t hits = 0;
    for (Vertex b : distinct)
      if (g.adjacent(u, b)) hits += multiplicity[b];
    if (static_cast<long double>(hits) >= threshold) kept.insert(u);
  });
  out.u0_size = kept.size();

  const long double sparse = static_cast<long double>(p.epsilon) * B.size();
  VertexSet nb_u(g.n());
  for (Vertex u = kept.first(); u < n; u = kept.next(u + 1)) {
    nb_u.assign_intersection(g.neighbors(u), B);
    for (Vertex v = kept.next(u + 1); v < n; v = kept.next(v + 1)) {
      if (static_cast<long double>(nb_u.intersection_size(g.neighbors(v))) <= sparse) {
        kept.erase(v);
        ++out.pruned;
      }
    }
  }
  out.u_size = kept.size();

  if (auto e = find_edge_within(g, kept)) {
    const VertexSet common = g.neighbors(e->first) & g.neighbors(e->second) & B;
    if (auto f = find_edge_within(g, common)) {
      out.kind = DRCKind::K4;
      out.witness = {e->first, e->second, f->first, f->second};
      std::sort(out.witness.begin(), out.witness.end());
    } else {
      out.kind = DRCKind::IndependentSet;
      out.witness = common.to_vector();
    }
    return out;
  }
  if (static_cast<long double>(kept.size()) > static_cast<long double>(p.gamma) * g.n()) {
    out.kind = DRCKind::IndependentSet;
    out.witness = kept.to_vector();
  }
  return out;
}

bool revalidate(const BitGraph& g, const DRCOutcome& o) {
  switch (o.kind) {
    case DRCKind::Fail: return o.witness.empty();
    case DRCKind::K4:
      return revalidate(g, Certificate{CertificateKind::K4, o.witness, {}});
    case DRCKind::IndependentSet:
      return revalidate(g, Certificate{CertificateKind::IndependentSet, o.witness, {}});
  }
  return false;
}

nlohmann::json outcome_to_json(const DRCOutcome& o, std::uint64_t seed) {
  return {{"seed", seed},
          {"kind", to_string(o.kind)},
          {"witness_size", o.witness.size()},
          {"witness", o.witness},
          {"stats",
           {{"A", o.a_size},
            {"B", o.b_size},
            {"U0", o.u0_size},
            {"pruned", o.pruned},
            {"U", o.u_size}}}};
}

HalfDensitySearch find_half_density_pair(const BitGraph& g, double gamma, std::uint64_t seed) {
  const std::size_t n = g.n();
  if (n == 0 || 8 * g.edge_count() < n * n)
    throw InputError("find_half_density_pair: needs at least n^2/8 edges");
  const PeelResult peeled = peel_min_degree(g, g.edge_count(), n);
  HalfDensitySearch out;
  out.survivors = peeled.n_prime;

  const InducedSubgraph sub = induced_subgraph(g, peeled.surviving);
  const MaxCutResult cut = local_max_cut(sub.graph, seed);
  VertexSet left(n), right(n);
  cut.cut.left.for_each([&](Vertex v) { left.insert(sub.labels[v]); });
  cut.cut.right.for_each([&](Vertex v) { right.insert(sub.labels[v]); });

  // Try (left, right) first, then the swapped orientation.
  const long double floor_fraction = 0.5L - 20000.0L * gamma;
  for (int orientation = 0; orientation < 2; ++orientation) {
    const VertexSet& from = orientation == 0 ? left : right;
    const VertexSet& to = orientation == 0 ? right : left;
    VertexSet a(n);
    const long double floor = floor_fraction * static_cast<long double>(to.size());
    from.for_each([&](Vertex v) {
      if (static_cast<long double>(cross_degree(g, v, to)) >= floor) a.insert(v);
    });
    const bool big_a = 16 * a.size() >= n;
    const bool big_b = 10 * to.size() >= n;
    if (orientation == 0 || a.size() > out.a_size) {
      out.a_size = a.size();
      out.b_size = to.size();
    }
    if (big_a && big_b) {
      out.a_size = a.size();
      out.b_size = to.size();
      out.pair = HalfDensityPair{std::move(a), to};
      return out;
    }
  }
  return out;
}

}  // namespace rtw
