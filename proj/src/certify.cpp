#include "rtw/certify.hpp"

#include <algorithm>
#include <cmath>

#include "rtw/error.hpp"

namespace rtw {

std::string to_string(CertificateKind kind) {
  switch (kind) {
    case CertificateKind::NoWitness: return "NoWitness";
    case CertificateKind::K4: return "K4";
    case CertificateKind::TriangleInSide: return "TriangleInSide";
    case CertificateKind::IndependentSet: return "IndependentSet";
    case CertificateKind::DensityViolation: return "DensityViolation";
    case CertificateKind::CodegreeViolation: return "CodegreeViolation";
    case CertificateKind::LTriangleViolation: return "LTriangleViolation";
  }
  return "Unknown";
}

bool is_independent(const BitGraph& g, const std::vector<Vertex>& vs) {
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (std::size_t j = i + 1; j < vs.size(); ++j)
      if (vs[i] == vs[j] || g.adjacent(vs[i], vs[j])) return false;
  return true;
}

namespace {

bool is_clique(const BitGraph& g, const std::vector<Vertex>& vs) {
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (std::size_t j = i + 1; j < vs.size(); ++j)
      if (vs[i] == vs[j] || !g.adjacent(vs[i], vs[j])) return false;
  return true;
}

Certificate make_k4(Vertex a, Vertex b, Vertex c, Vertex d) {
  Certificate cert{CertificateKind::K4, {a, b, c, d}, {}};
  std::sort(cert.vertices.begin(), cert.vertices.end());
  return cert;
}

/// Common neighbourhood `common` of the adjacent pair (u,v) exceeds a size
/// threshold: an edge inside it closes a K4, otherwise it is an independent
/// set.
Certificate drill_common_neighbourhood(const BitGraph& g, Vertex u, Vertex v,
                                       const VertexSet& common) {
  if (auto e = find_edge_within(g, common)) return make_k4(u, v, e->first, e->second);
  return Certificate{CertificateKind::IndependentSet, common.to_vector(), {}};
}

}  // namespace

bool revalidate(const BitGraph& g, const Certificate& c, const VertexSet* side) {
  for (Vertex v : c.vertices)
    if (v >= g.n()) return false;
  if (!std::is_sorted(c.vertices.begin(), c.vertices.end())) return false;
  switch (c.kind) {
    case CertificateKind::NoWitness: return c.vertices.empty();
    case CertificateKind::K4: return c.vertices.size() == 4 && is_clique(g, c.vertices);
    case CertificateKind::TriangleInSide:
      if (c.vertices.size() != 3 || !is_clique(g, c.vertices)) return false;
      if (side != nullptr)
        for (Vertex v : c.vertices)
          if (!side->contains(v)) return false;
      return true;
    case CertificateKind::IndependentSet: return is_independent(g, c.vertices);
    default: return true;
  }
}

nlohmann::json certificate_to_json(const Certificate& c) {
  nlohmann::json ctx = nlohmann::json::object();
  for (const auto& [k, v] : c.context) ctx[k] = v;
  return {{"kind", to_string(c.kind)}, {"vertices", c.vertices}, {"context", std::move(ctx)}};
}

std::optional<Edge> find_edge_within(const BitGraph& g, const VertexSet& s) {
  const auto n = static_cast<Vertex>(g.n());
  for (Vertex u = s.first(); u < n; u = s.next(u + 1)) {
    const Vertex v = s.first_common(g.neighbors(u), u + 1);
    if (v < n) return Edge{u, v};
  }
  return std::nullopt;
}

Certificate find_k4(const BitGraph& g) {
  const auto n = static_cast<Vertex>(g.n());
  VertexSet higher(g.n());
  VertexSet common(g.n());
  for (Vertex u = 0; u < n; ++u) {
    const VertexSet& nu = g.neighbors(u);
    for (Vertex v = nu.next(u + 1); v < n; v = nu.next(v + 1)) {
      common.assign_intersection(nu, g.neighbors(v));
      for (Vertex w = common.next(v + 1); w < n; w = common.next(w + 1)) {
        const Vertex x = common.first_common(g.neighbors(w), w + 1);
        if (x < n) return make_k4(u, v, w, x);
      }
    }
  }
  return Certificate::none();
}

Certificate find_triangle_in(const BitGraph& g, const VertexSet& side) {
  const auto n = static_cast<Vertex>(g.n());
  VertexSet row(g.n());
  for (Vertex u = side.first(); u < n; u = side.next(u + 1)) {
    row.assign_intersection(g.neighbors(u), side);
    for (Vertex v = row.next(u + 1); v < n; v = row.next(v + 1)) {
      const Vertex w = row.first_common(g.neighbors(v), v + 1);
      if (w < n) return Certificate{CertificateKind::TriangleInSide, {u, v, w}, {}};
    }
  }
  return Certificate::none();
}

Certificate check_codegree_bound(const BitGraph& g, std::size_t alpha) {
  const auto n = static_cast<Vertex>(g.n());
  VertexSet common(g.n());
  for (Vertex u = 0; u < n; ++u) {
    const VertexSet& nu = g.neighbors(u);
    for (Vertex v = nu.next(u + 1); v < n; v = nu.next(v + 1)) {
      common.assign_intersection(nu, g.neighbors(v));
      const std::size_t cd = common.size();
      if (cd <= alpha) continue;
      Certificate cert = drill_common_neighbourhood(g, u, v, common);
      cert.context = {{"alpha", static_cast<double>(alpha)},
                      {"u", static_cast<double>(u)},
                      {"v", static_cast<double>(v)},
                      {"codegree", static_cast<double>(cd)}};
      return cert;
    }
  }
  return Certificate::none();
}

Certificate check_pair_density(const BitGraph& g, const VertexSet& x, const VertexSet& y,
                               double gamma, double t) {
  const std::size_t n = g.n();
  if (x.empty() || x.size() != y.size()) throw InputError("check_pair_density: |x| must equal |y| and be positive");
  if (x.intersects(y)) throw InputError("check_pair_density: sides overlap");
  if (!(gamma > 0.0) || !(t > 0.0) || gamma * t > 1.0)
    throw InputError("check_pair_density: need gamma, t > 0 and gamma*t <= 1");
  const double side = static_cast<double>(n) / t;
  if (std::abs(side - static_cast<double>(x.size())) > 1e-9 * std::max(1.0, side))
    throw InputError("check_pair_density: sides must have n/t vertices");

  const Ratio d = density_between(g, x, y);
  const long double bound = 0.5L + static_cast<long double>(gamma) * t;
  if (static_cast<long double>(d.num) <= bound * static_cast<long double>(d.den))
    return Certificate::none();

  const long double heavy = static_cast<long double>(n) / (2.0L * t) +
                            static_cast<long double>(gamma) * n / 2.0L;
  VertexSet heavy_set(n);
  x.for_each([&](Vertex v) {
    if (static_cast<long double>(cross_degree(g, v, y)) > heavy) heavy_set.insert(v);
  });
  std::map<std::string, double> context{{"gamma", gamma},
                                        {"t", t},
                                        {"density", d.value()},
                                        {"bound", static_cast<double>(bound)},
                                        {"heavy_count", static_cast<double>(heavy_set.size())}};
  Certificate cert;
  if (auto e = find_edge_within(g, heavy_set)) {
    const VertexSet common = g.neighbors(e->first) & g.neighbors(e->second) & y;
    cert = drill_common_neighbourhood(g, e->first, e->second, common);
  } else if (static_cast<long double>(heavy_set.size()) > static_cast<long double>(gamma) * n) {
    cert = Certificate{CertificateKind::IndependentSet, heavy_set.to_vector(), {}};
  } else {
    // Unreachable when the counting argument is sound; reported rather than
    // hidden.
    cert = Certificate{CertificateKind::DensityViolation, heavy_set.to_vector(), {}};
  }
  cert.context = std::move(context);
  return cert;
}

Certificate check_L_triangle(const BitGraph& g, const VertexSet& L, std::size_t alpha) {
  const auto n = static_cast<Vertex>(g.n());
  std::vector<std::size_t> ldeg(n);
  for (Vertex v = 0; v < n; ++v) ldeg[v] = cross_degree(g, v, L);
  const std::size_t limit = L.size() + 3 * alpha;
  VertexSet common(g.n());
  for (Vertex x = 0; x < n; ++x) {
    const VertexSet& nx = g.neighbors(x);
    for (Vertex y = nx.next(x + 1); y < n; y = nx.next(y + 1)) {
      common.assign_intersection(nx, g.neighbors(y));
      for (Vertex z = common.next(y + 1); z < n; z = common.next(z + 1)) {
        const std::size_t sum = ldeg[x] + ldeg[y] + ldeg[z];
        if (sum <= limit) continue;
        std::map<std::string, double> context{{"alpha", static_cast<double>(alpha)},
                                              {"L_size", static_cast<double>(L.size())},
                                              {"degree_sum", static_cast<double>(sum)},
                                              {"x", static_cast<double>(x)},
                                              {"y", static_cast<double>(y)},
                                              {"z", static_cast<double>(z)}};
        const std::pair<Vertex, Vertex> pairs[] = {{x, y}, {x, z}, {y, z}};
        for (auto [a, b] : pairs) {
          const VertexSet shared = g.neighbors(a) & g.neighbors(b) & L;
          if (shared.size() > alpha) {
            Certificate cert = drill_common_neighbourhood(g, a, b, shared);
            cert.context = std::move(context);
            return cert;
          }
        }
        return Certificate{CertificateKind::LTriangleViolation, {x, y, z}, std::move(context)};
      }
    }
  }
  return Certificate::none();
}

double shearer_bound(std::size_t n, std::size_t odd_girth) {
  if (odd_girth == kInfiniteGirth || odd_girth < 5 || odd_girth % 2 == 0)
    throw InputError("shearer_bound: odd girth must be a finite odd number >= 5");
  const double k = static_cast<double>((odd_girth - 3) / 2);
  return 0.5 * std::pow(static_cast<double>(n), 1.0 - 1.0 / k);
}

double chain_gamma(std::size_t k, double gamma) {
  return (10.0 + 40020.0 * static_cast<double>(k - 1)) * gamma;
}

ChainReport check_intersection_chain(const BitGraph& g, const VertexSet& X, const VertexSet& Y,
                                     double gamma, const std::vector<Vertex>& walk) {
  if (X.intersects(Y)) throw InputError("check_intersection_chain: X and Y overlap");
  if (walk.empty()) throw InputError("check_intersection_chain: empty walk");
  const double ysize = static_cast<double>(Y.size());
  const double floor = (0.5 - 20000.0 * gamma) * ysize;
  for (std::size_t i = 0; i < walk.size(); ++i) {
    const Vertex v = walk[i];
    if (v >= g.n() || !X.contains(v))
      throw InputError("check_intersection_chain: walk vertex " + std::to_string(v) + " not in X");
    if (i > 0 && !g.adjacent(walk[i - 1], v))
      throw InputError("check_intersection_chain: walk breaks between " +
                       std::to_string(walk[i - 1]) + " and " + std::to_string(v));
    if (static_cast<double>(cross_degree(g, v, Y)) < floor)
      throw InputError("check_intersection_chain: vertex " + std::to_string(v) +
                       " is below the Y-degree floor");
  }
  ChainReport report;
  for (std::size_t i = 0; i < walk.size(); ++i) {
    for (std::size_t k = 1; i + 2 * k - 1 < walk.size(); ++k) {
      const std::size_t j = i + 2 * k - 1;
      ChainEntry e;
      e.i = i;
      e.k = k;
      e.intersection = Y.intersection_size(g.neighbors(walk[i]), g.neighbors(walk[j]));
      e.bound = chain_gamma(k, gamma) * ysize;
      e.holds = static_cast<double>(e.intersection) <= e.bound;
      if (!e.holds && !report.first_violation) report.first_violation = report.entries.size();
      report.entries.push_back(e);
    }
  }
  return report;
}

}  // namespace rtw
