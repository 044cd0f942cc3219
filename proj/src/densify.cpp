#include "rtw/densify.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <tuple>

#include "rtw/error.hpp"
#include "rtw/parallel.hpp"
#include "rtw/rng.hpp"

namespace rtw {
namespace {

/// Hill climber over the retained set R = V \ (U1 ∪ U2).
class LayerClimber {
public:
  LayerClimber(const BitGraph& g, VertexSet u1, VertexSet u2)
      : g_(g), u1_(std::move(u1)), u2_(std::move(u2)), keep_((u1_ | u2_).complement()),
        deg_(g.n()) {
    for (Vertex v = 0; v < g.n(); ++v) deg_[v] = g.neighbors(v).intersection_size(keep_);
  }

  void climb(const VertexSet& x, const VertexSet& y) {
    while (improve(u1_, x) || improve(u2_, y)) {
    }
  }

  LayerChoice result() const { return {u1_, u2_, static_cast<std::size_t>(edges_within(g_, keep_))}; }

private:
  /// First improving swap in lexicographic (out, in) order; applies it.
  bool improve(VertexSet& layer, const VertexSet& side) {
    const auto n = static_cast<Vertex>(g_.n());
    const VertexSet outside = side - layer;
    for (Vertex u = layer.first(); u < n; u = layer.next(u + 1)) {
      for (Vertex w = outside.first(); w < n; w = outside.next(w + 1)) {
        const long gain = static_cast<long>(deg_[u]) - static_cast<long>(g_.adjacent(u, w)) -
                          static_cast<long>(deg_[w]);
        if (gain <= 0) continue;
        layer.erase(u);
        layer.insert(w);
        keep_.erase(w);
        g_.neighbors(w).for_each([&](Vertex z) { --deg_[z]; });
        keep_.insert(u);
        g_.neighbors(u).for_each([&](Vertex z) { ++deg_[z]; });
        return true;
      }
    }
    return false;
  }

  const BitGraph& g_;
  VertexSet u1_, u2_, keep_;
  std::vector<std::size_t> deg_;
};

VertexSet random_subset(const VertexSet& side, std::size_t d, Rng& rng) {
  std::vector<Vertex> members = side.to_vector();
  std::shuffle(members.begin(), members.end(), rng);
  members.resize(d);
  return VertexSet::from_list(side.universe(), members);
}

Rational hybrid_rhs(std::uint64_t S, std::uint64_t n, std::uint64_t d) {
  using boost::multiprecision::cpp_int;
  const Rational shrink(cpp_int(n - 2 * d), cpp_int(n));
  return shrink * shrink * Rational(cpp_int(S)) + Rational(cpp_int(d) * n) -
         Rational(cpp_int(d) * d) - Rational(cpp_int(n));
}

void check_layer_size(const NiceGraph& g, std::size_t d) {
  if (d > g.graph().n() / 2) throw InputError("densify: d must not exceed n/2");
}

}  // namespace

LayerChoice choose_layer_sets(const NiceGraph& g, const DensifyParams& p) {
  check_layer_size(g, p.d);
  if (p.trials < 1) throw InputError("densify: trials must be at least 1");
  std::vector<LayerChoice> candidates(p.trials);
  parallel_for(p.trials, [&](std::size_t t) {
    Rng rng = make_rng(p.seed, "densify.layer", t);
    VertexSet u1 = random_subset(g.x(), p.d, rng);
    VertexSet u2 = random_subset(g.y(), p.d, rng);
    LayerClimber climber(g.graph(), std::move(u1), std::move(u2));
    climber.climb(g.x(), g.y());
    candidates[t] = climber.result();
  });
  auto key = [](const LayerChoice& c) {
    return std::make_tuple(c.u1.to_vector(), c.u2.to_vector());
  };
  const LayerChoice* best = &candidates.front();
  for (const auto& c : candidates) {
    if (c.e_g0 > best->e_g0 || (c.e_g0 == best->e_g0 && key(c) < key(*best))) best = &c;
  }
  return *best;
}

NiceGraph apply_layers(const NiceGraph& g, const VertexSet& u1, const VertexSet& u2) {
  BitGraph out = g.graph();
  const VertexSet& x = g.x();
  const VertexSet& y = g.y();
  u1.for_each([&](Vertex u) {
    (g.graph().neighbors(u) & x).for_each([&](Vertex w) { out.remove_edge(u, w); });
  });
  u2.for_each([&](Vertex u) {
    (g.graph().neighbors(u) & y).for_each([&](Vertex w) { out.remove_edge(u, w); });
  });
  u1.for_each([&](Vertex u) { y.for_each([&](Vertex w) { out.add_edge(u, w); }); });
  const VertexSet x_rest = x - u1;
  u2.for_each([&](Vertex u) { x_rest.for_each([&](Vertex w) { out.add_edge(u, w); }); });
  return NiceGraph(std::move(out), x, g.provenance() + "+layer(d=" + std::to_string(u1.size()) + ")");
}

std::pair<NiceGraph, DensifyRecord> densify(const NiceGraph& g, const DensifyParams& p) {
  check_layer_size(g, p.d);
  if (verify_nice(g).is_witness()) throw InputError("densify: input graph is not nice");
  DensifyRecord rec;
  rec.e_before = g.graph().edge_count();
  const std::uint64_t n = g.graph().n();
  if (p.d == 0) {
    rec.layers = LayerChoice{VertexSet(n), VertexSet(n), rec.e_before};
  } else {
    rec.layers = choose_layer_sets(g, p);
  }
  NiceGraph out = apply_layers(g, rec.layers.u1, rec.layers.u2);
  if (verify_nice(out).is_witness())
    throw std::logic_error("densify produced a graph that is not nice");
  rec.e_after = out.graph().edge_count();
  rec.lemma_rhs = hybrid_rhs(rec.e_before, n, p.d);
  rec.averaging_floor = layer_averaging_floor(rec.e_before, n, p.d);
  return {std::move(out), std::move(rec)};
}

Rational layer_averaging_floor(std::uint64_t S, std::uint64_t n, std::uint64_t d) {
  if (n == 0 || 2 * d > n) throw InputError("layer_averaging_floor: need n > 0 and d <= n/2");
  using boost::multiprecision::cpp_int;
  const Rational shrink(cpp_int(n - 2 * d), cpp_int(n));
  return shrink * shrink * Rational(cpp_int(S)) - Rational(cpp_int(n));
}

Rational eval_lemma_hybrid(std::uint64_t S, std::uint64_t n, std::uint64_t d) {
  if (n < 6 || n % 2 != 0) throw InputError("eval_lemma_hybrid: n must be even and >= 6");
  if (2 * d > n) throw InputError("eval_lemma_hybrid: d must not exceed n/2");
  return hybrid_rhs(S, n, d);
}

namespace {

void check_even_n(std::uint64_t n, const char* who) {
  if (n < 6 || n % 2 != 0) throw InputError(std::string(who) + ": n must be even and >= 6");
}

}  // namespace

Corollary92 eval_corollary_92(std::uint64_t n, long double delta) {
  check_even_n(n, "eval_corollary_92");
  const long double nn = static_cast<long double>(n);
  // delta >= n^{-1/2} compared as delta^2 n >= 1, with rounding slack at the boundary.
  if (delta * delta * nn < 1.0L - 1e-12L || delta > 0.25L)
    throw InputError("eval_corollary_92: need n^{-1/2} <= delta <= 1/4");
  const long double factor =
      1.0L + 48.0L * delta * delta - 8.0L / nn - 128.0L * delta * delta * delta;
  return Corollary92{factor, nn * nn / 8.0L * factor, factor >= 1.0L};
}

long double eval_corollary_94(std::uint64_t n, long double delta, long double a) {
  check_even_n(n, "eval_corollary_94");
  const long double nn = static_cast<long double>(n);
  if (!(delta > 0.0L) || a * delta * nn < 1.0L - 1e-12L || a > 0.5L)
    throw InputError("eval_corollary_94: need 1/(delta n) <= a <= 1/2");
  return nn * nn / 8.0L * (1.0L + 4.0L * a - 4.0L * a * a - 8.0L * delta);
}

}  // namespace rtw
