#include "rtw/geometry.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <string>

#include "rtw/error.hpp"
#include "rtw/rng.hpp"

namespace rtw {

SpherePointSet::SpherePointSet(std::size_t h, std::uint64_t seed, std::vector<double> coords)
    : h_(h), seed_(seed), coords_(std::move(coords)) {
  if (h_ < 2) throw InputError("sphere dimension must be at least 2");
  if (coords_.size() % h_ != 0) throw InputError("coordinate count is not a multiple of h");
}

SpherePointSet sample_sphere_points(std::size_t h, std::size_t count, std::uint64_t seed) {
  if (h < 2) throw InputError("sample_sphere_points: h must be at least 2");
  if (count < 1) throw InputError("sample_sphere_points: count must be at least 1");
  Rng rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::vector<double> coords(h * count);
  for (std::size_t i = 0; i < count; ++i) {
    double* p = coords.data() + i * h;
    double norm2 = 0.0;
    // A zero Gaussian vector has probability zero; resample if it happens.
    while (norm2 == 0.0) {
      norm2 = 0.0;
      for (std::size_t k = 0; k < h; ++k) {
        p[k] = gauss(rng);
        norm2 += p[k] * p[k];
      }
    }
    const double inv = 1.0 / std::sqrt(norm2);
    for (std::size_t k = 0; k < h; ++k) p[k] *= inv;
  }
  return SpherePointSet(h, seed, std::move(coords));
}

double squared_distance(std::span<const double> p, std::span<const double> q) {
  if (p.size() != q.size()) throw InputError("distance: dimension mismatch");
  double s = 0.0;
  for (std::size_t k = 0; k < p.size(); ++k) {
    const double d = p[k] - q[k];
    s += d * d;
  }
  return s;
}

double distance(std::span<const double> p, std::span<const double> q) {
  return std::sqrt(squared_distance(p, q));
}

namespace {

template <class F>
double simpson_step(F& f, double a, double b, double fa, double fm, double fb, double whole,
                    double tol, double noise, int depth) {
  const double m = 0.5 * (a + b);
  const double lm = 0.5 * (a + m);
  const double rm = 0.5 * (m + b);
  const double flm = f(lm);
  const double frm = f(rm);
  const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
  const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
  const double diff = left + right - whole;
  // Accept at the requested tolerance, or once the difference is down to
  // the integrand's own relative rounding noise.
  if (depth <= 0 || std::abs(diff) <= 15.0 * tol || std::abs(diff) <= noise * std::abs(left + right))
    return left + right + diff / 15.0;
  return simpson_step(f, a, m, fa, flm, fm, left, 0.5 * tol, noise, depth - 1) +
         simpson_step(f, m, b, fm, frm, fb, right, 0.5 * tol, noise, depth - 1);
}

template <class F>
double adaptive_simpson(F f, double a, double b, double tol, double noise) {
  // Seed with a fixed split so a narrow peak cannot hide between the first
  // three samples.
  constexpr int kPieces = 16;
  double total = 0.0;
  const double step = (b - a) / kPieces;
  for (int i = 0; i < kPieces; ++i) {
    const double lo = a + i * step;
    const double hi = (i + 1 == kPieces) ? b : lo + step;
    const double flo = f(lo);
    const double fhi = f(hi);
    const double fm = f(0.5 * (lo + hi));
    const double whole = (hi - lo) / 6.0 * (flo + 4.0 * fm + fhi);
    total += simpson_step(f, lo, hi, flo, fm, fhi, whole, tol / kPieces, noise, 40);
  }
  return total;
}

/// ∫_0^theta (sin φ / sin theta)^{h-2} dφ for theta in (0, pi/2]. The
/// integrand peaks at 1 at the right end.
double scaled_slice_integral(std::size_t h, double theta) {
  const double power = static_cast<double>(h) - 2.0;
  if (power == 0.0) return theta;
  const double log_peak = std::log(std::sin(theta));
  auto f = [&](double phi) {
    if (phi <= 0.0) return 0.0;
    return std::exp(power * (std::log(std::sin(phi)) - log_peak));
  };
  // The integral is at least of order theta/(h-1); keep the absolute error far
  // below that.
  const double tol = 1e-14 * theta / (power + 1.0);
  // exp(power * log-ratio) carries relative error of order power * 1e-16.
  const double noise = 4e-16 * (power + 1.0);
  return adaptive_simpson(f, 0.0, theta, tol, noise);
}

/// Measure of the cap with polar angle theta in [0, pi/2].
double cap_by_angle(std::size_t h, double theta) {
  if (theta <= 0.0) return 0.0;
  const double half = std::numbers::pi / 2.0;
  const double num = scaled_slice_integral(h, theta);
  const double den = 2.0 * scaled_slice_integral(h, half);
  const double log_scale = (static_cast<double>(h) - 2.0) * std::log(std::sin(theta));
  return std::exp(log_scale) * num / den;
}

}  // namespace

double cap_measure(std::size_t h, double chord_radius) {
  if (h < 2) throw InputError("cap_measure: h must be at least 2");
  if (!(chord_radius >= 0.0 && chord_radius <= 2.0))
    throw InputError("cap_measure: chord radius must lie in [0, 2]");
  if (chord_radius == 0.0) return 0.0;
  if (chord_radius == 2.0) return 1.0;
  const double theta = 2.0 * std::asin(chord_radius / 2.0);
  const double half = std::numbers::pi / 2.0;
  if (theta <= half) return cap_by_angle(h, theta);
  return 1.0 - cap_by_angle(h, std::numbers::pi - theta);
}

CapQuery CapQuery::make(std::size_t h, double epsilon) {
  if (h < 2) throw InputError("CapQuery: h must be at least 2");
  if (!(epsilon > 0.0 && epsilon < 1.0)) throw InputError("CapQuery: epsilon must lie in (0,1)");
  return CapQuery{h, epsilon, epsilon / std::sqrt(static_cast<double>(h))};
}

CapBoundReport check_cap_lower_bound(const CapQuery& q) {
  if (q.h < 5) throw InputError("check_cap_lower_bound: requires h >= 5");
  const double lhs = cap_measure(q.h, std::numbers::sqrt2 - q.mu);
  const double rhs = 0.5 - std::numbers::sqrt2 * q.epsilon;
  return {lhs, rhs, lhs >= rhs};
}

double chord_radius_for_cap_diameter(double diameter) {
  if (!(diameter >= 0.0 && diameter <= 2.0))
    throw InputError("cap diameter must lie in [0, 2]");
  const double theta = std::asin(diameter / 2.0);
  return 2.0 * std::sin(theta / 2.0);
}

CapBoundReport check_cap_upper_bound(std::size_t h, double mu) {
  if (!(mu >= 0.0 && mu < 1.0)) throw InputError("check_cap_upper_bound: mu must lie in [0,1)");
  const double lhs = cap_measure(h, chord_radius_for_cap_diameter(2.0 - mu));
  const double rhs = 2.0 * std::exp(-mu * static_cast<double>(h) / 2.0);
  return {lhs, rhs, lhs <= rhs};
}

nlohmann::json points_to_json(const SpherePointSet& pts) {
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t i = 0; i < pts.size(); ++i) {
    auto p = pts.point(i);
    rows.push_back(std::vector<double>(p.begin(), p.end()));
  }
  return {{"h", pts.dimension()}, {"seed", pts.seed()}, {"points", std::move(rows)}};
}

SpherePointSet points_from_json(const nlohmann::json& j) {
  const auto h = j.at("h").get<std::size_t>();
  std::vector<double> coords;
  for (const auto& row : j.at("points")) {
    if (row.size() != h) throw InputError("point dimension does not match h");
    for (const auto& x : row) coords.push_back(x.get<double>());
  }
  return SpherePointSet(h, j.at("seed").get<std::uint64_t>(), std::move(coords));
}

}  // namespace rtw
