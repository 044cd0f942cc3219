#include <doctest.h>

#include <boost/math/special_functions/beta.hpp>
#include <cmath>
#include <numbers>
#include <random>

#include "rtw/error.hpp"
#include "rtw/geometry.hpp"

using namespace rtw;

namespace {

// Normalized cap measure through the regularized incomplete beta function:
// for polar angle theta <= pi/2 the cap is (1/2) I_{sin^2 theta}((h-1)/2, 1/2).
double beta_cap(std::size_t h, double chord) {
  const double theta = 2.0 * std::asin(chord / 2.0);
  const double a = (static_cast<double>(h) - 1.0) / 2.0;
  if (theta <= std::numbers::pi / 2) {
    const double s = std::sin(theta);
    return 0.5 * boost::math::ibeta(a, 0.5, s * s);
  }
  const double s = std::sin(std::numbers::pi - theta);
  return 1.0 - 0.5 * boost::math::ibeta(a, 0.5, s * s);
}

}  // namespace

TEST_CASE("sampled points are unit vectors and reproducible") {
  const SpherePointSet pts = sample_sphere_points(2, 4, 0);
  CHECK(pts.size() == 4);
  for (std::size_t i = 0; i < 4; ++i) {
    double s = 0.0;
    for (double c : pts.point(i)) s += c * c;
    CHECK(std::abs(s - 1.0) <= 1e-12);
  }
  const SpherePointSet again = sample_sphere_points(2, 4, 0);
  CHECK(again.coords() == pts.coords());
  CHECK(sample_sphere_points(2, 4, 1).coords() != pts.coords());
  CHECK_THROWS_AS(sample_sphere_points(1, 4, 0), InputError);
}

TEST_CASE("mean of uniform points on S^2 is near the origin") {
  const SpherePointSet pts = sample_sphere_points(3, 1000, 7);
  double mean[3] = {0, 0, 0};
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (int k = 0; k < 3; ++k) mean[k] += pts.point(i)[k] / 1000.0;
  CHECK(std::sqrt(mean[0] * mean[0] + mean[1] * mean[1] + mean[2] * mean[2]) <= 0.12);
}

TEST_CASE("distance special cases") {
  const std::vector<double> p{1, 0, 0}, q{-1, 0, 0}, r{0, 1, 0}, s{0, 1};
  CHECK(distance(p, p) == 0.0);
  CHECK(distance(p, q) == doctest::Approx(2.0).epsilon(1e-15));
  CHECK(distance(p, r) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));
  CHECK_THROWS_AS(distance(p, s), InputError);
}

TEST_CASE("cap measure endpoints and hemisphere") {
  for (std::size_t h : {2, 3, 5, 16, 64, 2000}) {
    CHECK(cap_measure(h, 0.0) == 0.0);
    CHECK(cap_measure(h, 2.0) == 1.0);
    CHECK(cap_measure(h, std::sqrt(2.0)) == doctest::Approx(0.5).epsilon(1e-12));
  }
  CHECK_THROWS_AS(cap_measure(5, -0.1), InputError);
  CHECK_THROWS_AS(cap_measure(5, 2.1), InputError);
}

TEST_CASE("cap measure on S^2 matches (1 - cos theta)/2 on a 100 point grid") {
  for (int i = 0; i <= 99; ++i) {
    const double theta = std::numbers::pi * i / 99.0;
    const double chord = 2.0 * std::sin(theta / 2.0);
    CHECK(std::abs(cap_measure(3, chord) - (1.0 - std::cos(theta)) / 2.0) <= 1e-8);
  }
  CHECK(cap_measure(3, 1.3565) == doctest::Approx(0.4596).epsilon(1e-3));
}

TEST_CASE("cap measure matches the incomplete beta function") {
  for (std::size_t h : {2, 4, 5, 8, 16, 33, 64, 100, 500, 1500}) {
    for (double chord : {0.05, 0.3, 0.9, 1.2, 1.38, 1.41, 1.45, 1.7, 1.95, 1.999}) {
      const double expected = beta_cap(h, chord);
      const double got = cap_measure(h, chord);
      CAPTURE(h);
      CAPTURE(chord);
      CHECK(std::abs(got - expected) <= 1e-9 * std::max(expected, 1e-300) + 1e-15);
    }
  }
}

TEST_CASE("cap measure is monotone in the chord") {
  for (std::size_t h : {3, 10, 200}) {
    double prev = 0.0;
    for (int i = 0; i <= 200; ++i) {
      const double m = cap_measure(h, 2.0 * i / 200.0);
      CHECK(m >= prev - 1e-15);
      prev = m;
    }
  }
}

TEST_CASE("cap measure agrees with Monte Carlo within four standard errors") {
  constexpr std::size_t kSamples = 1000000;
  std::mt19937_64 rng(20261019);
  std::normal_distribution<double> gauss;
  for (std::size_t h : {3, 6, 12}) {
    const std::vector<double> chords{0.8, 1.3, 1.5};
    std::vector<std::size_t> hits(chords.size(), 0);
    std::vector<double> x(h);
    for (std::size_t s = 0; s < kSamples; ++s) {
      double n2 = 0.0;
      for (auto& c : x) {
        c = gauss(rng);
        n2 += c * c;
      }
      const double first = x[0] / std::sqrt(n2);
      // |x - pole|^2 = 2 - 2 x_0
      for (std::size_t k = 0; k < chords.size(); ++k)
        if (2.0 - 2.0 * first <= chords[k] * chords[k]) ++hits[k];
    }
    for (std::size_t k = 0; k < chords.size(); ++k) {
      const double q = cap_measure(h, chords[k]);
      const double estimate = static_cast<double>(hits[k]) / kSamples;
      const double se = std::sqrt(q * (1.0 - q) / kSamples);
      CAPTURE(h);
      CAPTURE(chords[k]);
      CHECK(std::abs(estimate - q) <= 4.0 * se);
    }
  }
}

TEST_CASE("cap lower bound checks") {
  const CapQuery q = CapQuery::make(5, 0.1);
  CHECK(q.mu == 0.1 / std::sqrt(5.0));
  const CapBoundReport r = check_cap_lower_bound(q);
  CHECK(r.rhs == doctest::Approx(0.5 - std::sqrt(2.0) * 0.1).epsilon(1e-14));
  CHECK(r.rhs == doctest::Approx(0.3586).epsilon(1e-4));
  CHECK(r.holds);
  CHECK(r.lhs == doctest::Approx(beta_cap(5, std::sqrt(2.0) - q.mu)).epsilon(1e-9));
  CHECK(check_cap_lower_bound(CapQuery::make(16, 0.2)).holds);

  const CapBoundReport tiny = check_cap_lower_bound(CapQuery::make(8, 1e-9));
  CHECK(tiny.lhs == doctest::Approx(0.5).epsilon(1e-8));
  CHECK(tiny.rhs == doctest::Approx(0.5).epsilon(1e-8));
  CHECK(tiny.holds);

  CHECK_THROWS_AS(check_cap_lower_bound(CapQuery::make(4, 0.1)), InputError);
  CHECK_THROWS_AS(CapQuery::make(5, 0.0), InputError);
  CHECK_THROWS_AS(CapQuery::make(5, 1.0), InputError);
}

TEST_CASE("cap upper bound checks") {
  const CapBoundReport r = check_cap_upper_bound(20, 0.5);
  CHECK(r.rhs == doctest::Approx(2.0 * std::exp(-5.0)).epsilon(1e-14));
  CHECK(r.holds);
  const CapBoundReport zero = check_cap_upper_bound(20, 0.0);
  CHECK(zero.rhs == 2.0);
  CHECK(zero.holds);
  const CapBoundReport big = check_cap_upper_bound(100, 0.2);
  CHECK(big.rhs == doctest::Approx(2.0 * std::exp(-10.0)).epsilon(1e-14));
  CHECK(big.holds);
  // A cap whose boundary circle has diameter l: chord from the pole r with
  // the boundary at polar angle theta satisfies l = 2 sin(theta).
  const double r_chord = chord_radius_for_cap_diameter(1.5);
  const double theta = 2.0 * std::asin(r_chord / 2.0);
  CHECK(2.0 * std::sin(theta) == doctest::Approx(1.5).epsilon(1e-14));
  CHECK(r.lhs == doctest::Approx(beta_cap(20, chord_radius_for_cap_diameter(1.5))).epsilon(1e-9));
  CHECK_THROWS_AS(check_cap_upper_bound(20, 1.0), InputError);
}

TEST_CASE("points JSON round-trips exactly") {
  const SpherePointSet pts = sample_sphere_points(7, 5, 42);
  const auto j = points_to_json(pts);
  CHECK(j["h"] == 7);
  CHECK(j["seed"] == 42);
  const SpherePointSet back = points_from_json(nlohmann::json::parse(j.dump()));
  CHECK(back.coords() == pts.coords());
  CHECK(back.seed() == 42);
}
