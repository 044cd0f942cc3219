#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include <json.hpp>

namespace rtw {

/// `count` unit vectors in R^h stored row-major.
class SpherePointSet {
public:
  SpherePointSet(std::size_t h, std::uint64_t seed, std::vector<double> coords);

  std::size_t dimension() const { return h_; }
  std::size_t size() const { return coords_.size() / h_; }
  std::uint64_t seed() const { return seed_; }
  std::span<const double> point(std::size_t i) const {
    return {coords_.data() + i * h_, h_};
  }
  const std::vector<double>& coords() const { return coords_; }

private:
  std::size_t h_;
  std::uint64_t seed_;
  std::vector<double> coords_;
};

/// i.i.d. uniform points on S^{h-1} by normalized Gaussians; deterministic
/// per seed. Throws InputError when h < 2 or count < 1.
SpherePointSet sample_sphere_points(std::size_t h, std::size_t count, std::uint64_t seed);

/// Euclidean distance; InputError on dimension mismatch.
double distance(std::span<const double> p, std::span<const double> q);
double squared_distance(std::span<const double> p, std::span<const double> q);

/// Normalized surface measure of {x in S^{h-1} : |x - pole| <= chord_radius}.
///
/// The polar angle of the cap is 2 asin(r/2); the measure is the ratio of
/// slice integrals of sin^{h-2} over [0, angle] and [0, pi], evaluated by
/// adaptive Simpson in log space.
double cap_measure(std::size_t h, double chord_radius);

/// Slack parameters of the sphere construction: mu = epsilon / sqrt(h).
struct CapQuery {
  std::size_t h;
  double epsilon;
  double mu;

  static CapQuery make(std::size_t h, double epsilon);
};

struct CapBoundReport {
  double lhs;
  double rhs;
  bool holds;
};

/// Cap at chord radius sqrt(2) - mu against 1/2 - sqrt(2) epsilon. Needs h >= 5.
CapBoundReport check_cap_lower_bound(const CapQuery& q);

/// Chord radius of the cap whose boundary circle has Euclidean diameter
/// `diameter` (caps no larger than a hemisphere).
double chord_radius_for_cap_diameter(double diameter);

/// Cap of diameter 2 - mu against 2 e^{-mu h / 2}.
CapBoundReport check_cap_upper_bound(std::size_t h, double mu);

nlohmann::json points_to_json(const SpherePointSet& pts);
SpherePointSet points_from_json(const nlohmann::json& j);

}  // namespace rtw
