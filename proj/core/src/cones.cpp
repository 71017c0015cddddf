#include "sweepline/cones.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "sweepline/error.hpp"
#include "sweepline/predicates.hpp"

namespace sweepline {

double SweepConfig::gamma_limit(int k) {
  const double theta = 2.0 * std::numbers::pi / k;
  return (std::numbers::pi - 3.0 * theta) / 2.0;
}

SweepConfig::SweepConfig(int k, double gamma)
    : k_(k),
      theta_(2.0 * std::numbers::pi / k),
      gamma_(gamma),
      contraction_(std::cos(theta_ / 2.0 + gamma) - std::sin(theta_)),
      stretch_bound_(1.0 / contraction_) {
  rays_.reserve(static_cast<std::size_t>(k));
  normals_.reserve(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) {
    const double a = i * theta_;
    rays_.push_back({std::cos(a), std::sin(a)});
    const double n = (i + 0.5) * theta_ + gamma;
    normals_.push_back({std::cos(n), std::sin(n)});
  }
}

SweepConfig validate_config(int k, double gamma) {
  if (k < 7) throw Error(Errc::ConeCountTooSmall, "k = " + std::to_string(k) + " (need k >= 7)");
  const double limit = SweepConfig::gamma_limit(k);
  if (!(gamma >= 0.0) || !(gamma < limit)) {
    throw Error(Errc::GammaOutOfRange,
                "gamma = " + std::to_string(gamma) + " outside [0, " + std::to_string(limit) + ")");
  }
  SweepConfig config(k, gamma);
  if (!(config.contraction() > 0.0) || !std::isfinite(config.stretch_bound())) {
    throw Error(Errc::GammaOutOfRange, "bound diverges at gamma = " + std::to_string(gamma));
  }
  return config;
}

ConeIndex cone_of(const Point& apex, const Point& target, const SweepConfig& config) {
  if (apex == target) throw Error(Errc::DegenerateDirection, "target coincides with apex");
  const int k = config.k();
  double angle = std::atan2(target.y - apex.y, target.x - apex.x);
  if (angle < 0.0) angle += 2.0 * std::numbers::pi;
  int i = static_cast<int>(std::floor(angle / config.theta()));
  i = ((i % k) + k) % k;

  // The floating estimate can be off by one near a ray; settle it exactly.
  for (int step = 0; step < k; ++step) {
    if (side_of_ray(apex, config.ray(i), target) == Orientation::CW) {
      i = (i + k - 1) % k;
    } else if (side_of_ray(apex, config.ray(i + 1), target) != Orientation::CW) {
      i = (i + 1) % k;
    } else {
      return i;
    }
  }
  return i;
}

namespace {

void require_in_cone(const Point& apex, const Point& x, ConeIndex cone, const SweepConfig& config) {
  if (cone_of(apex, x, config) != cone) {
    throw Error(Errc::WrongCone, "point is not in cone " + std::to_string(cone));
  }
}

}  // namespace

double sweep_key(const Point& apex, const Point& x, ConeIndex cone, const SweepConfig& config) {
  require_in_cone(apex, x, cone, config);
  return dot(config.sweep_normal(cone), x - apex);
}

Point gamma_point(const Point& apex, const Point& x, ConeIndex cone, const SweepConfig& config) {
  const double key = sweep_key(apex, x, cone, config);
  const double t = key / std::cos(config.theta() / 2.0 - config.gamma());
  return apex + t * config.ray(cone + 1);
}

}  // namespace sweepline
