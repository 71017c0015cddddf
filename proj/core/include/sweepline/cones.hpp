#pragma once

#include <vector>

#include "sweepline/geometry.hpp"

namespace sweepline {

/// Index i of the cone spanning directions [i*theta, (i+1)*theta).
using ConeIndex = int;

/// A validated cone system: k cones of aperture theta = 2*pi/k and a sweeping
/// line tilted by gamma. Construct through validate_config().
///
/// Conventions: the left boundary of cone i is the counterclockwise ray at
/// angle (i+1)*theta, and the sweeping line's normal is the cone bisector
/// rotated counterclockwise by gamma.
class SweepConfig {
 public:
  int k() const { return k_; }
  double theta() const { return theta_; }
  double gamma() const { return gamma_; }

  /// 1 / (cos(theta/2 + gamma) - sin(theta)).
  double stretch_bound() const { return stretch_bound_; }

  /// cos(theta/2 + gamma) - sin(theta), the per-hop contraction factor.
  double contraction() const { return contraction_; }

  /// Unit direction of the ray at angle i*theta (i taken modulo k).
  const Point& ray(int i) const { return rays_[static_cast<std::size_t>(wrap(i))]; }

  /// Unit normal of the sweeping lines of cone i.
  const Point& sweep_normal(ConeIndex i) const { return normals_[static_cast<std::size_t>(wrap(i))]; }

  /// Unit direction of the sweeping lines of cone i.
  Point sweep_direction(ConeIndex i) const {
    const Point& n = sweep_normal(i);
    return {-n.y, n.x};
  }

  /// Exclusive upper limit (pi - 3*theta)/2 for gamma.
  static double gamma_limit(int k);

 private:
  friend SweepConfig validate_config(int k, double gamma);
  SweepConfig(int k, double gamma);

  int wrap(int i) const { return ((i % k_) + k_) % k_; }

  int k_;
  double theta_;
  double gamma_;
  double contraction_;
  double stretch_bound_;
  std::vector<Point> rays_;
  std::vector<Point> normals_;
};

/// Throws ConeCountTooSmall for k < 7 and GammaOutOfRange unless
/// 0 <= gamma < (pi - 3*theta)/2.
SweepConfig validate_config(int k, double gamma);

/// Cone of `apex` containing `target`, decided exactly against the ray
/// directions so every direction lands in exactly one half-open cone.
ConeIndex cone_of(const Point& apex, const Point& target, const SweepConfig& config);

/// Closeness of x to apex along the sweeping line order: r*cos(phi - gamma),
/// phi measured from the bisector. Proportional to |apex x_gamma| within a cone.
double sweep_key(const Point& apex, const Point& x, ConeIndex cone, const SweepConfig& config);

/// x_gamma: where the sweeping line through x meets the cone's left boundary.
Point gamma_point(const Point& apex, const Point& x, ConeIndex cone, const SweepConfig& config);

}  // namespace sweepline
