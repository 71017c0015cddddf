#include "sweepline/predicates.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>

namespace sweepline {
namespace {

// Error-free transformations. An expansion is a sum of non-overlapping
// doubles ordered by increasing magnitude; its sign is the sign of the
// largest nonzero component.

void two_sum(double a, double b, double& sum, double& err) {
  sum = a + b;
  const double bv = sum - a;
  const double av = sum - bv;
  err = (a - av) + (b - bv);
}

template <std::size_t N>
struct Expansion {
  std::array<double, N> terms{};
  std::size_t size = 0;

  void add(double value) {
    // Grow-Expansion: exact, keeps the non-overlapping property.
    double q = value;
    std::size_t out = 0;
    for (std::size_t i = 0; i < size; ++i) {
      double sum = 0.0;
      double err = 0.0;
      two_sum(q, terms[i], sum, err);
      q = sum;
      if (err != 0.0) terms[out++] = err;
    }
    terms[out++] = q;
    size = out;
  }

  void add_product(double a, double b) {
    const double p = a * b;
    add(std::fma(a, b, -p));
    add(p);
  }

  int sign() const {
    for (std::size_t i = size; i-- > 0;) {
      if (terms[i] > 0.0) return 1;
      if (terms[i] < 0.0) return -1;
    }
    return 0;
  }
};

Orientation to_orientation(int s) {
  return s > 0 ? Orientation::CCW : (s < 0 ? Orientation::CW : Orientation::Collinear);
}

constexpr double kEps = std::numeric_limits<double>::epsilon() / 2.0;
// Shewchuk's ccwerrboundA, loosened to cover the extra rounding of the
// differences we form in the filtered path.
constexpr double kFilterBound = (4.0 + 64.0 * kEps) * kEps;

}  // namespace

Orientation orientation(const Point& a, const Point& b, const Point& c) {
  const double left = (b.x - a.x) * (c.y - a.y);
  const double right = (b.y - a.y) * (c.x - a.x);
  const double det = left - right;
  const double bound = kFilterBound * (std::abs(left) + std::abs(right));
  if (det > bound) return Orientation::CCW;
  if (-det > bound) return Orientation::CW;

  // det = bx*cy - bx*ay - ax*cy - by*cx + by*ax + ay*cx
  Expansion<12> e;
  e.add_product(b.x, c.y);
  e.add_product(-b.x, a.y);
  e.add_product(-a.x, c.y);
  e.add_product(-b.y, c.x);
  e.add_product(b.y, a.x);
  e.add_product(a.y, c.x);
  return to_orientation(e.sign());
}

Orientation side_of_ray(const Point& apex, const Point& dir, const Point& x) {
  const double left = dir.x * (x.y - apex.y);
  const double right = dir.y * (x.x - apex.x);
  const double det = left - right;
  const double bound = kFilterBound * (std::abs(left) + std::abs(right));
  if (det > bound) return Orientation::CCW;
  if (-det > bound) return Orientation::CW;

  Expansion<8> e;
  e.add_product(dir.x, x.y);
  e.add_product(-dir.x, apex.y);
  e.add_product(-dir.y, x.x);
  e.add_product(dir.y, apex.x);
  return to_orientation(e.sign());
}

Orientation cross_sign(const Point& d1, const Point& d2) {
  Expansion<4> e;
  e.add_product(d1.x, d2.y);
  e.add_product(-d1.y, d2.x);
  return to_orientation(e.sign());
}

bool on_segment(const Point& a, const Point& b, const Point& p) {
  if (orientation(a, b, p) != Orientation::Collinear) return false;
  return std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) &&
         std::min(a.y, b.y) <= p.y && p.y <= std::max(a.y, b.y);
}

namespace {

bool interior_to(const Point& a, const Point& b, const Point& p) {
  return p != a && p != b && on_segment(a, b, p);
}

}  // namespace

bool properly_intersects(const Segment& s1, const Segment& s2) {
  const auto& [a, b] = s1;
  const auto& [c, d] = s2;
  if ((a == c && b == d) || (a == d && b == c)) return false;

  const int o1 = static_cast<int>(orientation(a, b, c));
  const int o2 = static_cast<int>(orientation(a, b, d));
  const int o3 = static_cast<int>(orientation(c, d, a));
  const int o4 = static_cast<int>(orientation(c, d, b));
  if (o1 * o2 < 0 && o3 * o4 < 0) return true;

  return interior_to(a, b, c) || interior_to(a, b, d) || interior_to(c, d, a) ||
         interior_to(c, d, b);
}

Containment point_in_polygon(const Point& p, std::span<const Point> polygon) {
  bool inside = false;
  const std::size_t m = polygon.size();
  for (std::size_t i = 0, j = m - 1; i < m; j = i++) {
    const Point& a = polygon[j];
    const Point& b = polygon[i];
    if (on_segment(a, b, p)) return Containment::Boundary;
    // Half-open rule on y avoids double counting at vertices.
    if ((a.y > p.y) != (b.y > p.y)) {
      const Orientation o = orientation(a, b, p);
      // Crossing lies right of p iff p is left of the upward edge.
      if ((b.y > a.y) == (o == Orientation::CCW)) inside = !inside;
    }
  }
  return inside ? Containment::Inside : Containment::Outside;
}

}  // namespace sweepline
