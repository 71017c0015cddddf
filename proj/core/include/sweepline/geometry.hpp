#pragma once

#include <cmath>
#include <cstddef>

namespace sweepline {

using VertexId = std::size_t;

/// A point or a direction vector in the plane.
struct Point {
  double x = 0.0;
  double y = 0.0;

  friend constexpr bool operator==(const Point&, const Point&) = default;
  friend constexpr Point operator-(const Point& a, const Point& b) { return {a.x - b.x, a.y - b.y}; }
  friend constexpr Point operator+(const Point& a, const Point& b) { return {a.x + b.x, a.y + b.y}; }
  friend constexpr Point operator*(double s, const Point& a) { return {s * a.x, s * a.y}; }
};

struct Segment {
  Point a;
  Point b;
};

inline double dot(const Point& a, const Point& b) { return a.x * b.x + a.y * b.y; }
inline double norm(const Point& a) { return std::hypot(a.x, a.y); }
inline double distance(const Point& a, const Point& b) { return std::hypot(a.x - b.x, a.y - b.y); }

}  // namespace sweepline
