#pragma once

#include <span>

#include "sweepline/geometry.hpp"

namespace sweepline {

enum class Orientation { CW = -1, Collinear = 0, CCW = 1 };

// All predicates below evaluate their sign exactly on the given doubles
// (floating-point filter backed by an error-free expansion), so the answer
// never depends on rounding of intermediate differences.

/// Sign of the doubled signed area of triangle abc.
Orientation orientation(const Point& a, const Point& b, const Point& c);

/// Sign of cross(dir, x - apex): CCW when x lies left of the ray from apex along dir.
Orientation side_of_ray(const Point& apex, const Point& dir, const Point& x);

/// Sign of cross(d1, d2) for two free vectors.
Orientation cross_sign(const Point& d1, const Point& d2);

/// True iff the segments share a point interior to at least one of them.
/// Touching at a shared endpoint only, or being the same segment, is not proper.
bool properly_intersects(const Segment& s1, const Segment& s2);

/// True iff p lies on the closed segment ab (exact).
bool on_segment(const Point& a, const Point& b, const Point& p);

enum class Containment { Outside, Boundary, Inside };

/// Exact crossing-number test of p against a simple polygon given by its corners.
Containment point_in_polygon(const Point& p, std::span<const Point> polygon);

}  // namespace sweepline
