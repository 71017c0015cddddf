#pragma once

#include <vector>

#include "sweepline/cones.hpp"
#include "sweepline/graph.hpp"
#include "sweepline/predicates.hpp"
#include "sweepline/scene.hpp"

namespace sweepline {

/// A direction out of some apex: either toward an input point or along a
/// free vector. Keeping the original data lets angular comparisons stay exact.
struct Bearing {
  Point value;
  bool is_vector = false;

  static Bearing toward(const Point& p) { return {p, false}; }
  static Bearing along(const Point& d) { return {d, true}; }
};

/// Sign of cross(a, b) for two bearings out of `apex`.
Orientation compare_bearings(const Point& apex, const Bearing& a, const Bearing& b);

/// Closed angular interval [lo, hi] (counterclockwise) inside one cone.
/// The angles are for reporting only; membership uses the bearings.
struct Subcone {
  Bearing lo;
  Bearing hi;
  double lo_angle;
  double hi_angle;
};

struct SubconePartition {
  VertexId apex;
  ConeIndex cone;
  std::vector<Subcone> subcones;
  /// members[j]: vertices (sorted) in cone `cone` whose direction lies in subcones[j].
  /// A constraint endpoint on a splitting ray belongs to both neighbouring subcones.
  std::vector<std::vector<VertexId>> members;
};

bool is_visible(const Scene& scene, VertexId u, VertexId v);

/// Complete graph on the points minus every pair that is not visible.
SpannerGraph visibility_graph(const Scene& scene);

SubconePartition subcones(const Scene& scene, VertexId u, ConeIndex cone, const SweepConfig& config);

/// Partitions of all k cones of u (index = cone).
std::vector<SubconePartition> subcone_partitions(const Scene& scene, VertexId u,
                                                 const SweepConfig& config);

}  // namespace sweepline
