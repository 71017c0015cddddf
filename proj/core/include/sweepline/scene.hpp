#pragma once

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "sweepline/geometry.hpp"
#include "sweepline/obstacles.hpp"

namespace sweepline {

/// Polygon corner bookkeeping. The obstacle's interior wedge at the corner is
/// swept counterclockwise from the ray toward `wedge_from` to the ray toward
/// `wedge_to`.
struct PolygonCorner {
  std::size_t polygon;
  VertexId wedge_from;
  VertexId wedge_to;
};

/// Immutable, validated point set plus obstacles.
///
/// Construction rejects (InvalidInstance) non-finite or duplicate points,
/// collinear triples, crossing or repeated constraints, non-simple,
/// overlapping or nested polygons, shared polygon corners, and input points
/// strictly inside a polygon. Indices out of range raise BadIndex.
class Scene {
 public:
  Scene(std::vector<Point> points, ObstacleSet obstacles);

  std::size_t size() const { return points_.size(); }
  const Point& point(VertexId v) const { return points_[v]; }
  std::span<const Point> points() const { return points_; }
  const ObstacleSet& obstacles() const { return obstacles_; }
  ObstacleKind kind() const { return obstacles_.kind; }

  /// Other endpoints of the constraints incident to v (sorted).
  std::span<const VertexId> constraint_neighbors(VertexId v) const { return constraint_adj_[v]; }
  bool is_constraint(VertexId u, VertexId v) const;

  const std::optional<PolygonCorner>& corner(VertexId v) const { return corners_[v]; }

  /// Every obstacle edge: the constraints, or all polygon boundary edges.
  std::span<const std::pair<VertexId, VertexId>> obstacle_edges() const { return edges_; }

  /// Throws BadIndex unless v < size().
  void check_index(VertexId v) const;

 private:
  void validate_points() const;
  void index_segments();
  void index_polygons();

  std::vector<Point> points_;
  ObstacleSet obstacles_;
  std::vector<std::vector<VertexId>> constraint_adj_;
  std::vector<std::optional<PolygonCorner>> corners_;
  std::vector<std::pair<VertexId, VertexId>> edges_;
};

/// Index of the first point involved in a collinear triple, if any.
std::optional<std::size_t> find_collinear_triple(std::span<const Point> points);

}  // namespace sweepline
