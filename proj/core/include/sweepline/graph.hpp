#pragma once

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "sweepline/cones.hpp"
#include "sweepline/geometry.hpp"
#include "sweepline/obstacles.hpp"

namespace sweepline {

struct Neighbor {
  VertexId vertex;
  double weight;
};

/// One per-(sub)cone choice: `apex` picked `target` as the closest visible
/// vertex of subcone `subcone` of cone `cone`.
struct Selection {
  VertexId apex;
  ConeIndex cone;
  std::size_t subcone;
  VertexId target;

  friend bool operator==(const Selection&, const Selection&) = default;
};

enum class GraphOrigin { Visibility, SweepLine };

/// Undirected graph over point indices with Euclidean edge weights.
/// Adjacency lists are sorted by neighbor index; selections (for sweep line
/// graphs) are sorted by (apex, cone, subcone).
class SpannerGraph {
 public:
  SpannerGraph(std::span<const Point> points, std::vector<std::pair<VertexId, VertexId>> edges,
               GraphOrigin origin, ObstacleKind setting, int cone_count = 0,
               std::vector<Selection> selections = {});

  std::size_t vertex_count() const { return adjacency_.size(); }
  std::size_t edge_count() const { return edges_.size(); }

  std::span<const Neighbor> neighbors(VertexId v) const { return adjacency_[v]; }
  bool has_edge(VertexId u, VertexId v) const;

  /// Undirected edges as (min, max) pairs, sorted.
  std::span<const std::pair<VertexId, VertexId>> edges() const { return edges_; }

  std::span<const Selection> selections() const { return selections_; }

  /// Selections made by `apex` inside cone `cone`, in subcone order.
  std::span<const Selection> selections_of(VertexId apex, ConeIndex cone) const;

  GraphOrigin origin() const { return origin_; }
  ObstacleKind setting() const { return setting_; }
  int cone_count() const { return cone_count_; }

 private:
  std::vector<std::vector<Neighbor>> adjacency_;
  std::vector<std::pair<VertexId, VertexId>> edges_;
  std::vector<Selection> selections_;
  GraphOrigin origin_;
  ObstacleKind setting_;
  int cone_count_;
};

}  // namespace sweepline
