#pragma once

#include <string_view>
#include <utility>
#include <vector>

#include "sweepline/geometry.hpp"

namespace sweepline {

enum class ObstacleKind { None, Segments, Polygons };

std::string_view to_string(ObstacleKind kind) noexcept;

/// Obstacles refer to input vertices by index. Exactly one of the two lists
/// is meaningful, selected by `kind`.
struct ObstacleSet {
  ObstacleKind kind = ObstacleKind::None;
  std::vector<std::pair<VertexId, VertexId>> segments;
  std::vector<std::vector<VertexId>> polygons;

  static ObstacleSet none() { return {}; }
  static ObstacleSet from_segments(std::vector<std::pair<VertexId, VertexId>> s) {
    return {ObstacleKind::Segments, std::move(s), {}};
  }
  static ObstacleSet from_polygons(std::vector<std::vector<VertexId>> p) {
    return {ObstacleKind::Polygons, {}, std::move(p)};
  }

  friend bool operator==(const ObstacleSet&, const ObstacleSet&) = default;
};

}  // namespace sweepline
