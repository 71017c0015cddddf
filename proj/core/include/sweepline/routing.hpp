#pragma once

#include <span>
#include <vector>

#include "sweepline/cones.hpp"
#include "sweepline/graph.hpp"

namespace sweepline {

struct RoutePath {
  std::vector<VertexId> vertices;
  double total_length = 0.0;
  std::size_t hop_count = 0;
};

/// Sweeping-routing from s to t on an unconstrained sweep line graph.
///
/// At each vertex u: take the edge to t if it exists, otherwise the edge u
/// selected in the cone of u containing t. The decision reads only u's own
/// edges and selections plus the coordinates of u, its neighbours and t.
///
/// Throws TrivialRoute if s == t, UnsupportedSetting for graphs that are not
/// unconstrained sweep line graphs built with this config, and RoutingStalled
/// if a hop ever fails to get strictly closer to t.
RoutePath sweeping_route(const SpannerGraph& graph, std::span<const Point> points,
                         const SweepConfig& config, VertexId s, VertexId t);

}  // namespace sweepline
