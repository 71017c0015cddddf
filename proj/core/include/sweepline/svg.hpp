#pragma once

#include <optional>
#include <string>

#include "sweepline/cones.hpp"
#include "sweepline/graph.hpp"
#include "sweepline/routing.hpp"
#include "sweepline/scene.hpp"

namespace sweepline {

struct SvgOptions {
  double size = 800.0;
  std::optional<RoutePath> route;
  /// Draws the k cone rays of this vertex and the sweeping line through each
  /// neighbour it selected.
  std::optional<VertexId> overlay_vertex;
  std::optional<SweepConfig> overlay_config;
};

/// Standalone SVG document: obstacles filled or drawn thick, edges as thin
/// lines, vertices as dots, the route highlighted.
std::string render_svg(const Scene& scene, const SpannerGraph& graph, const SvgOptions& options = {});

}  // namespace sweepline
