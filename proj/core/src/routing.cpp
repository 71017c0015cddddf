#include "sweepline/routing.hpp"

#include <string>

#include "sweepline/error.hpp"

namespace sweepline {

RoutePath sweeping_route(const SpannerGraph& graph, std::span<const Point> points,
                         const SweepConfig& config, VertexId s, VertexId t) {
  const std::size_t n = graph.vertex_count();
  if (s >= n || t >= n || points.size() != n) throw Error(Errc::BadIndex, "route endpoint out of range");
  if (s == t) throw Error(Errc::TrivialRoute, "source equals target");
  if (graph.origin() != GraphOrigin::SweepLine || graph.setting() != ObstacleKind::None) {
    throw Error(Errc::UnsupportedSetting, "routing needs an unconstrained sweep line graph");
  }
  if (graph.cone_count() != config.k()) {
    throw Error(Errc::UnsupportedSetting, "graph was built with k = " +
                                              std::to_string(graph.cone_count()) + ", not " +
                                              std::to_string(config.k()));
  }

  RoutePath path;
  path.vertices.push_back(s);
  VertexId u = s;
  const Point& target = points[t];
  while (u != t) {
    if (path.hop_count >= n) {
      throw Error(Errc::RoutingStalled, "hop cap reached routing " + std::to_string(s) + " -> " +
                                            std::to_string(t));
    }
    VertexId next = t;
    if (!graph.has_edge(u, t)) {
      const auto chosen = graph.selections_of(u, cone_of(points[u], target, config));
      if (chosen.empty()) {
        throw Error(Errc::RoutingStalled, "vertex " + std::to_string(u) +
                                              " has no edge in the cone toward the target");
      }
      next = chosen.front().target;
    }
    if (!(distance(points[next], target) < distance(points[u], target))) {
      throw Error(Errc::RoutingStalled, "hop " + std::to_string(u) + " -> " +
                                            std::to_string(next) + " does not approach the target");
    }
    path.total_length += distance(points[u], points[next]);
    path.vertices.push_back(next);
    ++path.hop_count;
    u = next;
  }
  return path;
}

}  // namespace sweepline
