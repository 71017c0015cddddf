#include "sweepline/graph.hpp"

#include <algorithm>
#include <tuple>

#include "sweepline/error.hpp"

namespace sweepline {

SpannerGraph::SpannerGraph(std::span<const Point> points,
                           std::vector<std::pair<VertexId, VertexId>> edges, GraphOrigin origin,
                           ObstacleKind setting, int cone_count, std::vector<Selection> selections)
    : adjacency_(points.size()),
      selections_(std::move(selections)),
      origin_(origin),
      setting_(setting),
      cone_count_(cone_count) {
  for (auto& [u, v] : edges) {
    if (u >= points.size() || v >= points.size()) throw Error(Errc::BadIndex, "edge endpoint out of range");
    if (u == v) throw Error(Errc::BadIndex, "self loop");
    if (u > v) std::swap(u, v);
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  edges_ = std::move(edges);

  for (const auto& [u, v] : edges_) {
    const double w = distance(points[u], points[v]);
    adjacency_[u].push_back({v, w});
    adjacency_[v].push_back({u, w});
  }
  for (auto& adj : adjacency_) {
    std::sort(adj.begin(), adj.end(),
              [](const Neighbor& a, const Neighbor& b) { return a.vertex < b.vertex; });
  }
  std::sort(selections_.begin(), selections_.end(), [](const Selection& a, const Selection& b) {
    return std::tie(a.apex, a.cone, a.subcone) < std::tie(b.apex, b.cone, b.subcone);
  });
}

bool SpannerGraph::has_edge(VertexId u, VertexId v) const {
  if (u >= adjacency_.size()) return false;
  const auto& adj = adjacency_[u];
  auto it = std::lower_bound(adj.begin(), adj.end(), v,
                             [](const Neighbor& n, VertexId x) { return n.vertex < x; });
  return it != adj.end() && it->vertex == v;
}

std::span<const Selection> SpannerGraph::selections_of(VertexId apex, ConeIndex cone) const {
  auto lo = std::lower_bound(selections_.begin(), selections_.end(), std::pair(apex, cone),
                             [](const Selection& s, const std::pair<VertexId, ConeIndex>& key) {
                               return std::pair(s.apex, s.cone) < key;
                             });
  auto hi = lo;
  while (hi != selections_.end() && hi->apex == apex && hi->cone == cone) ++hi;
  return {lo, hi};
}

}  // namespace sweepline
