#include "sweepline/spanner.hpp"

#include <algorithm>
#include <string>
#include <tuple>

#include "sweepline/error.hpp"

namespace sweepline {

std::optional<VertexId> closest_in_subcone(const Scene& scene, const SubconePartition& partition,
                                           std::size_t j, const SweepConfig& config) {
  if (j >= partition.members.size()) {
    throw Error(Errc::BadIndex, "subcone " + std::to_string(j) + " out of range");
  }
  const VertexId u = partition.apex;
  const Point& apex = scene.point(u);
  const Point& normal = config.sweep_normal(partition.cone);

  std::vector<std::pair<double, VertexId>> order;
  order.reserve(partition.members[j].size());
  for (VertexId v : partition.members[j]) order.emplace_back(dot(normal, scene.point(v) - apex), v);
  std::sort(order.begin(), order.end());

  // Nearest first, so the first visible candidate wins.
  for (const auto& [key, v] : order) {
    if (is_visible(scene, u, v)) return v;
  }
  return std::nullopt;
}

SpannerGraph build(const Scene& scene, const SweepConfig& config) {
  std::vector<Selection> selections;
  std::vector<std::pair<VertexId, VertexId>> edges;
  for (VertexId u = 0; u < scene.size(); ++u) {
    for (const auto& part : subcone_partitions(scene, u, config)) {
      for (std::size_t j = 0; j < part.subcones.size(); ++j) {
        if (auto r = closest_in_subcone(scene, part, j, config)) {
          selections.push_back({u, part.cone, j, *r});
          edges.emplace_back(u, *r);
        }
      }
    }
  }
  return SpannerGraph(scene.points(), std::move(edges), GraphOrigin::SweepLine, scene.kind(),
                      config.k(), std::move(selections));
}

}  // namespace sweepline
