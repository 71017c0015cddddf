#include "sweepline/analysis.hpp"

#include <cmath>
#include <functional>
#include <limits>
#include <queue>

#include "sweepline/error.hpp"
#include "sweepline/visibility.hpp"

namespace sweepline {

std::string_view to_string(Baseline baseline) noexcept {
  return baseline == Baseline::Euclidean ? "euclidean" : "visibility";
}

std::vector<double> shortest_path_lengths(const SpannerGraph& graph, VertexId source) {
  const std::size_t n = graph.vertex_count();
  if (source >= n) throw Error(Errc::BadIndex, "source out of range");
  std::vector<double> dist(n, std::numeric_limits<double>::infinity());
  using Entry = std::pair<double, VertexId>;
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> queue;
  dist[source] = 0.0;
  queue.emplace(0.0, source);
  while (!queue.empty()) {
    const auto [d, u] = queue.top();
    queue.pop();
    if (d > dist[u]) continue;
    for (const Neighbor& nb : graph.neighbors(u)) {
      const double candidate = d + nb.weight;
      if (candidate < dist[nb.vertex]) {
        dist[nb.vertex] = candidate;
        queue.emplace(candidate, nb.vertex);
      }
    }
  }
  return dist;
}

namespace {

void record(double ratio, VertexId u, VertexId v, double& best, std::pair<VertexId, VertexId>& at) {
  if (ratio > best) {
    best = ratio;
    at = {u, v};
  }
}

StretchReport measure(const SpannerGraph& graph, const SpannerGraph* visibility,
                      const Scene& scene, const SweepConfig& config, Baseline baseline) {
  const std::size_t n = scene.size();
  if (graph.vertex_count() != n) throw Error(Errc::BadIndex, "graph and scene sizes differ");

  StretchReport report;
  report.baseline = baseline;
  report.theoretical_bound = config.stretch_bound();
  for (VertexId u = 0; u < n; ++u) {
    const auto dist = shortest_path_lengths(graph, u);
    std::vector<double> base;
    if (visibility) base = shortest_path_lengths(*visibility, u);
    for (VertexId v = u + 1; v < n; ++v) {
      const double direct = distance(scene.point(u), scene.point(v));
      if (!visibility) {
        ++report.per_pair_count;
        ++report.direct_pair_count;
        record(dist[v] / direct, u, v, report.max_stretch, report.witness);
        record(dist[v] / direct, u, v, report.max_direct_stretch, report.direct_witness);
        continue;
      }
      if (std::isinf(base[v])) continue;
      ++report.per_pair_count;
      record(dist[v] / base[v], u, v, report.max_stretch, report.witness);
      if (visibility->has_edge(u, v)) {
        ++report.direct_pair_count;
        record(dist[v] / direct, u, v, report.max_direct_stretch, report.direct_witness);
      }
    }
  }
  const double limit = report.theoretical_bound + kTolerance;
  report.pass = report.max_stretch <= limit && report.max_direct_stretch <= limit;
  return report;
}

}  // namespace

StretchReport stretch_report(const SpannerGraph& graph, const Scene& scene,
                             const SweepConfig& config, Baseline baseline) {
  if (baseline == Baseline::Euclidean) {
    if (scene.kind() != ObstacleKind::None) {
      throw Error(Errc::BadBaseline, "euclidean baseline needs an obstacle-free instance");
    }
    return measure(graph, nullptr, scene, config, baseline);
  }
  const SpannerGraph vis = visibility_graph(scene);
  return measure(graph, &vis, scene, config, baseline);
}

StretchReport stretch_report(const SpannerGraph& graph, const SpannerGraph& visibility,
                             const Scene& scene, const SweepConfig& config) {
  if (visibility.origin() != GraphOrigin::Visibility || visibility.vertex_count() != scene.size()) {
    throw Error(Errc::BadBaseline, "baseline graph is not this scene's visibility graph");
  }
  return measure(graph, &visibility, scene, config, Baseline::Visibility);
}

bool contraction_check(const Point& p, const Point& q, const Point& r, const SweepConfig& config) {
  if (q == p) throw Error(Errc::BadTriple, "q coincides with p");
  if (r == p) return true;
  const ConeIndex cone = cone_of(p, q, config);
  if (cone_of(p, r, config) != cone) throw Error(Errc::BadTriple, "q and r lie in different cones");
  if (sweep_key(p, r, cone, config) > sweep_key(p, q, cone, config)) {
    throw Error(Errc::BadTriple, "r is beyond q along the sweep");
  }
  return distance(r, q) <= distance(p, q) - config.contraction() * distance(p, r) + kTolerance;
}

}  // namespace sweepline
