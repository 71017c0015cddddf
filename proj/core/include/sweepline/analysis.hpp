#pragma once

#include <string_view>
#include <utility>
#include <vector>

#include "sweepline/cones.hpp"
#include "sweepline/graph.hpp"
#include "sweepline/scene.hpp"

namespace sweepline {

/// Absolute slack used by every bound comparison (coordinates live in the unit square).
inline constexpr double kTolerance = 1e-9;

/// Exact single-source shortest path lengths (Dijkstra); unreachable = +inf.
std::vector<double> shortest_path_lengths(const SpannerGraph& graph, VertexId source);

enum class Baseline { Euclidean, Visibility };

std::string_view to_string(Baseline baseline) noexcept;

struct StretchReport {
  Baseline baseline = Baseline::Euclidean;
  /// max over baseline-connected pairs of d_graph / d_baseline.
  double max_stretch = 1.0;
  std::pair<VertexId, VertexId> witness{0, 0};
  /// max over directly visible pairs of d_graph / |uv|.
  double max_direct_stretch = 1.0;
  std::pair<VertexId, VertexId> direct_witness{0, 0};
  double theoretical_bound = 0.0;
  std::size_t per_pair_count = 0;
  std::size_t direct_pair_count = 0;
  bool pass = false;
};

/// Measures the stretch of `graph` over every pair. The Euclidean baseline
/// is only meaningful (and only accepted) for unconstrained scenes; the
/// visibility baseline compares against shortest paths in the visibility
/// graph. Throws BadBaseline on a mismatch.
StretchReport stretch_report(const SpannerGraph& graph, const Scene& scene,
                             const SweepConfig& config, Baseline baseline);

/// Same, reusing a visibility graph that was already computed.
StretchReport stretch_report(const SpannerGraph& graph, const SpannerGraph& visibility,
                             const Scene& scene, const SweepConfig& config);

/// |rq| <= |pq| - (cos(theta/2 + gamma) - sin(theta)) |pr| within kTolerance.
/// Requires q, r in the same cone of p with r no farther along the sweep
/// than q (r == p is accepted); otherwise throws BadTriple.
bool contraction_check(const Point& p, const Point& q, const Point& r, const SweepConfig& config);

}  // namespace sweepline
