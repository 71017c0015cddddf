#pragma once

#include <optional>

#include "sweepline/cones.hpp"
#include "sweepline/graph.hpp"
#include "sweepline/scene.hpp"
#include "sweepline/visibility.hpp"

namespace sweepline {

/// The visible member of subcone `j` of `partition` minimizing sweep_key
/// (measured against the original cone's left boundary); ties go to the
/// lower vertex index. Empty when no member is visible.
std::optional<VertexId> closest_in_subcone(const Scene& scene, const SubconePartition& partition,
                                           std::size_t j, const SweepConfig& config);

/// Sweep line graph: for every vertex and every (sub)cone with a visible
/// vertex, the edge to the closest one. Works for all three obstacle kinds.
SpannerGraph build(const Scene& scene, const SweepConfig& config);

}  // namespace sweepline
