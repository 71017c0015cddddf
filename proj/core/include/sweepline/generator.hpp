#pragma once

#include <cstdint>
#include <optional>

#include "sweepline/cones.hpp"
#include "sweepline/instance.hpp"

namespace sweepline {

struct GeneratorOptions {
  std::size_t n = 50;
  std::uint64_t seed = 0;
  ObstacleKind kind = ObstacleKind::None;
  /// segments: constraints per point (a matching, so at most 0.5).
  /// polygons: fraction of the n points used as polygon corners.
  double density = 0.0;
  /// When set, general position is also enforced against its rays and sweep lines.
  std::optional<SweepConfig> config;
};

/// Uniform random points in the unit square, resampled until in general
/// position, plus random obstacles of the requested kind. Deterministic in
/// the options. Throws TooFewPoints for n < 2, GenerationFailed when the
/// density cannot be met.
Instance generate_instance(const GeneratorOptions& options);

}  // namespace sweepline
