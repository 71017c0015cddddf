#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sweepline/cones.hpp"
#include "sweepline/obstacles.hpp"
#include "sweepline/scene.hpp"

namespace sweepline {

/// Parameters an instance was generated with, carried along for provenance.
struct GeneratorMeta {
  std::uint64_t seed = 0;
  ObstacleKind kind = ObstacleKind::None;
  double density = 0.0;

  friend bool operator==(const GeneratorMeta&, const GeneratorMeta&) = default;
};

/// An input problem as read from or written to the JSON instance format:
///
///   {"points": [[x, y], ...],
///    "segments": [[i, j], ...],        (optional)
///    "polygons": [[i1, ..., im], ...], (optional, never together with segments)
///    "k": int, "gamma": real,          (optional)
///    "meta": {"seed": int, "kind": str, "density": real}}  (optional)
struct Instance {
  std::vector<Point> points;
  ObstacleSet obstacles;
  std::optional<int> k;
  std::optional<double> gamma;
  std::optional<GeneratorMeta> meta;

  Scene scene() const { return Scene(points, obstacles); }

  friend bool operator==(const Instance&, const Instance&) = default;
};

/// Parses, normalizes to the unit square and validates. General position is
/// checked against `config` when given, else against the instance's own
/// k/gamma when present. Throws ParseError for malformed input and
/// InvalidInstance naming the first offending element.
Instance parse_instance(std::string_view text, const std::optional<SweepConfig>& config = {});

/// Parses and normalizes without validating; pair with perturb() to repair
/// degenerate input.
Instance parse_instance_raw(std::string_view text);

std::string serialize_instance(const Instance& instance);

/// Translates and uniformly scales so the bounding box's longer side is [0, 1].
void normalize_to_unit_square(std::vector<Point>& points);

/// First pair of points lying (within 1e-12) on a line parallel to a cone
/// ray or to a sweeping line of `config`.
std::optional<std::string> general_position_violation(std::span<const Point> points,
                                                      const SweepConfig& config);

/// Builds the scene and checks general position; throws InvalidInstance.
void validate_instance(const Instance& instance, const std::optional<SweepConfig>& config = {});

/// Jitters every point by at most `epsilon` (deterministic in `seed`),
/// re-normalizes and re-validates.
Instance perturb(const Instance& instance, double epsilon, std::uint64_t seed,
                 const std::optional<SweepConfig>& config = {});

/// The config named by the instance itself (k, gamma defaulting to 0), if any.
std::optional<SweepConfig> instance_config(const Instance& instance);

}  // namespace sweepline
