#include "sweepline/instance.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include <json.hpp>

#include "sweepline/error.hpp"

namespace sweepline {
namespace {

using nlohmann::json;

[[noreturn]] void malformed(const std::string& what) { throw Error(Errc::ParseError, what); }

VertexId parse_index(const json& j, const char* where) {
  if (!j.is_number_integer() || j.get<long long>() < 0) {
    malformed(std::string(where) + " must contain non-negative integer indices");
  }
  return static_cast<VertexId>(j.get<unsigned long long>());
}

ObstacleKind parse_kind(const std::string& s) {
  if (s == "none") return ObstacleKind::None;
  if (s == "segments") return ObstacleKind::Segments;
  if (s == "polygons") return ObstacleKind::Polygons;
  malformed("unknown obstacle kind '" + s + "'");
}

Instance from_json(const json& doc) {
  if (!doc.is_object()) malformed("instance must be a JSON object");
  if (!doc.contains("points") || !doc["points"].is_array()) malformed("missing \"points\" array");

  Instance inst;
  for (const auto& p : doc["points"]) {
    if (!p.is_array() || p.size() != 2 || !p[0].is_number() || !p[1].is_number()) {
      malformed("each point must be [x, y]");
    }
    inst.points.push_back({p[0].get<double>(), p[1].get<double>()});
  }

  const bool has_segments = doc.contains("segments");
  const bool has_polygons = doc.contains("polygons");
  if (has_segments && has_polygons) {
    throw Error(Errc::InvalidInstance, "both \"segments\" and \"polygons\" given; obstacle kinds cannot be mixed");
  }
  if (has_segments) {
    if (!doc["segments"].is_array()) malformed("\"segments\" must be an array");
    inst.obstacles.kind = ObstacleKind::Segments;
    for (const auto& s : doc["segments"]) {
      if (!s.is_array() || s.size() != 2) malformed("each segment must be [i, j]");
      inst.obstacles.segments.emplace_back(parse_index(s[0], "segments"), parse_index(s[1], "segments"));
    }
  }
  if (has_polygons) {
    if (!doc["polygons"].is_array()) malformed("\"polygons\" must be an array");
    inst.obstacles.kind = ObstacleKind::Polygons;
    for (const auto& poly : doc["polygons"]) {
      if (!poly.is_array()) malformed("each polygon must be an index array");
      std::vector<VertexId> ring;
      for (const auto& i : poly) ring.push_back(parse_index(i, "polygons"));
      inst.obstacles.polygons.push_back(std::move(ring));
    }
  }
  if (doc.contains("k")) {
    if (!doc["k"].is_number_integer()) malformed("\"k\" must be an integer");
    inst.k = doc["k"].get<int>();
  }
  if (doc.contains("gamma")) {
    if (!doc["gamma"].is_number()) malformed("\"gamma\" must be a number");
    inst.gamma = doc["gamma"].get<double>();
  }
  if (doc.contains("meta")) {
    const auto& m = doc["meta"];
    if (!m.is_object()) malformed("\"meta\" must be an object");
    GeneratorMeta meta;
    meta.seed = m.value("seed", std::uint64_t{0});
    meta.kind = parse_kind(m.value("kind", std::string("none")));
    meta.density = m.value("density", 0.0);
    inst.meta = meta;
  }
  return inst;
}

}  // namespace

void normalize_to_unit_square(std::vector<Point>& points) {
  if (points.empty()) return;
  double min_x = points[0].x, max_x = points[0].x, min_y = points[0].y, max_y = points[0].y;
  for (const Point& p : points) {
    min_x = std::min(min_x, p.x);
    max_x = std::max(max_x, p.x);
    min_y = std::min(min_y, p.y);
    max_y = std::max(max_y, p.y);
  }
  const double extent = std::max(max_x - min_x, max_y - min_y);
  if (!(extent > 0.0) || !std::isfinite(extent)) return;
  // Division (not multiplication by 1/extent) keeps already-normalized input fixed.
  for (Point& p : points) p = {(p.x - min_x) / extent, (p.y - min_y) / extent};
}

std::optional<std::string> general_position_violation(std::span<const Point> points,
                                                      const SweepConfig& config) {
  constexpr double kTol = 1e-12;
  std::vector<Point> directions;
  for (int i = 0; i < config.k(); ++i) {
    directions.push_back(config.ray(i));
    directions.push_back(config.sweep_direction(i));
  }
  for (std::size_t a = 0; a < points.size(); ++a) {
    for (std::size_t b = a + 1; b < points.size(); ++b) {
      const Point d = points[b] - points[a];
      for (std::size_t i = 0; i < directions.size(); ++i) {
        const Point& u = directions[i];
        if (std::abs(u.x * d.y - u.y * d.x) < kTol) {
          return "points " + std::to_string(a) + " and " + std::to_string(b) + " lie on a line parallel to " +
                 (i % 2 == 0 ? "cone ray " : "the sweeping line of cone ") + std::to_string(i / 2);
        }
      }
    }
  }
  return std::nullopt;
}

std::optional<SweepConfig> instance_config(const Instance& instance) {
  if (!instance.k) return std::nullopt;
  return validate_config(*instance.k, instance.gamma.value_or(0.0));
}

void validate_instance(const Instance& instance, const std::optional<SweepConfig>& config) {
  try {
    (void)instance.scene();
  } catch (const Error& e) {
    if (e.code() == Errc::BadIndex) throw Error(Errc::InvalidInstance, e.what());
    throw;
  }
  const auto effective = config ? config : instance_config(instance);
  if (effective) {
    if (auto why = general_position_violation(instance.points, *effective)) {
      throw Error(Errc::InvalidInstance, *why);
    }
  }
}

Instance parse_instance_raw(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw Error(Errc::ParseError, e.what());
  }
  Instance inst;
  try {
    inst = from_json(doc);
  } catch (const json::exception& e) {
    throw Error(Errc::ParseError, e.what());
  }
  normalize_to_unit_square(inst.points);
  return inst;
}

Instance parse_instance(std::string_view text, const std::optional<SweepConfig>& config) {
  Instance inst = parse_instance_raw(text);
  validate_instance(inst, config);
  return inst;
}

std::string serialize_instance(const Instance& instance) {
  json doc;
  doc["points"] = json::array();
  for (const Point& p : instance.points) doc["points"].push_back({p.x, p.y});
  if (instance.obstacles.kind == ObstacleKind::Segments) {
    doc["segments"] = json::array();
    for (const auto& [a, b] : instance.obstacles.segments) doc["segments"].push_back({a, b});
  } else if (instance.obstacles.kind == ObstacleKind::Polygons) {
    doc["polygons"] = instance.obstacles.polygons;
  }
  if (instance.k) doc["k"] = *instance.k;
  if (instance.gamma) doc["gamma"] = *instance.gamma;
  if (instance.meta) {
    doc["meta"] = {{"seed", instance.meta->seed},
                   {"kind", std::string(to_string(instance.meta->kind))},
                   {"density", instance.meta->density}};
  }
  return doc.dump() + "\n";
}

Instance perturb(const Instance& instance, double epsilon, std::uint64_t seed,
                 const std::optional<SweepConfig>& config) {
  Instance out = instance;
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> radius(0.0, epsilon);
  std::uniform_real_distribution<double> angle(0.0, 2.0 * std::acos(-1.0));
  for (Point& p : out.points) {
    const double r = radius(rng);
    const double a = angle(rng);
    p = {p.x + r * std::cos(a), p.y + r * std::sin(a)};
  }
  normalize_to_unit_square(out.points);
  validate_instance(out, config);
  return out;
}

}  // namespace sweepline
