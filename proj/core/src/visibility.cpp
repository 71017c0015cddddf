#include "sweepline/visibility.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "sweepline/error.hpp"
#include "sweepline/predicates.hpp"

namespace sweepline {

Orientation compare_bearings(const Point& apex, const Bearing& a, const Bearing& b) {
  if (!a.is_vector && !b.is_vector) return orientation(apex, a.value, b.value);
  if (a.is_vector && !b.is_vector) return side_of_ray(apex, a.value, b.value);
  if (!a.is_vector && b.is_vector) {
    return static_cast<Orientation>(-static_cast<int>(side_of_ray(apex, b.value, a.value)));
  }
  return cross_sign(a.value, b.value);
}

namespace {

bool ccw_of(const Point& apex, const Bearing& a, const Bearing& b) {
  return compare_bearings(apex, a, b) == Orientation::CCW;
}

/// Open wedge swept counterclockwise from `from` to `to`.
bool in_open_wedge(const Point& apex, const Bearing& from, const Bearing& to, const Bearing& d) {
  if (ccw_of(apex, from, to)) return ccw_of(apex, from, d) && ccw_of(apex, d, to);
  // Reflex wedge: inside unless d lies in the closed convex complement [to, from].
  return !(compare_bearings(apex, to, d) != Orientation::CW &&
           compare_bearings(apex, d, from) != Orientation::CW);
}

bool in_subcone(const Point& apex, const Subcone& s, const Point& x) {
  const Bearing b = Bearing::toward(x);
  return compare_bearings(apex, s.lo, b) != Orientation::CW &&
         compare_bearings(apex, b, s.hi) != Orientation::CW;
}

double bearing_angle(const Point& apex, const Bearing& b, double lo, double hi) {
  const Point d = b.is_vector ? b.value : b.value - apex;
  double a = std::atan2(d.y, d.x);
  // Bring into [lo, hi] (the cone's angular range) modulo 2*pi.
  while (a < lo - 1e-12) a += 2.0 * std::numbers::pi;
  while (a > hi + 1e-12) a -= 2.0 * std::numbers::pi;
  return std::clamp(a, lo, hi);
}

/// True iff vertex w lies in cone i of u and not on its starting ray.
bool strictly_in_cone(const Scene& scene, VertexId u, VertexId w, ConeIndex i,
                      const SweepConfig& config) {
  const Point& apex = scene.point(u);
  return cone_of(apex, scene.point(w), config) == i &&
         side_of_ray(apex, config.ray(i), scene.point(w)) != Orientation::Collinear;
}

std::vector<Subcone> split_cone(const Scene& scene, VertexId u, ConeIndex i,
                                const SweepConfig& config) {
  const Point& apex = scene.point(u);
  const Bearing start = Bearing::along(config.ray(i));
  const Bearing end = Bearing::along(config.ray(i + 1));
  const double lo = i * config.theta();
  const double hi = (i + 1) * config.theta();
  auto make = [&](const Bearing& a, const Bearing& b) {
    return Subcone{a, b, bearing_angle(apex, a, lo, hi), bearing_angle(apex, b, lo, hi)};
  };

  std::vector<Subcone> out;
  switch (scene.kind()) {
    case ObstacleKind::None:
      out.push_back(make(start, end));
      break;

    case ObstacleKind::Segments: {
      std::vector<VertexId> splits;
      for (VertexId w : scene.constraint_neighbors(u)) {
        if (strictly_in_cone(scene, u, w, i, config)) splits.push_back(w);
      }
      std::sort(splits.begin(), splits.end(), [&](VertexId a, VertexId b) {
        return orientation(apex, scene.point(a), scene.point(b)) == Orientation::CCW;
      });
      Bearing prev = start;
      for (VertexId w : splits) {
        const Bearing ray = Bearing::toward(scene.point(w));
        out.push_back(make(prev, ray));
        prev = ray;
      }
      out.push_back(make(prev, end));
      break;
    }

    case ObstacleKind::Polygons: {
      const auto& corner = scene.corner(u);
      if (!corner) {
        out.push_back(make(start, end));
        break;
      }
      const Bearing from = Bearing::toward(scene.point(corner->wedge_from));
      const Bearing to = Bearing::toward(scene.point(corner->wedge_to));
      const bool from_inside = strictly_in_cone(scene, u, corner->wedge_from, i, config);
      const bool to_inside = strictly_in_cone(scene, u, corner->wedge_to, i, config);
      if (from_inside && to_inside) {
        if (ccw_of(apex, from, to)) {
          out.push_back(make(start, from));
          out.push_back(make(to, end));
        } else {
          out.push_back(make(to, from));
        }
      } else if (from_inside) {
        out.push_back(make(start, from));
      } else if (to_inside) {
        out.push_back(make(to, end));
      } else {
        const Bearing bisector = Bearing::along(config.ray(i) + config.ray(i + 1));
        if (!in_open_wedge(apex, from, to, bisector)) out.push_back(make(start, end));
      }
      break;
    }
  }
  return out;
}

}  // namespace

bool is_visible(const Scene& scene, VertexId u, VertexId v) {
  scene.check_index(u);
  scene.check_index(v);
  if (u == v) throw Error(Errc::DegenerateDirection, "visibility of a vertex with itself");
  if (scene.kind() == ObstacleKind::None) return true;
  if (scene.kind() == ObstacleKind::Segments && scene.is_constraint(u, v)) return true;

  const Segment uv{scene.point(u), scene.point(v)};
  for (const auto& [a, b] : scene.obstacle_edges()) {
    if (properly_intersects(uv, {scene.point(a), scene.point(b)})) return false;
  }
  if (scene.kind() == ObstacleKind::Polygons) {
    const auto& cu = scene.corner(u);
    const auto& cv = scene.corner(v);
    if (cu && cv && cu->polygon == cv->polygon && v != cu->wedge_from && v != cu->wedge_to) {
      // A chord between corners of one polygon with no crossings lies
      // entirely inside or outside it; the wedge at u tells which.
      return !in_open_wedge(scene.point(u), Bearing::toward(scene.point(cu->wedge_from)),
                            Bearing::toward(scene.point(cu->wedge_to)),
                            Bearing::toward(scene.point(v)));
    }
  }
  return true;
}

SpannerGraph visibility_graph(const Scene& scene) {
  std::vector<std::pair<VertexId, VertexId>> edges;
  for (VertexId u = 0; u < scene.size(); ++u) {
    for (VertexId v = u + 1; v < scene.size(); ++v) {
      if (is_visible(scene, u, v)) edges.emplace_back(u, v);
    }
  }
  return SpannerGraph(scene.points(), std::move(edges), GraphOrigin::Visibility, scene.kind());
}

std::vector<SubconePartition> subcone_partitions(const Scene& scene, VertexId u,
                                                 const SweepConfig& config) {
  scene.check_index(u);
  const Point& apex = scene.point(u);
  std::vector<SubconePartition> parts;
  parts.reserve(static_cast<std::size_t>(config.k()));
  for (ConeIndex i = 0; i < config.k(); ++i) {
    SubconePartition p{u, i, split_cone(scene, u, i, config), {}};
    p.members.resize(p.subcones.size());
    parts.push_back(std::move(p));
  }
  for (VertexId v = 0; v < scene.size(); ++v) {
    if (v == u) continue;
    auto& part = parts[static_cast<std::size_t>(cone_of(apex, scene.point(v), config))];
    for (std::size_t j = 0; j < part.subcones.size(); ++j) {
      if (in_subcone(apex, part.subcones[j], scene.point(v))) part.members[j].push_back(v);
    }
  }
  return parts;
}

SubconePartition subcones(const Scene& scene, VertexId u, ConeIndex cone, const SweepConfig& config) {
  if (cone < 0 || cone >= config.k()) {
    throw Error(Errc::BadIndex, "cone " + std::to_string(cone) + " out of range");
  }
  auto parts = subcone_partitions(scene, u, config);
  return std::move(parts[static_cast<std::size_t>(cone)]);
}

}  // namespace sweepline
