#include "sweepline/scene.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>
#include <string>

#include "sweepline/error.hpp"
#include "sweepline/predicates.hpp"

namespace sweepline {

std::string_view to_string(ObstacleKind kind) noexcept {
  switch (kind) {
    case ObstacleKind::None: return "none";
    case ObstacleKind::Segments: return "segments";
    case ObstacleKind::Polygons: return "polygons";
  }
  return "none";
}

namespace {

[[noreturn]] void invalid(const std::string& what) { throw Error(Errc::InvalidInstance, what); }

std::string pair_name(VertexId a, VertexId b) {
  return "(" + std::to_string(a) + "," + std::to_string(b) + ")";
}

}  // namespace

std::optional<std::size_t> find_collinear_triple(std::span<const Point> points) {
  const std::size_t n = points.size();
  constexpr double kWindow = 1e-9;
  std::vector<std::pair<double, std::size_t>> dirs;
  dirs.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    dirs.clear();
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i) continue;
      double a = std::atan2(points[j].y - points[i].y, points[j].x - points[i].x);
      if (a < 0.0) a += std::numbers::pi;
      if (a >= std::numbers::pi) a -= std::numbers::pi;
      dirs.emplace_back(a, j);
    }
    std::sort(dirs.begin(), dirs.end());
    // Candidates for a shared line through i have nearly equal angles modulo pi;
    // confirm each with the exact predicate.
    for (std::size_t s = 0; s < dirs.size(); ++s) {
      for (std::size_t t = s + 1; t < dirs.size() && dirs[t].first - dirs[s].first < kWindow; ++t) {
        if (orientation(points[i], points[dirs[s].second], points[dirs[t].second]) ==
            Orientation::Collinear) {
          return i;
        }
      }
    }
    for (std::size_t s = 0; s < dirs.size() && dirs[s].first < kWindow; ++s) {
      for (std::size_t t = dirs.size(); t-- > s + 1 && dirs[t].first > std::numbers::pi - kWindow;) {
        if (orientation(points[i], points[dirs[s].second], points[dirs[t].second]) ==
            Orientation::Collinear) {
          return i;
        }
      }
    }
  }
  return std::nullopt;
}

Scene::Scene(std::vector<Point> points, ObstacleSet obstacles)
    : points_(std::move(points)),
      obstacles_(std::move(obstacles)),
      constraint_adj_(points_.size()),
      corners_(points_.size()) {
  validate_points();
  switch (obstacles_.kind) {
    case ObstacleKind::None:
      if (!obstacles_.segments.empty() || !obstacles_.polygons.empty()) {
        invalid("obstacle kind none but obstacle lists are non-empty");
      }
      break;
    case ObstacleKind::Segments:
      if (!obstacles_.polygons.empty()) invalid("mixed obstacle kinds");
      index_segments();
      break;
    case ObstacleKind::Polygons:
      if (!obstacles_.segments.empty()) invalid("mixed obstacle kinds");
      index_polygons();
      break;
  }
}

void Scene::check_index(VertexId v) const {
  if (v >= points_.size()) {
    throw Error(Errc::BadIndex, "vertex " + std::to_string(v) + " out of range (n = " +
                                    std::to_string(points_.size()) + ")");
  }
}

bool Scene::is_constraint(VertexId u, VertexId v) const {
  const auto& adj = constraint_adj_[u];
  return std::binary_search(adj.begin(), adj.end(), v);
}

void Scene::validate_points() const {
  for (std::size_t i = 0; i < points_.size(); ++i) {
    if (!std::isfinite(points_[i].x) || !std::isfinite(points_[i].y)) {
      invalid("point " + std::to_string(i) + " has a non-finite coordinate");
    }
  }
  std::vector<std::size_t> order(points_.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return std::pair(points_[a].x, points_[a].y) < std::pair(points_[b].x, points_[b].y);
  });
  for (std::size_t i = 1; i < order.size(); ++i) {
    if (points_[order[i]] == points_[order[i - 1]]) {
      invalid("points " + std::to_string(order[i - 1]) + " and " + std::to_string(order[i]) +
              " coincide");
    }
  }
  if (auto bad = find_collinear_triple(points_)) {
    invalid("point " + std::to_string(*bad) + " is part of a collinear triple");
  }
}

void Scene::index_segments() {
  std::set<std::pair<VertexId, VertexId>> seen;
  for (const auto& [a, b] : obstacles_.segments) {
    check_index(a);
    check_index(b);
    if (a == b) invalid("constraint " + pair_name(a, b) + " is degenerate");
    if (!seen.emplace(std::min(a, b), std::max(a, b)).second) {
      invalid("constraint " + pair_name(a, b) + " is repeated");
    }
    constraint_adj_[a].push_back(b);
    constraint_adj_[b].push_back(a);
    edges_.emplace_back(a, b);
  }
  for (auto& adj : constraint_adj_) std::sort(adj.begin(), adj.end());
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    const Segment si{points_[edges_[i].first], points_[edges_[i].second]};
    for (std::size_t j = i + 1; j < edges_.size(); ++j) {
      const Segment sj{points_[edges_[j].first], points_[edges_[j].second]};
      if (properly_intersects(si, sj)) {
        invalid("constraints " + pair_name(edges_[i].first, edges_[i].second) + " and " +
                pair_name(edges_[j].first, edges_[j].second) + " cross");
      }
    }
  }
}

void Scene::index_polygons() {
  const auto& polygons = obstacles_.polygons;
  std::vector<std::vector<Point>> rings;
  for (std::size_t p = 0; p < polygons.size(); ++p) {
    const auto& poly = polygons[p];
    if (poly.size() < 3) invalid("polygon " + std::to_string(p) + " has fewer than 3 corners");
    std::vector<Point> ring;
    double area2 = 0.0;
    for (std::size_t i = 0; i < poly.size(); ++i) {
      check_index(poly[i]);
      if (corners_[poly[i]]) {
        invalid("vertex " + std::to_string(poly[i]) + " appears in more than one polygon corner");
      }
      corners_[poly[i]] = PolygonCorner{p, 0, 0};
      ring.push_back(points_[poly[i]]);
    }
    for (std::size_t i = 0; i < ring.size(); ++i) {
      const Point& a = ring[i];
      const Point& b = ring[(i + 1) % ring.size()];
      area2 += a.x * b.y - a.y * b.x;
    }
    const bool ccw = area2 > 0.0;
    for (std::size_t i = 0; i < poly.size(); ++i) {
      const VertexId prev = poly[(i + poly.size() - 1) % poly.size()];
      const VertexId next = poly[(i + 1) % poly.size()];
      auto& corner = *corners_[poly[i]];
      corner.wedge_from = ccw ? next : prev;
      corner.wedge_to = ccw ? prev : next;
      edges_.emplace_back(poly[i], next);
    }
    rings.push_back(std::move(ring));
  }

  // Edges of all polygons must be pairwise non-crossing (same polygon:
  // simplicity; different polygons: disjointness). Under general position
  // any contact between non-adjacent edges is a proper intersection.
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    const auto [a, b] = edges_[i];
    for (std::size_t j = i + 1; j < edges_.size(); ++j) {
      const auto [c, d] = edges_[j];
      if (a == c || a == d || b == c || b == d) continue;
      if (properly_intersects({points_[a], points_[b]}, {points_[c], points_[d]})) {
        invalid("obstacle edges " + pair_name(a, b) + " and " + pair_name(c, d) + " intersect");
      }
    }
  }

  for (std::size_t v = 0; v < points_.size(); ++v) {
    for (std::size_t p = 0; p < rings.size(); ++p) {
      if (corners_[v] && corners_[v]->polygon == p) continue;
      if (point_in_polygon(points_[v], rings[p]) != Containment::Outside) {
        invalid("point " + std::to_string(v) + " lies inside polygon " + std::to_string(p));
      }
    }
  }
}

}  // namespace sweepline
