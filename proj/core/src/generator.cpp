#include "sweepline/generator.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <string>

#include "sweepline/error.hpp"
#include "sweepline/predicates.hpp"

namespace sweepline {
namespace {

constexpr int kInstanceAttempts = 200;

struct Disk {
  Point center;
  double radius;
};

class Builder {
 public:
  explicit Builder(const GeneratorOptions& options) : opts_(options), rng_(options.seed) {}

  Instance make() {
    Instance inst;
    switch (opts_.kind) {
      case ObstacleKind::None:
        inst.points = free_points(opts_.n, {});
        break;
      case ObstacleKind::Segments:
        inst.points = free_points(opts_.n, {});
        inst.obstacles = ObstacleSet::from_segments(matching(inst.points));
        break;
      case ObstacleKind::Polygons:
        inst = polygons();
        break;
    }
    inst.meta = GeneratorMeta{opts_.seed, opts_.kind, opts_.density};
    normalize_to_unit_square(inst.points);
    return inst;
  }

 private:
  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }

  std::vector<Point> free_points(std::size_t count, const std::vector<Disk>& avoid) {
    std::vector<Point> pts;
    while (pts.size() < count) {
      const Point p{uniform(0.0, 1.0), uniform(0.0, 1.0)};
      const bool blocked = std::any_of(avoid.begin(), avoid.end(), [&](const Disk& d) {
        return distance(p, d.center) <= d.radius * 1.05;
      });
      if (!blocked) pts.push_back(p);
    }
    return pts;
  }

  std::vector<std::pair<VertexId, VertexId>> matching(const std::vector<Point>& pts) {
    const auto target = static_cast<std::size_t>(std::lround(opts_.density * static_cast<double>(pts.size())));
    if (2 * target > pts.size()) {
      throw Error(Errc::GenerationFailed, "segment density " + std::to_string(opts_.density) +
                                              " needs more than n/2 disjoint constraints");
    }
    std::vector<std::pair<VertexId, VertexId>> chosen;
    std::vector<bool> used(pts.size(), false);
    std::uniform_int_distribution<std::size_t> pick(0, pts.size() - 1);
    const std::size_t budget = 500 * (target + 1);
    for (std::size_t attempt = 0; chosen.size() < target && attempt < budget; ++attempt) {
      const VertexId a = pick(rng_);
      const VertexId b = pick(rng_);
      if (a == b || used[a] || used[b] || distance(pts[a], pts[b]) > 0.4) continue;
      const Segment s{pts[a], pts[b]};
      const bool crosses = std::any_of(chosen.begin(), chosen.end(), [&](const auto& c) {
        return properly_intersects(s, {pts[c.first], pts[c.second]});
      });
      if (crosses) continue;
      used[a] = used[b] = true;
      chosen.emplace_back(a, b);
    }
    if (chosen.size() < target) {
      throw Error(Errc::GenerationFailed, "could not place " + std::to_string(target) + " constraints");
    }
    return chosen;
  }

  Instance polygons() {
    std::size_t corners = static_cast<std::size_t>(std::lround(opts_.density * static_cast<double>(opts_.n)));
    if (opts_.density > 0.0 && opts_.n >= 3) corners = std::max<std::size_t>(corners, 3);
    corners = std::min(corners, opts_.n);

    std::vector<std::size_t> sizes;
    std::size_t rest = corners;
    while (rest >= 3) {
      std::size_t s = rest <= 5 ? rest : static_cast<std::size_t>(uniform(3.0, static_cast<double>(std::min<std::size_t>(5, rest - 3)) + 1.0));
      s = std::clamp<std::size_t>(s, 3, rest);
      sizes.push_back(s);
      rest -= s;
    }

    std::vector<Disk> disks;
    std::vector<std::vector<Point>> rings;
    for (std::size_t s : sizes) {
      bool placed = false;
      for (int attempt = 0; attempt < 2000 && !placed; ++attempt) {
        const double r = uniform(0.04, 0.1);
        const Disk d{{uniform(r, 1.0 - r), uniform(r, 1.0 - r)}, r};
        const bool overlaps = std::any_of(disks.begin(), disks.end(), [&](const Disk& o) {
          return distance(d.center, o.center) <= d.radius + o.radius + 0.02;
        });
        if (overlaps) continue;
        std::vector<double> angles;
        for (std::size_t i = 0; i < s; ++i) angles.push_back(uniform(0.0, 2.0 * std::numbers::pi));
        std::sort(angles.begin(), angles.end());
        // Reject slivers: every corner gap below pi keeps the polygon's interior non-degenerate.
        bool ok = true;
        for (std::size_t i = 0; i < s; ++i) {
          const double next = i + 1 < s ? angles[i + 1] : angles[0] + 2.0 * std::numbers::pi;
          if (next - angles[i] < 0.3 || next - angles[i] > 0.9 * std::numbers::pi) ok = false;
        }
        if (!ok) continue;
        std::vector<Point> ring;
        for (double a : angles) ring.push_back({d.center.x + r * std::cos(a), d.center.y + r * std::sin(a)});
        disks.push_back(d);
        rings.push_back(std::move(ring));
        placed = true;
      }
      if (!placed) {
        throw Error(Errc::GenerationFailed, "could not place " + std::to_string(sizes.size()) +
                                                " disjoint polygons");
      }
    }

    Instance inst;
    inst.points = free_points(opts_.n - (corners - rest), disks);
    std::vector<std::vector<VertexId>> polys;
    for (const auto& ring : rings) {
      std::vector<VertexId> ids;
      for (const Point& p : ring) {
        ids.push_back(inst.points.size());
        inst.points.push_back(p);
      }
      polys.push_back(std::move(ids));
    }
    inst.obstacles = ObstacleSet::from_polygons(std::move(polys));
    return inst;
  }

  const GeneratorOptions& opts_;
  std::mt19937_64 rng_;
};

}  // namespace

Instance generate_instance(const GeneratorOptions& options) {
  if (options.n < 2) throw Error(Errc::TooFewPoints, "n = " + std::to_string(options.n) + " (need n >= 2)");
  if (!(options.density >= 0.0)) throw Error(Errc::GenerationFailed, "density must be non-negative");

  Builder builder(options);
  for (int attempt = 0; attempt < kInstanceAttempts; ++attempt) {
    Instance inst = builder.make();
    try {
      validate_instance(inst, options.config);
      return inst;
    } catch (const Error& e) {
      if (e.code() != Errc::InvalidInstance) throw;
    }
  }
  throw Error(Errc::GenerationFailed, "no instance in general position after " +
                                          std::to_string(kInstanceAttempts) + " attempts");
}

}  // namespace sweepline
