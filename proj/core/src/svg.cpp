#include "sweepline/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <string>

#include "sweepline/error.hpp"

namespace sweepline {
namespace {

class Canvas {
 public:
  Canvas(std::span<const Point> points, double size) : size_(size) {
    if (points.empty()) return;
    min_ = max_ = points[0];
    for (const Point& p : points) {
      min_ = {std::min(min_.x, p.x), std::min(min_.y, p.y)};
      max_ = {std::max(max_.x, p.x), std::max(max_.y, p.y)};
    }
    const double extent = std::max(max_.x - min_.x, max_.y - min_.y);
    scale_ = extent > 0.0 ? (size_ - 2.0 * kPad) / extent : 1.0;
  }

  std::string xy(const Point& p) const {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.3f,%.3f", kPad + (p.x - min_.x) * scale_,
                  size_ - kPad - (p.y - min_.y) * scale_);
    return buf;
  }

  std::string line(const Point& a, const Point& b, const char* cls) const {
    const std::string pa = xy(a);
    const std::string pb = xy(b);
    const auto ca = pa.find(',');
    const auto cb = pb.find(',');
    return std::string("<line class=\"") + cls + "\" x1=\"" + pa.substr(0, ca) + "\" y1=\"" +
           pa.substr(ca + 1) + "\" x2=\"" + pb.substr(0, cb) + "\" y2=\"" + pb.substr(cb + 1) + "\"/>\n";
  }

  double size() const { return size_; }

 private:
  static constexpr double kPad = 20.0;
  double size_;
  Point min_{};
  Point max_{};
  double scale_ = 1.0;
};

}  // namespace

std::string render_svg(const Scene& scene, const SpannerGraph& graph, const SvgOptions& options) {
  const Canvas canvas(scene.points(), options.size);
  char header[256];
  std::snprintf(header, sizeof header,
                "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"%.0f\" height=\"%.0f\" "
                "viewBox=\"0 0 %.0f %.0f\">\n",
                canvas.size(), canvas.size(), canvas.size(), canvas.size());
  std::string out = "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += header;
  out +=
      "<style>.edge{stroke:#555;stroke-width:1}.constraint{stroke:#c0392b;stroke-width:4}"
      ".obstacle{fill:#e8b4ae;stroke:#c0392b;stroke-width:2}.route{fill:none;stroke:#2471a3;"
      "stroke-width:3}.vertex{fill:#000}.ray{stroke:#888;stroke-dasharray:4 3}"
      ".sweep{stroke:#27ae60;stroke-width:2}</style>\n";
  out += "<rect width=\"100%\" height=\"100%\" fill=\"#fff\"/>\n";

  out += "<g id=\"obstacles\">\n";
  for (const auto& poly : scene.obstacles().polygons) {
    out += "<polygon class=\"obstacle\" points=\"";
    for (std::size_t i = 0; i < poly.size(); ++i) {
      if (i) out += ' ';
      out += canvas.xy(scene.point(poly[i]));
    }
    out += "\"/>\n";
  }
  for (const auto& [a, b] : scene.obstacles().segments) {
    out += canvas.line(scene.point(a), scene.point(b), "constraint");
  }
  out += "</g>\n<g id=\"edges\">\n";
  for (const auto& [u, v] : graph.edges()) out += canvas.line(scene.point(u), scene.point(v), "edge");
  out += "</g>\n";

  if (options.route && !options.route->vertices.empty()) {
    out += "<polyline class=\"route\" points=\"";
    for (std::size_t i = 0; i < options.route->vertices.size(); ++i) {
      if (i) out += ' ';
      out += canvas.xy(scene.point(options.route->vertices[i]));
    }
    out += "\"/>\n";
  }

  if (options.overlay_vertex && options.overlay_config) {
    const VertexId u = *options.overlay_vertex;
    scene.check_index(u);
    const SweepConfig& config = *options.overlay_config;
    const Point& apex = scene.point(u);
    out += "<g id=\"overlay\">\n";
    for (int i = 0; i < config.k(); ++i) out += canvas.line(apex, apex + 2.0 * config.ray(i), "ray");
    // Sweeping line through each selected neighbour, clipped to its cone.
    const double left_scale = std::cos(config.theta() / 2.0 - config.gamma());
    const double right_scale = std::cos(config.theta() / 2.0 + config.gamma());
    for (const Selection& s : graph.selections()) {
      if (s.apex != u) continue;
      const double key = dot(config.sweep_normal(s.cone), scene.point(s.target) - apex);
      out += canvas.line(apex + (key / left_scale) * config.ray(s.cone + 1),
                         apex + (key / right_scale) * config.ray(s.cone), "sweep");
    }
    out += "</g>\n";
  }

  out += "<g id=\"vertices\">\n";
  for (VertexId v = 0; v < scene.size(); ++v) {
    const std::string p = canvas.xy(scene.point(v));
    const auto c = p.find(',');
    out += "<circle class=\"vertex\" cx=\"" + p.substr(0, c) + "\" cy=\"" + p.substr(c + 1) +
           "\" r=\"3\"><title>" + std::to_string(v) + "</title></circle>\n";
  }
  out += "</g>\n</svg>\n";
  return out;
}

}  // namespace sweepline
