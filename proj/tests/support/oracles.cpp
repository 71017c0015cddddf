#include "oracles.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <limits>
#include <numbers>

#include <boost/multiprecision/cpp_int.hpp>

namespace sweepline::oracle {

EdgeSet edge_set(const SpannerGraph& graph) {
  return EdgeSet(graph.edges().begin(), graph.edges().end());
}

int exact_orientation(const Point& a, const Point& b, const Point& c) {
  using boost::multiprecision::cpp_rational;
  const cpp_rational det = (cpp_rational(b.x) - cpp_rational(a.x)) * (cpp_rational(c.y) - cpp_rational(a.y)) -
                           (cpp_rational(b.y) - cpp_rational(a.y)) * (cpp_rational(c.x) - cpp_rational(a.x));
  return det.sign();
}

bool parametric_proper_intersection(const Segment& s1, const Segment& s2) {
  constexpr double eps = 1e-12;
  const Point r = s1.b - s1.a;
  const Point s = s2.b - s2.a;
  const Point qp = s2.a - s1.a;
  const double denom = r.x * s.y - r.y * s.x;
  auto same = [](const Point& a, const Point& b) { return a == b; };
  if ((same(s1.a, s2.a) && same(s1.b, s2.b)) || (same(s1.a, s2.b) && same(s1.b, s2.a))) return false;
  if (std::abs(denom) < eps) {
    // Parallel: only collinear overlaps beyond a shared endpoint count.
    if (std::abs(qp.x * r.y - qp.y * r.x) > eps) return false;
    const double rr = r.x * r.x + r.y * r.y;
    double t0 = (qp.x * r.x + qp.y * r.y) / rr;
    double t1 = t0 + (s.x * r.x + s.y * r.y) / rr;
    if (t0 > t1) std::swap(t0, t1);
    return std::min(t1, 1.0) - std::max(t0, 0.0) > eps;
  }
  const double t = (qp.x * s.y - qp.y * s.x) / denom;  // along s1
  const double u = (qp.x * r.y - qp.y * r.x) / denom;  // along s2
  if (t < -eps || t > 1 + eps || u < -eps || u > 1 + eps) return false;
  const bool t_end = t < eps || t > 1 - eps;
  const bool u_end = u < eps || u > 1 - eps;
  return !(t_end && u_end);
}

namespace {

double segment_distance(const Point& p, const Point& a, const Point& b) {
  const Point d = b - a;
  const double len2 = dot(d, d);
  double t = len2 > 0 ? dot(p - a, d) / len2 : 0.0;
  t = std::clamp(t, 0.0, 1.0);
  return distance(p, a + t * d);
}

// Samples within 1e-9 of the boundary count as outside.
bool strictly_inside(const Point& p, const std::vector<Point>& ring) {
  for (std::size_t i = 0, j = ring.size() - 1; i < ring.size(); j = i++) {
    if (segment_distance(p, ring[j], ring[i]) < 1e-9) return false;
  }
  bool inside = false;
  for (std::size_t i = 0, j = ring.size() - 1; i < ring.size(); j = i++) {
    const Point& a = ring[i];
    const Point& b = ring[j];
    if ((a.y > p.y) != (b.y > p.y)) {
      const double x = a.x + (p.y - a.y) * (b.x - a.x) / (b.y - a.y);
      if (x > p.x) inside = !inside;
    }
  }
  return inside;
}

}  // namespace

bool sampled_visibility(const Instance& instance, VertexId u, VertexId v) {
  const auto& pts = instance.points;
  const auto& obs = instance.obstacles;
  const Segment uv{pts[u], pts[v]};
  if (obs.kind == ObstacleKind::Segments) {
    for (const auto& [a, b] : obs.segments) {
      if ((a == u && b == v) || (a == v && b == u)) return true;
    }
    for (const auto& [a, b] : obs.segments) {
      if (parametric_proper_intersection(uv, {pts[a], pts[b]})) return false;
    }
    return true;
  }
  if (obs.kind == ObstacleKind::Polygons) {
    for (const auto& poly : obs.polygons) {
      std::vector<Point> ring;
      for (VertexId i : poly) ring.push_back(pts[i]);
      for (std::size_t i = 0; i < poly.size(); ++i) {
        if (parametric_proper_intersection(uv, {ring[i], ring[(i + 1) % ring.size()]})) return false;
      }
      constexpr int kSamples = 4000;
      for (int s = 1; s < kSamples; ++s) {
        const double t = static_cast<double>(s) / kSamples;
        if (strictly_inside(pts[u] + t * (pts[v] - pts[u]), ring)) return false;
      }
    }
  }
  return true;
}

EdgeSet brute_visibility_edges(const Instance& instance) {
  EdgeSet out;
  for (VertexId u = 0; u < instance.points.size(); ++u) {
    for (VertexId v = u + 1; v < instance.points.size(); ++v) {
      if (sampled_visibility(instance, u, v)) out.emplace(u, v);
    }
  }
  return out;
}

double angle_of(const Point& u, const Point& v) {
  double a = std::atan2(v.y - u.y, v.x - u.x);
  if (a < 0) a += 2 * std::numbers::pi;
  return a;
}

EdgeSet classic_theta_graph(const std::vector<Point>& points, int k) {
  const double theta = 2 * std::numbers::pi / k;
  EdgeSet out;
  for (VertexId u = 0; u < points.size(); ++u) {
    std::vector<std::optional<std::pair<double, VertexId>>> best(static_cast<std::size_t>(k));
    for (VertexId v = 0; v < points.size(); ++v) {
      if (v == u) continue;
      const int cone = std::min(k - 1, static_cast<int>(angle_of(points[u], points[v]) / theta));
      const double bis = (cone + 0.5) * theta;
      const double proj = (points[v].x - points[u].x) * std::cos(bis) + (points[v].y - points[u].y) * std::sin(bis);
      auto& b = best[static_cast<std::size_t>(cone)];
      if (!b || proj < b->first) b = std::pair(proj, v);
    }
    for (const auto& b : best) {
      if (b) out.emplace(std::min(u, b->second), std::max(u, b->second));
    }
  }
  return out;
}

std::optional<VertexId> brute_closest(const Instance& instance, VertexId u, ConeIndex cone,
                                      double lo, double hi, const SweepConfig& config) {
  const auto& pts = instance.points;
  constexpr double slack = 1e-12;
  std::optional<VertexId> best;
  double best_dist = std::numeric_limits<double>::infinity();
  for (VertexId v = 0; v < pts.size(); ++v) {
    if (v == u) continue;
    double a = angle_of(pts[u], pts[v]);
    const double cone_lo = cone * config.theta();
    const double cone_hi = (cone + 1) * config.theta();
    if (a < cone_lo || a >= cone_hi) continue;
    if (a < lo - slack || a > hi + slack) continue;
    if (!sampled_visibility(instance, u, v)) continue;
    const double d = distance(pts[u], gamma_point(pts[u], pts[v], cone, config));
    if (d < best_dist) {
      best_dist = d;
      best = v;
    }
  }
  return best;
}

std::vector<double> bellman_ford(const SpannerGraph& graph, VertexId source) {
  const std::size_t n = graph.vertex_count();
  std::vector<double> dist(n, std::numeric_limits<double>::infinity());
  dist[source] = 0.0;
  for (std::size_t round = 0; round + 1 < n; ++round) {
    bool changed = false;
    for (VertexId u = 0; u < n; ++u) {
      if (std::isinf(dist[u])) continue;
      for (const Neighbor& nb : graph.neighbors(u)) {
        if (dist[u] + nb.weight < dist[nb.vertex]) {
          dist[nb.vertex] = dist[u] + nb.weight;
          changed = true;
        }
      }
    }
    if (!changed) break;
  }
  return dist;
}

std::vector<std::pair<double, double>> subtract_wedge(double a0, double a1, double w0, double w1) {
  const double two_pi = 2 * std::numbers::pi;
  auto norm = [&](double x) {
    x = std::fmod(x - a0, two_pi);
    return x < 0 ? x + two_pi : x;
  };
  // Work relative to a0: cone is [0, len], wedge is (s, s + width) on the circle.
  const double len = a1 - a0;
  const double s = norm(w0);
  double width = w1 - w0;
  while (width < 0) width += two_pi;
  // Sample the cone finely and collect maximal runs outside the open wedge.
  auto in_wedge = [&](double x) {
    double d = std::fmod(x - s, two_pi);
    if (d < 0) d += two_pi;
    return d > 0 && d < width;
  };
  std::vector<std::pair<double, double>> out;
  constexpr int kSteps = 200000;
  std::optional<double> start;
  double last = 0;
  for (int i = 0; i <= kSteps; ++i) {
    const double x = len * i / kSteps;
    if (!in_wedge(x)) {
      if (!start) start = x;
      last = x;
    } else if (start) {
      out.emplace_back(a0 + *start, a0 + last);
      start.reset();
    }
  }
  if (start) out.emplace_back(a0 + *start, a0 + last);
  return out;
}

bool xml_well_formed(const std::string& text, std::string* why) {
  auto fail = [&](const std::string& msg) {
    if (why) *why = msg;
    return false;
  };
  std::vector<std::string> stack;
  int roots = 0;
  std::size_t i = 0;
  while (i < text.size()) {
    if (text[i] != '<') {
      if (stack.empty() && !std::isspace(static_cast<unsigned char>(text[i]))) return fail("text outside root");
      if (text[i] == '&') {
        const auto semi = text.find(';', i);
        if (semi == std::string::npos) return fail("bare ampersand");
      }
      ++i;
      continue;
    }
    const auto close = text.find('>', i);
    if (close == std::string::npos) return fail("unterminated tag");
    std::string tag = text.substr(i + 1, close - i - 1);
    i = close + 1;
    if (tag.starts_with("?")) {
      if (!tag.ends_with("?")) return fail("bad processing instruction");
      continue;
    }
    if (tag.starts_with("/")) {
      const std::string name = tag.substr(1);
      if (stack.empty() || stack.back() != name) return fail("mismatched </" + name + ">");
      stack.pop_back();
      continue;
    }
    const bool self_closing = tag.ends_with("/");
    if (self_closing) tag.pop_back();
    std::size_t p = 0;
    while (p < tag.size() && !std::isspace(static_cast<unsigned char>(tag[p]))) ++p;
    const std::string name = tag.substr(0, p);
    if (name.empty()) return fail("empty tag name");
    // attributes: name="value" pairs
    while (p < tag.size()) {
      while (p < tag.size() && std::isspace(static_cast<unsigned char>(tag[p]))) ++p;
      if (p >= tag.size()) break;
      const auto eq = tag.find('=', p);
      if (eq == std::string::npos || eq + 1 >= tag.size() || tag[eq + 1] != '"') return fail("bad attribute in <" + name + ">");
      const auto end = tag.find('"', eq + 2);
      if (end == std::string::npos) return fail("unterminated attribute value");
      if (tag.substr(eq + 2, end - eq - 2).find('<') != std::string::npos) return fail("'<' in attribute");
      p = end + 1;
    }
    if (stack.empty()) ++roots;
    if (!self_closing) stack.push_back(name);
  }
  if (!stack.empty()) return fail("unclosed <" + stack.back() + ">");
  if (roots != 1) return fail("expected exactly one root element");
  return true;
}

}  // namespace sweepline::oracle
