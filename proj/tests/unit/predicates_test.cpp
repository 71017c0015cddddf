#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "sweepline/predicates.hpp"

namespace sweepline {
namespace {

TEST(Orientation, BasicCases) {
  EXPECT_EQ(orientation({0, 0}, {1, 0}, {0, 1}), Orientation::CCW);
  EXPECT_EQ(orientation({0, 0}, {1, 0}, {2, 0}), Orientation::Collinear);
  EXPECT_EQ(orientation({0, 0}, {0, 1}, {1, 0}), Orientation::CW);
}

TEST(Orientation, MatchesRationalArithmeticNearDegeneracy) {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::uniform_int_distribution<int> ulps(-4, 4);
  for (int it = 0; it < 20000; ++it) {
    const Point a{u(rng), u(rng)};
    const Point b{u(rng), u(rng)};
    const double t = u(rng) * 3.0 - 1.0;
    Point c = a + t * (b - a);
    // Nudge c by a few ulps so the triple sits right at the decision boundary.
    for (int s = ulps(rng); s != 0; s += (s > 0 ? -1 : 1)) c.x = std::nextafter(c.x, s > 0 ? 2.0 : -2.0);
    EXPECT_EQ(static_cast<int>(orientation(a, b, c)), oracle::exact_orientation(a, b, c));
  }
}

TEST(Orientation, AntisymmetricUnderSwaps) {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int it = 0; it < 5000; ++it) {
    const Point a{u(rng), u(rng)}, b{u(rng), u(rng)};
    const Point c = it % 2 ? Point{u(rng), u(rng)} : a + 0.37 * (b - a);
    const int o = static_cast<int>(orientation(a, b, c));
    EXPECT_EQ(static_cast<int>(orientation(b, a, c)), -o);
    EXPECT_EQ(static_cast<int>(orientation(a, c, b)), -o);
    EXPECT_EQ(static_cast<int>(orientation(c, b, a)), -o);
  }
}

TEST(SideOfRay, ExactOnRoundedRayDirection) {
  const double a = 2.0 * std::acos(-1.0) / 7.0;
  const Point dir{std::cos(a), std::sin(a)};
  EXPECT_EQ(side_of_ray({0, 0}, dir, dir), Orientation::Collinear);
  EXPECT_EQ(side_of_ray({0, 0}, dir, 2.0 * dir), Orientation::Collinear);
  EXPECT_EQ(side_of_ray({0, 0}, dir, {dir.x, std::nextafter(dir.y, 1.0)}), Orientation::CCW);
}

TEST(ProperIntersection, ReferenceCases) {
  EXPECT_TRUE(properly_intersects({{0, 0}, {2, 2}}, {{0, 2}, {2, 0}}));
  EXPECT_FALSE(properly_intersects({{0, 0}, {1, 1}}, {{1, 1}, {2, 0}}));
  EXPECT_TRUE(properly_intersects({{0, 0}, {2, 0}}, {{1, 0}, {1, 1}}));
  EXPECT_TRUE(oracle::parametric_proper_intersection({{0, 0}, {2, 0}}, {{1, 0}, {1, 1}}));
}

TEST(ProperIntersection, IdenticalAndCollinearCases) {
  const Segment s{{0, 0}, {1, 0}};
  EXPECT_FALSE(properly_intersects(s, s));
  EXPECT_FALSE(properly_intersects(s, {{1, 0}, {0, 0}}));
  EXPECT_FALSE(properly_intersects(s, {{1, 0}, {2, 0}}));  // end to end
  EXPECT_TRUE(properly_intersects(s, {{0.5, 0}, {2, 0}}));  // overlap
  EXPECT_TRUE(properly_intersects(s, {{0, 0}, {0.5, 0}}));  // overlap from shared endpoint
  EXPECT_FALSE(properly_intersects(s, {{2, 0}, {3, 0}}));
}

TEST(ProperIntersection, SymmetricAndAgreesWithParametricOracle) {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  int crossings = 0;
  for (int it = 0; it < 20000; ++it) {
    const Segment s1{{u(rng), u(rng)}, {u(rng), u(rng)}};
    Segment s2{{u(rng), u(rng)}, {u(rng), u(rng)}};
    if (it % 5 == 0) s2.a = s1.b;  // shared endpoint
    const bool got = properly_intersects(s1, s2);
    EXPECT_EQ(got, properly_intersects(s2, s1));
    EXPECT_EQ(got, properly_intersects({s1.b, s1.a}, s2));
    EXPECT_EQ(got, oracle::parametric_proper_intersection(s1, s2));
    crossings += got;
  }
  EXPECT_GT(crossings, 1000);
}

TEST(PointInPolygon, SquareAndReflexShape) {
  const std::vector<Point> square{{0, 0}, {1, 0}, {1, 1}, {0, 1}};
  EXPECT_EQ(point_in_polygon({0.5, 0.5}, square), Containment::Inside);
  EXPECT_EQ(point_in_polygon({1.5, 0.5}, square), Containment::Outside);
  EXPECT_EQ(point_in_polygon({1.0, 0.5}, square), Containment::Boundary);
  EXPECT_EQ(point_in_polygon({0.0, 0.0}, square), Containment::Boundary);
  const std::vector<Point> notch{{0, 0}, {2, 0}, {2, 2}, {1, 0.5}, {0, 2}};
  EXPECT_EQ(point_in_polygon({1.0, 1.5}, notch), Containment::Outside);
  EXPECT_EQ(point_in_polygon({1.0, 0.25}, notch), Containment::Inside);
  EXPECT_EQ(point_in_polygon({0.5, 1.0}, notch), Containment::Inside);
}

}  // namespace
}  // namespace sweepline
