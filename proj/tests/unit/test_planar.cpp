#include <gtest/gtest.h>

#include "hgraph/planar.hpp"
#include "oracles.hpp"

using namespace hgraph;
using hgraph::testing::dense_set_distance;
using hgraph::testing::ref_point_segment;

TEST(Planar, PointSegmentDistanceMatchesProjection) {
  Rng rng(11);
  for (int i = 0; i < 500; ++i) {
    const Point2 p{rng.uniform(-2, 2), rng.uniform(-2, 2)};
    const Point2 a{rng.uniform(-1, 1), rng.uniform(-1, 1)};
    const Point2 b{rng.uniform(-1, 1), rng.uniform(-1, 1)};
    EXPECT_NEAR(point_segment_distance(p, a, b), ref_point_segment(p, a, b), 1e-13);
  }
}

TEST(Planar, DegenerateSegmentIsAPoint) {
  EXPECT_DOUBLE_EQ(point_segment_distance({3, 4}, {0, 0}, {0, 0}), 5.0);
  EXPECT_DOUBLE_EQ(segment_segment_distance({0, 0}, {0, 0}, {3, 4}, {3, 4}), 5.0);
}

TEST(Planar, SegmentDistanceZeroIffIntersecting) {
  Rng rng(12);
  int crossings = 0;
  for (int i = 0; i < 2000; ++i) {
    const Point2 a0{rng.uniform(-1, 1), rng.uniform(-1, 1)}, a1{rng.uniform(-1, 1), rng.uniform(-1, 1)};
    const Point2 b0{rng.uniform(-1, 1), rng.uniform(-1, 1)}, b1{rng.uniform(-1, 1), rng.uniform(-1, 1)};
    const double d = segment_segment_distance(a0, a1, b0, b1);
    const std::vector<Point2> a{a0, a1}, b{b0, b1};
    const bool hit = segments_intersect(a0, a1, b0, b1);
    crossings += hit;
    if (hit) {
      EXPECT_EQ(d, 0.0);
    } else {
      EXPECT_GT(d, 0.0);
      EXPECT_NEAR(d, dense_set_distance(a, b, 1), 1e-12);
    }
  }
  EXPECT_GT(crossings, 100);
}

TEST(Planar, IntersectionParamsReportCrossingAndOverlap) {
  auto t = segment_intersection_params({0, 0}, {2, 0}, {1, -1}, {1, 1});
  ASSERT_EQ(t.size(), 1u);
  EXPECT_DOUBLE_EQ(t[0], 0.5);

  t = segment_intersection_params({0, 0}, {4, 0}, {1, 0}, {3, 0});
  ASSERT_EQ(t.size(), 2u);
  EXPECT_DOUBLE_EQ(std::min(t[0], t[1]), 0.25);
  EXPECT_DOUBLE_EQ(std::max(t[0], t[1]), 0.75);

  EXPECT_TRUE(segment_intersection_params({0, 0}, {1, 0}, {0, 1}, {1, 1}).empty());
}

TEST(Planar, PolylineDistanceMatchesDenseSampling) {
  Rng rng(13);
  for (int i = 0; i < 200; ++i) {
    auto a = hgraph::testing::random_polyline(rng, 5, {0, 0}, {4, 1});
    auto b = hgraph::testing::random_polyline(rng, 4, {0, 1.2}, {4, 3});
    EXPECT_NEAR(polyline_distance(a, b), dense_set_distance(a, b), 1e-12);
  }
}

TEST(Planar, ShoelaceAreaAndOrientation) {
  const std::vector<Point2> square{{0, 0}, {2, 0}, {2, 1}, {0, 1}};
  EXPECT_DOUBLE_EQ(signed_area(square), 2.0);
  const std::vector<Point2> cw(square.rbegin(), square.rend());
  EXPECT_DOUBLE_EQ(signed_area(cw), -2.0);
}

TEST(Planar, PointInRingAgreesWithStarShapedOracle) {
  // A star-shaped ring around the origin: p is inside iff its radius is
  // below the ring radius along the same ray.
  std::vector<Point2> ring;
  std::vector<double> radius;
  const int n = 17;
  Rng rng(14);
  for (int k = 0; k < n; ++k) {
    const double th = 2.0 * M_PI * k / n;
    radius.push_back(rng.uniform(0.5, 1.5));
    ring.push_back({radius.back() * std::cos(th), radius.back() * std::sin(th)});
  }
  for (int i = 0; i < 2000; ++i) {
    const Point2 p{rng.uniform(-1.6, 1.6), rng.uniform(-1.6, 1.6)};
    double th = std::atan2(p.y, p.x);
    if (th < 0) th += 2.0 * M_PI;
    const int k = static_cast<int>(th / (2.0 * M_PI / n)) % n;
    const Point2 a = ring[k], b = ring[(k + 1) % n];
    // Ray p = s * (cos th, sin th) meets chord a->b at s = cross(a, b) / cross(dir, b - a).
    const Point2 dir{std::cos(th), std::sin(th)};
    const double s = cross(a, b) / cross(dir, b - a);
    const double r = norm(p);
    if (std::abs(r - s) < 1e-9) continue;
    EXPECT_EQ(point_in_ring(p, ring), r < s) << p.x << "," << p.y;
  }
}
