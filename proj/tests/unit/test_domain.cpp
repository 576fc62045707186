#include <gtest/gtest.h>

#include "expect_error.hpp"
#include "hgraph/domain.hpp"
#include "oracles.hpp"

using namespace hgraph;
using hgraph::testing::caught_kind;

namespace {

PiecewiseLinear table(std::vector<Point2> pts) { return PiecewiseLinear(std::move(pts)); }

}  // namespace

TEST(PiecewiseLinear, EvaluatesAndClampsOutsideBreakpoints) {
  const auto f = table({{0, 1}, {2, 3}, {3, 0}});
  EXPECT_DOUBLE_EQ(f(1.0), 2.0);
  EXPECT_DOUBLE_EQ(f(2.5), 1.5);
  EXPECT_DOUBLE_EQ(f(-1.0), 1.0);
  EXPECT_DOUBLE_EQ(f(9.0), 0.0);
  EXPECT_DOUBLE_EQ(PiecewiseLinear::constant(4.0)(-100.0), 4.0);
}

TEST(PiecewiseLinear, RejectsUnsortedOrEmptyTables) {
  EXPECT_EQ(caught_kind([] { table({{0, 0}, {0, 1}}); }), ErrorKind::InvalidArgument);
  EXPECT_EQ(caught_kind([] { table({}); }), ErrorKind::InvalidArgument);
}

TEST(PiecewiseLinear, WindowExtremaMatchDenseSampling) {
  Rng rng(21);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<Point2> pts;
    double x = 0.0;
    for (int k = 0; k < 9; ++k) {
      pts.push_back({x, rng.uniform(-1, 1)});
      x += rng.uniform(0.1, 1.0);
    }
    const auto f = table(pts);
    const double lo = rng.uniform(0.0, 0.5 * x);
    const double hi = rng.uniform(lo + 0.01, x);
    double mn = 1e300, mx = -1e300;
    for (int i = 0; i <= 20000; ++i) {
      const double v = f(lo + (hi - lo) * i / 20000.0);
      mn = std::min(mn, v);
      mx = std::max(mx, v);
    }
    // Sampling never beats the exact extrema and gets within the sample spacing.
    EXPECT_LE(f.min_on({lo, hi}), mn + 1e-15);
    EXPECT_GE(f.max_on({lo, hi}), mx - 1e-15);
    EXPECT_NEAR(f.min_on({lo, hi}), mn, 1e-3);
    EXPECT_NEAR(f.max_on({lo, hi}), mx, 1e-3);
  }
}

TEST(GeneralizedStrip, StraightStripOfWidthPointEight) {
  const auto d = build_generalized_strip(PiecewiseLinear::constant(-0.4), PiecewiseLinear::constant(0.4), {0, 4});
  EXPECT_NEAR(d.area(), 3.2, 1e-14);
  EXPECT_TRUE(d.contains({2.0, 0.39}));
  EXPECT_FALSE(d.contains({2.0, 0.41}));
  EXPECT_FALSE(d.contains({4.5, 0.0}));
  EXPECT_EQ(d.boundary_polygon().size(), 4u);
}

TEST(GeneralizedStrip, CrossingCurvesAreRejected) {
  EXPECT_EQ(caught_kind([] {
              build_generalized_strip(PiecewiseLinear::constant(0.1), PiecewiseLinear::constant(-0.1), {0, 1});
            }),
            ErrorKind::CurvesCross);
  // Crossing strictly between breakpoints of the two curves.
  EXPECT_EQ(caught_kind([] {
              build_generalized_strip(table({{0, -1}, {4, 1}}), table({{0, 0.5}, {4, 0.5}}), {0, 4});
            }),
            ErrorKind::CurvesCross);
}

TEST(GeneralizedStrip, PinchedWedge) {
  const auto d = build_generalized_strip(table({{0, 0}, {2, -2}}), table({{0, 0}, {2, 2}}), {0, 2}, true);
  EXPECT_TRUE(d.pinched_left());
  EXPECT_NEAR(d.area(), 4.0, 1e-14);
  EXPECT_EQ(d.boundary_polygon().size(), 3u);
  EXPECT_EQ(caught_kind([] {
              build_generalized_strip(table({{0, -0.1}, {2, -2}}), table({{0, 0}, {2, 2}}), {0, 2}, true);
            }),
            ErrorKind::BadPinch);
}

TEST(GeneralizedStrip, AreaMatchesMidpointIntegration) {
  Rng rng(22);
  for (int trial = 0; trial < 20; ++trial) {
    const PiecewiseLinear lo = random_lipschitz(rng, {0, 5}, RandomSpec{8, 1.0, 0.3});
    const PiecewiseLinear hi = random_lipschitz(rng, {0, 5}, RandomSpec{8, 1.0, 0.3});
    auto shifted = std::vector<Point2>(hi.breakpoints().begin(), hi.breakpoints().end());
    for (auto& p : shifted) p.y += 1.0;
    const auto d = build_generalized_strip(lo, table(shifted), {0, 5});
    double integral = 0.0;
    const int n = 200000;
    for (int i = 0; i < n; ++i) {
      const double x = 5.0 * (i + 0.5) / n;
      integral += (d.b_plus()(x) - d.b_minus()(x)) * 5.0 / n;
    }
    EXPECT_NEAR(d.area(), integral, 1e-6);
  }
}

TEST(Rectangle, EdgesAndContainment) {
  const Rectangle r(2.0, 1.0, {1.0, -1.0});
  EXPECT_DOUBLE_EQ(r.left(), -1.0);
  EXPECT_DOUBLE_EQ(r.right(), 3.0);
  EXPECT_DOUBLE_EQ(r.bottom(), -2.0);
  EXPECT_DOUBLE_EQ(r.top(), 0.0);
  EXPECT_TRUE(r.contains_open({0.0, -1.0}));
  EXPECT_FALSE(r.contains_open({3.0, -1.0}));
  EXPECT_TRUE(r.contains_closed({3.0, -1.0}));
  EXPECT_EQ(caught_kind([] { Rectangle(0.0, 1.0); }), ErrorKind::BadRectangle);
  EXPECT_DOUBLE_EQ(r.with_half_width(0.5).right(), 1.5);
}

TEST(Region, OrientsLoopsByNesting) {
  // Outer square given clockwise, hole given counter-clockwise: both get flipped.
  const std::vector<Point2> outer{{0, 0}, {0, 4}, {4, 4}, {4, 0}};
  const std::vector<Point2> hole{{1, 1}, {3, 1}, {3, 3}, {1, 3}};
  const Region region = Region::from_loops({outer, hole});
  EXPECT_GT(signed_area(region.loops()[0]), 0.0);
  EXPECT_LT(signed_area(region.loops()[1]), 0.0);
  EXPECT_TRUE(region.contains({0.5, 0.5}));
  EXPECT_FALSE(region.contains({2, 2}));
  EXPECT_FALSE(region.contains({5, 2}));
  EXPECT_TRUE(region.in_closure({1, 2}, 1e-12));
  EXPECT_DOUBLE_EQ(region.boundary_distance({2, 2}), 1.0);
}

TEST(Region, FromStripMatchesStripContainment) {
  Rng rng(23);
  const auto d = build_generalized_strip(table({{0, -0.5}, {1, -0.2}, {3, -0.6}}),
                                         table({{0, 0.5}, {2, 0.1}, {3, 0.4}}), {0, 3});
  const Region region = Region::from_strip(d);
  for (int i = 0; i < 2000; ++i) {
    const Point2 p{rng.uniform(-0.5, 3.5), rng.uniform(-1, 1)};
    EXPECT_EQ(region.contains(p), d.contains(p));
  }
}
