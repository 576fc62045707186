#include <gtest/gtest.h>

#include "expect_error.hpp"
#include "hgraph/profile.hpp"
#include "oracles.hpp"

using namespace hgraph;
using hgraph::testing::caught_kind;
using hgraph::testing::dense_set_distance;

namespace {

std::shared_ptr<const DirichletProblem> flat_problem(double value) {
  auto p = std::make_shared<DirichletProblem>();
  const auto d = build_generalized_strip(PiecewiseLinear::constant(-0.4), PiecewiseLinear::constant(0.4), {0, 4});
  p->mesh = std::make_shared<const TriangleMesh>(generate_strip_mesh(d, 16, 4));
  p->data.f_minus = PiecewiseLinear::constant(value);
  p->data.f_plus = PiecewiseLinear::constant(value);
  return p;
}

Solution constant_solution(double value) {
  auto p = flat_problem(value);
  return Solution(p, std::vector<double>(p->mesh->vertex_count(), value), 0.0, 0);
}

LambdaDecomposition strip_decomposition(const Solution& s) {
  auto d = clip_decompose(*s.mesh().strip(), Rectangle(1.5, 1.0, {2.0, 0.0}));
  return partition_lambda(d, natural_partition(d));
}

}  // namespace

TEST(ProfileProject, ZeroFieldProjectsToTheAxis) {
  const auto s = constant_solution(0.0);
  const auto d = strip_decomposition(s);
  const auto curve = profile_project(s, d.components[d.gamma1_index]);
  ASSERT_GE(curve.points.size(), 2u);
  EXPECT_DOUBLE_EQ(curve.points.front().x, 0.5);
  EXPECT_DOUBLE_EQ(curve.points.back().x, 3.5);
  for (const auto& p : curve.points) EXPECT_EQ(p.y, 0.0);
}

TEST(ProfileProject, ConstantFieldGivesConstantHeight) {
  const auto s = constant_solution(5.0);
  const auto d = strip_decomposition(s);
  for (LambdaLabel l : {LambdaLabel::Lambda1, LambdaLabel::Lambda2}) {
    for (const auto& c : profile_project(s, d, l)) {
      for (const auto& p : c.points) EXPECT_DOUBLE_EQ(p.y, 5.0);
    }
  }
}

TEST(ProfileProject, CylinderLowerCurveSitsAtZero) {
  const auto s = solve_dirichlet(cylinder_problem(1.0, 0.4, 4.0, 40, 12));
  const auto d = strip_decomposition(s);
  const auto curve = profile_project(s, d.components[d.gamma1_index]);
  for (const auto& p : curve.points) EXPECT_NEAR(p.y, 0.0, 1e-15);
  // Edge crossings of the rectangle are included as well as vertices.
  EXPECT_GE(curve.points.size(), 31u);
}

TEST(SetDistance, HandValues) {
  const ProfileCurve a{{{0, 0}, {2, 0}}};
  const ProfileCurve b{{{1, 1}, {3, 1}}};
  EXPECT_DOUBLE_EQ(set_distance(a, a), 0.0);
  EXPECT_DOUBLE_EQ(set_distance(a, b), 1.0);
  const std::vector<ProfileCurve> as{a}, bs{b};
  const auto sd = set_distance(as, bs);
  EXPECT_DOUBLE_EQ(sd.value, 1.0);
  EXPECT_DOUBLE_EQ(distance(sd.a, sd.b), 1.0);
  const std::vector<ProfileCurve> none;
  EXPECT_EQ(caught_kind([&] { set_distance(none, none); }), ErrorKind::InvalidArgument);
}

TEST(SetDistance, RandomPolylinesMatchDenseSampling) {
  Rng rng(61);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<ProfileCurve> as, bs;
    for (int k = 0; k < 3; ++k) as.push_back({hgraph::testing::random_polyline(rng, 4, {0, 0}, {3, 1})});
    for (int k = 0; k < 2; ++k) bs.push_back({hgraph::testing::random_polyline(rng, 5, {0, 1.3}, {3, 2.5})});
    double oracle = 1e300;
    for (const auto& a : as) {
      for (const auto& b : bs) oracle = std::min(oracle, dense_set_distance(a.points, b.points));
    }
    const auto sd = set_distance(as, bs);
    EXPECT_NEAR(sd.value, oracle, 1e-9);
    EXPECT_NEAR(distance(sd.a, sd.b), sd.value, 1e-12);
  }
}

TEST(SetDistance, SinglePointCurves) {
  const ProfileCurve a{{{0, 0}}};
  const ProfileCurve b{{{3, 4}}};
  EXPECT_DOUBLE_EQ(set_distance(a, b), 5.0);
}
