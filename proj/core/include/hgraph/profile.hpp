#pragma once

#include <span>
#include <vector>

#include "hgraph/lambda.hpp"
#include "hgraph/solver.hpp"

namespace hgraph {

/// Image of a boundary component in the (x, z) profile plane under (x, y) -> (x, u(x, y)).
struct ProfileCurve {
  std::vector<Point2> points;
};

/// Samples the component at its own vertices, at mesh vertices lying on it,
/// and at every proper crossing with a mesh edge.
ProfileCurve profile_project(const Solution& solution, const BoundaryComponent& component);

/// Profiles of every component carrying `label`.
std::vector<ProfileCurve> profile_project(const Solution& solution, const LambdaDecomposition& decomp,
                                          LambdaLabel label);

struct SetDistance {
  double value = 0.0;
  Point2 a{};
  Point2 b{};
};

/// Minimal Euclidean separation of two polylines (not Hausdorff).
double set_distance(const ProfileCurve& a, const ProfileCurve& b);
/// Minimal separation of two unions of curves, with a closest pair of points.
SetDistance set_distance(std::span<const ProfileCurve> a, std::span<const ProfileCurve> b);

}  // namespace hgraph
