#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "hgraph/domain.hpp"
#include "hgraph/experiments.hpp"
#include "hgraph/solver.hpp"

namespace hgraph::testing {

// Reference point-to-segment distance by projection onto the segment direction.
double ref_point_segment(Point2 p, Point2 a, Point2 b);
double ref_point_polyline(Point2 p, std::span<const Point2> line);

// Samples `per_segment` evenly spaced points on every segment (vertices
// included) and measures each exactly against the other polyline.  For
// disjoint polylines the minimum is reached at a vertex, so the value is exact.
double dense_set_distance(std::span<const Point2> a, std::span<const Point2> b, int per_segment = 64);

// Central differences of the discrete energy with respect to every vertex value.
std::vector<double> fd_gradient(const TriangleMesh& mesh, std::span<const double> u, double H, double step);

// sup - inf of f on [lo, hi] from `n` uniform samples.
double sampled_oscillation(const PiecewiseLinear& f, double lo, double hi, int n);

std::vector<Point2> random_polyline(Rng& rng, int vertices, Point2 lo, Point2 hi);

// Largest |u_h(v) - exact(v)| over mesh vertices.
template <class Exact>
double nodal_error(const Solution& s, Exact&& exact) {
  double e = 0.0;
  const auto& verts = s.mesh().vertices();
  for (std::size_t i = 0; i < verts.size(); ++i) {
    const double d = s.values()[i] - exact(verts[i]);
    e = d > e ? d : (-d > e ? -d : e);
  }
  return e;
}

}  // namespace hgraph::testing
