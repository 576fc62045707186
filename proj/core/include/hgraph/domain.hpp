#pragma once

#include <span>
#include <vector>

#include "hgraph/planar.hpp"

namespace hgraph {

/// Continuous piecewise-linear function given by breakpoints with strictly
/// increasing abscissae.  Constant extension outside the breakpoint range;
/// a single breakpoint is a constant function.
class PiecewiseLinear {
 public:
  PiecewiseLinear() = default;
  explicit PiecewiseLinear(std::vector<Point2> breakpoints);
  static PiecewiseLinear constant(double value);

  double operator()(double x) const;
  double min_on(Interval window) const;
  double max_on(Interval window) const;
  /// True when the breakpoint range covers the interval (constants cover everything).
  bool covers(Interval window) const;

  std::span<const Point2> breakpoints() const { return points_; }
  bool empty() const { return points_.empty(); }

 private:
  template <class Better>
  double extremum_on(Interval window, Better better) const;

  std::vector<Point2> points_;
};

/// Generalized strip {(x, y) : x in x_range, b_minus(x) < y < b_plus(x)}.
class PlanarDomain {
 public:
  PlanarDomain(PiecewiseLinear b_minus, PiecewiseLinear b_plus, Interval x_range, bool pinched_left);

  const PiecewiseLinear& b_minus() const { return b_minus_; }
  const PiecewiseLinear& b_plus() const { return b_plus_; }
  Interval x_range() const { return x_range_; }
  bool pinched_left() const { return pinched_left_; }

  /// All breakpoint abscissae of both curves inside the open x-range, sorted, unique.
  std::vector<double> interior_breakpoints() const;
  /// Counter-clockwise boundary polygon (pinch vertex not duplicated).
  std::vector<Point2> boundary_polygon() const;
  double area() const;
  bool contains(Point2 p) const;

 private:
  PiecewiseLinear b_minus_;
  PiecewiseLinear b_plus_;
  Interval x_range_;
  bool pinched_left_;
};

PlanarDomain build_generalized_strip(PiecewiseLinear b_minus, PiecewiseLinear b_plus,
                                     Interval x_range, bool pinched_left = false);

/// Axis-aligned rectangle center + [-a, a] x [-b, b].
struct Rectangle {
  double a = 1.0;
  double b = 1.0;
  Point2 center{};

  Rectangle() = default;
  Rectangle(double half_width, double half_height, Point2 c = {});

  double left() const { return center.x - a; }
  double right() const { return center.x + a; }
  double bottom() const { return center.y - b; }
  double top() const { return center.y + b; }
  double diameter() const;
  bool contains_open(Point2 p) const;
  bool contains_closed(Point2 p, double eps = 0.0) const;
  /// Same center and height, different half-width.
  Rectangle with_half_width(double half_width) const;
};

/// Bounded open region described by its boundary loops.  Loops are stored
/// open (first vertex not repeated) and oriented with the region on the left:
/// outer boundaries counter-clockwise, hole boundaries clockwise.
class Region {
 public:
  Region() = default;
  static Region from_loops(std::vector<std::vector<Point2>> loops);
  static Region from_strip(const PlanarDomain& domain);

  const std::vector<std::vector<Point2>>& loops() const { return loops_; }
  bool contains(Point2 p) const;
  double boundary_distance(Point2 p) const;
  /// Closure membership with an absolute tolerance.
  bool in_closure(Point2 p, double eps) const;

 private:
  std::vector<std::vector<Point2>> loops_;
};

}  // namespace hgraph
