#include "hgraph/domain.hpp"

#include <algorithm>
#include <limits>

#include "hgraph/error.hpp"

namespace hgraph {

PiecewiseLinear::PiecewiseLinear(std::vector<Point2> breakpoints) : points_(std::move(breakpoints)) {
  if (points_.empty()) throw Error(ErrorKind::InvalidArgument, "piecewise-linear function needs a breakpoint");
  for (std::size_t i = 1; i < points_.size(); ++i) {
    if (!(points_[i].x > points_[i - 1].x)) {
      throw Error(ErrorKind::InvalidArgument, "breakpoint abscissae must be strictly increasing");
    }
  }
}

PiecewiseLinear PiecewiseLinear::constant(double value) { return PiecewiseLinear({{0.0, value}}); }

double PiecewiseLinear::operator()(double x) const {
  if (points_.size() == 1 || x <= points_.front().x) return points_.front().y;
  if (x >= points_.back().x) return points_.back().y;
  const auto it = std::upper_bound(points_.begin(), points_.end(), x,
                                   [](double v, const Point2& p) { return v < p.x; });
  const Point2 hi = *it;
  const Point2 lo = *(it - 1);
  const double t = (x - lo.x) / (hi.x - lo.x);
  return lo.y + t * (hi.y - lo.y);
}

template <class Better>
double PiecewiseLinear::extremum_on(Interval window, Better better) const {
  double best = (*this)(window.lo);
  const double at_hi = (*this)(window.hi);
  if (better(at_hi, best)) best = at_hi;
  for (const Point2& p : points_) {
    if (p.x > window.lo && p.x < window.hi && better(p.y, best)) best = p.y;
  }
  return best;
}

double PiecewiseLinear::min_on(Interval window) const {
  return extremum_on(window, [](double a, double b) { return a < b; });
}

double PiecewiseLinear::max_on(Interval window) const {
  return extremum_on(window, [](double a, double b) { return a > b; });
}

bool PiecewiseLinear::covers(Interval window) const {
  if (points_.size() == 1) return true;
  return points_.front().x <= window.lo && points_.back().x >= window.hi;
}

PlanarDomain::PlanarDomain(PiecewiseLinear b_minus, PiecewiseLinear b_plus, Interval x_range,
                           bool pinched_left)
    : b_minus_(std::move(b_minus)), b_plus_(std::move(b_plus)), x_range_(x_range), pinched_left_(pinched_left) {
  if (b_minus_.empty() || b_plus_.empty()) throw Error(ErrorKind::InvalidArgument, "boundary curves are required");
  if (!(x_range_.hi > x_range_.lo)) throw Error(ErrorKind::InvalidArgument, "empty x-range");
  if (!b_minus_.covers(x_range_) || !b_plus_.covers(x_range_)) {
    throw Error(ErrorKind::InvalidArgument, "boundary curves must be defined on the whole x-range");
  }
  constexpr double kPinchTol = 1e-12;
  const double gap_lo = b_plus_(x_range_.lo) - b_minus_(x_range_.lo);
  if (pinched_left_) {
    if (std::abs(gap_lo) > kPinchTol) throw Error(ErrorKind::BadPinch, "b-(x_lo) != b+(x_lo)");
  } else if (!(gap_lo > 0.0)) {
    throw Error(ErrorKind::CurvesCross, "b- >= b+ at the left end");
  }
  // The gap is piecewise linear, so checking breakpoints and the right end suffices.
  std::vector<double> xs = interior_breakpoints();
  xs.push_back(x_range_.hi);
  for (double x : xs) {
    if (!(b_plus_(x) - b_minus_(x) > 0.0)) {
      throw Error(ErrorKind::CurvesCross, "b- >= b+ at x = " + std::to_string(x));
    }
  }
}

std::vector<double> PlanarDomain::interior_breakpoints() const {
  std::vector<double> xs;
  for (const auto* curve : {&b_minus_, &b_plus_}) {
    for (const Point2& p : curve->breakpoints()) {
      if (curve->breakpoints().size() > 1 && p.x > x_range_.lo && p.x < x_range_.hi) xs.push_back(p.x);
    }
  }
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  return xs;
}

std::vector<Point2> PlanarDomain::boundary_polygon() const {
  std::vector<double> xs = interior_breakpoints();
  xs.insert(xs.begin(), x_range_.lo);
  xs.push_back(x_range_.hi);
  std::vector<Point2> ring;
  ring.reserve(2 * xs.size());
  for (double x : xs) ring.push_back({x, b_minus_(x)});
  for (auto it = xs.rbegin(); it != xs.rend(); ++it) {
    if (pinched_left_ && *it == x_range_.lo) break;
    ring.push_back({*it, b_plus_(*it)});
  }
  return ring;
}

double PlanarDomain::area() const { return signed_area(boundary_polygon()); }

bool PlanarDomain::contains(Point2 p) const {
  return p.x > x_range_.lo && p.x < x_range_.hi && p.y > b_minus_(p.x) && p.y < b_plus_(p.x);
}

PlanarDomain build_generalized_strip(PiecewiseLinear b_minus, PiecewiseLinear b_plus, Interval x_range,
                                     bool pinched_left) {
  return PlanarDomain(std::move(b_minus), std::move(b_plus), x_range, pinched_left);
}

Rectangle::Rectangle(double half_width, double half_height, Point2 c) : a(half_width), b(half_height), center(c) {
  if (!(a > 0.0) || !(b > 0.0)) throw Error(ErrorKind::BadRectangle, "rectangle half-sides must be positive");
}

double Rectangle::diameter() const { return 2.0 * std::hypot(a, b); }

bool Rectangle::contains_open(Point2 p) const {
  return p.x > left() && p.x < right() && p.y > bottom() && p.y < top();
}

bool Rectangle::contains_closed(Point2 p, double eps) const {
  return p.x >= left() - eps && p.x <= right() + eps && p.y >= bottom() - eps && p.y <= top() + eps;
}

Rectangle Rectangle::with_half_width(double half_width) const { return Rectangle(half_width, b, center); }

Region Region::from_loops(std::vector<std::vector<Point2>> loops) {
  Region region;
  for (auto& loop : loops) {
    if (loop.size() > 1 && loop.front() == loop.back()) loop.pop_back();
    if (loop.size() < 3) throw Error(ErrorKind::InvalidArgument, "boundary loop needs at least three vertices");
  }
  // Orientation from nesting depth: even depth bounds the region from outside.
  for (std::size_t i = 0; i < loops.size(); ++i) {
    int depth = 0;
    for (std::size_t j = 0; j < loops.size(); ++j) {
      if (i != j && point_in_ring(loops[i][0], loops[j])) ++depth;
    }
    const bool want_ccw = depth % 2 == 0;
    if ((signed_area(loops[i]) > 0.0) != want_ccw) std::reverse(loops[i].begin(), loops[i].end());
  }
  region.loops_ = std::move(loops);
  return region;
}

Region Region::from_strip(const PlanarDomain& domain) { return from_loops({domain.boundary_polygon()}); }

bool Region::contains(Point2 p) const {
  bool inside = false;
  for (const auto& loop : loops_) {
    if (point_in_ring(p, loop)) inside = !inside;
  }
  return inside;
}

double Region::boundary_distance(Point2 p) const {
  double best = std::numeric_limits<double>::infinity();
  for (const auto& loop : loops_) {
    const std::size_t n = loop.size();
    for (std::size_t i = 0; i < n; ++i) {
      best = std::min(best, point_segment_distance(p, loop[i], loop[(i + 1) % n]));
    }
  }
  return best;
}

bool Region::in_closure(Point2 p, double eps) const { return contains(p) || boundary_distance(p) <= eps; }

}  // namespace hgraph
