#pragma once

#include <cmath>
#include <span>
#include <vector>

namespace hgraph {

struct Point2 {
  double x = 0.0;
  double y = 0.0;

  friend bool operator==(const Point2&, const Point2&) = default;
};

inline Point2 operator+(Point2 a, Point2 b) { return {a.x + b.x, a.y + b.y}; }
inline Point2 operator-(Point2 a, Point2 b) { return {a.x - b.x, a.y - b.y}; }
inline Point2 operator*(double s, Point2 a) { return {s * a.x, s * a.y}; }
inline double dot(Point2 a, Point2 b) { return a.x * b.x + a.y * b.y; }
inline double cross(Point2 a, Point2 b) { return a.x * b.y - a.y * b.x; }
inline double norm(Point2 a) { return std::hypot(a.x, a.y); }
inline double distance(Point2 a, Point2 b) { return norm(a - b); }
inline Point2 lerp(Point2 a, Point2 b, double t) { return a + t * (b - a); }

/// Closed interval [lo, hi].
struct Interval {
  double lo = 0.0;
  double hi = 0.0;

  double length() const { return hi - lo; }
  bool contains(double v) const { return lo <= v && v <= hi; }
};

double point_segment_distance(Point2 p, Point2 a, Point2 b);

/// Minimal distance between two closed segments (0 when they intersect).
double segment_segment_distance(Point2 a0, Point2 a1, Point2 b0, Point2 b1);

/// Closed-segment intersection test using orientation predicates.
bool segments_intersect(Point2 a0, Point2 a1, Point2 b0, Point2 b1);

/// Parameters s in [0,1] along a0->a1 where it meets b0->b1.  Collinear
/// overlaps report both ends of the overlap.
std::vector<double> segment_intersection_params(Point2 a0, Point2 a1, Point2 b0, Point2 b1);

/// Minimal distance between two polylines given as vertex lists.  A single
/// vertex is a degenerate segment.
double polyline_distance(std::span<const Point2> a, std::span<const Point2> b);

double point_polyline_distance(Point2 p, std::span<const Point2> line);

/// Shoelace area of a ring (first vertex not repeated); positive for CCW.
double signed_area(std::span<const Point2> ring);

/// Even-odd containment; points on the ring are unspecified.
bool point_in_ring(Point2 p, std::span<const Point2> ring);

}  // namespace hgraph
