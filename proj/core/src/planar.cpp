#include "hgraph/planar.hpp"

#include <algorithm>
#include <limits>

#include "hgraph/error.hpp"

namespace hgraph {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::CurvesCross: return "CurvesCross";
    case ErrorKind::BadPinch: return "BadPinch";
    case ErrorKind::HypothesisViolated: return "HypothesisViolated";
    case ErrorKind::BadPartition: return "BadPartition";
    case ErrorKind::NoGoodComponent: return "NoGoodComponent";
    case ErrorKind::PathOutside: return "PathOutside";
    case ErrorKind::WitnessNotFound: return "WitnessNotFound";
    case ErrorKind::DegenerateCell: return "DegenerateCell";
    case ErrorKind::NoConvergence: return "NoConvergence";
    case ErrorKind::GradientBlowup: return "GradientBlowup";
    case ErrorKind::BadRadius: return "BadRadius";
    case ErrorKind::BadWidth: return "BadWidth";
    case ErrorKind::PointOutside: return "PointOutside";
    case ErrorKind::NoContact: return "NoContact";
    case ErrorKind::BadRectangle: return "BadRectangle";
    case ErrorKind::ReductionFailed: return "ReductionFailed";
    case ErrorKind::WindowOutside: return "WindowOutside";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::ConfigError: return "ConfigError";
    case ErrorKind::IoError: return "IoError";
  }
  return "Unknown";
}

double point_segment_distance(Point2 p, Point2 a, Point2 b) {
  const Point2 ab = b - a;
  const double len2 = dot(ab, ab);
  if (len2 == 0.0) return distance(p, a);
  const double t = std::clamp(dot(p - a, ab) / len2, 0.0, 1.0);
  return distance(p, a + t * ab);
}

namespace {

int orientation(Point2 a, Point2 b, Point2 c) {
  const double v = cross(b - a, c - a);
  return (v > 0.0) - (v < 0.0);
}

bool on_segment(Point2 a, Point2 b, Point2 p) {
  return std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) &&
         std::min(a.y, b.y) <= p.y && p.y <= std::max(a.y, b.y);
}

}  // namespace

bool segments_intersect(Point2 a0, Point2 a1, Point2 b0, Point2 b1) {
  const int o1 = orientation(a0, a1, b0);
  const int o2 = orientation(a0, a1, b1);
  const int o3 = orientation(b0, b1, a0);
  const int o4 = orientation(b0, b1, a1);
  if (o1 != o2 && o3 != o4) return true;
  if (o1 == 0 && on_segment(a0, a1, b0)) return true;
  if (o2 == 0 && on_segment(a0, a1, b1)) return true;
  if (o3 == 0 && on_segment(b0, b1, a0)) return true;
  if (o4 == 0 && on_segment(b0, b1, a1)) return true;
  return false;
}

double segment_segment_distance(Point2 a0, Point2 a1, Point2 b0, Point2 b1) {
  if (segments_intersect(a0, a1, b0, b1)) return 0.0;
  return std::min({point_segment_distance(a0, b0, b1), point_segment_distance(a1, b0, b1),
                   point_segment_distance(b0, a0, a1), point_segment_distance(b1, a0, a1)});
}

std::vector<double> segment_intersection_params(Point2 a0, Point2 a1, Point2 b0, Point2 b1) {
  std::vector<double> out;
  const Point2 r = a1 - a0;
  const Point2 s = b1 - b0;
  const double denom = cross(r, s);
  const Point2 qp = b0 - a0;
  const double scale = std::max({norm(r), norm(s), 1e-300});
  if (std::abs(denom) > 1e-14 * scale * scale) {
    const double t = cross(qp, s) / denom;
    const double u = cross(qp, r) / denom;
    constexpr double kTol = 1e-12;
    if (t >= -kTol && t <= 1.0 + kTol && u >= -kTol && u <= 1.0 + kTol) {
      out.push_back(std::clamp(t, 0.0, 1.0));
    }
    return out;
  }
  // Parallel: only collinear overlap matters.
  if (std::abs(cross(qp, r)) > 1e-14 * scale * scale) return out;
  const double rr = dot(r, r);
  if (rr == 0.0) {
    if (point_segment_distance(a0, b0, b1) == 0.0) out.push_back(0.0);
    return out;
  }
  double t0 = dot(b0 - a0, r) / rr;
  double t1 = dot(b1 - a0, r) / rr;
  if (t0 > t1) std::swap(t0, t1);
  const double lo = std::max(t0, 0.0);
  const double hi = std::min(t1, 1.0);
  if (lo <= hi) {
    out.push_back(lo);
    if (hi > lo) out.push_back(hi);
  }
  return out;
}

double point_polyline_distance(Point2 p, std::span<const Point2> line) {
  if (line.empty()) return std::numeric_limits<double>::infinity();
  if (line.size() == 1) return distance(p, line[0]);
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i + 1 < line.size(); ++i) {
    best = std::min(best, point_segment_distance(p, line[i], line[i + 1]));
  }
  return best;
}

double polyline_distance(std::span<const Point2> a, std::span<const Point2> b) {
  if (a.empty() || b.empty()) return std::numeric_limits<double>::infinity();
  const std::size_t na = std::max<std::size_t>(a.size() - 1, 1);
  const std::size_t nb = std::max<std::size_t>(b.size() - 1, 1);
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < na; ++i) {
    const Point2 a0 = a[i];
    const Point2 a1 = a.size() > 1 ? a[i + 1] : a[i];
    for (std::size_t j = 0; j < nb; ++j) {
      const Point2 b0 = b[j];
      const Point2 b1 = b.size() > 1 ? b[j + 1] : b[j];
      best = std::min(best, segment_segment_distance(a0, a1, b0, b1));
      if (best == 0.0) return 0.0;
    }
  }
  return best;
}

double signed_area(std::span<const Point2> ring) {
  double twice = 0.0;
  const std::size_t n = ring.size();
  for (std::size_t i = 0; i < n; ++i) {
    twice += cross(ring[i], ring[(i + 1) % n]);
  }
  return 0.5 * twice;
}

bool point_in_ring(Point2 p, std::span<const Point2> ring) {
  bool inside = false;
  const std::size_t n = ring.size();
  for (std::size_t i = 0, j = n - 1; i < n; j = i++) {
    const Point2 a = ring[i];
    const Point2 b = ring[j];
    if ((a.y > p.y) != (b.y > p.y)) {
      const double xc = a.x + (p.y - a.y) * (b.x - a.x) / (b.y - a.y);
      if (p.x < xc) inside = !inside;
    }
  }
  return inside;
}

}  // namespace hgraph
