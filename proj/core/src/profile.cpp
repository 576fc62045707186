#include "hgraph/profile.hpp"

#include <algorithm>
#include <limits>

#include "hgraph/error.hpp"

namespace hgraph {

namespace {

Point2 closest_on_segment(Point2 p, Point2 a, Point2 b) {
  const Point2 ab = b - a;
  const double len2 = dot(ab, ab);
  if (len2 == 0.0) return a;
  return lerp(a, b, std::clamp(dot(p - a, ab) / len2, 0.0, 1.0));
}

SetDistance segment_pair(Point2 a0, Point2 a1, Point2 b0, Point2 b1) {
  if (segments_intersect(a0, a1, b0, b1)) {
    const auto ts = segment_intersection_params(a0, a1, b0, b1);
    const Point2 p = ts.empty() ? a0 : lerp(a0, a1, ts.front());
    return {0.0, p, p};
  }
  SetDistance best{std::numeric_limits<double>::infinity(), {}, {}};
  auto consider = [&](Point2 p, Point2 q) {
    const double d = distance(p, q);
    if (d < best.value) best = {d, p, q};
  };
  consider(a0, closest_on_segment(a0, b0, b1));
  consider(a1, closest_on_segment(a1, b0, b1));
  consider(closest_on_segment(b0, a0, a1), b0);
  consider(closest_on_segment(b1, a0, a1), b1);
  return best;
}

}  // namespace

ProfileCurve profile_project(const Solution& solution, const BoundaryComponent& component) {
  const auto& line = component.polyline;
  if (line.empty()) throw Error(ErrorKind::InvalidArgument, "empty component");
  const TriangleMesh& mesh = solution.mesh();
  const auto& v = mesh.vertices();
  const auto edges = mesh.edges();

  ProfileCurve curve;
  auto emit = [&](Point2 p) {
    const Point2 z{p.x, solution.interpolate(p)};
    if (curve.points.empty() || !(curve.points.back() == z)) curve.points.push_back(z);
  };
  if (line.size() == 1) {
    emit(line.front());
    return curve;
  }
  for (std::size_t i = 0; i + 1 < line.size(); ++i) {
    const Point2 a = line[i];
    const Point2 b = line[i + 1];
    const double x0 = std::min(a.x, b.x), x1 = std::max(a.x, b.x);
    const double y0 = std::min(a.y, b.y), y1 = std::max(a.y, b.y);
    std::vector<double> ts{0.0, 1.0};
    for (const auto& e : edges) {
      const Point2 p = v[e[0]];
      const Point2 q = v[e[1]];
      if (std::max(p.x, q.x) < x0 || std::min(p.x, q.x) > x1 || std::max(p.y, q.y) < y0 ||
          std::min(p.y, q.y) > y1) {
        continue;
      }
      for (double t : segment_intersection_params(a, b, p, q)) ts.push_back(t);
    }
    std::sort(ts.begin(), ts.end());
    double last = -1.0;
    for (double t : ts) {
      if (t - last <= 1e-12) continue;
      last = t;
      // The segment's end is the next segment's start.
      if (t == 1.0 && i + 2 < line.size()) continue;
      emit(t == 1.0 ? b : lerp(a, b, t));
    }
  }
  return curve;
}

std::vector<ProfileCurve> profile_project(const Solution& solution, const LambdaDecomposition& decomp,
                                          LambdaLabel label) {
  std::vector<ProfileCurve> out;
  for (std::size_t k : decomp.members(label)) out.push_back(profile_project(solution, decomp.components[k]));
  return out;
}

double set_distance(const ProfileCurve& a, const ProfileCurve& b) { return polyline_distance(a.points, b.points); }

SetDistance set_distance(std::span<const ProfileCurve> a, std::span<const ProfileCurve> b) {
  SetDistance best{std::numeric_limits<double>::infinity(), {}, {}};
  for (const ProfileCurve& ca : a) {
    for (const ProfileCurve& cb : b) {
      const auto& pa = ca.points;
      const auto& pb = cb.points;
      if (pa.empty() || pb.empty()) continue;
      const std::size_t na = std::max<std::size_t>(pa.size() - 1, 1);
      const std::size_t nb = std::max<std::size_t>(pb.size() - 1, 1);
      for (std::size_t i = 0; i < na; ++i) {
        const Point2 a0 = pa[i], a1 = pa.size() > 1 ? pa[i + 1] : pa[i];
        for (std::size_t j = 0; j < nb; ++j) {
          const Point2 b0 = pb[j], b1 = pb.size() > 1 ? pb[j + 1] : pb[j];
          const SetDistance d = segment_pair(a0, a1, b0, b1);
          if (d.value < best.value) best = d;
        }
      }
    }
  }
  if (!(best.value < std::numeric_limits<double>::infinity())) {
    throw Error(ErrorKind::InvalidArgument, "set distance needs two non-empty curve sets");
  }
  return best;
}

}  // namespace hgraph
