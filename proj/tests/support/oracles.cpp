#include "oracles.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace hgraph::testing {

double ref_point_segment(Point2 p, Point2 a, Point2 b) {
  const double dx = b.x - a.x;
  const double dy = b.y - a.y;
  const double len2 = dx * dx + dy * dy;
  double t = len2 > 0.0 ? ((p.x - a.x) * dx + (p.y - a.y) * dy) / len2 : 0.0;
  t = std::clamp(t, 0.0, 1.0);
  return std::hypot(p.x - (a.x + t * dx), p.y - (a.y + t * dy));
}

double ref_point_polyline(Point2 p, std::span<const Point2> line) {
  if (line.size() == 1) return std::hypot(p.x - line[0].x, p.y - line[0].y);
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t k = 0; k + 1 < line.size(); ++k) best = std::min(best, ref_point_segment(p, line[k], line[k + 1]));
  return best;
}

namespace {

double one_sided(std::span<const Point2> from, std::span<const Point2> to, int per_segment) {
  double best = std::numeric_limits<double>::infinity();
  if (from.size() == 1) return ref_point_polyline(from[0], to);
  for (std::size_t k = 0; k + 1 < from.size(); ++k) {
    for (int s = 0; s <= per_segment; ++s) {
      const double t = static_cast<double>(s) / per_segment;
      const Point2 p{from[k].x + t * (from[k + 1].x - from[k].x), from[k].y + t * (from[k + 1].y - from[k].y)};
      best = std::min(best, ref_point_polyline(p, to));
    }
  }
  return best;
}

}  // namespace

double dense_set_distance(std::span<const Point2> a, std::span<const Point2> b, int per_segment) {
  return std::min(one_sided(a, b, per_segment), one_sided(b, a, per_segment));
}

std::vector<double> fd_gradient(const TriangleMesh& mesh, std::span<const double> u, double H, double step) {
  std::vector<double> work(u.begin(), u.end());
  std::vector<double> g(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) {
    work[i] = u[i] + step;
    const double ep = energy(mesh, work, H);
    work[i] = u[i] - step;
    const double em = energy(mesh, work, H);
    work[i] = u[i];
    g[i] = (ep - em) / (2.0 * step);
  }
  return g;
}

double sampled_oscillation(const PiecewiseLinear& f, double lo, double hi, int n) {
  double mn = std::numeric_limits<double>::infinity();
  double mx = -mn;
  for (int i = 0; i <= n; ++i) {
    const double v = f(lo + (hi - lo) * i / n);
    mn = std::min(mn, v);
    mx = std::max(mx, v);
  }
  return mx - mn;
}

std::vector<Point2> random_polyline(Rng& rng, int vertices, Point2 lo, Point2 hi) {
  std::vector<Point2> out;
  for (int i = 0; i < vertices; ++i) out.push_back({rng.uniform(lo.x, hi.x), rng.uniform(lo.y, hi.y)});
  return out;
}

}  // namespace hgraph::testing
