#include <algorithm>
#include <cmath>

#include "hgraph/error.hpp"
#include "hgraph/lambda.hpp"

namespace hgraph {

namespace {

std::vector<double> cumulative_lengths(std::span<const Point2> path) {
  std::vector<double> s(path.size(), 0.0);
  for (std::size_t k = 1; k < path.size(); ++k) s[k] = s[k - 1] + distance(path[k - 1], path[k]);
  return s;
}

void check_path(std::span<const Point2> path, const Rectangle& rect, double eps) {
  if (path.size() < 2) throw Error(ErrorKind::PathOutside, "path needs at least two vertices");
  const Point2 first = path.front();
  const Point2 last = path.back();
  if (std::abs(first.y - rect.bottom()) > eps || first.x < rect.left() - eps || first.x > rect.right() + eps) {
    throw Error(ErrorKind::PathOutside, "path must start on the bottom edge");
  }
  if (std::abs(last.y - rect.top()) > eps || last.x < rect.left() - eps || last.x > rect.right() + eps) {
    throw Error(ErrorKind::PathOutside, "path must end on the top edge");
  }
  for (std::size_t k = 1; k + 1 < path.size(); ++k) {
    if (!rect.contains_open(path[k])) throw Error(ErrorKind::PathOutside, "interior path vertex outside the open rectangle");
  }
}

}  // namespace

Point2 PathTrace::at(double t) const {
  const std::vector<double> s = cumulative_lengths(path);
  const double target = std::clamp(t, 0.0, 1.0) * s.back();
  auto it = std::lower_bound(s.begin(), s.end(), target);
  if (it == s.begin()) return path.front();
  if (it == s.end()) return path.back();
  const std::size_t k = static_cast<std::size_t>(it - s.begin());
  const double span = s[k] - s[k - 1];
  return span > 0.0 ? lerp(path[k - 1], path[k], (target - s[k - 1]) / span) : path[k];
}

PathTrace trace_path(std::span<const Point2> path, const LambdaDecomposition& decomp) {
  const double eps = decomp.eps();
  check_path(path, decomp.rect, eps);
  PathTrace trace;
  trace.path.assign(path.begin(), path.end());
  const std::vector<double> s = cumulative_lengths(path);
  const double total = s.back();
  if (!(total > 0.0)) throw Error(ErrorKind::PathOutside, "path has zero length");

  std::vector<double> cuts{0.0, 1.0};
  for (std::size_t k = 0; k + 1 < path.size(); ++k) {
    const double span = s[k + 1] - s[k];
    if (span == 0.0) continue;
    for (const auto& loop : decomp.region.loops()) {
      const std::size_t n = loop.size();
      for (std::size_t i = 0; i < n; ++i) {
        for (double t : segment_intersection_params(path[k], path[k + 1], loop[i], loop[(i + 1) % n])) {
          cuts.push_back((s[k] + t * span) / total);
        }
      }
    }
  }
  std::sort(cuts.begin(), cuts.end());
  constexpr double kMerge = 1e-12;
  std::vector<double> ts;
  for (double t : cuts) {
    if (ts.empty() || t - ts.back() > kMerge) ts.push_back(t);
  }

  const Region& region = decomp.region;
  const std::size_t m = ts.size() - 1;
  std::vector<char> inside(m);
  for (std::size_t k = 0; k < m; ++k) inside[k] = region.in_closure(trace.at(0.5 * (ts[k] + ts[k + 1])), eps);

  auto push = [&](double e, double o) {
    PathInterval iv;
    iv.entry = e;
    iv.exit = o;
    iv.entry_point = trace.at(e);
    iv.exit_point = trace.at(o);
    iv.entry_component = decomp.component_of(iv.entry_point);
    iv.exit_component = decomp.component_of(iv.exit_point);
    trace.intervals.push_back(iv);
  };

  for (std::size_t k = 0; k < m;) {
    if (inside[k]) {
      const std::size_t first = k;
      while (k < m && inside[k]) ++k;
      push(ts[first], ts[k]);
      continue;
    }
    // Grazing contact: a boundary point with the path outside on both sides.
    if (k > 0 && !inside[k - 1] && region.boundary_distance(trace.at(ts[k])) <= eps) push(ts[k], ts[k]);
    ++k;
  }
  return trace;
}

PathTrace trace_path(std::span<const Point2> path, const Region& region, const Rectangle& rect) {
  return trace_path(path, clip_decompose(region, rect));
}

PathTrace trace_path(std::span<const Point2> path, const PlanarDomain& domain, const Rectangle& rect) {
  return trace_path(path, clip_decompose(domain, rect));
}

std::size_t lemma1_witness(const PathTrace& trace, const LambdaDecomposition& decomp, std::size_t j,
                           std::size_t j_prev) {
  if (j >= trace.intervals.size() || j == trace.j_min() || j_prev >= j) {
    throw Error(ErrorKind::InvalidArgument, "need j != j_min and j_prev before j");
  }
  const auto gamma = trace.intervals[j].entry_component;
  if (!gamma) throw Error(ErrorKind::WitnessNotFound, "entry point lies on no boundary component");
  for (std::size_t k = j; k-- > j_prev;) {
    if (decomp.on_component(trace.intervals[k].exit_point, *gamma)) return k;
  }
  throw Error(ErrorKind::WitnessNotFound, "no earlier exit on the entry component");
}

}  // namespace hgraph
