#include "hgraph/estimates.hpp"

#include <algorithm>
#include <cmath>

#include "hgraph/error.hpp"

namespace hgraph {

namespace {

const PlanarDomain& strip_of(const Solution& s) {
  const PlanarDomain* strip = s.mesh().strip();
  if (!strip) throw Error(ErrorKind::InvalidArgument, "check needs a solution on a generalized strip");
  return *strip;
}

void require_window(const Solution& s, double x0, double t) {
  const Interval xr = strip_of(s).x_range();
  if (x0 - t < xr.lo || x0 + t > xr.hi) {
    throw Error(ErrorKind::WindowOutside, "window [x0 - t, x0 + t] must lie inside the truncated domain");
  }
}

double hypothesis_tol(double M) { return 1e-12 * (1.0 + std::abs(M)); }

std::pair<Point2, Point2> extremes(const Transversal& tr) {
  auto [lo, hi] = std::minmax_element(tr.samples.begin(), tr.samples.end(),
                                      [](Point2 a, Point2 b) { return a.y < b.y; });
  return {*lo, *hi};
}

Witness transversal_point(std::string role, double x0, Point2 sample) {
  return {std::move(role), {x0, sample.x, sample.y}};
}

EstimateReport distance_report(std::string name, const Solution& solution, const LambdaDecomposition& d,
                               double bound) {
  if (!d.partitioned()) throw Error(ErrorKind::BadPartition, "decomposition carries no valid partition");
  const auto g1 = profile_project(solution, d, LambdaLabel::Lambda1);
  const auto g2 = profile_project(solution, d, LambdaLabel::Lambda2);
  const SetDistance sd = set_distance(g1, g2);
  return EstimateReport::make(std::move(name), d.rect.center.x, sd.value, bound, default_slack(solution),
                              {{"profile_gamma1", {sd.a.x, sd.a.y}}, {"profile_gamma2", {sd.b.x, sd.b.y}}});
}

}  // namespace

EstimateReport EstimateReport::make(std::string name, std::optional<double> x0, double measured, double bound,
                                    double slack, std::vector<Witness> witnesses) {
  EstimateReport r;
  r.name = std::move(name);
  r.x0 = x0;
  r.measured = measured;
  r.bound = bound;
  r.slack = slack;
  r.pass = measured <= bound + slack;
  r.witnesses = std::move(witnesses);
  return r;
}

double Transversal::min() const { return extremes(*this).first.y; }
double Transversal::max() const { return extremes(*this).second.y; }

Transversal transversal(const Solution& solution, double x0) {
  const PlanarDomain& domain = strip_of(solution);
  if (!domain.x_range().contains(x0)) throw Error(ErrorKind::WindowOutside, "x0 outside the domain");
  Transversal tr;
  tr.x0 = x0;
  tr.lower = {x0, domain.b_minus()(x0)};
  tr.upper = {x0, domain.b_plus()(x0)};

  std::vector<double> ys;
  constexpr int kUniform = 64;
  for (int k = 0; k < kUniform; ++k) ys.push_back(tr.lower.y + (tr.upper.y - tr.lower.y) * k / (kUniform - 1));
  const auto& v = solution.mesh().vertices();
  for (const auto& e : solution.mesh().edges()) {
    const Point2 p = v[e[0]], q = v[e[1]];
    if (p.x == x0) ys.push_back(p.y);
    if (q.x == x0) ys.push_back(q.y);
    if ((p.x < x0 && q.x > x0) || (q.x < x0 && p.x > x0)) ys.push_back(p.y + (q.y - p.y) * (x0 - p.x) / (q.x - p.x));
  }
  std::sort(ys.begin(), ys.end());
  ys.erase(std::unique(ys.begin(), ys.end()), ys.end());
  for (double y : ys) {
    y = std::clamp(y, tr.lower.y, tr.upper.y);
    tr.samples.push_back({y, solution.interpolate({x0, y})});
  }
  return tr;
}

VariationStats variation(const BoundaryData& data, double x0, double t, Interval domain) {
  if (!(t >= 0.0)) throw Error(ErrorKind::InvalidArgument, "window radius must be non-negative");
  const Interval w{x0 - t, x0 + t};
  if (w.lo < domain.lo || w.hi > domain.hi || !data.f_minus.covers(w) || !data.f_plus.covers(w)) {
    throw Error(ErrorKind::WindowOutside, "variation window leaves the data's domain");
  }
  VariationStats v;
  v.x0 = x0;
  v.t = t;
  v.v_minus = data.f_minus.max_on(w) - data.f_minus.min_on(w);
  v.v_plus = data.f_plus.max_on(w) - data.f_plus.min_on(w);
  v.v_pair = std::max(v.v_minus, v.v_plus);
  return v;
}

VariationStats variation(const Solution& solution, double x0, double t) {
  return variation(solution.problem().data, x0, t, strip_of(solution).x_range());
}

double default_slack(const Solution& solution) {
  return 10.0 * quality(solution.mesh()).h_max + 10.0 * solution.grad_norm();
}

EstimateReport check_theorem2prime(const Solution& solution, const LambdaDecomposition& partitioned) {
  return distance_report("theorem2prime", solution, partitioned, 2.0 * partitioned.rect.a);
}

EstimateReport check_theorem1(const Solution& solution, const LambdaDecomposition& partitioned) {
  if (!(partitioned.rect.a > 1.0 / solution.H())) throw Error(ErrorKind::BadRectangle, "the 2/H distance check needs a > 1/H");
  return distance_report("theorem1", solution, partitioned, 2.0 / solution.H());
}

Reduction replay_theorem1_reduction(const LambdaDecomposition& partitioned, double a_prime, double H) {
  if (!partitioned.partitioned()) throw Error(ErrorKind::BadPartition, "decomposition carries no valid partition");
  Reduction r;
  r.components = good_components(partitioned, a_prime, H);
  auto label = [](const GoodComponent& g, std::size_t k) { return g.decomposition.components[k].label; };
  const auto it = std::find_if(r.components.begin(), r.components.end(), [&](const GoodComponent& g) {
    return label(g, g.decomposition.gamma2_index) == LambdaLabel::Lambda2;
  });
  if (it == r.components.end()) throw Error(ErrorKind::ReductionFailed, "no good component has gamma_beta in Lambda2");
  r.i0 = static_cast<std::size_t>(it - r.components.begin());
  if (label(*it, it->decomposition.gamma1_index) != LambdaLabel::Lambda1) {
    throw Error(ErrorKind::ReductionFailed, "selected component has gamma_alpha outside Lambda1");
  }
  return r;
}

EstimateReport check_prop_min(const Solution& solution, double x0, double M) {
  const double H = solution.H();
  const double t = 2.0 / H;
  require_window(solution, x0, t);
  const auto& data = solution.problem().data;
  const Interval w{x0 - t, x0 + t};
  if (std::min(data.f_minus.min_on(w), data.f_plus.min_on(w)) < M - hypothesis_tol(M)) {
    throw Error(ErrorKind::HypothesisViolated, "boundary data drops below M on the window", 0);
  }
  const Transversal tr = transversal(solution, x0);
  const Point2 lo = extremes(tr).first;
  return EstimateReport::make("prop_min", x0, -lo.y, -(M - 3.0 / H), default_slack(solution),
                              {transversal_point("argmin", x0, lo)});
}

EstimateReport check_prop_max(const Solution& solution, double x0, double M) {
  const double t = 0.5 / solution.H();
  require_window(solution, x0, t);
  const auto& data = solution.problem().data;
  const Interval w{x0 - t, x0 + t};
  if (std::max(data.f_minus.max_on(w), data.f_plus.max_on(w)) > M + hypothesis_tol(M)) {
    throw Error(ErrorKind::HypothesisViolated, "boundary data exceeds M on the window", 0);
  }
  const Transversal tr = transversal(solution, x0);
  const Point2 hi = extremes(tr).second;
  return EstimateReport::make("prop_max", x0, hi.y, M, default_slack(solution), {transversal_point("argmax", x0, hi)});
}

Theorem3Report check_theorem3(const Solution& solution, double x0) {
  const double H = solution.H();
  require_window(solution, x0, 2.0 / H);
  Theorem3Report r;
  r.variation = variation(solution, x0, 2.0 / H);
  const double M = r.variation.v_pair;
  const Transversal tr = transversal(solution, x0);
  const auto [lo, hi] = extremes(tr);
  const double slack = default_slack(solution);
  r.oscillation = EstimateReport::make("theorem3", x0, hi.y - lo.y, 4.0 * M + 5.0 / H, slack,
                                       {transversal_point("argmin", x0, lo), transversal_point("argmax", x0, hi)});
  const auto& data = solution.problem().data;
  const double fm = data.f_minus(x0), fp = data.f_plus(x0);
  r.boundary_gap = EstimateReport::make("theorem3_gap", x0, std::abs(fm - fp), 2.0 * (M + 1.0 / H), slack,
                                        {{"f_minus", {x0, tr.lower.y, fm}}, {"f_plus", {x0, tr.upper.y, fp}}});
  return r;
}

EstimateReport check_corollary(const Solution& solution, double x0) {
  const double H = solution.H();
  require_window(solution, x0, 2.0 / H);
  const double M = variation(solution, x0, 2.0 / H).v_pair;
  const auto& data = solution.problem().data;
  const Transversal tr = transversal(solution, x0);
  double worst = -1.0;
  Point2 where{};
  for (double f : {data.f_minus(x0), data.f_plus(x0)}) {
    for (Point2 s : tr.samples) {
      const double dev = std::abs(s.y - f);
      if (dev > worst) worst = dev, where = s;
    }
  }
  return EstimateReport::make("corollary", x0, worst, 4.0 * M + 5.0 / H, default_slack(solution),
                              {transversal_point("argmax_deviation", x0, where)});
}

ClassicalBounds check_classical_bounds(const Solution& solution) {
  const TriangleMesh& mesh = solution.mesh();
  const auto u = solution.values();
  const double h = quality(mesh).h_max;
  double bmax = -INFINITY, bmin = INFINITY, imax = -INFINITY, imin = INFINITY;
  std::size_t at_max = 0, at_min = 0;
  for (std::size_t v = 0; v < u.size(); ++v) {
    if (mesh.is_boundary(v)) {
      bmax = std::max(bmax, u[v]);
      bmin = std::min(bmin, u[v]);
    }
    if (u[v] > imax) imax = u[v], at_max = v;
    if (u[v] < imin) imin = u[v], at_min = v;
  }
  const Point2 pmax = mesh.vertices()[at_max], pmin = mesh.vertices()[at_min];
  ClassicalBounds out;
  out.maximum = EstimateReport::make("maximum_principle", std::nullopt, imax, bmax, 10.0 * h * h,
                                     {{"argmax", {pmax.x, pmax.y, imax}}});
  out.height = EstimateReport::make("height_estimate", std::nullopt, -imin, -(bmin - 1.0 / solution.H()), 10.0 * h,
                                    {{"argmin", {pmin.x, pmin.y, imin}}});
  return out;
}

Rectangle strip_rectangle(const PlanarDomain& domain, double x_c, double a) {
  const Interval w{x_c - a, x_c + a};
  const Interval xr = domain.x_range();
  if (w.lo <= xr.lo || w.hi >= xr.hi) throw Error(ErrorKind::WindowOutside, "rectangle must lie inside the strip's x-range");
  const double lo = domain.b_minus().min_on(w);
  const double hi = domain.b_plus().max_on(w);
  const double span = hi - lo;
  return Rectangle(a, 0.5 * span + 0.25 * span + 1e-3 * a, {x_c, 0.5 * (lo + hi)});
}

}  // namespace hgraph
