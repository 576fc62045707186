#include "hgraph/barriers.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "hgraph/error.hpp"

namespace hgraph {

namespace {

struct Sample {
  Point3 p;
  bool boundary;
};

std::vector<Sample> graph_samples(const Solution& s) {
  const TriangleMesh& mesh = s.mesh();
  const auto u = s.values();
  std::vector<Sample> out;
  out.reserve(mesh.vertex_count() + mesh.triangle_count());
  for (std::size_t v = 0; v < mesh.vertex_count(); ++v) {
    const Point2 q = mesh.vertices()[v];
    out.push_back({{q.x, q.y, u[v]}, mesh.is_boundary(v)});
  }
  for (const auto& t : mesh.triangles()) {
    const auto& v = mesh.vertices();
    const Point2 c = (1.0 / 3.0) * (v[t[0]] + v[t[1]] + v[t[2]]);
    out.push_back({{c.x, c.y, (u[t[0]] + u[t[1]] + u[t[2]]) / 3.0}, false});
  }
  return out;
}

struct Closest {
  double value = std::numeric_limits<double>::infinity();
  std::size_t index = 0;
};

Closest closest(const std::vector<Sample>& samples, const Barrier& b, double s) {
  Closest c;
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const double d = b.signed_distance(samples[i].p, s);
    if (d < c.value) c = {d, i};
  }
  return c;
}

}  // namespace

std::string_view to_string(Side side) {
  switch (side) {
    case Side::Above: return "Above";
    case Side::Below: return "Below";
    case Side::On: return "On";
  }
  return "On";
}

Point3 Barrier::center(double s) const {
  return {origin.x + s * direction.x, origin.y + s * direction.y, origin.z + s * direction.z};
}

double Barrier::signed_distance(Point3 p, double s) const {
  const Point3 c = center(s);
  const double dx = p.x - c.x, dz = p.z - c.z;
  if (kind == BarrierKind::Cylinder) return std::hypot(dx, dz) - radius;
  return std::sqrt(dx * dx + (p.y - c.y) * (p.y - c.y) + dz * dz) - radius;
}

Barrier Barrier::sliding_sphere(double H, double x_c, double z_c) {
  if (!(H > 0.0)) throw Error(ErrorKind::InvalidArgument, "H must be positive");
  return {BarrierKind::Sphere, 1.0 / H, {x_c, 0.0, z_c}, {0.0, 1.0, 0.0}};
}

Barrier Barrier::descending_sphere(double H, double x_c, double y_c) {
  if (!(H > 0.0)) throw Error(ErrorKind::InvalidArgument, "H must be positive");
  return {BarrierKind::Sphere, 1.0 / H, {x_c, y_c, 0.0}, {0.0, 0.0, 1.0}};
}

Barrier Barrier::descending_cylinder(double H, double x0) {
  if (!(H > 0.0)) throw Error(ErrorKind::InvalidArgument, "H must be positive");
  return {BarrierKind::Cylinder, 0.5 / H, {x0, 0.0, 0.0}, {0.0, 0.0, 1.0}};
}

Side classify_side(const Solution& solution, Point3 p) {
  const double u = solution.interpolate({p.x, p.y});
  const double tol = 1e-10 / solution.H();
  if (p.z > u + tol) return Side::Above;
  if (p.z < u - tol) return Side::Below;
  return Side::On;
}

std::optional<ContactReport> first_contact(const Solution& solution, const Barrier& barrier, double from, double to) {
  if (!(barrier.radius > 0.0) || !std::isfinite(from) || !std::isfinite(to)) {
    throw Error(ErrorKind::InvalidArgument, "barrier needs a positive radius and a finite sweep");
  }
  const std::vector<Sample> samples = graph_samples(solution);
  const double tol = 1e-10 * barrier.radius;
  const double min_step = 1e-6 * barrier.radius;
  const double dir = to >= from ? 1.0 : -1.0;
  const double speed = std::sqrt(barrier.direction.x * barrier.direction.x +
                                 barrier.direction.y * barrier.direction.y +
                                 barrier.direction.z * barrier.direction.z);
  if (!(speed > 0.0)) throw Error(ErrorKind::InvalidArgument, "barrier direction must be non-zero");

  double s = from;
  Closest c = closest(samples, barrier, s);
  if (!(c.value > 0.0)) throw Error(ErrorKind::InvalidArgument, "barrier meets the graph at the start of the sweep");

  // Signed distance is (speed)-Lipschitz in s, so steps of value/speed never skip a contact.
  double lo = s, hi = s;
  while (c.value > tol) {
    if (s == to) return std::nullopt;
    const double step = std::max(c.value / speed, min_step);
    const double next = dir * (to - s) <= step ? to : s + dir * step;
    const Closest cn = closest(samples, barrier, next);
    if (cn.value <= 0.0) {
      hi = next;
      break;
    }
    s = lo = hi = next;
    c = cn;
  }
  while (std::abs(hi - lo) > tol) {
    const double mid = 0.5 * (lo + hi);
    if (closest(samples, barrier, mid).value <= 0.0) hi = mid;
    else lo = mid;
  }
  const double param = hi;
  const Closest at = closest(samples, barrier, param);
  const Sample& smp = samples[at.index];
  ContactReport report;
  report.parameter = param;
  report.point = smp.p;
  report.touched_boundary = smp.boundary;
  const Point3 ctr = barrier.center(param);
  const double len = std::sqrt((ctr.x - smp.p.x) * (ctr.x - smp.p.x) + (ctr.y - smp.p.y) * (ctr.y - smp.p.y) +
                               (ctr.z - smp.p.z) * (ctr.z - smp.p.z));
  const double nudge = 1e-6 * barrier.radius;
  Point3 probe = smp.p;
  if (len > 0.0) {
    probe.x += nudge * (ctr.x - smp.p.x) / len;
    probe.z += nudge * (ctr.z - smp.p.z) / len;
    if (barrier.kind == BarrierKind::Sphere) probe.y += nudge * (ctr.y - smp.p.y) / len;
  }
  if (const auto u = solution.try_interpolate({probe.x, probe.y})) {
    report.side = probe.z > *u ? Side::Above : (probe.z < *u ? Side::Below : Side::On);
  } else {
    report.side = ctr.z >= smp.p.z ? Side::Above : Side::Below;
  }
  return report;
}

ContactReport require_contact(const Solution& solution, const Barrier& barrier, double from, double to) {
  if (auto r = first_contact(solution, barrier, from, to)) return *r;
  throw Error(ErrorKind::NoContact, "barrier never touches the graph over the sweep");
}

CylinderDescent cylinder_descent_bound(const Solution& solution, double x0, double M) {
  const PlanarDomain* strip = solution.mesh().strip();
  if (!strip) throw Error(ErrorKind::InvalidArgument, "cylinder descent needs a strip solution");
  const double r = 0.5 / solution.H();
  const Interval window{x0 - r, x0 + r};
  const Interval xr = strip->x_range();
  if (window.lo < xr.lo || window.hi > xr.hi) throw Error(ErrorKind::WindowOutside, "window leaves the domain");
  const auto& data = solution.problem().data;
  const double slack = 1e-12 * (1.0 + std::abs(M));
  if (data.f_minus.max_on(window) > M + slack || data.f_plus.max_on(window) > M + slack) {
    throw Error(ErrorKind::HypothesisViolated, "boundary data exceeds M on the window", 0);
  }
  const auto u = solution.values();
  const auto [umin, umax] = std::minmax_element(u.begin(), u.end());
  const double h = quality(solution.mesh()).h_max;

  CylinderDescent out;
  out.x0 = x0;
  out.M = M;
  out.threshold = M + r;
  out.tolerance = 2.0 * h * h;
  const Barrier cyl = Barrier::descending_cylinder(solution.H(), x0);
  out.contact = first_contact(solution, cyl, std::max(*umax, M) + 2.0 * r + 1.0, *umin - 2.0 * r);
  out.pass = !out.contact || out.contact->parameter <= out.threshold + out.tolerance;
  return out;
}

}  // namespace hgraph
