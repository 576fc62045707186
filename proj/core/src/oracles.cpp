#include <algorithm>
#include <cmath>

#include "hgraph/error.hpp"
#include "hgraph/solver.hpp"

namespace hgraph {

double CapOracle::operator()(Point2 p) const {
  const double rho2 = 1.0 / (H * H);
  return std::sqrt(rho2 - R * R) - std::sqrt(std::max(0.0, rho2 - dot(p, p)));
}

CapOracle exact_cap(double H, double R) {
  if (!(H > 0.0)) throw Error(ErrorKind::InvalidArgument, "H must be positive");
  if (!(R > 0.0) || !(R < 1.0 / H)) throw Error(ErrorKind::BadRadius, "cap radius must lie in (0, 1/H)");
  return {H, R};
}

double CylinderOracle::operator()(double y) const {
  const double k = 2.0 * H;
  return (std::sqrt(1.0 - k * k * w * w) - std::sqrt(std::max(0.0, 1.0 - k * k * y * y))) / k;
}

CylinderOracle exact_cylinder(double H, double w) {
  if (!(H > 0.0)) throw Error(ErrorKind::InvalidArgument, "H must be positive");
  if (!(w > 0.0) || !(w < 1.0 / (2.0 * H))) throw Error(ErrorKind::BadWidth, "half-width must lie in (0, 1/(2H))");
  return {H, w};
}

std::shared_ptr<const DirichletProblem> cap_problem(double H, double R, int rings, int refinements) {
  exact_cap(H, R);
  TriangleMesh mesh = generate_disk_mesh(R, rings);
  for (int k = 0; k < refinements; ++k) mesh = refine(mesh);
  auto p = std::make_shared<DirichletProblem>();
  p->mesh = std::make_shared<const TriangleMesh>(std::move(mesh));
  p->H = H;
  return p;
}

std::shared_ptr<const DirichletProblem> cylinder_problem(double H, double w, double length, int nx, int ny,
                                                         int refinements) {
  const CylinderOracle exact = exact_cylinder(H, w);
  const PlanarDomain domain = build_generalized_strip(PiecewiseLinear::constant(-w), PiecewiseLinear::constant(w),
                                                      Interval{0.0, length});
  TriangleMesh mesh = generate_strip_mesh(domain, nx, ny);
  for (int k = 0; k < refinements; ++k) mesh = refine(mesh);
  auto p = std::make_shared<DirichletProblem>();
  p->mesh = std::make_shared<const TriangleMesh>(std::move(mesh));
  p->H = H;
  p->data.f_minus = PiecewiseLinear::constant(0.0);
  p->data.f_plus = PiecewiseLinear::constant(0.0);
  p->data.left_cap = [exact](double y) { return exact(y); };
  p->data.right_cap = p->data.left_cap;
  return p;
}

}  // namespace hgraph
