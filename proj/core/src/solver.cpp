#include <algorithm>
#include <cmath>
#include <numeric>
#include <ostream>

#include <Eigen/SparseCholesky>

#include "hgraph/error.hpp"
#include "hgraph/solver.hpp"

namespace hgraph {

namespace {

double linear_cap(const TriangleMesh& mesh, const BoundaryData& data, double x, double y) {
  if (const PlanarDomain* strip = mesh.strip()) {
    const double y0 = strip->b_minus()(x);
    const double y1 = strip->b_plus()(x);
    const double f0 = data.f_minus(x);
    const double f1 = data.f_plus(x);
    if (!(y1 > y0)) return f0;
    return f0 + (f1 - f0) * (y - y0) / (y1 - y0);
  }
  return data.f_minus(x);
}

struct InteriorSystem {
  std::vector<int> slot;               // vertex -> interior index or -1
  std::vector<std::size_t> interior;  // interior index -> vertex
};

InteriorSystem interior_system(const TriangleMesh& mesh) {
  InteriorSystem s;
  s.slot.assign(mesh.vertex_count(), -1);
  for (std::size_t v = 0; v < mesh.vertex_count(); ++v) {
    if (!mesh.is_boundary(v)) {
      s.slot[v] = static_cast<int>(s.interior.size());
      s.interior.push_back(v);
    }
  }
  return s;
}

// Restriction of a full matrix to interior rows/columns; boundary columns are
// folded into rhs -= K_IB u_B.
Eigen::SparseMatrix<double> restrict_interior(const Eigen::SparseMatrix<double>& full, const InteriorSystem& sys,
                                              std::span<const double> u, Eigen::VectorXd* rhs) {
  std::vector<Eigen::Triplet<double>> trip;
  for (int c = 0; c < full.outerSize(); ++c) {
    for (Eigen::SparseMatrix<double>::InnerIterator it(full, c); it; ++it) {
      const int r = sys.slot[it.row()];
      if (r < 0) continue;
      const int cc = sys.slot[it.col()];
      if (cc >= 0) {
        trip.emplace_back(r, cc, it.value());
      } else if (rhs) {
        (*rhs)[r] -= it.value() * u[it.col()];
      }
    }
  }
  const auto n = static_cast<Eigen::Index>(sys.interior.size());
  Eigen::SparseMatrix<double> k(n, n);
  k.setFromTriplets(trip.begin(), trip.end());
  return k;
}

// E(u + alpha d) - E(u) without cancellation: the area term uses
// W1 - W0 = (|g1|^2 - |g0|^2) / (W1 + W0) with |g1|^2 - |g0|^2 = alpha grad d . (2 g + alpha grad d).
double energy_change(const TriangleMesh& mesh, std::span<const double> u, std::span<const double> d, double alpha,
                     double H) {
  double delta = 0.0;
  for (std::size_t t = 0; t < mesh.triangle_count(); ++t) {
    const auto& tri = mesh.triangles()[t];
    const auto& el = mesh.elements()[t];
    Point2 g{}, gd{};
    for (int i = 0; i < 3; ++i) {
      g = g + u[tri[i]] * el.grad[i];
      gd = gd + d[tri[i]] * el.grad[i];
    }
    const Point2 step = alpha * gd;
    const double w0 = std::sqrt(1.0 + dot(g, g));
    const Point2 g1 = g + step;
    const double w1 = std::sqrt(1.0 + dot(g1, g1));
    const double dsq = dot(step, 2.0 * g + step);
    const double mean = (d[tri[0]] + d[tri[1]] + d[tri[2]]) / 3.0;
    delta += el.area * (dsq / (w0 + w1) + 2.0 * H * alpha * mean);
  }
  return delta;
}

double interior_norm(const std::vector<double>& v, const InteriorSystem& sys) {
  double s = 0.0;
  for (std::size_t k : sys.interior) s += v[k] * v[k];
  return std::sqrt(s);
}

// Norm of the lumped load 2H |T|/3; H is floored at 1/(2 diameter) so the
// scale stays meaningful as H -> 0.
double volume_scale(const DirichletProblem& problem, const InteriorSystem& sys) {
  Point2 lo = problem.mesh->vertices().front(), hi = lo;
  for (Point2 v : problem.mesh->vertices()) {
    lo = {std::min(lo.x, v.x), std::min(lo.y, v.y)};
    hi = {std::max(hi.x, v.x), std::max(hi.y, v.y)};
  }
  const double load = std::max(2.0 * problem.H, 1.0 / distance(lo, hi));
  std::vector<double> b = lumped_areas(*problem.mesh);
  for (double& x : b) x *= load;
  const double s = interior_norm(b, sys);
  return s > 0.0 ? s : 1.0;
}

void check_state(const TriangleMesh& mesh, std::span<const double> u, double cap, int iteration) {
  const double slope = max_slope(mesh, u);
  if (!(slope <= cap)) {
    throw Error(ErrorKind::GradientBlowup, "triangle slope exceeded the cap (probable non-existence)", iteration);
  }
}

}  // namespace

double BoundaryData::value(const TriangleMesh& mesh, std::size_t vertex) const {
  const Point2 p = mesh.vertices()[vertex];
  switch (mesh.tags()[vertex]) {
    case BoundaryTag::Interior: return 0.0;
    case BoundaryTag::LowerCurve: return f_minus(p.x);
    case BoundaryTag::UpperCurve: return f_plus(p.x);
    case BoundaryTag::LeftCap: return left_cap ? left_cap(p.y) : linear_cap(mesh, *this, p.x, p.y);
    case BoundaryTag::RightCap: return right_cap ? right_cap(p.y) : linear_cap(mesh, *this, p.x, p.y);
    case BoundaryTag::DiskRim: return rim ? rim(std::atan2(p.y, p.x)) : 0.0;
  }
  return 0.0;
}

void DirichletProblem::validate() const {
  if (!mesh) throw Error(ErrorKind::InvalidArgument, "problem has no mesh");
  if (!(H > 0.0) || !std::isfinite(H)) throw Error(ErrorKind::InvalidArgument, "H must be positive");
  bool need_minus = false, need_plus = false;
  for (BoundaryTag tag : mesh->tags()) {
    need_minus |= tag == BoundaryTag::LowerCurve || (tag == BoundaryTag::LeftCap && !data.left_cap) ||
                  (tag == BoundaryTag::RightCap && !data.right_cap);
    need_plus |= tag == BoundaryTag::UpperCurve;
  }
  if (need_minus && data.f_minus.empty()) throw Error(ErrorKind::InvalidArgument, "missing lower boundary data");
  if (need_plus && data.f_plus.empty()) throw Error(ErrorKind::InvalidArgument, "missing upper boundary data");
  if (const PlanarDomain* strip = mesh->strip(); strip && strip->pinched_left()) {
    const double x = strip->x_range().lo;
    const double a = data.f_minus(x);
    const double b = data.f_plus(x);
    if (std::abs(a - b) > 1e-12 * (1.0 + std::abs(a))) {
      throw Error(ErrorKind::InvalidArgument, "pinched end needs f-(x_lo) = f+(x_lo)");
    }
  }
}

std::vector<double> DirichletProblem::boundary_values() const {
  std::vector<double> u(mesh->vertex_count(), 0.0);
  for (std::size_t v = 0; v < u.size(); ++v) {
    if (mesh->is_boundary(v)) u[v] = data.value(*mesh, v);
  }
  return u;
}

void SolverOptions::validate() const {
  if (!(grad_tol > 0.0) || max_iters <= 0 || !(armijo_c > 0.0) || !(grad_cap > 0.0) || !(armijo_shrink > 0.0) ||
      !(armijo_shrink < 1.0)) {
    throw Error(ErrorKind::InvalidArgument, "solver options must be positive with armijo_shrink in (0, 1)");
  }
}

Solution::Solution(std::shared_ptr<const DirichletProblem> problem, std::vector<double> u, double grad_norm,
                   int iterations, std::vector<double> energy_decrements)
    : problem_(std::move(problem)),
      u_(std::move(u)),
      grad_norm_(grad_norm),
      iterations_(iterations),
      energy_decrements_(std::move(energy_decrements)) {
  if (!problem_ || !problem_->mesh) throw Error(ErrorKind::InvalidArgument, "solution needs a problem");
  if (u_.size() != problem_->mesh->vertex_count()) throw Error(ErrorKind::InvalidArgument, "nodal vector size mismatch");
  locator_ = std::make_shared<PointLocator>(*problem_->mesh);
}

std::optional<double> Solution::try_interpolate(Point2 p) const {
  const auto hit = locator_->locate(p);
  if (!hit) return std::nullopt;
  const auto& tri = mesh().triangles()[hit->triangle];
  return hit->bary[0] * u_[tri[0]] + hit->bary[1] * u_[tri[1]] + hit->bary[2] * u_[tri[2]];
}

double Solution::interpolate(Point2 p) const {
  if (auto v = try_interpolate(p)) return *v;
  throw Error(ErrorKind::PointOutside, "point outside the meshed domain");
}

double relative_gradient_norm(const DirichletProblem& problem, std::span<const double> u) {
  const InteriorSystem sys = interior_system(*problem.mesh);
  return interior_norm(energy_gradient(*problem.mesh, u, problem.H), sys) / volume_scale(problem, sys);
}

Solution solve_dirichlet(std::shared_ptr<const DirichletProblem> problem, const SolverOptions& opts) {
  if (!problem) throw Error(ErrorKind::InvalidArgument, "null problem");
  problem->validate();
  opts.validate();
  const TriangleMesh& mesh = *problem->mesh;
  const double H = problem->H;
  const InteriorSystem sys = interior_system(mesh);
  const double scale = volume_scale(*problem, sys);
  const auto ni = static_cast<Eigen::Index>(sys.interior.size());

  std::vector<double> u = problem->boundary_values();
  if (ni == 0) return Solution(problem, std::move(u), 0.0, 0);

  Eigen::SimplicialLDLT<Eigen::SparseMatrix<double>> ldlt;
  {
    const std::vector<double> zero(mesh.vertex_count(), 0.0);
    const std::vector<double> g0 = energy_gradient(mesh, zero, H);
    Eigen::VectorXd rhs(ni);
    for (Eigen::Index k = 0; k < ni; ++k) rhs[k] = -g0[sys.interior[k]];
    const auto k0 = restrict_interior(energy_hessian(mesh, zero, H), sys, u, &rhs);
    ldlt.compute(k0);
    if (ldlt.info() != Eigen::Success) throw Error(ErrorKind::NoConvergence, "initial factorization failed", 0);
    const Eigen::VectorXd u0 = ldlt.solve(rhs);
    for (Eigen::Index k = 0; k < ni; ++k) u[sys.interior[k]] = u0[k];
  }
  check_state(mesh, u, opts.grad_cap, 0);

  std::vector<double> decrements;
  std::vector<double> d(mesh.vertex_count(), 0.0);
  for (int iter = 0;; ++iter) {
    const std::vector<double> grad = energy_gradient(mesh, u, H);
    const double gnorm = interior_norm(grad, sys) / scale;
    if (!std::isfinite(gnorm)) throw Error(ErrorKind::GradientBlowup, "non-finite gradient", iter);
    if (gnorm <= opts.grad_tol) return Solution(problem, std::move(u), gnorm, iter, std::move(decrements));
    if (iter >= opts.max_iters) throw Error(ErrorKind::NoConvergence, "iteration limit reached", iter);

    ldlt.compute(restrict_interior(energy_hessian(mesh, u, H), sys, u, nullptr));
    if (ldlt.info() != Eigen::Success) throw Error(ErrorKind::NoConvergence, "Hessian factorization failed", iter);
    Eigen::VectorXd gi(ni);
    for (Eigen::Index k = 0; k < ni; ++k) gi[k] = grad[sys.interior[k]];
    const Eigen::VectorXd step = -ldlt.solve(gi);
    const double slope = gi.dot(step);
    if (!(slope < 0.0)) throw Error(ErrorKind::NoConvergence, "Newton direction is not a descent direction", iter);
    for (Eigen::Index k = 0; k < ni; ++k) d[sys.interior[k]] = step[k];

    double alpha = 1.0;
    bool accepted = false;
    for (int tries = 0; tries < 80; ++tries, alpha *= opts.armijo_shrink) {
      const double change = energy_change(mesh, u, d, alpha, H);
      if (std::isfinite(change) && change <= opts.armijo_c * alpha * slope) {
        for (std::size_t k : sys.interior) u[k] += alpha * d[k];
        decrements.push_back(change);
        accepted = true;
        break;
      }
    }
    if (!accepted) throw Error(ErrorKind::NoConvergence, "line search failed", iter);
    check_state(mesh, u, opts.grad_cap, iter + 1);
  }
}

void write_solution(std::ostream& out, const Solution& solution) {
  write_mesh(out, solution.mesh());
  for (double v : solution.values()) out << "u " << format_decimal(v) << '\n';
}

}  // namespace hgraph
