#pragma once

#include <functional>
#include <iosfwd>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include <Eigen/SparseCore>

#include "hgraph/domain.hpp"
#include "hgraph/mesh.hpp"

namespace hgraph {

using BoundaryFunction = std::function<double(double)>;

/// Dirichlet values per boundary tag.  f_minus / f_plus are functions of x;
/// caps are functions of y (an empty cap interpolates linearly between the
/// f± values at its ends); the rim is a function of the polar angle
/// (empty means zero).
struct BoundaryData {
  PiecewiseLinear f_minus;
  PiecewiseLinear f_plus;
  BoundaryFunction left_cap;
  BoundaryFunction right_cap;
  BoundaryFunction rim;

  double value(const TriangleMesh& mesh, std::size_t vertex) const;
};

struct DirichletProblem {
  std::shared_ptr<const TriangleMesh> mesh;
  BoundaryData data;
  double H = 1.0;

  /// H > 0, data defined for every boundary tag present, pinch compatibility.
  void validate() const;
  std::vector<double> boundary_values() const;
};

struct SolverOptions {
  double grad_tol = 1e-10;
  int max_iters = 200;
  double armijo_c = 1e-4;
  double armijo_shrink = 0.5;
  double grad_cap = 1e6;

  void validate() const;
};

/// Discrete energy sum_T |T| (sqrt(1 + |grad u|^2) + 2H mean_T u).
double energy(const TriangleMesh& mesh, std::span<const double> u, double H);
std::vector<double> energy_gradient(const TriangleMesh& mesh, std::span<const double> u, double H);
/// Full (all-vertex) Hessian; exactly symmetric by construction.
Eigen::SparseMatrix<double> energy_hessian(const TriangleMesh& mesh, std::span<const double> u, double H);
/// One third of the area of every triangle incident to each vertex.
std::vector<double> lumped_areas(const TriangleMesh& mesh);
/// Largest per-triangle slope |grad u|.
double max_slope(const TriangleMesh& mesh, std::span<const double> u);

class Solution {
 public:
  Solution(std::shared_ptr<const DirichletProblem> problem, std::vector<double> u, double grad_norm, int iterations,
           std::vector<double> energy_decrements = {});

  const DirichletProblem& problem() const { return *problem_; }
  std::shared_ptr<const DirichletProblem> problem_ptr() const { return problem_; }
  const TriangleMesh& mesh() const { return *problem_->mesh; }
  std::span<const double> values() const { return u_; }
  double H() const { return problem_->H; }
  /// Interior gradient norm relative to the norm of the volume term.
  double grad_norm() const { return grad_norm_; }
  int iterations() const { return iterations_; }
  /// Energy change of every accepted Newton step (all negative).
  const std::vector<double>& energy_decrements() const { return energy_decrements_; }

  /// P1 evaluation; PointOutside if p is not in the closed meshed domain.
  double interpolate(Point2 p) const;
  std::optional<double> try_interpolate(Point2 p) const;

 private:
  std::shared_ptr<const DirichletProblem> problem_;
  std::vector<double> u_;
  double grad_norm_;
  int iterations_;
  std::vector<double> energy_decrements_;
  std::shared_ptr<const PointLocator> locator_;
};

Solution solve_dirichlet(std::shared_ptr<const DirichletProblem> problem, const SolverOptions& opts = {});
inline double interpolate(const Solution& s, Point2 p) { return s.interpolate(p); }

/// Relative interior gradient norm of an arbitrary nodal field.
double relative_gradient_norm(const DirichletProblem& problem, std::span<const double> u);

/// Mesh text format followed by one "u value" line per vertex.
void write_solution(std::ostream& out, const Solution& solution);

/// Lower spherical cap of radius 1/H over the disk of radius R, zero on the rim.
struct CapOracle {
  double H;
  double R;
  double operator()(Point2 p) const;
};
CapOracle exact_cap(double H, double R);

/// Cylinder profile over |y| <= w, zero at y = +-w.
struct CylinderOracle {
  double H;
  double w;
  double operator()(double y) const;
};
CylinderOracle exact_cylinder(double H, double w);

/// Disk problem with zero rim data (matches exact_cap).
std::shared_ptr<const DirichletProblem> cap_problem(double H, double R, int rings, int refinements = 0);
/// Strip [0, length] x [-w, w] with every boundary value taken from exact_cylinder.
std::shared_ptr<const DirichletProblem> cylinder_problem(double H, double w, double length, int nx, int ny,
                                                         int refinements = 0);

}  // namespace hgraph
