#pragma once

#include <optional>

#include "hgraph/solver.hpp"

namespace hgraph {

struct Point3 {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;
};

enum class BarrierKind { Sphere, Cylinder };
enum class Side { Above, Below, On };

std::string_view to_string(Side side);

/// A sphere, or a cylinder whose axis is parallel to the y-axis, moving
/// along a straight line: its center (or axis point) is origin + s * direction.
struct Barrier {
  BarrierKind kind = BarrierKind::Sphere;
  double radius = 1.0;
  Point3 origin{};
  Point3 direction{0.0, 1.0, 0.0};

  Point3 center(double s) const;
  /// Distance from p to the barrier surface, positive outside the barrier.
  double signed_distance(Point3 p, double s) const;

  /// Sphere of radius 1/H centered at (x_c, v, z_c), parameter v.
  static Barrier sliding_sphere(double H, double x_c, double z_c);
  /// Sphere of radius 1/H centered at (x_c, y_c, t), parameter t.
  static Barrier descending_sphere(double H, double x_c, double y_c);
  /// Cylinder of radius 1/(2H) with axis {x = x0, z = t}, parameter t.
  static Barrier descending_cylinder(double H, double x0);
};

struct ContactReport {
  double parameter = 0.0;
  Point3 point{};
  Side side = Side::On;
  bool touched_boundary = false;
};

/// Sweeps the parameter from `from` to `to` (either direction) and returns the
/// first parameter at which the barrier touches the graph, sampled at mesh
/// vertices and triangle centroids, bisected to 1e-10 x radius.  An empty
/// result means no contact over the whole sweep.  InvalidArgument if the
/// barrier already meets the graph at `from`.
std::optional<ContactReport> first_contact(const Solution& solution, const Barrier& barrier, double from, double to);
/// As first_contact, but NoContact when the sweep never touches the graph.
ContactReport require_contact(const Solution& solution, const Barrier& barrier, double from, double to);

/// Position of p relative to the graph; On within 1e-10 / H.  PointOutside if
/// (p.x, p.y) is not in the meshed domain.
Side classify_side(const Solution& solution, Point3 p);

struct CylinderDescent {
  double x0 = 0.0;
  double M = 0.0;
  /// M + 1/(2H): the axis height above which no contact may occur.
  double threshold = 0.0;
  double tolerance = 0.0;
  std::optional<ContactReport> contact;
  bool pass = false;
};

/// Lowers the cylinder centered over x0 from well above the graph; passes when
/// the first contact happens at axis height at most M + 1/(2H) (+ 2 h_max^2).
/// HypothesisViolated if the boundary data exceeds M on [x0 - 1/(2H), x0 + 1/(2H)].
CylinderDescent cylinder_descent_bound(const Solution& solution, double x0, double M);

}  // namespace hgraph
