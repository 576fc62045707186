#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hgraph/lambda.hpp"
#include "hgraph/profile.hpp"
#include "hgraph/solver.hpp"

namespace hgraph {

/// A point or curve sample that realizes a measured value.
struct Witness {
  std::string role;
  std::vector<double> coords;
};

struct EstimateReport {
  std::string name;
  std::optional<double> x0;
  double measured = 0.0;
  double bound = 0.0;
  double slack = 0.0;
  bool pass = false;
  std::vector<Witness> witnesses;

  /// Builds a report whose pass flag is measured <= bound + slack.
  static EstimateReport make(std::string name, std::optional<double> x0, double measured, double bound, double slack,
                             std::vector<Witness> witnesses = {});
  bool consistent() const { return pass == (measured <= bound + slack); }
};

/// Vertical segment {x0} x [b-(x0), b+(x0)] and the P1 values along it.
struct Transversal {
  double x0 = 0.0;
  Point2 lower{};
  Point2 upper{};
  /// (y, u(x0, y)) at every mesh-edge crossing plus 64 uniform points.
  std::vector<Point2> samples;

  double min() const;
  double max() const;
};

Transversal transversal(const Solution& solution, double x0);

struct VariationStats {
  double x0 = 0.0;
  double t = 0.0;
  double v_minus = 0.0;
  double v_plus = 0.0;
  double v_pair = 0.0;
};

/// Exact sup - inf of f- and f+ over [x0 - t, x0 + t]; WindowOutside unless the
/// window lies inside `domain`.
VariationStats variation(const BoundaryData& data, double x0, double t, Interval domain);
VariationStats variation(const Solution& solution, double x0, double t);

/// 10 h_max + 10 x (final relative gradient norm).
double default_slack(const Solution& solution);

EstimateReport check_theorem2prime(const Solution& solution, const LambdaDecomposition& partitioned);
/// BadRectangle when a <= 1/H.
EstimateReport check_theorem1(const Solution& solution, const LambdaDecomposition& partitioned);

/// Outcome of replaying the component selection of the 2/H proof.
struct Reduction {
  std::vector<GoodComponent> components;
  /// Zero-based index of the first component whose upper crossing arc is in Lambda2.
  std::size_t i0 = 0;
  const GoodComponent& selected() const { return components[i0]; }
};

/// Orders the good components of region ∩ R_{a',b}, picks i0 and asserts its
/// lower crossing arc is in Lambda1 (ReductionFailed otherwise).
Reduction replay_theorem1_reduction(const LambdaDecomposition& partitioned, double a_prime, double H);

EstimateReport check_prop_min(const Solution& solution, double x0, double M);
EstimateReport check_prop_max(const Solution& solution, double x0, double M);

struct Theorem3Report {
  VariationStats variation;
  EstimateReport oscillation;
  EstimateReport boundary_gap;
};

Theorem3Report check_theorem3(const Solution& solution, double x0);
/// Largest |u(p) - f_alpha(x0)| over the transversal and both alpha.
EstimateReport check_corollary(const Solution& solution, double x0);

struct ClassicalBounds {
  EstimateReport maximum;
  EstimateReport height;
};

/// Discrete maximum principle (slack 10 h_max^2) and classical height
/// estimate (slack 10 h_max).
ClassicalBounds check_classical_bounds(const Solution& solution);

/// Rectangle centered at (x_c, mid-height of the domain) with half-width a and a
/// half-height that clears both boundary curves over [x_c - a, x_c + a].
Rectangle strip_rectangle(const PlanarDomain& domain, double x_c, double a);

}  // namespace hgraph
