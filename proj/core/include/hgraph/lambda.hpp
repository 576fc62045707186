#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "hgraph/domain.hpp"

namespace hgraph {

enum class ComponentKind { Loop, Arc };
enum class RectEdge { None, Left, Right, Bottom, Top };
enum class LambdaLabel { Unassigned, Lambda1, Lambda2 };

/// Closure of one connected component of the region boundary inside the open
/// rectangle.  Loop polylines repeat their first vertex at the end.
struct BoundaryComponent {
  std::vector<Point2> polyline;
  ComponentKind kind = ComponentKind::Arc;
  /// Edges holding the first and last vertex of an arc; None for loops.
  std::array<RectEdge, 2> attachments{RectEdge::None, RectEdge::None};
  LambdaLabel label = LambdaLabel::Unassigned;

  bool crosses() const;
  /// Arc endpoint lying on `edge`; throws InvalidArgument when there is none.
  Point2 endpoint_on(RectEdge edge) const;
};

/// Boundary components of a region clipped to a rectangle, with the two
/// crossing arcs identified from the seeds below and above the region.
struct LambdaDecomposition {
  Rectangle rect;
  Region region;
  std::vector<BoundaryComponent> components;
  std::size_t gamma1_index = 0;
  std::size_t gamma2_index = 0;
  Point2 delta1_seed{};
  Point2 delta2_seed{};

  /// Incidence tolerance: 1e-9 x rectangle diameter.
  double eps() const;
  bool on_component(Point2 p, std::size_t index) const;
  std::optional<std::size_t> component_of(Point2 p) const;
  std::vector<std::size_t> members(LambdaLabel label) const;
  bool partitioned() const;
};

/// Decomposes the region boundary inside `rect` after checking the three
/// hypotheses (connected, meets both vertical edges, avoids both horizontal
/// edges).  Throws HypothesisViolated with the failing hypothesis number.
LambdaDecomposition clip_decompose(const Region& region, const Rectangle& rect);
LambdaDecomposition clip_decompose(const PlanarDomain& domain, const Rectangle& rect);

/// Stores a Lambda1/Lambda2 label per component; gamma1 must be Lambda1 and
/// gamma2 Lambda2, every other component may go either way.
LambdaDecomposition partition_lambda(LambdaDecomposition decomp, std::span<const LambdaLabel> assignment);

/// gamma1 -> Lambda1, gamma2 -> Lambda2, others to whichever of the two is nearer.
std::vector<LambdaLabel> natural_partition(const LambdaDecomposition& decomp);

struct GoodComponent {
  /// Lambda^i of the component; gamma1_index is gamma_alpha, gamma2_index gamma_beta.
  LambdaDecomposition decomposition;
  /// Index of the parent component each element of Lambda^i belongs to.
  std::vector<std::size_t> parent_index;
  /// Height of gamma_alpha's endpoint on the left edge.
  double order_key = 0.0;
};

/// Connected components of region ∩ R_{a',b} that meet both vertical edges,
/// ordered bottom to top.  Labels are inherited from the parent partition.
std::vector<GoodComponent> good_components(const LambdaDecomposition& parent, double a_prime, double H);

struct PathInterval {
  double entry = 0.0;
  double exit = 0.0;
  Point2 entry_point{};
  Point2 exit_point{};
  std::optional<std::size_t> entry_component;
  std::optional<std::size_t> exit_component;
};

/// Connected components of c^{-1}(closure of the region) for a path from the
/// bottom edge to the top edge, parametrized by normalized arc length.
struct PathTrace {
  std::vector<Point2> path;
  std::vector<PathInterval> intervals;

  std::size_t j_min() const { return 0; }
  std::size_t j_max() const { return intervals.empty() ? 0 : intervals.size() - 1; }
  Point2 at(double t) const;
};

PathTrace trace_path(std::span<const Point2> path, const LambdaDecomposition& decomp);
PathTrace trace_path(std::span<const Point2> path, const Region& region, const Rectangle& rect);
PathTrace trace_path(std::span<const Point2> path, const PlanarDomain& domain, const Rectangle& rect);

/// Interval j'' with j_prev <= j'' < j whose exit point lies on the component
/// holding the entry point of interval j.  The nearest such j'' is returned.
std::size_t lemma1_witness(const PathTrace& trace, const LambdaDecomposition& decomp, std::size_t j,
                           std::size_t j_prev);

}  // namespace hgraph
