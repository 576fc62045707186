#pragma once

#include <array>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "hgraph/domain.hpp"

namespace hgraph {

enum class BoundaryTag { Interior, LowerCurve, UpperCurve, LeftCap, RightCap, DiskRim };

std::string_view to_string(BoundaryTag tag);
std::optional<BoundaryTag> parse_boundary_tag(std::string_view name);

struct DiskGeometry {
  double radius = 1.0;
};

/// What the mesh discretizes; used to re-project boundary midpoints on refinement.
using MeshGeometry = std::variant<std::monostate, PlanarDomain, DiskGeometry>;

/// Area and constant basis-function gradients of one P1 element.
struct ElementGeometry {
  double area = 0.0;
  std::array<Point2, 3> grad{};
};

struct MeshQuality {
  double h_max = 0.0;
  double min_angle = 0.0;  // degrees
  std::size_t triangle_count = 0;
};

class TriangleMesh {
 public:
  using Triangle = std::array<int, 3>;

  /// Validates orientation (DegenerateCell) and edge-manifoldness.
  TriangleMesh(std::vector<Point2> vertices, std::vector<Triangle> triangles, std::vector<BoundaryTag> tags,
               MeshGeometry geometry = {});

  std::size_t vertex_count() const { return vertices_.size(); }
  std::size_t triangle_count() const { return triangles_.size(); }
  const std::vector<Point2>& vertices() const { return vertices_; }
  const std::vector<Triangle>& triangles() const { return triangles_; }
  const std::vector<BoundaryTag>& tags() const { return tags_; }
  const std::vector<ElementGeometry>& elements() const { return elements_; }
  const MeshGeometry& geometry() const { return geometry_; }
  const PlanarDomain* strip() const { return std::get_if<PlanarDomain>(&geometry_); }

  bool is_boundary(std::size_t v) const { return tags_[v] != BoundaryTag::Interior; }
  double total_area() const;
  /// Unique undirected edges (i < j).
  std::vector<std::array<int, 2>> edges() const;
  /// Edges used by exactly one triangle.
  std::vector<std::array<int, 2>> boundary_edges() const;

 private:
  std::vector<Point2> vertices_;
  std::vector<Triangle> triangles_;
  std::vector<BoundaryTag> tags_;
  std::vector<ElementGeometry> elements_;
  MeshGeometry geometry_;
};

/// Mapped structured grid: x-nodes uniform in the x-range (plus the curves'
/// interior breakpoints), y_{i,j} = b-(x_i) + (j/ny)(b+(x_i) - b-(x_i)), each
/// quad split along its (i,j)-(i+1,j+1) diagonal.  A pinched left end is
/// collapsed to a single vertex.
TriangleMesh generate_strip_mesh(const PlanarDomain& domain, int nx, int ny);

/// Concentric rings of 6k vertices around a center vertex.
TriangleMesh generate_disk_mesh(double radius, int rings);

/// Uniform midpoint refinement; boundary midpoints are projected back onto
/// the curves (or circle) the mesh discretizes.
TriangleMesh refine(const TriangleMesh& mesh);

MeshQuality quality(const TriangleMesh& mesh);

/// Bucket-grid point location.
class PointLocator {
 public:
  struct Hit {
    std::size_t triangle = 0;
    std::array<double, 3> bary{};
  };

  explicit PointLocator(const TriangleMesh& mesh);
  /// Barycentric coordinates down to -tol are accepted as inside.
  std::optional<Hit> locate(Point2 p, double tol = 1e-10) const;

 private:
  const TriangleMesh* mesh_;
  Point2 lo_{};
  double cell_ = 1.0;
  int nx_ = 1;
  int ny_ = 1;
  std::vector<std::vector<std::size_t>> buckets_;
};

/// Plain-text mesh format: "vertices N triangles M", N lines "x y tag",
/// M lines "i j k"; decimals carry 17 significant digits.
void write_mesh(std::ostream& out, const TriangleMesh& mesh);
TriangleMesh read_mesh(std::istream& in);

/// 17-significant-digit decimal used by every text and JSON writer.
std::string format_decimal(double value);

}  // namespace hgraph
