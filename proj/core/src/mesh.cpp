#include "hgraph/mesh.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>

#include "hgraph/error.hpp"

namespace hgraph {

namespace {

constexpr double kMergeTol = 1e-12;

ElementGeometry element_geometry(Point2 p0, Point2 p1, Point2 p2) {
  ElementGeometry g;
  const double twice = cross(p1 - p0, p2 - p0);
  g.area = 0.5 * twice;
  const std::array<Point2, 3> p{p0, p1, p2};
  for (int i = 0; i < 3; ++i) {
    const Point2 pj = p[(i + 1) % 3];
    const Point2 pk = p[(i + 2) % 3];
    g.grad[i] = Point2{(pj.y - pk.y) / twice, (pk.x - pj.x) / twice};
  }
  return g;
}

std::map<std::array<int, 2>, int> edge_use(const std::vector<TriangleMesh::Triangle>& triangles) {
  std::map<std::array<int, 2>, int> use;
  for (const auto& t : triangles) {
    for (int e = 0; e < 3; ++e) {
      const int a = t[e];
      const int b = t[(e + 1) % 3];
      ++use[{std::min(a, b), std::max(a, b)}];
    }
  }
  return use;
}

}  // namespace

std::string_view to_string(BoundaryTag tag) {
  switch (tag) {
    case BoundaryTag::Interior: return "Interior";
    case BoundaryTag::LowerCurve: return "LowerCurve";
    case BoundaryTag::UpperCurve: return "UpperCurve";
    case BoundaryTag::LeftCap: return "LeftCap";
    case BoundaryTag::RightCap: return "RightCap";
    case BoundaryTag::DiskRim: return "DiskRim";
  }
  return "Interior";
}

std::optional<BoundaryTag> parse_boundary_tag(std::string_view name) {
  for (BoundaryTag t : {BoundaryTag::Interior, BoundaryTag::LowerCurve, BoundaryTag::UpperCurve, BoundaryTag::LeftCap,
                        BoundaryTag::RightCap, BoundaryTag::DiskRim}) {
    if (to_string(t) == name) return t;
  }
  return std::nullopt;
}

TriangleMesh::TriangleMesh(std::vector<Point2> vertices, std::vector<Triangle> triangles,
                           std::vector<BoundaryTag> tags, MeshGeometry geometry)
    : vertices_(std::move(vertices)),
      triangles_(std::move(triangles)),
      tags_(std::move(tags)),
      geometry_(std::move(geometry)) {
  if (tags_.size() != vertices_.size()) throw Error(ErrorKind::InvalidArgument, "one boundary tag per vertex required");
  if (triangles_.empty()) throw Error(ErrorKind::DegenerateCell, "mesh has no triangles");
  const int n = static_cast<int>(vertices_.size());
  elements_.reserve(triangles_.size());
  for (const auto& t : triangles_) {
    for (int v : t) {
      if (v < 0 || v >= n) throw Error(ErrorKind::InvalidArgument, "triangle references a missing vertex");
    }
    ElementGeometry g = element_geometry(vertices_[t[0]], vertices_[t[1]], vertices_[t[2]]);
    if (!(g.area > 0.0)) throw Error(ErrorKind::DegenerateCell, "triangle with non-positive signed area");
    elements_.push_back(g);
  }
  for (const auto& [edge, count] : edge_use(triangles_)) {
    if (count > 2) throw Error(ErrorKind::InvalidArgument, "edge shared by more than two triangles");
    if (count == 1 && (tags_[edge[0]] == BoundaryTag::Interior || tags_[edge[1]] == BoundaryTag::Interior)) {
      throw Error(ErrorKind::InvalidArgument, "boundary edge with an interior-tagged vertex");
    }
  }
}

double TriangleMesh::total_area() const {
  double sum = 0.0;
  for (const auto& e : elements_) sum += e.area;
  return sum;
}

std::vector<std::array<int, 2>> TriangleMesh::edges() const {
  std::vector<std::array<int, 2>> out;
  for (const auto& [edge, count] : edge_use(triangles_)) out.push_back(edge);
  return out;
}

std::vector<std::array<int, 2>> TriangleMesh::boundary_edges() const {
  std::vector<std::array<int, 2>> out;
  for (const auto& [edge, count] : edge_use(triangles_)) {
    if (count == 1) out.push_back(edge);
  }
  return out;
}

TriangleMesh generate_strip_mesh(const PlanarDomain& domain, int nx, int ny) {
  if (nx < 1 || ny < 1) throw Error(ErrorKind::InvalidArgument, "nx and ny must be at least 1");
  const Interval xr = domain.x_range();
  const double dx = xr.length() / nx;

  std::vector<double> grid;
  for (int i = 0; i <= nx; ++i) grid.push_back(i == nx ? xr.hi : xr.lo + i * dx);
  for (double bx : domain.interior_breakpoints()) {
    const auto k = static_cast<std::size_t>(std::lround((bx - xr.lo) / dx));
    if (k > 0 && k < static_cast<std::size_t>(nx) && std::abs(grid[k] - bx) <= 1e-9 * dx) {
      grid[k] = bx;
    } else {
      grid.push_back(bx);
    }
  }
  std::sort(grid.begin(), grid.end());
  grid.erase(std::unique(grid.begin(), grid.end()), grid.end());

  const int ncol = static_cast<int>(grid.size());
  std::vector<Point2> verts;
  std::vector<BoundaryTag> tags;
  std::vector<int> index(static_cast<std::size_t>(ncol) * (ny + 1), -1);
  auto id = [&](int i, int j) -> int& { return index[static_cast<std::size_t>(i) * (ny + 1) + j]; };

  for (int i = 0; i < ncol; ++i) {
    const double x = grid[i];
    const double lo = domain.b_minus()(x);
    const double hi = domain.b_plus()(x);
    for (int j = 0; j <= ny; ++j) {
      const Point2 p{x, j == ny ? hi : lo + (static_cast<double>(j) / ny) * (hi - lo)};
      BoundaryTag tag = BoundaryTag::Interior;
      if (j == 0) tag = BoundaryTag::LowerCurve;
      else if (j == ny) tag = BoundaryTag::UpperCurve;
      else if (i == 0) tag = BoundaryTag::LeftCap;
      else if (i == ncol - 1) tag = BoundaryTag::RightCap;

      if (i == 0 && j > 0 && distance(p, verts[id(0, 0)]) <= kMergeTol) {
        id(i, j) = id(0, 0);
        tags[id(0, 0)] = BoundaryTag::LeftCap;
        continue;
      }
      id(i, j) = static_cast<int>(verts.size());
      verts.push_back(p);
      tags.push_back(tag);
    }
  }

  std::vector<TriangleMesh::Triangle> tris;
  for (int i = 0; i + 1 < ncol; ++i) {
    for (int j = 0; j < ny; ++j) {
      const int v00 = id(i, j), v10 = id(i + 1, j), v11 = id(i + 1, j + 1), v01 = id(i, j + 1);
      for (const TriangleMesh::Triangle t : {TriangleMesh::Triangle{v00, v10, v11}, TriangleMesh::Triangle{v00, v11, v01}}) {
        if (t[0] == t[1] || t[1] == t[2] || t[0] == t[2]) continue;
        tris.push_back(t);
      }
    }
  }
  return TriangleMesh(std::move(verts), std::move(tris), std::move(tags), domain);
}

TriangleMesh generate_disk_mesh(double radius, int rings) {
  if (rings < 1) throw Error(ErrorKind::InvalidArgument, "rings must be at least 1");
  if (!(radius > 0.0)) throw Error(ErrorKind::InvalidArgument, "radius must be positive");
  std::vector<Point2> verts{{0.0, 0.0}};
  std::vector<BoundaryTag> tags{BoundaryTag::Interior};
  std::vector<std::vector<int>> ring_ids{{0}};
  for (int k = 1; k <= rings; ++k) {
    std::vector<int> ids;
    const double r = radius * k / rings;
    const int count = 6 * k;
    for (int m = 0; m < count; ++m) {
      const double theta = 2.0 * std::numbers::pi * m / count;
      ids.push_back(static_cast<int>(verts.size()));
      verts.push_back(k == rings ? Point2{radius * std::cos(theta), radius * std::sin(theta)}
                                 : Point2{r * std::cos(theta), r * std::sin(theta)});
      tags.push_back(k == rings ? BoundaryTag::DiskRim : BoundaryTag::Interior);
    }
    ring_ids.push_back(std::move(ids));
  }

  std::vector<TriangleMesh::Triangle> tris;
  auto emit = [&](int a, int b, int c) {
    if (cross(verts[b] - verts[a], verts[c] - verts[a]) < 0.0) std::swap(b, c);
    tris.push_back({a, b, c});
  };
  for (int k = 1; k <= rings; ++k) {
    const auto& in = ring_ids[k - 1];
    const auto& out = ring_ids[k];
    const long ni = static_cast<long>(in.size());
    const long no = static_cast<long>(out.size());
    if (k == 1) {
      for (long j = 0; j < no; ++j) emit(0, out[j], out[(j + 1) % no]);
      continue;
    }
    long i = 0, j = 0;
    while (i < ni || j < no) {
      // Advance along whichever ring has the smaller next angle (exact integer comparison).
      const bool step_out = j < no && (i == ni || (j + 1) * ni <= (i + 1) * no);
      if (step_out) {
        emit(in[i % ni], out[j], out[(j + 1) % no]);
        ++j;
      } else {
        emit(in[i], out[j % no], in[(i + 1) % ni]);
        ++i;
      }
    }
  }
  return TriangleMesh(std::move(verts), std::move(tris), std::move(tags), DiskGeometry{radius});
}

namespace {

struct MidpointRule {
  const TriangleMesh& mesh;

  std::pair<Point2, BoundaryTag> operator()(int a, int b, bool on_boundary) const {
    const Point2 pa = mesh.vertices()[a];
    const Point2 pb = mesh.vertices()[b];
    Point2 mid = lerp(pa, pb, 0.5);
    if (!on_boundary) return {mid, BoundaryTag::Interior};
    const BoundaryTag ta = mesh.tags()[a];
    const BoundaryTag tb = mesh.tags()[b];

    if (const auto* disk = std::get_if<DiskGeometry>(&mesh.geometry())) {
      const double r = norm(mid);
      if (r > 0.0) mid = (disk->radius / r) * mid;
      return {mid, BoundaryTag::DiskRim};
    }
    if (const PlanarDomain* strip = mesh.strip()) {
      const Interval xr = strip->x_range();
      if (pa.x == xr.lo && pb.x == xr.lo) return {mid, BoundaryTag::LeftCap};
      if (pa.x == xr.hi && pb.x == xr.hi) return {mid, BoundaryTag::RightCap};
      BoundaryTag tag = ta;
      if (tb == BoundaryTag::LowerCurve || tb == BoundaryTag::UpperCurve) tag = tb;
      if (ta == BoundaryTag::LowerCurve || ta == BoundaryTag::UpperCurve) tag = ta;
      if (tag == BoundaryTag::LowerCurve) mid.y = strip->b_minus()(mid.x);
      if (tag == BoundaryTag::UpperCurve) mid.y = strip->b_plus()(mid.x);
      return {mid, tag};
    }
    return {mid, ta == tb ? ta : (ta != BoundaryTag::Interior ? ta : tb)};
  }
};

}  // namespace

TriangleMesh refine(const TriangleMesh& mesh) {
  std::vector<Point2> verts = mesh.vertices();
  std::vector<BoundaryTag> tags = mesh.tags();
  const auto use = edge_use(mesh.triangles());
  std::map<std::array<int, 2>, int> mid_index;
  const MidpointRule rule{mesh};
  for (const auto& [edge, count] : use) {
    auto [p, tag] = rule(edge[0], edge[1], count == 1);
    mid_index[edge] = static_cast<int>(verts.size());
    verts.push_back(p);
    tags.push_back(tag);
  }
  auto mid = [&](int a, int b) { return mid_index.at({std::min(a, b), std::max(a, b)}); };
  std::vector<TriangleMesh::Triangle> tris;
  tris.reserve(4 * mesh.triangle_count());
  for (const auto& t : mesh.triangles()) {
    const int ab = mid(t[0], t[1]), bc = mid(t[1], t[2]), ca = mid(t[2], t[0]);
    tris.push_back({t[0], ab, ca});
    tris.push_back({ab, t[1], bc});
    tris.push_back({ca, bc, t[2]});
    tris.push_back({ab, bc, ca});
  }
  return TriangleMesh(std::move(verts), std::move(tris), std::move(tags), mesh.geometry());
}

MeshQuality quality(const TriangleMesh& mesh) {
  MeshQuality q;
  q.triangle_count = mesh.triangle_count();
  q.min_angle = 180.0;
  const auto& v = mesh.vertices();
  for (const auto& t : mesh.triangles()) {
    for (int i = 0; i < 3; ++i) {
      const Point2 p = v[t[i]];
      const Point2 e1 = v[t[(i + 1) % 3]] - p;
      const Point2 e2 = v[t[(i + 2) % 3]] - p;
      q.h_max = std::max(q.h_max, norm(e1));
      const double angle = std::atan2(std::abs(cross(e1, e2)), dot(e1, e2)) * 180.0 / std::numbers::pi;
      q.min_angle = std::min(q.min_angle, angle);
    }
  }
  return q;
}

PointLocator::PointLocator(const TriangleMesh& mesh) : mesh_(&mesh) {
  const auto& v = mesh.vertices();
  Point2 lo = v.front(), hi = v.front();
  for (const Point2& p : v) {
    lo = {std::min(lo.x, p.x), std::min(lo.y, p.y)};
    hi = {std::max(hi.x, p.x), std::max(hi.y, p.y)};
  }
  const double w = std::max(hi.x - lo.x, 1e-300);
  const double h = std::max(hi.y - lo.y, 1e-300);
  const double n = static_cast<double>(mesh.triangle_count());
  cell_ = std::max(std::sqrt(w * h / n) * 2.0, std::max(w, h) / 4096.0);
  const double pad = 1e-9 * std::max(w, h);
  lo_ = {lo.x - pad, lo.y - pad};
  nx_ = static_cast<int>(std::floor((w + 2 * pad) / cell_)) + 1;
  ny_ = static_cast<int>(std::floor((h + 2 * pad) / cell_)) + 1;
  buckets_.assign(static_cast<std::size_t>(nx_) * ny_, {});
  const auto& tris = mesh.triangles();
  for (std::size_t t = 0; t < tris.size(); ++t) {
    double x0 = v[tris[t][0]].x, x1 = x0, y0 = v[tris[t][0]].y, y1 = y0;
    for (int k = 1; k < 3; ++k) {
      x0 = std::min(x0, v[tris[t][k]].x);
      x1 = std::max(x1, v[tris[t][k]].x);
      y0 = std::min(y0, v[tris[t][k]].y);
      y1 = std::max(y1, v[tris[t][k]].y);
    }
    const int i0 = std::clamp(static_cast<int>(std::floor((x0 - pad - lo_.x) / cell_)), 0, nx_ - 1);
    const int i1 = std::clamp(static_cast<int>(std::floor((x1 + pad - lo_.x) / cell_)), 0, nx_ - 1);
    const int j0 = std::clamp(static_cast<int>(std::floor((y0 - pad - lo_.y) / cell_)), 0, ny_ - 1);
    const int j1 = std::clamp(static_cast<int>(std::floor((y1 + pad - lo_.y) / cell_)), 0, ny_ - 1);
    for (int i = i0; i <= i1; ++i) {
      for (int j = j0; j <= j1; ++j) buckets_[static_cast<std::size_t>(i) * ny_ + j].push_back(t);
    }
  }
}

std::optional<PointLocator::Hit> PointLocator::locate(Point2 p, double tol) const {
  const int i = static_cast<int>(std::floor((p.x - lo_.x) / cell_));
  const int j = static_cast<int>(std::floor((p.y - lo_.y) / cell_));
  if (!(i >= 0 && i < nx_ && j >= 0 && j < ny_)) return std::nullopt;
  const auto& v = mesh_->vertices();
  std::optional<Hit> best;
  double best_score = -tol;
  for (std::size_t t : buckets_[static_cast<std::size_t>(i) * ny_ + j]) {
    const auto& tri = mesh_->triangles()[t];
    const auto& el = mesh_->elements()[t];
    Hit hit{t, {}};
    double score = 1.0;
    for (int k = 0; k < 3; ++k) {
      // phi_k is affine with gradient grad[k] and value 1 at its own vertex.
      hit.bary[k] = 1.0 + dot(el.grad[k], p - v[tri[k]]);
      score = std::min(score, hit.bary[k]);
    }
    if (score >= best_score) {
      best_score = score;
      best = hit;
      if (score >= 0.0) break;
    }
  }
  return best;
}

}  // namespace hgraph
