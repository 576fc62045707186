#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>

#include "hgraph/error.hpp"
#include "hgraph/mesh.hpp"

namespace hgraph {

std::string format_decimal(double value) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", value);
  return buf;
}

void write_mesh(std::ostream& out, const TriangleMesh& mesh) {
  out << "vertices " << mesh.vertex_count() << " triangles " << mesh.triangle_count() << '\n';
  for (std::size_t i = 0; i < mesh.vertex_count(); ++i) {
    const Point2 p = mesh.vertices()[i];
    out << format_decimal(p.x) << ' ' << format_decimal(p.y) << ' ' << to_string(mesh.tags()[i]) << '\n';
  }
  for (const auto& t : mesh.triangles()) out << t[0] << ' ' << t[1] << ' ' << t[2] << '\n';
}

TriangleMesh read_mesh(std::istream& in) {
  std::string word1, word2;
  std::size_t nv = 0, nt = 0;
  if (!(in >> word1 >> nv >> word2 >> nt) || word1 != "vertices" || word2 != "triangles") {
    throw Error(ErrorKind::IoError, "bad mesh header");
  }
  std::vector<Point2> verts(nv);
  std::vector<BoundaryTag> tags(nv);
  for (std::size_t i = 0; i < nv; ++i) {
    std::string tag;
    if (!(in >> verts[i].x >> verts[i].y >> tag)) throw Error(ErrorKind::IoError, "truncated vertex block");
    const auto parsed = parse_boundary_tag(tag);
    if (!parsed) throw Error(ErrorKind::IoError, "unknown boundary tag '" + tag + "'");
    tags[i] = *parsed;
  }
  std::vector<TriangleMesh::Triangle> tris(nt);
  for (auto& t : tris) {
    if (!(in >> t[0] >> t[1] >> t[2])) throw Error(ErrorKind::IoError, "truncated triangle block");
  }
  return TriangleMesh(std::move(verts), std::move(tris), std::move(tags));
}

}  // namespace hgraph
