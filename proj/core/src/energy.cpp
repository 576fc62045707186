#include <cmath>

#include "hgraph/error.hpp"
#include "hgraph/solver.hpp"

namespace hgraph {

namespace {

void check_size(const TriangleMesh& mesh, std::span<const double> u) {
  if (u.size() != mesh.vertex_count()) throw Error(ErrorKind::InvalidArgument, "nodal vector size mismatch");
}

Point2 element_gradient(const TriangleMesh& mesh, std::size_t t, std::span<const double> u) {
  const auto& tri = mesh.triangles()[t];
  const auto& el = mesh.elements()[t];
  return u[tri[0]] * el.grad[0] + u[tri[1]] * el.grad[1] + u[tri[2]] * el.grad[2];
}

}  // namespace

double energy(const TriangleMesh& mesh, std::span<const double> u, double H) {
  check_size(mesh, u);
  double e = 0.0;
  for (std::size_t t = 0; t < mesh.triangle_count(); ++t) {
    const auto& tri = mesh.triangles()[t];
    const Point2 g = element_gradient(mesh, t, u);
    const double mean = (u[tri[0]] + u[tri[1]] + u[tri[2]]) / 3.0;
    e += mesh.elements()[t].area * (std::sqrt(1.0 + dot(g, g)) + 2.0 * H * mean);
  }
  return e;
}

std::vector<double> energy_gradient(const TriangleMesh& mesh, std::span<const double> u, double H) {
  check_size(mesh, u);
  std::vector<double> grad(mesh.vertex_count(), 0.0);
  for (std::size_t t = 0; t < mesh.triangle_count(); ++t) {
    const auto& tri = mesh.triangles()[t];
    const auto& el = mesh.elements()[t];
    const Point2 g = element_gradient(mesh, t, u);
    const double w = std::sqrt(1.0 + dot(g, g));
    for (int i = 0; i < 3; ++i) grad[tri[i]] += el.area * (dot(g, el.grad[i]) / w + 2.0 * H / 3.0);
  }
  return grad;
}

Eigen::SparseMatrix<double> energy_hessian(const TriangleMesh& mesh, std::span<const double> u, double /*H*/) {
  check_size(mesh, u);
  std::vector<Eigen::Triplet<double>> triplets;
  triplets.reserve(9 * mesh.triangle_count());
  for (std::size_t t = 0; t < mesh.triangle_count(); ++t) {
    const auto& tri = mesh.triangles()[t];
    const auto& el = mesh.elements()[t];
    const Point2 g = element_gradient(mesh, t, u);
    const double w2 = 1.0 + dot(g, g);
    const double w = std::sqrt(w2);
    const double w3 = w2 * w;
    std::array<double, 3> gp{};
    for (int i = 0; i < 3; ++i) gp[i] = dot(g, el.grad[i]);
    for (int i = 0; i < 3; ++i) {
      for (int j = i; j < 3; ++j) {
        const double k = el.area * (dot(el.grad[i], el.grad[j]) / w - gp[i] * gp[j] / w3);
        triplets.emplace_back(tri[i], tri[j], k);
        if (j != i) triplets.emplace_back(tri[j], tri[i], k);
      }
    }
  }
  const auto n = static_cast<Eigen::Index>(mesh.vertex_count());
  Eigen::SparseMatrix<double> hess(n, n);
  hess.setFromTriplets(triplets.begin(), triplets.end());
  return hess;
}

std::vector<double> lumped_areas(const TriangleMesh& mesh) {
  std::vector<double> lumped(mesh.vertex_count(), 0.0);
  for (std::size_t t = 0; t < mesh.triangle_count(); ++t) {
    for (int v : mesh.triangles()[t]) lumped[v] += mesh.elements()[t].area / 3.0;
  }
  return lumped;
}

double max_slope(const TriangleMesh& mesh, std::span<const double> u) {
  check_size(mesh, u);
  double s = 0.0;
  for (std::size_t t = 0; t < mesh.triangle_count(); ++t) {
    const double n = norm(element_gradient(mesh, t, u));
    if (!std::isfinite(n)) return n;
    s = std::max(s, n);
  }
  return s;
}

}  // namespace hgraph
