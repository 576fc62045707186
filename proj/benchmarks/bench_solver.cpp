#include <benchmark/benchmark.h>

#include <cmath>

#include "hgraph/solver.hpp"

namespace {

using namespace hgraph;

std::vector<double> wavy(const TriangleMesh& mesh) {
  std::vector<double> u(mesh.vertex_count());
  for (std::size_t v = 0; v < u.size(); ++v) {
    const Point2 p = mesh.vertices()[v];
    u[v] = 0.1 * std::sin(3.0 * p.x) * std::cos(2.0 * p.y);
  }
  return u;
}

void BM_EnergyGradient(benchmark::State& state) {
  const auto problem = cylinder_problem(1.0, 0.4, 4.0, static_cast<int>(state.range(0)), 32);
  const auto u = wavy(*problem->mesh);
  for (auto _ : state) benchmark::DoNotOptimize(energy_gradient(*problem->mesh, u, 1.0));
  state.SetItemsProcessed(state.iterations() * static_cast<long>(problem->mesh->triangle_count()));
}
BENCHMARK(BM_EnergyGradient)->Arg(40)->Arg(80)->Arg(160);

void BM_HessianAssembly(benchmark::State& state) {
  const auto problem = cylinder_problem(1.0, 0.4, 4.0, static_cast<int>(state.range(0)), 32);
  const auto u = wavy(*problem->mesh);
  for (auto _ : state) benchmark::DoNotOptimize(energy_hessian(*problem->mesh, u, 1.0));
  state.SetItemsProcessed(state.iterations() * static_cast<long>(problem->mesh->triangle_count()));
}
BENCHMARK(BM_HessianAssembly)->Arg(40)->Arg(80)->Arg(160);

void BM_SolveCylinder(benchmark::State& state) {
  const auto problem = cylinder_problem(1.0, 0.4, 4.0, static_cast<int>(state.range(0)), 32);
  for (auto _ : state) benchmark::DoNotOptimize(solve_dirichlet(problem).grad_norm());
}
BENCHMARK(BM_SolveCylinder)->Arg(40)->Arg(80)->Unit(benchmark::kMillisecond);

void BM_SolveCap(benchmark::State& state) {
  const auto problem = cap_problem(1.0, 0.5, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(solve_dirichlet(problem).grad_norm());
}
BENCHMARK(BM_SolveCap)->Arg(20)->Arg(40)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
