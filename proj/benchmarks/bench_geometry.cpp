#include <benchmark/benchmark.h>

#include <cmath>

#include "hgraph/lambda.hpp"
#include "hgraph/profile.hpp"

namespace {

using namespace hgraph;

ProfileCurve zigzag(int n, double offset) {
  ProfileCurve c;
  for (int i = 0; i <= n; ++i) {
    const double x = 4.0 * i / n;
    c.points.push_back({x, offset + 0.3 * std::sin(7.0 * x) + ((i % 2) ? 0.05 : -0.05)});
  }
  return c;
}

void BM_SetDistance(benchmark::State& state) {
  const auto n = static_cast<int>(state.range(0));
  const ProfileCurve a = zigzag(n, 0.0), b = zigzag(n, 1.0);
  for (auto _ : state) benchmark::DoNotOptimize(set_distance(a, b));
  state.SetComplexityN(n);
}
BENCHMARK(BM_SetDistance)->RangeMultiplier(2)->Range(64, 1024)->Complexity(benchmark::oNSquared);

void BM_ClipDecompose(benchmark::State& state) {
  const auto n = static_cast<int>(state.range(0));
  std::vector<Point2> lo, hi;
  for (int i = 0; i <= n; ++i) {
    const double x = 8.0 * i / n;
    lo.push_back({x, -0.4 + 0.2 * std::sin(3.0 * x)});
    hi.push_back({x, 0.4 + 0.2 * std::cos(2.0 * x)});
  }
  const PlanarDomain domain = build_generalized_strip(PiecewiseLinear(lo), PiecewiseLinear(hi), {0.0, 8.0});
  const Rectangle rect(1.5, 1.2, {4.0, 0.0});
  for (auto _ : state) benchmark::DoNotOptimize(clip_decompose(domain, rect).components.size());
}
BENCHMARK(BM_ClipDecompose)->Arg(64)->Arg(256)->Arg(1024);

}  // namespace
