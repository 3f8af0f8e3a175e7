#include <benchmark/benchmark.h>

#include "reinhardt/geometry.hpp"
#include "reinhardt/hamiltonian.hpp"
#include "reinhardt/hl_ode.hpp"
#include "reinhardt/sampling.hpp"
#include "reinhardt/symmetry.hpp"

using namespace reinhardt;

namespace {

RadialProfile ellipsoid_of_dim(int dim) {
  std::vector<double> a;
  for (int k = 0; k < dim; ++k) a.push_back(1.0 + 0.5 * k);
  return RadialProfile::ellipsoid(a);
}

void BM_CurvatureReport(benchmark::State& state) {
  const auto p = ellipsoid_of_dim(static_cast<int>(state.range(0)));
  const auto pts = sample_surface(p, 64, 1);
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(curvature_report(p, pts[i++ % pts.size()]));
}
BENCHMARK(BM_CurvatureReport)->DenseRange(2, 6);

void BM_VerifySymmetry(benchmark::State& state) {
  const auto p = RadialProfile::sphere(3, 1.0);
  for (auto _ : state) benchmark::DoNotOptimize(verify_symmetry(p, static_cast<std::size_t>(state.range(0)), 42));
}
BENCHMARK(BM_VerifySymmetry)->Arg(100)->Arg(500)->Unit(benchmark::kMillisecond);

void BM_FlowRk4(benchmark::State& state) {
  const auto p = ellipsoid_of_dim(3);
  const SurfacePoint q = sample_surface(p, 10, 2).back();
  FlowOptions opts;
  opts.compute_drift = false;
  for (auto _ : state) benchmark::DoNotOptimize(flow_numeric(p, q.z, 10.0, 1e-3, Integrator::rk4, opts));
}
BENCHMARK(BM_FlowRk4)->Unit(benchmark::kMillisecond);

void BM_CriticalPoints(benchmark::State& state) {
  const auto p = ellipsoid_of_dim(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(find_critical_points(p));
}
BENCHMARK(BM_CriticalPoints)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

void BM_IntegrateProfile(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(integrate_profile(1.0, 1e-3, 1.0 - 1e-3, -1.0, 2.0));
}
BENCHMARK(BM_IntegrateProfile);

}  // namespace
BENCHMARK_MAIN();
