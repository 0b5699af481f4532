#include <benchmark/benchmark.h>

#include <vector>

#include "prodcurv/classifier.hpp"
#include "prodcurv/curvature.hpp"
#include "prodcurv/hypersurface.hpp"

using namespace prodcurv;

namespace {

FrameData bench_frame(int n) {
  const auto base = make_geodesic_sphere(make_space_form(+1, n), 0.9);
  return frame_data(base, sinh_profile(1.0), 0.2);
}

void BM_frame_data(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto base = make_geodesic_sphere(make_space_form(+1, n), 0.9);
  const Profile pr = sinh_profile(1.0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(frame_data(base, pr, 0.2));
  }
}
BENCHMARK(BM_frame_data)->Arg(4)->Arg(8)->Arg(16);

void BM_ricci_closed_form(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const SpaceForm sp = make_space_form(+1, n);
  const FrameData fd = bench_frame(n);
  for (auto _ : state) {
    double acc = 0.0;
    for (int i = 0; i < n; ++i) acc += ricci_closed_form(fd, sp, i, i);
    benchmark::DoNotOptimize(acc);
  }
}
BENCHMARK(BM_ricci_closed_form)->Arg(4)->Arg(8)->Arg(16);

void BM_ricci_by_contraction(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const SpaceForm sp = make_space_form(+1, n);
  const FrameData fd = bench_frame(n);
  for (auto _ : state) {
    double acc = 0.0;
    for (int i = 0; i < n; ++i) acc += ricci_by_contraction(fd, sp, i, i);
    benchmark::DoNotOptimize(acc);
  }
}
BENCHMARK(BM_ricci_by_contraction)->Arg(4)->Arg(8)->Arg(16);

void BM_curvature_report(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const SpaceForm sp = make_space_form(+1, n);
  const FrameData fd = bench_frame(n);
  for (auto _ : state) {
    benchmark::DoNotOptimize(curvature_report(fd, sp));
  }
}
BENCHMARK(BM_curvature_report)->Arg(4)->Arg(8)->Arg(16);

void BM_rotation_construction(benchmark::State& state) {
  const SpaceForm sp = make_space_form(+1, 4);
  std::vector<double> grid(static_cast<std::size_t>(state.range(0)));
  for (std::size_t i = 0; i < grid.size(); ++i) {
    grid[i] = -0.2 + 0.65 * static_cast<double>(i) / (grid.size() - 1);
  }
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        construct_constant_curvature_rotation(sp, 2.0, 0.5235987755982988, grid));
  }
}
BENCHMARK(BM_rotation_construction)->Arg(21)->Arg(201);

}  // namespace

BENCHMARK_MAIN();
