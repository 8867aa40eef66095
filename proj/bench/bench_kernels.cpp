#include <benchmark/benchmark.h>

#include <random>

#include "setexp/kernels.hpp"
#include "setexp/set_expectation.hpp"

using namespace setexp;

namespace {

RandomConvexSet random_polygons(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::vector<ConvexSet2> v;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Vec2> pts;
    for (int k = 0; k < 12; ++k) pts.push_back({u(rng), u(rng)});
    v.push_back(ConvexSet2::from_points(pts));
  }
  return {ScenarioSpace::uniform(n), std::move(v), Cone2::zero()};
}

struct Setup {
  RandomConvexSet x = random_polygons(32, 7);
  RepresentingFamily m = RepresentingFamily::avar(0.3);
  DirectionGrid grid;
  explicit Setup(std::size_t g) : grid(DirectionGrid::uniform(g)) {}

  double offset(Vec2 u) const {
    std::vector<double> h(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) h[i] = support(x[i], u);
    return e_value(m, x.space().probs(), h);
  }
};

void BM_offsets_serial(benchmark::State& st) {
  const Setup s(static_cast<std::size_t>(st.range(0)));
  for (auto _ : st) {
    auto v = kernels::directional_offsets_serial(s.grid.directions(), [&](Vec2 u) { return s.offset(u); });
    benchmark::DoNotOptimize(v.data());
  }
}

void BM_offsets_parallel(benchmark::State& st) {
  const Setup s(static_cast<std::size_t>(st.range(0)));
  for (auto _ : st) {
    auto v = kernels::directional_offsets_parallel(s.grid.directions(), [&](Vec2 u) { return s.offset(u); });
    benchmark::DoNotOptimize(v.data());
  }
}

void BM_gather_serial(benchmark::State& st) {
  const std::size_t n = static_cast<std::size_t>(st.range(0));
  for (auto _ : st) {
    auto v = kernels::gather_serial<Vec2>(n, [&](std::size_t i) {
      std::vector<Vec2> pts;
      for (std::size_t j = 0; j < n; ++j) pts.push_back({std::sin(0.1 * i + j), std::cos(0.3 * j - i)});
      return ConvexSet2::from_points(std::move(pts)).vertices();
    });
    benchmark::DoNotOptimize(v.data());
  }
}

void BM_gather_parallel(benchmark::State& st) {
  const std::size_t n = static_cast<std::size_t>(st.range(0));
  for (auto _ : st) {
    auto v = kernels::gather_parallel<Vec2>(n, [&](std::size_t i) {
      std::vector<Vec2> pts;
      for (std::size_t j = 0; j < n; ++j) pts.push_back({std::sin(0.1 * i + j), std::cos(0.3 * j - i)});
      return ConvexSet2::from_points(std::move(pts)).vertices();
    });
    benchmark::DoNotOptimize(v.data());
  }
}

}  // namespace

BENCHMARK(BM_offsets_serial)->Arg(360)->Arg(3600);
BENCHMARK(BM_offsets_parallel)->Arg(360)->Arg(3600);
BENCHMARK(BM_gather_serial)->Arg(200)->Arg(800);
BENCHMARK(BM_gather_parallel)->Arg(200)->Arg(800);

BENCHMARK_MAIN();
