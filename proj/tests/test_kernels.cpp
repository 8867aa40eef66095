#include <doctest.h>

#include <cstring>
#include <random>
#include <stdexcept>

#include "setexp/kernels.hpp"
#include "setexp/set_expectation.hpp"

using namespace setexp;

TEST_CASE("serial and parallel directional offsets are identical") {
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> u(-1, 1);
  std::vector<ConvexSet2> v;
  for (int i = 0; i < 8; ++i) {
    std::vector<Vec2> pts;
    for (int k = 0; k < 9; ++k) pts.push_back({u(rng), u(rng)});
    v.push_back(ConvexSet2::from_points(pts));
  }
  const RandomConvexSet x(ScenarioSpace::uniform(8), v, Cone2::zero());
  const auto m = RepresentingFamily::avar(0.4);
  const auto grid = DirectionGrid::uniform(3600);
  auto f = [&](Vec2 d) {
    std::vector<double> h;
    for (const auto& s : x.values()) h.push_back(support(s, d));
    return e_value(m, x.space().probs(), h);
  };
  const auto a = kernels::directional_offsets_serial(grid.directions(), f);
  const auto b = kernels::directional_offsets_parallel(grid.directions(), f);
  REQUIRE(a.size() == b.size());
  CHECK(std::memcmp(a.data(), b.data(), a.size() * sizeof(double)) == 0);
}

TEST_CASE("serial and parallel gather are identical and ordered") {
  auto f = [](std::size_t i) {
    std::vector<Vec2> out;
    for (std::size_t k = 0; k <= i % 5; ++k) out.push_back({double(i), double(k)});
    return out;
  };
  const auto a = kernels::gather_serial<Vec2>(300, f);
  const auto b = kernels::gather_parallel<Vec2>(300, f);
  CHECK(a == b);
  CHECK(a.front() == Vec2{0, 0});
  CHECK(a.back().x == 299.0);
}

TEST_CASE("parallel kernels rethrow the first failure") {
  std::vector<Vec2> dirs(1000, Vec2{1, 0});
  auto f = [&](Vec2) -> double { throw std::runtime_error("boom"); };
  CHECK_THROWS_AS(kernels::directional_offsets_parallel(dirs, f), std::runtime_error);
  auto g = [](std::size_t i) -> std::vector<int> {
    if (i == 17 || i == 500) throw std::out_of_range(std::to_string(i));
    return {int(i)};
  };
  try {
    kernels::gather_parallel<int>(1000, g);
    FAIL("no exception");
  } catch (const std::out_of_range& e) {
    CHECK(std::string(e.what()) == "17");
  }
}

TEST_CASE("grid results do not depend on the kernel path") {
  std::mt19937_64 rng(2);
  std::uniform_real_distribution<double> u(-1, 1);
  std::vector<ConvexSet2> v;
  for (int i = 0; i < 3; ++i)
    v.push_back(ConvexSet2::from_points({{u(rng), u(rng)}, {u(rng), u(rng)}, {u(rng), u(rng)}}));
  const RandomConvexSet x(ScenarioSpace::uniform(3), v, Cone2::zero());
  const auto spec = NonlinearSpec::make(RepresentingFamily::avar(0.5), Cone2::zero(), 3600);
  const auto a = sublinear(x, spec);
  const auto b = sublinear(x, spec);
  CHECK(a.vertices() == b.vertices());
}
