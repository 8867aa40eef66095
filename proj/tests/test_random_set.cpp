#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "setexp/errors.hpp"
#include "setexp/random_set.hpp"

using namespace setexp;

namespace {

const Cone2 lower = Cone2::lower_quadrant();
const ConvexSet2 unit_square = ConvexSet2::box({0, 0}, {1, 1});

std::vector<Vec2> grid24() {
  std::vector<Vec2> d;
  for (int i = 0; i < 24; ++i) d.push_back(from_angle(kTwoPi * i / 24));
  return d;
}

RandomConvexSet random_polytopes(std::mt19937_64& rng, std::size_t n) {
  std::vector<ConvexSet2> v;
  for (std::size_t i = 0; i < n; ++i) v.push_back(ConvexSet2::from_points(oracle::random_points(rng, 5)));
  return {ScenarioSpace(oracle::random_probs(rng, n)), std::move(v), Cone2::zero()};
}

}  // namespace

TEST_CASE("random sets validate their values") {
  const auto s = ScenarioSpace::uniform(2);
  CHECK_THROWS_AS(RandomConvexSet(s, {unit_square, ConvexSet2::empty_set()}, Cone2::zero()), DomainError);
  CHECK_THROWS_AS(RandomConvexSet(s, {unit_square, unit_square}, lower), DomainError);
  CHECK_THROWS_AS(RandomConvexSet(s, {unit_square}, Cone2::zero()), DomainError);
  CHECK_THROWS_AS(RandomConvexSet::deterministic(s, ConvexSet2::whole_plane(), Cone2::full()), DomainError);
  CHECK_NOTHROW(RandomConvexSet(
      s, {ConvexSet2::point({0, 0}, lower), ConvexSet2::point({1, 0}, Cone2::halfplane({1, 1}))}, lower));
}

TEST_CASE("support random variable examples") {
  const auto s = ScenarioSpace::uniform(2);
  const RandomVector2 xi(s, {{0, 0}, {1, 2}});
  const auto x = RandomConvexSet::translate(xi, ConvexSet2::point({}, lower), lower);
  const RandomVector2 zeta(s, {unit({1, 1}), {0, 1}});
  const auto h = support_rv(x, zeta);
  CHECK(h[0] == doctest::Approx(0.0));
  CHECK(h[1] == doctest::Approx(2.0));

  const RandomVector2 eta(s, {{1, 0}, {0, 1}});
  const RandomScalar beta(s, {2.0, -1.0});
  const auto hx = RandomConvexSet::halfspace(eta, beta);
  const auto at_eta = support_rv(hx, eta);
  CHECK(at_eta[0] == doctest::Approx(2.0));
  CHECK(at_eta[1] == doctest::Approx(-1.0));
  const auto off = support_rv(hx, RandomVector2(s, {{0, 1}, {1, 0}}));
  CHECK(is_inf(off[0]));
  CHECK(is_inf(off[1]));
}

TEST_CASE("selection expectation examples") {
  const auto s = ScenarioSpace::uniform(2);
  const RandomConvexSet x(s, {ConvexSet2::point({0, 0}), ConvexSet2::from_points({{0, 0}, {2, 0}})}, Cone2::zero());
  CHECK(approx_equal(selection_expectation(x), ConvexSet2::from_points({{0, 0}, {1, 0}})));
  const RandomVector2 xi(s, {{1, 2}, {3, -4}});
  CHECK(approx_equal(selection_expectation(RandomConvexSet::translate(xi, ConvexSet2::point({}), Cone2::zero())),
                     ConvexSet2::point({2, -1})));
  const auto h = RandomConvexSet::halfspace(RandomVector2(s, {{1, 0}, {0, 1}}), RandomScalar::constant(s, 0.0));
  CHECK(selection_expectation(h).is_whole_plane());
}

TEST_CASE("conditional selection expectation examples") {
  std::mt19937_64 rng(4);
  const auto x = random_polytopes(rng, 3);
  const auto one = conditional_selection_expectation(x, Partition::trivial(3));
  for (const auto& v : one.values()) CHECK(approx_equal(v, selection_expectation(x), 1e-12));
  const auto id = conditional_selection_expectation(x, Partition::discrete(3));
  for (std::size_t i = 0; i < 3; ++i) CHECK(approx_equal(id[i], x[i], 1e-12));
  const auto part = conditional_selection_expectation(x, Partition(3, {{0, 1}, {2}}));
  const double p0 = x.space().prob(0), p1 = x.space().prob(1);
  const auto avg = minkowski_sum(scale(x[0], p0 / (p0 + p1)), scale(x[1], p1 / (p0 + p1)));
  CHECK(approx_equal(part[0], avg, 1e-12));
  CHECK(approx_equal(part[1], avg, 1e-12));
  CHECK(approx_equal(part[2], x[2], 1e-12));
}

TEST_CASE("Firey expectation") {
  std::mt19937_64 rng(6);
  const auto s = ScenarioSpace::uniform(2);
  const auto x = RandomConvexSet::scaled_by(RandomScalar(s, {1.0, 3.0}), unit_square);
  CHECK(hausdorff(firey_expectation(x, 2.0), scale(unit_square, std::sqrt(5.0))) < 1e-9);
  CHECK(hausdorff(firey_expectation(x, 1.0), selection_expectation(x)) < 1e-9);
  const auto f = ConvexSet2::from_points({{-1, -1}, {2, 0}, {0, 1.5}});
  const auto det = RandomConvexSet::deterministic(s, f, Cone2::zero());
  CHECK(hausdorff(firey_expectation(det, 3.0), f) < 1e-9);
  const auto lowerset =
      RandomConvexSet::translate(RandomVector2(s, {{1, 1}, {2, 0.5}}), ConvexSet2::point({}, lower), lower);
  CHECK(hausdorff(firey_expectation(lowerset, 1.0), selection_expectation(lowerset)) < 1e-9);
  const auto off = RandomConvexSet::deterministic(s, unit_square.translated({2, 2}), Cone2::zero());
  CHECK_THROWS_AS(firey_expectation(off, 2.0), DomainError);
  CHECK_THROWS_AS(firey_expectation(x, 0.5), DomainError);
  for (int rep = 0; rep < 10; ++rep) {
    std::vector<ConvexSet2> v;
    for (int i = 0; i < 3; ++i) {
      auto pts = oracle::random_points(rng, 4);
      pts.push_back({0, 0});
      v.push_back(ConvexSet2::from_points(pts));
    }
    const RandomConvexSet r(ScenarioSpace::uniform(3), v, Cone2::zero());
    CHECK(hausdorff(firey_expectation(r, 1.0), selection_expectation(r)) < 1e-9);
    CHECK(contains(firey_expectation(r, 2.0), selection_expectation(r), 1e-9));  // power means increase
  }
}

TEST_CASE("fixed points and support set examples") {
  const auto s = ScenarioSpace::uniform(2);
  const RandomConvexSet x(s, {ConvexSet2::box({0, 0}, {2, 1}), ConvexSet2::box({1, 0}, {3, 1})}, Cone2::zero());
  CHECK(approx_equal(fixed_points(x), ConvexSet2::box({1, 0}, {2, 1})));
  const RandomConvexSet far(s, {unit_square, unit_square.translated({3, 0})}, Cone2::zero());
  CHECK(fixed_points(far).empty());
  const auto det = RandomConvexSet::deterministic(s, unit_square, Cone2::zero());
  CHECK(approx_equal(fixed_points(det), unit_square));
  CHECK(approx_equal(support_set(det), unit_square));
  const RandomConvexSet two(s, {unit_square, unit_square.translated({2, 0})}, Cone2::zero());
  CHECK(approx_equal(support_set(two), ConvexSet2::box({0, 0}, {3, 1})));
  const RandomConvexSet pts(s, {ConvexSet2::point({0, 0}), ConvexSet2::point({1, 2})}, Cone2::zero());
  CHECK(approx_equal(support_set(pts), ConvexSet2::from_points({{0, 0}, {1, 2}})));
}

TEST_CASE("linearity and support identity of the selection expectation") {
  std::mt19937_64 rng(12);
  for (int rep = 0; rep < 60; ++rep) {
    const std::size_t n = 1 + rep % 4;
    auto x = random_polytopes(rng, n);
    std::vector<ConvexSet2> yv;
    for (std::size_t i = 0; i < n; ++i) yv.push_back(ConvexSet2::from_points(oracle::random_points(rng, 4)));
    const RandomConvexSet y(x.space(), yv, Cone2::zero());
    const auto ex = selection_expectation(x), ey = selection_expectation(y);
    CHECK(approx_equal(selection_expectation(x + y), minkowski_sum(ex, ey), 1e-9));
    for (int k = 0; k < 720; ++k) {
      const Vec2 u = from_angle(kTwoPi * k / 720);
      CHECK(support(ex, u) == doctest::Approx(support_rv(x, u).expectation()).epsilon(1e-9));
    }
    const auto fp = fixed_points(x);
    if (!fp.empty()) CHECK(contains(ex, fp));
    CHECK(contains(support_set(x), ex));
    // selections built from vertices and edge midpoints
    std::vector<Vec2> sel;
    for (std::size_t i = 0; i < n; ++i) {
      const auto& v = x[i].vertices();
      const std::size_t a = rng() % v.size(), b = rng() % v.size();
      sel.push_back(0.5 * (v[a] + v[b]));
    }
    const Selection s(x, RandomVector2(x.space(), sel));
    CHECK(contains_point(ex, s.vector().expectation()));
  }
}

TEST_CASE("selections must stay inside") {
  const auto s = ScenarioSpace::uniform(2);
  const auto x = RandomConvexSet::deterministic(s, unit_square, Cone2::zero());
  CHECK_THROWS_AS(Selection(x, RandomVector2(s, {{0.5, 0.5}, {2, 2}})), DomainError);
}

TEST_CASE("scenario-wise support comparison implies almost sure inclusion") {
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> off(0.5, 1.5);
  const auto dirs = grid24();
  int implied = 0;
  for (int rep = 0; rep < 40; ++rep) {
    const std::size_t n = 1 + rep % 3;
    std::vector<ConvexSet2> xv, yv;
    for (std::size_t i = 0; i < n; ++i) {
      std::vector<double> o(24);
      for (auto& v : o) v = off(rng);
      xv.push_back(from_support(dirs, o));
      if (rng() % 2) {
        std::vector<Vec2> inside;
        for (Vec2 v : xv.back().vertices()) inside.push_back(0.9 * v);
        yv.push_back(ConvexSet2::from_points(inside));
      } else {
        yv.push_back(ConvexSet2::from_points(oracle::random_points(rng, 4, 1.2)));
      }
    }
    const auto sp = ScenarioSpace(oracle::random_probs(rng, n));
    const RandomConvexSet x(sp, xv, Cone2::zero()), y(sp, yv, Cone2::zero());
    bool dominated = true;
    std::vector<std::size_t> idx(n, 0);
    while (dominated) {
      std::vector<Vec2> z;
      for (auto i : idx) z.push_back(dirs[i]);
      const RandomVector2 zeta(sp, z);
      if (support_rv(y, zeta).expectation() > support_rv(x, zeta).expectation() + 1e-12) dominated = false;
      std::size_t k = 0;
      while (k < n && ++idx[k] == dirs.size()) idx[k++] = 0;
      if (k == n) break;
    }
    bool inside = true;
    for (std::size_t i = 0; i < n; ++i) inside = inside && contains(x[i], y[i], 1e-9);
    CHECK(dominated == inside);
    implied += dominated;
  }
  CHECK(implied > 5);
}
