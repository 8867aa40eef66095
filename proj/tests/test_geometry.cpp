#include <doctest.h>

#include <algorithm>
#include <random>

#include "oracles.hpp"
#include "setexp/errors.hpp"
#include "setexp/geometry.hpp"

using namespace setexp;

namespace {

const ConvexSet2 unit_square = ConvexSet2::box({0, 0}, {1, 1});
const Cone2 lower = Cone2::lower_quadrant();

bool same_vertices(const ConvexSet2& s, std::vector<Vec2> expect, double tol = 1e-12) {
  return approx_equal(s, ConvexSet2::from_points(expect, s.recession()), tol) && s.vertices().size() == expect.size();
}

ConvexSet2 random_set(std::mt19937_64& rng, int kind) {
  auto pts = oracle::random_points(rng, 1 + static_cast<int>(rng() % 7));
  switch (kind % 4) {
    case 0:
      return ConvexSet2::from_points(pts);
    case 1:
      return ConvexSet2::from_points(pts, lower);
    case 2:
      return ConvexSet2::from_points(pts, Cone2::wedge({-2, 1}, {1, -2}));
    default:
      return ConvexSet2::from_points(pts, Cone2::ray({0.6, -0.8}));
  }
}

}  // namespace

TEST_CASE("cones: kinds, hull and polar") {
  CHECK(approx_equal(polar_cone(lower), Cone2::upper_quadrant()));
  CHECK(polar_cone(Cone2::zero()).is_full());
  CHECK(polar_cone(Cone2::full()).kind() == Cone2::Kind::zero);
  const Cone2 pr = polar_cone(Cone2::ray({1, 0}));
  CHECK(pr.kind() == Cone2::Kind::halfplane);
  CHECK(pr.contains(Vec2{-1, 5}));
  CHECK_FALSE(pr.contains(Vec2{0.1, 5}));
  CHECK_THROWS_AS(Cone2::wedge({1, 0}, {-1, 0}), DomainError);
  CHECK_THROWS_AS(Cone2::wedge({1, 0}, {0, -1}), DomainError);  // 270 degree sweep

  std::vector<Vec2> g{{1, 0}, {0, 1}, {1, 1}};
  CHECK(approx_equal(Cone2::hull(g), Cone2::upper_quadrant()));
  std::vector<Vec2> l{{1, 1}, {-1, -1}};
  CHECK(Cone2::hull(l).kind() == Cone2::Kind::line);
  std::vector<Vec2> h{{1, 0}, {0, 1}, {-1, 0}};
  CHECK(Cone2::hull(h).kind() == Cone2::Kind::halfplane);
  std::vector<Vec2> f{{1, 0}, {0, 1}, {-1, -1}};
  CHECK(Cone2::hull(f).is_full());

  for (const Cone2& c : {Cone2::zero(), Cone2::ray({0.6, 0.8}), Cone2::line({1, 2}), lower,
                         Cone2::wedge({-2, 1}, {1, -2}), Cone2::halfplane({1, 1})})
    CHECK(approx_equal(polar_cone(polar_cone(c)), c));
}

TEST_CASE("support examples") {
  CHECK(support(unit_square, {0, 1}) == 1.0);
  const auto a = ConvexSet2::point({1, 2}, lower);
  CHECK(support(a, unit({1, 1})) == doctest::Approx(3.0 / std::sqrt(2.0)));
  CHECK(is_inf(support(a, unit({1, -1}))));
  CHECK_THROWS_AS(support(ConvexSet2::empty_set(), {1, 0}), DomainError);
}

TEST_CASE("minkowski sum and scaling examples") {
  CHECK(same_vertices(minkowski_sum(unit_square, unit_square), {{0, 0}, {2, 0}, {2, 2}, {0, 2}}));
  const auto s = minkowski_sum(ConvexSet2::point({1, 0}, lower), ConvexSet2::point({0, 1}, lower));
  CHECK(approx_equal(s, ConvexSet2::point({1, 1}, lower)));
  CHECK(minkowski_sum(unit_square, ConvexSet2::empty_set()).empty());
  CHECK(approx_equal(scale(unit_square, 2.0), ConvexSet2::box({0, 0}, {2, 2})));
  CHECK(approx_equal(scale(unit_square, 1.0), unit_square));
  CHECK(approx_equal(scale(ConvexSet2::point({2, 2}, lower), 0.5), ConvexSet2::point({1, 1}, lower)));
  CHECK_THROWS_AS(scale(unit_square, 0.0), DomainError);
  CHECK_THROWS_AS(scale(unit_square, -1.0), DomainError);
}

TEST_CASE("half-plane intersection examples") {
  std::vector<HalfSpace2> sq{{{1, 0}, 1}, {{-1, 0}, 0}, {{0, 1}, 1}, {{0, -1}, 0}};
  CHECK(approx_equal(intersect_halfspaces(sq), unit_square, 1e-12));
  std::vector<HalfSpace2> bad{{{1, 0}, 0}, {{-1, 0}, -1}};
  CHECK(intersect_halfspaces(bad).empty());

  std::vector<HalfSpace2> dense;
  for (int i = 0; i < 3600; ++i) {
    const Vec2 u = from_angle(kTwoPi * i / 3600);
    dense.push_back({u, support(unit_square, u)});
  }
  const auto r = intersect_halfspaces(dense);
  CHECK(hausdorff(r, unit_square) <= 1e-3);
  CHECK(oracle::sampled_hausdorff(r, unit_square) <= 1e-3);

  std::vector<HalfSpace2> one{{{1, 1}, 2}};
  const auto hp = intersect_halfspaces(one);
  CHECK(hp.recession().kind() == Cone2::Kind::halfplane);
  CHECK(support(hp, unit({1, 1})) == doctest::Approx(std::sqrt(2.0)));
  std::vector<HalfSpace2> slab{{{0, 1}, 1}, {{0, -1}, 1}};
  const auto sl = intersect_halfspaces(slab);
  CHECK(sl.recession().kind() == Cone2::Kind::line);
  CHECK(support(sl, {0, -1}) == doctest::Approx(1.0));
  std::vector<HalfSpace2> all{{{1, 0}, kInf}};
  CHECK(intersect_halfspaces(all).is_whole_plane());
  std::vector<HalfSpace2> quad{{{1, 0}, 3}, {{0, 1}, -1}};
  CHECK(approx_equal(intersect_halfspaces(quad), ConvexSet2::point({3, -1}, lower)));
}

TEST_CASE("containment examples") {
  const auto big = ConvexSet2::box({0, 0}, {2, 2});
  CHECK(contains(big, unit_square));
  CHECK_FALSE(contains(unit_square, big));
  CHECK(contains(unit_square, ConvexSet2::empty_set()));
  CHECK_FALSE(contains(unit_square, ConvexSet2::point({0, 0}, lower)));
  CHECK(contains(ConvexSet2::point({1, 1}, lower), ConvexSet2::point({0, 0}, lower)));
  CHECK(contains_point(unit_square, {0.5, 1.0}));
  CHECK_FALSE(contains_point(unit_square, {0.5, 1.1}));
}

TEST_CASE("hausdorff examples") {
  CHECK(hausdorff(unit_square, ConvexSet2::box({0, 0}, {2, 2})) == doctest::Approx(std::sqrt(2.0)));
  CHECK(hausdorff(unit_square, unit_square) == 0.0);
  CHECK(hausdorff(ConvexSet2::point({0, 0}, lower), ConvexSet2::point({1, 0}, lower)) == doctest::Approx(1.0));
  CHECK_THROWS_AS(hausdorff(unit_square, ConvexSet2::point({0, 0}, lower)), DomainError);
}

TEST_CASE("convex hull examples") {
  std::vector<ConvexSet2> pts{ConvexSet2::point({0, 0}), ConvexSet2::point({1, 1})};
  CHECK(same_vertices(convex_hull(pts), {{0, 0}, {1, 1}}));
  std::vector<ConvexSet2> sq{unit_square, unit_square.translated({2, 0})};
  CHECK(same_vertices(convex_hull(sq), {{0, 0}, {3, 0}, {3, 1}, {0, 1}}));
  std::vector<ConvexSet2> one{unit_square};
  CHECK(approx_equal(convex_hull(one), unit_square));
  std::vector<ConvexSet2> mixed{ConvexSet2::point({0, 0}, Cone2::ray({1, 0})),
                                ConvexSet2::point({0, 0}, Cone2::ray({0, 1}))};
  CHECK(approx_equal(convex_hull(mixed).recession(), Cone2::upper_quadrant()));
}

TEST_CASE("direction grids") {
  const auto g = DirectionGrid::uniform(3600);
  CHECK(g.size() == 3600);
  const auto q = DirectionGrid::uniform(3600, Cone2::upper_quadrant());
  CHECK(q.directions().front() == Vec2{1, 0});
  CHECK(q.directions().back() == Vec2{0, 1});
  for (Vec2 u : q.directions()) CHECK(Cone2::upper_quadrant().contains(u, 1e-15));
  const Cone2 w = polar_cone(Cone2::wedge({-2, 1}, {1, -2}));
  const auto gw = DirectionGrid::uniform(360, w);
  CHECK(std::abs(cross(gw.directions().front(), w.d0())) < 1e-15);
  CHECK(std::abs(cross(gw.directions().back(), w.d1())) < 1e-15);
  std::vector<Vec2> extra{unit({1, 3}), unit({-1, -1})};
  const auto aug = q.augmented(extra);
  CHECK(aug.size() == q.size() + 1);  // the second direction lies outside
}

TEST_CASE("support is sublinear and additive over sums") {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> ang(0.0, kTwoPi);
  for (int rep = 0; rep < 300; ++rep) {
    const auto a = random_set(rng, rep);
    const auto b = random_set(rng, rep / 4);
    const auto s = minkowski_sum(a, b);
    for (int k = 0; k < 10; ++k) {
      const Vec2 u = from_angle(ang(rng)), v = 0.7 * from_angle(ang(rng));
      const double huv = support(a, u + v), hu = support(a, u), hv = support(a, v);
      if (!is_inf(hu) && !is_inf(hv)) CHECK(huv <= hu + hv + 1e-9);
      const double hs = support(s, u), ha = support(a, u), hb = support(b, u);
      if (is_inf(ha) || is_inf(hb))
        CHECK(is_inf(hs));
      else
        CHECK(hs == doctest::Approx(ha + hb).epsilon(1e-9));
    }
  }
}

TEST_CASE("round trip through supporting half-planes") {
  std::mt19937_64 rng(8);
  for (int rep = 0; rep < 300; ++rep) {
    const auto a = random_set(rng, rep);
    const auto hs = a.halfspaces();
    const auto b = intersect_halfspaces(hs);
    CHECK(approx_equal(a, b, 1e-9));
  }
}

TEST_CASE("hausdorff zero iff mutual containment") {
  std::mt19937_64 rng(9);
  for (int rep = 0; rep < 200; ++rep) {
    const auto a = random_set(rng, rep);
    const auto b = rep % 2 ? a.translated({0.0, 0.0}) : random_set(rng, rep);
    if (!approx_equal(a.recession(), b.recession())) continue;
    const double d = hausdorff(a, b);
    const bool both = contains(a, b, 0.0) && contains(b, a, 0.0);
    CHECK((d == 0.0) == both);
    CHECK(d == doctest::Approx(oracle::sampled_hausdorff(a, b, 40000)).epsilon(1e-4));
  }
}

TEST_CASE("intersection and hull agree with brute force point tests") {
  std::mt19937_64 rng(21);
  std::uniform_real_distribution<double> u(-1.5, 1.5);
  for (int rep = 0; rep < 100; ++rep) {
    const auto a = random_set(rng, 0), b = random_set(rng, 0);
    const auto i = intersect(a, b);
    std::vector<ConvexSet2> parts{a, b};
    const auto h = convex_hull(parts);
    for (int k = 0; k < 200; ++k) {
      const Vec2 p{u(rng), u(rng)};
      const bool in_a = contains_point(a, p, 0.0), in_b = contains_point(b, p, 0.0);
      if (in_a && in_b) CHECK(contains_point(i, p, 1e-9));
      if (in_a || in_b) CHECK(contains_point(h, p, 1e-9));
    }
    for (Vec2 v : a.vertices()) {
      for (Vec2 w : b.vertices()) {
        const Vec2 mid = 0.5 * (v + w);
        CHECK(contains_point(h, mid, 1e-9));
      }
    }
  }
}

TEST_CASE("half-plane intersection decides emptiness like pairwise vertex search") {
  std::mt19937_64 rng(10);
  std::uniform_real_distribution<double> ang(0, kTwoPi), off(-0.5, 1.0);
  int empties = 0;
  for (int rep = 0; rep < 2000; ++rep) {
    std::vector<HalfSpace2> hs;
    const int m = 3 + rep % 6;
    for (int i = 0; i < m; ++i) hs.push_back({from_angle(ang(rng)), off(rng)});
    const auto r = intersect_halfspaces(hs);
    // bounded case: non-empty iff some pairwise crossing satisfies every constraint
    bool any = false;
    for (int i = 0; i < m && !any; ++i) {
      for (int j = i + 1; j < m && !any; ++j) {
        const double det = cross(hs[i].normal, hs[j].normal);
        if (std::abs(det) < 1e-12) continue;
        const Vec2 p{(hs[i].offset * hs[j].normal.y - hs[j].offset * hs[i].normal.y) / det,
                     (hs[j].offset * hs[i].normal.x - hs[i].offset * hs[j].normal.x) / det};
        any =
            std::all_of(hs.begin(), hs.end(), [&](const HalfSpace2& h) { return dot(h.normal, p) <= h.offset + 1e-9; });
      }
    }
    if (!r.bounded() && !r.empty()) continue;
    CHECK(r.empty() == !any);
    if (r.empty()) ++empties;
    for (Vec2 v : r.vertices())
      for (const auto& h : hs) CHECK(dot(h.normal, v) <= h.offset + 1e-9);
  }
  CHECK(empties > 100);
}
