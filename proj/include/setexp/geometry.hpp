#pragma once

#include <array>
#include <cstddef>
#include <span>
#include <vector>

#include "setexp/vec2.hpp"

namespace setexp {

inline constexpr double kDedupTolerance = 1e-12;
inline constexpr double kAngleTolerance = 1e-12;

// Closed convex cone in the plane.
//
//   zero       {0}
//   ray        {t d0 : t >= 0}
//   line       {t d0 : t real}
//   wedge      counterclockwise sweep from d0 to d1, opening angle in (0, pi)
//   halfplane  {x : cross(d0, x) >= 0}, i.e. the sweep from d0 to -d0
//   full       the whole plane
class Cone2 {
 public:
  enum class Kind { zero, ray, line, wedge, halfplane, full };

  Cone2() = default;  // zero cone

  static Cone2 zero() { return {}; }
  static Cone2 full();
  static Cone2 ray(Vec2 d);
  static Cone2 line(Vec2 d);
  static Cone2 wedge(Vec2 d0, Vec2 d1);
  // {x : <n, x> <= 0}
  static Cone2 halfplane(Vec2 outward_normal);
  static Cone2 lower_quadrant() { return wedge({-1.0, 0.0}, {0.0, -1.0}); }
  static Cone2 upper_quadrant() { return wedge({1.0, 0.0}, {0.0, 1.0}); }

  // Conical hull of a finite set of directions (zero vectors ignored).
  static Cone2 hull(std::span<const Vec2> generators);

  Kind kind() const { return kind_; }
  Vec2 d0() const { return dirs_[0]; }
  Vec2 d1() const { return dirs_[1]; }
  bool pointed() const { return kind_ == Kind::zero || kind_ == Kind::ray || kind_ == Kind::wedge; }
  bool is_full() const { return kind_ == Kind::full; }

  // A finite generating set; the cone is its conical hull.
  std::vector<Vec2> generators() const;

  bool contains(Vec2 v, double tol = 1e-12) const;
  bool contains(const Cone2& other, double tol = 1e-12) const;

  // h(C, u): 0 on the polar cone, +inf elsewhere.
  double support(Vec2 u, double tol = 1e-12) const;

 private:
  Cone2(Kind k, Vec2 a, Vec2 b) : kind_(k), dirs_{a, b} {}

  Kind kind_ = Kind::zero;
  std::array<Vec2, 2> dirs_{};
};

const char* to_string(Cone2::Kind k);

bool approx_equal(const Cone2& a, const Cone2& b, double tol = 1e-9);

Cone2 polar_cone(const Cone2& c);
Cone2 cone_sum(const Cone2& a, const Cone2& b);
Cone2 cone_intersection(const Cone2& a, const Cone2& b);

// Half-plane {x : <normal, x> <= offset}; offset = +inf is the whole plane.
struct HalfSpace2 {
  Vec2 normal;
  double offset = 0.0;
};

// Closed convex set conv(vertices) + recession, or the empty set.
//
// Vertices are the extreme points, counterclockwise and strictly convex. For
// sets whose recession cone contains a line the "vertices" are the extreme
// points of the section orthogonal to that line. For unbounded pointed sets
// the boundary reads: ray along d1 into vertices.front(), the vertex chain,
// then the ray along d0 out of vertices.back().
class ConvexSet2 {
 public:
  ConvexSet2() = default;  // empty set

  static ConvexSet2 empty_set() { return {}; }
  static ConvexSet2 from_points(std::vector<Vec2> points, const Cone2& recession = Cone2::zero());
  static ConvexSet2 point(Vec2 p, const Cone2& recession = Cone2::zero());
  static ConvexSet2 box(Vec2 lo, Vec2 hi);
  static ConvexSet2 whole_plane();

  bool empty() const { return empty_; }
  const std::vector<Vec2>& vertices() const { return vertices_; }
  const Cone2& recession() const { return recession_; }
  bool bounded() const { return !empty_ && recession_.kind() == Cone2::Kind::zero; }
  bool is_whole_plane() const { return !empty_ && recession_.is_full(); }

  ConvexSet2 translated(Vec2 a) const;
  ConvexSet2 reflected() const;  // {-x : x in A}

  // Outward normals and offsets whose intersection is exactly this set.
  std::vector<HalfSpace2> halfspaces() const;

 private:
  std::vector<Vec2> vertices_;
  Cone2 recession_;
  bool empty_ = true;
};

// Sorted unit directions lying in a restriction cone.
class DirectionGrid {
 public:
  DirectionGrid() = default;

  // n equally spaced directions intersected with `restriction`, plus the
  // boundary rays of the restriction.
  static DirectionGrid uniform(std::size_t n, const Cone2& restriction = Cone2::full());

  // Adds the given directions (those inside the restriction). Existing grid
  // directions within kMergeAngle of an added one are replaced by it.
  DirectionGrid augmented(std::span<const Vec2> extra) const;

  std::span<const Vec2> directions() const { return dirs_; }
  std::size_t size() const { return dirs_.size(); }
  const Cone2& restriction() const { return restriction_; }

  static constexpr double kMergeAngle = 1e-7;

 private:
  std::vector<Vec2> dirs_;
  std::vector<int> rank_;  // 0 uniform, 1 added, 2 restriction boundary
  Cone2 restriction_ = Cone2::full();
};

// Support function h(A, u); +inf outside the polar of the recession cone.
double support(const ConvexSet2& a, Vec2 u);

ConvexSet2 minkowski_sum(const ConvexSet2& a, const ConvexSet2& b);
ConvexSet2 scale(const ConvexSet2& a, double c);
ConvexSet2 intersect_halfspaces(std::span<const HalfSpace2> hs);
// Intersection of {x : <dirs[i], x> <= offsets[i]}; +inf offsets are skipped.
ConvexSet2 from_support(std::span<const Vec2> dirs, std::span<const double> offsets);
// sum_i w_i A_i over the sets with w_i > 0.
ConvexSet2 weighted_sum(std::span<const ConvexSet2> sets, std::span<const double> weights);
ConvexSet2 intersect(const ConvexSet2& a, const ConvexSet2& b);
ConvexSet2 convex_hull(std::span<const ConvexSet2> parts);

bool contains_point(const ConvexSet2& a, Vec2 p, double tol = 1e-9);
bool contains(const ConvexSet2& a, const ConvexSet2& b, double tol = 1e-9);
double hausdorff(const ConvexSet2& a, const ConvexSet2& b);
// Same recession cone and vertex sets matching within tol.
bool approx_equal(const ConvexSet2& a, const ConvexSet2& b, double tol = 1e-9);

// Outward normals of every edge of every non-empty set, the normal fan used
// to make grid reconstructions exact on polytopal data.
std::vector<Vec2> normal_fan(std::span<const ConvexSet2> sets);

}  // namespace setexp
