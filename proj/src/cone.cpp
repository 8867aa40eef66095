#include <algorithm>
#include <cmath>
#include <vector>

#include "setexp/errors.hpp"
#include "setexp/geometry.hpp"

namespace setexp {

namespace {

Vec2 checked_unit(Vec2 d, const char* what) {
  const double n = norm(d);
  if (!(n > 0.0) || !std::isfinite(n)) throw DomainError(std::string(what) + ": direction must be non-zero and finite");
  return {d.x / n, d.y / n};
}

}  // namespace

Cone2 Cone2::full() { return Cone2(Kind::full, {}, {}); }

Cone2 Cone2::ray(Vec2 d) { return Cone2(Kind::ray, checked_unit(d, "ray"), {}); }

Cone2 Cone2::line(Vec2 d) {
  Vec2 u = checked_unit(d, "line");
  // canonical orientation: angle in [0, pi)
  if (angle_of(u) >= std::numbers::pi - kAngleTolerance) u = -u;
  return Cone2(Kind::line, u, -u);
}

Cone2 Cone2::wedge(Vec2 d0, Vec2 d1) {
  const Vec2 a = checked_unit(d0, "wedge");
  const Vec2 b = checked_unit(d1, "wedge");
  const double theta = wrap_angle(angle_of(b) - angle_of(a));
  if (!(theta > kAngleTolerance && theta < std::numbers::pi - kAngleTolerance))
    throw DomainError("wedge opening angle must lie strictly between 0 and pi");
  return Cone2(Kind::wedge, a, b);
}

Cone2 Cone2::halfplane(Vec2 outward_normal) {
  const Vec2 n = checked_unit(outward_normal, "halfplane");
  const Vec2 d = rot_ccw(n);
  return Cone2(Kind::halfplane, d, -d);
}

Cone2 Cone2::hull(std::span<const Vec2> generators) {
  std::vector<std::pair<double, Vec2>> g;
  for (Vec2 v : generators) {
    const double n = norm(v);
    if (n <= 1e-300) continue;
    const Vec2 u{v.x / n, v.y / n};
    g.emplace_back(angle_of(u), u);
  }
  if (g.empty()) return zero();
  std::sort(g.begin(), g.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<std::pair<double, Vec2>> uniq;
  for (const auto& e : g) {
    if (uniq.empty() || e.first - uniq.back().first > kAngleTolerance) uniq.push_back(e);
  }
  if (uniq.size() > 1 && uniq.front().first + kTwoPi - uniq.back().first <= kAngleTolerance) uniq.pop_back();
  const std::size_t k = uniq.size();
  if (k == 1) return Cone2(Kind::ray, uniq[0].second, {});

  std::size_t gap_at = 0;
  double max_gap = -1.0;
  for (std::size_t i = 0; i < k; ++i) {
    const double next = i + 1 < k ? uniq[i + 1].first : uniq[0].first + kTwoPi;
    const double gap = next - uniq[i].first;
    if (gap > max_gap) {
      max_gap = gap;
      gap_at = i;
    }
  }
  const double sweep = kTwoPi - max_gap;
  const Vec2 start = uniq[(gap_at + 1) % k].second;
  const Vec2 stop = uniq[gap_at].second;
  if (sweep <= kAngleTolerance) return Cone2(Kind::ray, start, {});
  if (sweep < std::numbers::pi - kAngleTolerance) return Cone2(Kind::wedge, start, stop);
  if (sweep <= std::numbers::pi + kAngleTolerance) {
    if (k == 2) return line(start);
    return Cone2(Kind::halfplane, start, -start);
  }
  return full();
}

std::vector<Vec2> Cone2::generators() const {
  switch (kind_) {
    case Kind::zero:
      return {};
    case Kind::ray:
      return {dirs_[0]};
    case Kind::line:
      return {dirs_[0], -dirs_[0]};
    case Kind::wedge:
      return {dirs_[0], dirs_[1]};
    case Kind::halfplane:
      return {dirs_[0], rot_ccw(dirs_[0]), -dirs_[0]};
    case Kind::full:
      return {{1.0, 0.0}, {0.0, 1.0}, {-1.0, 0.0}, {0.0, -1.0}};
  }
  return {};
}

bool Cone2::contains(Vec2 v, double tol) const {
  const double n = norm(v);
  if (n <= tol) return true;
  const Vec2 u{v.x / n, v.y / n};
  switch (kind_) {
    case Kind::zero:
      return false;
    case Kind::ray:
      return std::abs(cross(dirs_[0], u)) <= tol && dot(dirs_[0], u) > 0.0;
    case Kind::line:
      return std::abs(cross(dirs_[0], u)) <= tol;
    case Kind::wedge:
      return cross(dirs_[0], u) >= -tol && cross(u, dirs_[1]) >= -tol && dot(u, dirs_[0] + dirs_[1]) > -tol;
    case Kind::halfplane:
      return cross(dirs_[0], u) >= -tol;
    case Kind::full:
      return true;
  }
  return false;
}

bool Cone2::contains(const Cone2& other, double tol) const {
  if (kind_ == Kind::full) return true;
  if (other.kind_ == Kind::full) return false;
  for (Vec2 g : other.generators()) {
    if (!contains(g, tol)) return false;
  }
  return true;
}

double Cone2::support(Vec2 u, double tol) const {
  if (kind_ == Kind::full) return norm(u) <= tol ? 0.0 : kInf;
  for (Vec2 g : generators()) {
    if (dot(g, u) > tol) return kInf;
  }
  return 0.0;
}

const char* to_string(Cone2::Kind k) {
  switch (k) {
    case Cone2::Kind::zero:
      return "zero";
    case Cone2::Kind::ray:
      return "ray";
    case Cone2::Kind::line:
      return "line";
    case Cone2::Kind::wedge:
      return "wedge";
    case Cone2::Kind::halfplane:
      return "halfplane";
    case Cone2::Kind::full:
      return "full";
  }
  return "?";
}

bool approx_equal(const Cone2& a, const Cone2& b, double tol) {
  return a.kind() == b.kind() && a.contains(b, tol) && b.contains(a, tol);
}

Cone2 polar_cone(const Cone2& c) {
  switch (c.kind()) {
    case Cone2::Kind::zero:
      return Cone2::full();
    case Cone2::Kind::full:
      return Cone2::zero();
    case Cone2::Kind::ray:
      return Cone2::halfplane(c.d0());
    case Cone2::Kind::line:
      return Cone2::line(rot_ccw(c.d0()));
    case Cone2::Kind::halfplane:
      return Cone2::ray(rot_cw(c.d0()));
    case Cone2::Kind::wedge: {
      const Vec2 g[2] = {rot_cw(c.d0()), rot_ccw(c.d1())};
      return Cone2::hull(g);
    }
  }
  return Cone2::zero();
}

Cone2 cone_sum(const Cone2& a, const Cone2& b) {
  if (a.is_full() || b.is_full()) return Cone2::full();
  std::vector<Vec2> g = a.generators();
  for (Vec2 v : b.generators()) g.push_back(v);
  return Cone2::hull(g);
}

Cone2 cone_intersection(const Cone2& a, const Cone2& b) { return polar_cone(cone_sum(polar_cone(a), polar_cone(b))); }

}  // namespace setexp
