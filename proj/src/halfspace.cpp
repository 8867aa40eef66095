// Half-plane intersection by angular sweep (deque variant of the classic
// sort-and-incremental algorithm). Unbounded regions are handled by a
// temporary bounding box whose edges are discarded afterwards; the exact
// recession cone is computed separately from the constraint normals.

#include <algorithm>
#include <cmath>
#include <deque>

#include "setexp/errors.hpp"
#include "setexp/geometry.hpp"

namespace setexp {

namespace {

struct Line {
  Vec2 n;      // outward unit normal
  double b;    // offset
  Vec2 p;      // point on the line
  Vec2 d;      // direction, interior on the left
  double ang;  // angle of d
  bool box;
};

Line make_line(Vec2 n, double b, bool box) {
  const Vec2 d = rot_ccw(n);
  return {n, b, b * n, d, angle_of(d), box};
}

Vec2 meet(const Line& s, const Line& t) {
  const double alpha = cross(t.p - s.p, t.d) / cross(s.d, t.d);
  return s.p + alpha * s.d;
}

struct SweepResult {
  bool empty = false;
  std::vector<Line> lines;  // cyclic boundary order
};

SweepResult sweep(std::vector<Line> lines, double eps) {
  std::sort(lines.begin(), lines.end(), [](const Line& a, const Line& b) {
    if (a.ang != b.ang) return a.ang < b.ang;
    return a.b < b.b;
  });
  auto out = [eps](const Line& l, Vec2 r) { return cross(l.d, r - l.p) < -eps; };
  std::deque<Line> dq;
  SweepResult res;
  for (const Line& h : lines) {
    while (dq.size() > 1 && out(h, meet(dq[dq.size() - 1], dq[dq.size() - 2]))) dq.pop_back();
    while (dq.size() > 1 && out(h, meet(dq[0], dq[1]))) dq.pop_front();
    if (!dq.empty() && std::abs(cross(h.d, dq.back().d)) < 1e-12) {
      if (dot(h.d, dq.back().d) < 0.0) {
        // antiparallel neighbours: a strip, empty when it has negative width
        if (h.b + dq.back().b < -eps) {
          res.empty = true;
          return res;
        }
        continue;
      }
      if (out(h, dq.back().p)) {
        dq.pop_back();
      } else {
        continue;
      }
    }
    dq.push_back(h);
  }
  while (dq.size() > 2 && out(dq[0], meet(dq[dq.size() - 1], dq[dq.size() - 2]))) dq.pop_back();
  while (dq.size() > 2 && out(dq[dq.size() - 1], meet(dq[0], dq[1]))) dq.pop_front();
  if (dq.size() < 3) {
    res.empty = true;
    return res;
  }
  res.lines.assign(dq.begin(), dq.end());
  return res;
}

bool near_angle(Vec2 a, Vec2 b) { return std::abs(cross(a, b)) < 1e-9 && dot(a, b) > 0.0; }

}  // namespace

ConvexSet2 intersect_halfspaces(std::span<const HalfSpace2> hs) {
  if (hs.empty()) throw DomainError("intersection of an empty list of half-planes");
  std::vector<HalfSpace2> finite;
  for (const auto& h : hs) {
    if (std::isnan(h.offset) || h.offset == -kInf) throw DomainError("half-plane offset must lie in (-inf, inf]");
    if (is_inf(h.offset)) continue;
    const double len = norm(h.normal);
    if (!(len > 0.0)) throw DomainError("half-plane normal must be non-zero");
    finite.push_back({{h.normal.x / len, h.normal.y / len}, h.offset / len});
  }
  if (finite.empty()) return ConvexSet2::whole_plane();

  double scale = 1.0;
  std::vector<Vec2> normals;
  for (const auto& h : finite) {
    scale = std::max(scale, 1.0 + std::abs(h.offset));
    normals.push_back(h.normal);
  }
  const double eps = 1e-10 * scale;
  const Cone2 normal_cone = Cone2::hull(normals);
  const Cone2 rec = polar_cone(normal_cone);

  if (normal_cone.kind() == Cone2::Kind::ray) {
    const Vec2 n = normal_cone.d0();
    double b = kInf;
    for (const auto& h : finite) b = std::min(b, h.offset);
    return ConvexSet2::from_points({b * n}, rec);
  }
  if (normal_cone.kind() == Cone2::Kind::line) {
    const Vec2 n = normal_cone.d0();
    double b1 = kInf, b2 = kInf;
    for (const auto& h : finite) {
      if (dot(h.normal, n) > 0.0)
        b1 = std::min(b1, h.offset);
      else
        b2 = std::min(b2, h.offset);
    }
    if (b1 + b2 < -eps) return ConvexSet2::empty_set();
    if (b1 + b2 < 0.0) {
      b1 = 0.5 * (b1 - b2);
      b2 = -b1;
    }
    return ConvexSet2::from_points({b1 * n, -b2 * n}, rec);
  }

  std::vector<Vec2> extreme;
  if (normal_cone.kind() == Cone2::Kind::wedge) extreme = {normal_cone.d0(), normal_cone.d1()};
  if (normal_cone.kind() == Cone2::Kind::halfplane) extreme = {normal_cone.d0(), -normal_cone.d0()};
  auto is_extreme = [&](Vec2 n) {
    return std::any_of(extreme.begin(), extreme.end(), [&](Vec2 e) { return near_angle(e, n); });
  };

  double box = 1e3 * scale;
  SweepResult res;
  for (int attempt = 0; attempt < 4; ++attempt, box *= 1e3) {
    std::vector<Line> lines;
    lines.reserve(finite.size() + 4);
    for (const auto& h : finite) lines.push_back(make_line(h.normal, h.offset, false));
    for (Vec2 n : {Vec2{1, 0}, Vec2{0, 1}, Vec2{-1, 0}, Vec2{0, -1}}) lines.push_back(make_line(n, box, true));
    res = sweep(std::move(lines), eps);
    if (res.empty) return ConvexSet2::empty_set();

    bool clipped = false;
    const std::size_t m = res.lines.size();
    for (std::size_t i = 0; i < m && !clipped; ++i) {
      if (!res.lines[i].box) continue;
      for (std::size_t j : {(i + m - 1) % m, (i + 1) % m}) {
        if (!res.lines[j].box && !is_extreme(res.lines[j].n)) clipped = true;
      }
      if (rec.kind() == Cone2::Kind::zero) clipped = true;
    }
    if (!clipped) break;
  }

  const std::size_t m = res.lines.size();
  std::vector<Vec2> verts;
  for (std::size_t i = 0; i < m; ++i) {
    const Line& s = res.lines[i];
    const Line& t = res.lines[(i + 1) % m];
    if (s.box || t.box) continue;
    verts.push_back(meet(s, t));
  }
  // merge clusters of coincident vertices produced by concurrent lines
  const double merge = 1e-9 * scale;
  std::vector<Vec2> merged;
  for (Vec2 v : verts) {
    if (!merged.empty() && norm(v - merged.back()) <= merge) continue;
    merged.push_back(v);
  }
  while (merged.size() > 1 && norm(merged.front() - merged.back()) <= merge) merged.pop_back();
  if (merged.empty()) return ConvexSet2::empty_set();
  // the sweep can close up on infeasible input; such output violates some constraint
  for (Vec2 v : merged) {
    for (const auto& h : finite)
      if (dot(h.normal, v) - h.offset > 1e3 * eps) return ConvexSet2::empty_set();
  }
  return ConvexSet2::from_points(std::move(merged), rec);
}

}  // namespace setexp
