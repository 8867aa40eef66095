#include "setexp/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "setexp/errors.hpp"

namespace setexp {

namespace {

double coordinate_scale(std::span<const Vec2> pts) {
  double s = 1.0;
  for (Vec2 p : pts) s = std::max({s, std::abs(p.x), std::abs(p.y)});
  return s;
}

// Counterclockwise strictly convex hull (Andrew's monotone chain), starting
// at the lexicographically smallest point.
std::vector<Vec2> hull_points(std::vector<Vec2> pts) {
  const double scale = coordinate_scale(pts);
  const double dedup = kDedupTolerance * scale;
  std::sort(pts.begin(), pts.end(), [](Vec2 a, Vec2 b) { return a.x < b.x || (a.x == b.x && a.y < b.y); });
  std::vector<Vec2> uniq;
  for (Vec2 p : pts) {
    bool dup = false;
    for (auto it = uniq.rbegin(); it != uniq.rend() && p.x - it->x <= dedup; ++it) {
      if (std::abs(p.y - it->y) <= dedup) {
        dup = true;
        break;
      }
    }
    if (!dup) uniq.push_back(p);
  }
  if (uniq.size() <= 1) return uniq;

  auto turn = [&](Vec2 o, Vec2 a, Vec2 b) {
    // signed distance of b from the line o->a, compared against the tolerance
    const double len = norm(a - o);
    return len == 0.0 ? 0.0 : cross(a - o, b - o) / len;
  };
  const double col = kDedupTolerance * scale;
  std::vector<Vec2> h(2 * uniq.size());
  std::size_t k = 0;
  for (Vec2 p : uniq) {
    while (k >= 2 && turn(h[k - 2], h[k - 1], p) <= col) --k;
    h[k++] = p;
  }
  for (std::size_t i = uniq.size() - 1, t = k + 1; i-- > 0;) {
    while (k >= t && turn(h[k - 2], h[k - 1], uniq[i]) <= col) --k;
    h[k++] = uniq[i];
  }
  h.resize(k - 1);
  if (h.size() == 2 && norm(h[0] - h[1]) <= dedup) h.pop_back();
  return h;
}

struct Arc {
  double start = 0.0;
  double len = kTwoPi;
};

// Length of the intersection of two circular arcs, and where (relative to
// b.start) the first overlapping piece begins.
std::pair<double, double> arc_overlap(Arc a, Arc b) {
  double total = 0.0;
  double first = kInf;
  for (int shift = -2; shift <= 2; ++shift) {
    const double s = a.start + shift * kTwoPi;
    const double lo = std::max(s, b.start);
    const double hi = std::min(s + a.len, b.start + b.len);
    if (hi > lo) {
      total += hi - lo;
      first = std::min(first, lo - b.start);
    }
  }
  return {total, first};
}

Arc polar_arc(const Cone2& c) {
  switch (c.kind()) {
    case Cone2::Kind::zero:
      return {0.0, kTwoPi};
    case Cone2::Kind::ray:
      return {wrap_angle(angle_of(c.d0()) + 0.5 * std::numbers::pi), std::numbers::pi};
    case Cone2::Kind::wedge: {
      const double s = wrap_angle(angle_of(c.d1()) + 0.5 * std::numbers::pi);
      const double e = wrap_angle(angle_of(c.d0()) + 1.5 * std::numbers::pi);
      return {s, wrap_angle(e - s)};
    }
    default:
      break;
  }
  return {0.0, 0.0};
}

}  // namespace

ConvexSet2 ConvexSet2::from_points(std::vector<Vec2> points, const Cone2& recession) {
  ConvexSet2 out;
  if (points.empty()) return out;
  for (Vec2 p : points) {
    if (!std::isfinite(p.x) || !std::isfinite(p.y)) throw DomainError("set vertices must be finite");
  }
  out.empty_ = false;
  out.recession_ = recession;
  switch (recession.kind()) {
    case Cone2::Kind::full:
      out.vertices_ = {Vec2{0.0, 0.0}};
      return out;
    case Cone2::Kind::halfplane: {
      const Vec2 n = rot_cw(recession.d0());
      double best = -kInf;
      for (Vec2 p : points) best = std::max(best, dot(n, p));
      out.vertices_ = {best * n};
      return out;
    }
    case Cone2::Kind::line: {
      const Vec2 n = rot_cw(recession.d0());
      double lo = kInf, hi = -kInf;
      for (Vec2 p : points) {
        lo = std::min(lo, dot(n, p));
        hi = std::max(hi, dot(n, p));
      }
      const double scale = std::max({1.0, std::abs(lo), std::abs(hi)});
      if (hi - lo <= kDedupTolerance * scale)
        out.vertices_ = {0.5 * (lo + hi) * n};
      else
        out.vertices_ = {hi * n, lo * n};
      return out;
    }
    default:
      break;
  }

  std::vector<Vec2> h = hull_points(std::move(points));
  if (recession.kind() == Cone2::Kind::zero || h.size() <= 1) {
    out.vertices_ = std::move(h);
    return out;
  }

  const Arc polar = polar_arc(recession);
  const std::size_t k = h.size();
  std::vector<std::pair<double, Vec2>> kept;
  for (std::size_t i = 0; i < k; ++i) {
    const Vec2 prev = h[(i + k - 1) % k];
    const Vec2 next = h[(i + 1) % k];
    const double a_in = angle_of(rot_cw(h[i] - prev));
    const double a_out = angle_of(rot_cw(next - h[i]));
    Arc normal_cone{a_in, wrap_angle(a_out - a_in)};
    if (k == 2) normal_cone.len = std::numbers::pi;
    auto [len, first] = arc_overlap(normal_cone, polar);
    if (len > kAngleTolerance) kept.emplace_back(first, h[i]);
  }
  std::stable_sort(kept.begin(), kept.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  for (const auto& e : kept) out.vertices_.push_back(e.second);
  return out;
}

ConvexSet2 ConvexSet2::point(Vec2 p, const Cone2& recession) { return from_points({p}, recession); }

ConvexSet2 ConvexSet2::box(Vec2 lo, Vec2 hi) { return from_points({lo, {hi.x, lo.y}, hi, {lo.x, hi.y}}); }

ConvexSet2 ConvexSet2::whole_plane() { return from_points({Vec2{}}, Cone2::full()); }

ConvexSet2 ConvexSet2::translated(Vec2 a) const {
  if (empty_) return *this;
  ConvexSet2 out = *this;
  for (auto& v : out.vertices_) v += a;
  if (recession_.is_full()) out.vertices_ = {Vec2{}};
  if (recession_.kind() == Cone2::Kind::halfplane || recession_.kind() == Cone2::Kind::line)
    return from_points(out.vertices_, recession_);
  return out;
}

ConvexSet2 ConvexSet2::reflected() const {
  if (empty_) return *this;
  std::vector<Vec2> pts;
  for (Vec2 v : vertices_) pts.push_back(-v);
  std::vector<Vec2> gens;
  for (Vec2 g : recession_.generators()) gens.push_back(-g);
  return from_points(std::move(pts), Cone2::hull(gens));
}

std::vector<HalfSpace2> ConvexSet2::halfspaces() const {
  std::vector<HalfSpace2> out;
  if (empty_) return out;
  auto add = [&](Vec2 n, Vec2 through) {
    const Vec2 u = unit(n);
    out.push_back({u, dot(u, through)});
  };
  const auto& v = vertices_;
  switch (recession_.kind()) {
    case Cone2::Kind::full:
      return out;
    case Cone2::Kind::halfplane:
      add(rot_cw(recession_.d0()), v[0]);
      return out;
    case Cone2::Kind::line: {
      const Vec2 n = rot_cw(recession_.d0());
      add(n, v[0]);
      add(-n, v.back());
      return out;
    }
    case Cone2::Kind::zero: {
      if (v.size() == 1) {
        add({1, 0}, v[0]);
        add({0, 1}, v[0]);
        add({-1, 0}, v[0]);
        add({0, -1}, v[0]);
      } else if (v.size() == 2) {
        add(rot_cw(v[1] - v[0]), v[0]);
        add(rot_cw(v[0] - v[1]), v[0]);
        add(v[1] - v[0], v[1]);
        add(v[0] - v[1], v[0]);
      } else {
        for (std::size_t i = 0; i < v.size(); ++i) add(rot_cw(v[(i + 1) % v.size()] - v[i]), v[i]);
      }
      return out;
    }
    default:
      break;
  }
  // pointed and unbounded
  const Vec2 into = recession_.kind() == Cone2::Kind::wedge ? recession_.d1() : recession_.d0();
  add(rot_ccw(into), v.front());
  for (std::size_t i = 0; i + 1 < v.size(); ++i) add(rot_cw(v[i + 1] - v[i]), v[i]);
  add(rot_cw(recession_.d0()), v.back());
  if (recession_.kind() == Cone2::Kind::ray && v.size() == 1) add(-recession_.d0(), v[0]);
  return out;
}

DirectionGrid DirectionGrid::uniform(std::size_t n, const Cone2& restriction) {
  if (restriction.kind() == Cone2::Kind::zero) throw DomainError("direction grid restriction must be non-trivial");
  if (restriction.is_full() && n < 3) throw DomainError("a full-circle direction grid needs at least 3 directions");
  DirectionGrid g;
  g.restriction_ = restriction;
  for (std::size_t k = 0; k < n; ++k) {
    Vec2 u = from_angle(kTwoPi * static_cast<double>(k) / static_cast<double>(n));
    if (std::abs(u.x) < 1e-15) u.x = 0.0;
    if (std::abs(u.y) < 1e-15) u.y = 0.0;
    if (restriction.contains(u, 0.0)) {
      g.dirs_.push_back(u);
      g.rank_.push_back(0);
    }
  }
  std::vector<Vec2> boundary;
  switch (restriction.kind()) {
    case Cone2::Kind::ray:
      boundary = {restriction.d0()};
      break;
    case Cone2::Kind::line:
      boundary = {restriction.d0(), -restriction.d0()};
      break;
    case Cone2::Kind::wedge:
      boundary = {restriction.d0(), restriction.d1()};
      break;
    case Cone2::Kind::halfplane:
      boundary = {restriction.d0(), -restriction.d0()};
      break;
    default:
      break;
  }
  DirectionGrid out = g.augmented(boundary);
  for (std::size_t i = 0; i < out.dirs_.size(); ++i) {
    for (Vec2 b : boundary) {
      if (out.dirs_[i] == b) out.rank_[i] = 2;
    }
  }
  return out;
}

DirectionGrid DirectionGrid::augmented(std::span<const Vec2> extra) const {
  std::vector<std::tuple<double, int, Vec2>> all;
  for (std::size_t i = 0; i < dirs_.size(); ++i) all.emplace_back(angle_of(dirs_[i]), rank_[i], dirs_[i]);
  for (Vec2 e : extra) {
    if (norm(e) == 0.0) continue;
    const Vec2 u = unit(e);
    if (restriction_.contains(u, 1e-12)) all.emplace_back(angle_of(u), 1, u);
  }
  std::sort(all.begin(), all.end(), [](const auto& a, const auto& b) { return std::get<0>(a) < std::get<0>(b); });

  // Merge clusters of nearly equal angles, keeping the highest rank.
  std::vector<std::tuple<double, int, Vec2>> kept;
  for (const auto& e : all) {
    if (!kept.empty() && std::get<0>(e) - std::get<0>(kept.back()) <= kMergeAngle) {
      if (std::get<1>(e) > std::get<1>(kept.back())) kept.back() = e;
      continue;
    }
    kept.push_back(e);
  }
  if (kept.size() > 1 && std::get<0>(kept.front()) + kTwoPi - std::get<0>(kept.back()) <= kMergeAngle) {
    if (std::get<1>(kept.back()) > std::get<1>(kept.front())) kept.front() = kept.back();
    kept.pop_back();
  }
  DirectionGrid out;
  out.restriction_ = restriction_;
  for (const auto& e : kept) {
    out.dirs_.push_back(std::get<2>(e));
    out.rank_.push_back(std::get<1>(e));
  }
  return out;
}

double support(const ConvexSet2& a, Vec2 u) {
  if (a.empty()) throw DomainError("support function of the empty set");
  if (is_inf(a.recession().support(u))) return kInf;
  double best = -kInf;
  for (Vec2 v : a.vertices()) best = std::max(best, dot(v, u));
  return best;
}

ConvexSet2 minkowski_sum(const ConvexSet2& a, const ConvexSet2& b) {
  if (a.empty() || b.empty()) return ConvexSet2::empty_set();
  std::vector<Vec2> pts;
  pts.reserve(a.vertices().size() * b.vertices().size());
  for (Vec2 p : a.vertices())
    for (Vec2 q : b.vertices()) pts.push_back(p + q);
  return ConvexSet2::from_points(std::move(pts), cone_sum(a.recession(), b.recession()));
}

ConvexSet2 scale(const ConvexSet2& a, double c) {
  if (!(c > 0.0) || !std::isfinite(c)) throw DomainError("dilation factor must be positive");
  if (a.empty()) return a;
  std::vector<Vec2> pts;
  for (Vec2 v : a.vertices()) pts.push_back(c * v);
  return ConvexSet2::from_points(std::move(pts), a.recession());
}

ConvexSet2 from_support(std::span<const Vec2> dirs, std::span<const double> offsets) {
  if (dirs.size() != offsets.size()) throw DomainError("direction and offset counts differ");
  std::vector<HalfSpace2> hs;
  hs.reserve(dirs.size());
  for (std::size_t i = 0; i < dirs.size(); ++i) {
    if (!is_inf(offsets[i])) hs.push_back({dirs[i], offsets[i]});
  }
  if (hs.empty()) return ConvexSet2::whole_plane();
  return intersect_halfspaces(hs);
}

ConvexSet2 weighted_sum(std::span<const ConvexSet2> sets, std::span<const double> weights) {
  if (sets.size() != weights.size()) throw DomainError("set and weight counts differ");
  ConvexSet2 acc;
  bool first = true;
  for (std::size_t i = 0; i < sets.size(); ++i) {
    if (weights[i] < 0.0) throw DomainError("negative weight");
    if (weights[i] == 0.0) continue;
    const ConvexSet2 term = scale(sets[i], weights[i]);
    acc = first ? term : minkowski_sum(acc, term);
    first = false;
  }
  if (first) return ConvexSet2::point({});
  return acc;
}

ConvexSet2 intersect(const ConvexSet2& a, const ConvexSet2& b) {
  if (a.empty() || b.empty()) return ConvexSet2::empty_set();
  std::vector<HalfSpace2> hs = a.halfspaces();
  for (const auto& h : b.halfspaces()) hs.push_back(h);
  if (hs.empty()) return ConvexSet2::whole_plane();
  return intersect_halfspaces(hs);
}

ConvexSet2 convex_hull(std::span<const ConvexSet2> parts) {
  if (parts.empty()) throw DomainError("convex hull of an empty list");
  std::vector<Vec2> pts, gens;
  bool full = false;
  for (const auto& p : parts) {
    if (p.empty()) continue;
    pts.insert(pts.end(), p.vertices().begin(), p.vertices().end());
    if (p.recession().is_full()) full = true;
    for (Vec2 g : p.recession().generators()) gens.push_back(g);
  }
  if (pts.empty()) return ConvexSet2::empty_set();
  return ConvexSet2::from_points(std::move(pts), full ? Cone2::full() : Cone2::hull(gens));
}

bool contains_point(const ConvexSet2& a, Vec2 p, double tol) {
  if (a.empty()) return false;
  for (const auto& h : a.halfspaces()) {
    if (dot(h.normal, p) > h.offset + tol) return false;
  }
  return true;
}

bool contains(const ConvexSet2& a, const ConvexSet2& b, double tol) {
  if (b.empty()) return true;
  if (a.empty()) return false;
  if (!a.recession().contains(b.recession(), 1e-9)) return false;
  if (a.is_whole_plane()) return true;
  static const DirectionGrid canonical = DirectionGrid::uniform(720);
  std::vector<Vec2> dirs(canonical.directions().begin(), canonical.directions().end());
  for (const auto& h : a.halfspaces()) dirs.push_back(h.normal);
  for (const auto& h : b.halfspaces()) dirs.push_back(h.normal);
  for (Vec2 u : dirs) {
    const double ha = support(a, u);
    if (is_inf(ha)) continue;
    const double hb = support(b, u);
    if (hb > ha + tol) return false;
  }
  return true;
}

double hausdorff(const ConvexSet2& a, const ConvexSet2& b) {
  if (a.empty() || b.empty()) throw EmptyResultError("hausdorff distance needs non-empty sets");
  if (!approx_equal(a.recession(), b.recession()))
    throw DomainError("hausdorff distance needs identical recession cones");
  const Cone2& rec = a.recession();
  auto gap = [&](Vec2 u) { return std::abs(support(a, u) - support(b, u)); };
  double best = 0.0;
  if (!rec.pointed()) {
    if (rec.is_full()) return 0.0;
    for (Vec2 u : polar_cone(rec).generators()) best = std::max(best, gap(unit(u)));
    return best;
  }

  const Arc polar = polar_arc(rec);
  std::vector<double> cuts;
  auto add_cut = [&](Vec2 n) {
    const double rel = wrap_angle(angle_of(n) - polar.start);
    if (rel <= polar.len + kAngleTolerance) cuts.push_back(std::min(rel, polar.len));
  };
  for (const auto& h : a.halfspaces()) add_cut(h.normal);
  for (const auto& h : b.halfspaces()) add_cut(h.normal);
  if (polar.len < kTwoPi) {
    cuts.push_back(0.0);
    cuts.push_back(polar.len);
  } else if (cuts.empty()) {
    cuts.push_back(0.0);
  }
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
  if (polar.len >= kTwoPi) cuts.push_back(cuts.front() + kTwoPi);

  auto argmax = [](const ConvexSet2& s, Vec2 u) {
    Vec2 best_v = s.vertices().front();
    for (Vec2 v : s.vertices())
      if (dot(v, u) > dot(best_v, u)) best_v = v;
    return best_v;
  };
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    const double lo = cuts[i], hi = cuts[i + 1];
    best = std::max(best, gap(from_angle(polar.start + lo)));
    best = std::max(best, gap(from_angle(polar.start + hi)));
    if (hi - lo <= kAngleTolerance) continue;
    const Vec2 mid = from_angle(polar.start + 0.5 * (lo + hi));
    const Vec2 w = argmax(a, mid) - argmax(b, mid);
    if (norm(w) == 0.0) continue;
    for (Vec2 cand : {w, -w}) {
      const double rel = wrap_angle(angle_of(cand) - polar.start);
      for (double r : {rel, rel + kTwoPi}) {
        if (r > lo && r < hi) best = std::max(best, gap(from_angle(polar.start + r)));
      }
    }
  }
  return best;
}

bool approx_equal(const ConvexSet2& a, const ConvexSet2& b, double tol) {
  if (a.empty() || b.empty()) return a.empty() == b.empty();
  if (!approx_equal(a.recession(), b.recession(), tol)) return false;
  auto covered = [tol](const std::vector<Vec2>& p, const std::vector<Vec2>& q) {
    return std::all_of(p.begin(), p.end(), [&](Vec2 v) {
      return std::any_of(q.begin(), q.end(), [&](Vec2 w) { return norm(v - w) <= tol; });
    });
  };
  return covered(a.vertices(), b.vertices()) && covered(b.vertices(), a.vertices());
}

std::vector<Vec2> normal_fan(std::span<const ConvexSet2> sets) {
  std::vector<Vec2> out;
  for (const auto& s : sets) {
    for (const auto& h : s.halfspaces()) out.push_back(h.normal);
  }
  return out;
}

}  // namespace setexp
