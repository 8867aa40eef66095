#include <algorithm>
#include <cmath>
#include <numeric>

#include "setexp/errors.hpp"
#include "setexp/kernels.hpp"
#include "setexp/set_expectation.hpp"

namespace setexp {

namespace {

constexpr double kCombinationGuard = 5e6;

// A boundary piece p + t d with t in [0, len] (len may be +inf, and for a
// full line t ranges over the reals).
struct Piece {
  Vec2 p;
  Vec2 d;
  double len;
  bool two_sided = false;
};

std::vector<Piece> boundary(const ConvexSet2& s) {
  const auto& v = s.vertices();
  const Cone2& r = s.recession();
  std::vector<Piece> out;
  switch (r.kind()) {
    case Cone2::Kind::full:
      throw DomainError("a whole-plane value has no boundary to search");
    case Cone2::Kind::halfplane:
      out.push_back({v[0], r.d0(), kInf, true});
      return out;
    case Cone2::Kind::line:
      for (Vec2 p : v) out.push_back({p, r.d0(), kInf, true});
      return out;
    case Cone2::Kind::zero:
      if (v.size() == 1) {
        out.push_back({v[0], {1.0, 0.0}, 0.0});
        return out;
      }
      for (std::size_t i = 0; i < v.size(); ++i) {
        const Vec2 q = v[(i + 1) % v.size()];
        out.push_back({v[i], unit(q - v[i]), norm(q - v[i])});
        if (v.size() == 2) break;
      }
      return out;
    default: {
      const Vec2 front = r.kind() == Cone2::Kind::wedge ? r.d1() : r.d0();
      out.push_back({v.front(), front, kInf});
      for (std::size_t i = 0; i + 1 < v.size(); ++i)
        out.push_back({v[i], unit(v[i + 1] - v[i]), norm(v[i + 1] - v[i])});
      out.push_back({v.back(), r.d0(), kInf});
      return out;
    }
  }
}

bool on_piece(const Piece& pc, double t) {
  const double slack = 1e-12 * (1.0 + std::abs(t));
  if (pc.two_sided) return true;
  return t >= -slack && t <= pc.len + slack;
}

void sample_piece(const Piece& pc, int resolution, double ray_length, std::vector<Vec2>& out) {
  if (pc.len == 0.0) {
    out.push_back(pc.p);
    return;
  }
  double lo = 0.0, hi = pc.len;
  if (is_inf(pc.len)) hi = ray_length;
  if (pc.two_sided) lo = -ray_length;
  for (int j = 0; j < resolution; ++j) out.push_back(pc.p + (lo + (hi - lo) * j / (resolution - 1)) * pc.d);
}

// Points of the piece where <y, n> = c.
void level_points(const Piece& pc, Vec2 n, double c, std::vector<Vec2>& out) {
  const double dn = dot(pc.d, n);
  if (std::abs(dn) < 1e-14) return;
  const double t = (c - dot(pc.p, n)) / dn;
  if (on_piece(pc, t)) out.push_back(pc.p + t * pc.d);
}

void crossings(const Piece& a, const Piece& b, std::vector<Vec2>& out) {
  const double den = cross(a.d, b.d);
  if (std::abs(den) < 1e-14) return;
  const Vec2 w = b.p - a.p;
  const double t = cross(w, b.d) / den;
  const double s = cross(w, a.d) / den;
  if (on_piece(a, t) && on_piece(b, s)) out.push_back(a.p + t * a.d);
}

std::vector<Vec2> dedup(std::vector<Vec2> pts) {
  std::sort(pts.begin(), pts.end(), [](Vec2 a, Vec2 b) { return a.x < b.x || (a.x == b.x && a.y < b.y); });
  std::vector<Vec2> out;
  for (Vec2 p : pts) {
    if (!out.empty() && norm(p - out.back()) <= 1e-13 * (1.0 + norm(p))) continue;
    out.push_back(p);
  }
  return out;
}

}  // namespace

ConvexSet2 superlinear_min_lower(const RandomConvexSet& x, const NonlinearSpec& spec, int resolution) {
  if (resolution < 2) throw DomainError("resolution must be at least 2");
  spec.validate();
  if (!approx_equal(x.cone(), spec.cone)) throw DomainError("random set cone differs from the cone of the expectation");
  if (spec.cone.kind() != Cone2::Kind::wedge) throw DomainError("minimal extension needs a wedge cone");

  const Cone2 g = polar_cone(spec.cone);
  const Vec2 n0 = g.d0(), n1 = g.d1();
  const RepresentingFamily& m0 = spec.family_for(n0);
  const RepresentingFamily& m1 = spec.family_for(n1);
  const std::size_t n = x.size();

  std::vector<Vec2> all_vertices;
  for (const auto& s : x.values()) all_vertices.insert(all_vertices.end(), s.vertices().begin(), s.vertices().end());
  double spread = 0.0;
  for (Vec2 a : all_vertices)
    for (Vec2 b : all_vertices) spread = std::max(spread, norm(a - b));
  const double ray_length = 2.0 * (1.0 + spread);

  std::vector<std::vector<Piece>> pieces;
  for (const auto& s : x.values()) pieces.push_back(boundary(s));

  std::vector<std::vector<Vec2>> cand(n);
  double combos = 1.0;
  for (std::size_t w = 0; w < n; ++w) {
    std::vector<Vec2> pts(x[w].vertices().begin(), x[w].vertices().end());
    for (const Piece& pc : pieces[w]) {
      sample_piece(pc, resolution, ray_length, pts);
      for (std::size_t o = 0; o < n; ++o) {
        if (o == w) continue;
        for (Vec2 v : x[o].vertices()) {
          level_points(pc, n0, dot(v, n0), pts);
          level_points(pc, n1, dot(v, n1), pts);
        }
        for (const Piece& q : pieces[o]) crossings(pc, q, pts);
      }
    }
    cand[w] = dedup(std::move(pts));
    combos *= static_cast<double>(cand[w].size());
  }
  if (combos > kCombinationGuard)
    throw CapacityError("selection search needs " + std::to_string(static_cast<long long>(combos)) +
                        " combinations; lower the resolution");

  const auto probs = x.space().probs();
  auto point_for = [&](const std::vector<std::size_t>& idx, std::vector<double>& h0, std::vector<double>& h1) {
    for (std::size_t w = 0; w < n; ++w) {
      h0[w] = dot(cand[w][idx[w]], n0);
      h1[w] = dot(cand[w][idx[w]], n1);
    }
    const double c0 = u_value(m0, probs, h0);
    const double c1 = u_value(m1, probs, h1);
    const double det = cross(n0, n1);
    return Vec2{(c0 * n1.y - c1 * n0.y) / det, (n0.x * c1 - n1.x * c0) / det};
  };

  auto pts = kernels::gather<Vec2>(cand[0].size(), [&](std::size_t first) {
    std::vector<std::size_t> idx(n, 0);
    idx[0] = first;
    std::vector<double> h0(n), h1(n);
    std::vector<Vec2> local;
    while (true) {
      local.push_back(point_for(idx, h0, h1));
      std::size_t w = 1;
      while (w < n && ++idx[w] == cand[w].size()) idx[w++] = 0;
      if (w >= n) break;
    }
    return ConvexSet2::from_points(std::move(local)).vertices();
  });

  Cone2 rec = x[0].recession();
  for (std::size_t w = 1; w < n; ++w) rec = cone_intersection(rec, x[w].recession());
  return ConvexSet2::from_points(std::move(pts), rec);
}

Cone2 example62_cone(double pi, double pi_prime) {
  if (!(pi > 1.0 && pi_prime > 1.0)) throw DomainError("cone slopes must exceed 1");
  return Cone2::wedge({-pi_prime, 1.0}, {1.0, -pi});
}

Vec2 example62_closed_form(Vec2 a, double pi, double pi_prime, double alpha) {
  const double coef = (1.0 / alpha - 1.0) * (a.x * pi_prime + a.y) / (pi * pi_prime - 1.0);
  return (1.0 / (2.0 * alpha)) * a + coef * Vec2{-pi_prime, 1.0};
}

Example62 example62(Vec2 a, double pi, double pi_prime, double alpha, int resolution) {
  if (!(alpha > 0.0 && alpha < 1.0)) throw DomainError("alpha must lie in (0, 1)");
  Example62 out;
  out.k = example62_cone(pi, pi_prime);
  const auto space = ScenarioSpace::uniform(2);
  const RandomVector2 xi(space, {{0.0, 0.0}, a});
  const auto family = RepresentingFamily::avar(alpha);
  if (alpha > 0.5) {
    out.x = example62_closed_form(a, pi, pi_prime, alpha);
  } else {
    const auto spec_k = NonlinearSpec::make(family, out.k, 8);
    out.x = superlinear_cone_translate(xi, out.k, spec_k).vertices().front();
  }
  out.reduced_max = ConvexSet2::point(out.x, out.k);
  const auto x = RandomConvexSet::translate(xi, ConvexSet2::point({}, out.k), Cone2::lower_quadrant());
  out.minimal = superlinear_min_lower(x, NonlinearSpec::make(family, Cone2::lower_quadrant(), 8), resolution);
  return out;
}

}  // namespace setexp
