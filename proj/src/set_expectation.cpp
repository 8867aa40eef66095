#include "setexp/set_expectation.hpp"

#include <algorithm>
#include <cmath>

#include "setexp/errors.hpp"
#include "setexp/kernels.hpp"

namespace setexp {

namespace {

constexpr std::size_t kOracleGuard = 6;
constexpr std::size_t kZonoidVertexGuard = 12;

void check_cone(const RandomConvexSet& x, const NonlinearSpec& spec) {
  spec.validate();
  if (!approx_equal(x.cone(), spec.cone)) throw DomainError("random set cone differs from the cone of the expectation");
}

std::vector<double> scenario_supports(const RandomConvexSet& x, Vec2 u) {
  std::vector<double> h(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) h[i] = support(x[i], u);
  return h;
}

void check_oracle(const RandomConvexSet& x, const NonlinearSpec& spec) {
  check_cone(x, spec);
  if (!spec.per_direction.empty()) throw DomainError("density oracles need a single family");
  if (x.size() > kOracleGuard)
    throw CapacityError("density oracles limited to " + std::to_string(kOracleGuard) + " scenarios");
}

std::vector<ConvexSet2> reweighted_expectations(const RandomConvexSet& x, const RepresentingFamily& m) {
  std::vector<ConvexSet2> out;
  for (const RandomScalar& g : extreme_densities(m, x.space())) out.push_back(weighted_expectation(x, g.values()));
  return out;
}

Vec2 solve2(Vec2 n0, Vec2 n1, double c0, double c1) {
  const double det = cross(n0, n1);
  return {(c0 * n1.y - c1 * n0.y) / det, (n0.x * c1 - n1.x * c0) / det};
}

}  // namespace

NonlinearSpec NonlinearSpec::make(RepresentingFamily family, const Cone2& cone, std::size_t grid_size) {
  if (cone.is_full()) throw DomainError("the cone of an expectation must not be the whole plane");
  NonlinearSpec s;
  s.family = std::move(family);
  s.cone = cone;
  s.grid = DirectionGrid::uniform(grid_size, polar_cone(cone));
  return s;
}

const RepresentingFamily& NonlinearSpec::family_for(Vec2 u) const {
  if (per_direction.empty()) return family;
  std::size_t best = 0;
  double best_dot = -kInf;
  for (std::size_t i = 0; i < per_direction.size(); ++i) {
    const double d = dot(unit(per_direction[i].first), u);
    if (d > best_dot) {
      best_dot = d;
      best = i;
    }
  }
  return per_direction[best].second;
}

void NonlinearSpec::validate() const {
  if (cone.is_full()) throw DomainError("the cone of an expectation must not be the whole plane");
  if (!approx_equal(grid.restriction(), polar_cone(cone)))
    throw DomainError("direction grid must be restricted to the polar cone");
  for (const auto& [u, m] : per_direction) {
    if (std::abs(norm(u) - 1.0) > 1e-9) throw DomainError("per-direction keys must be unit vectors");
  }
}

ConvexSet2 sublinear(const RandomConvexSet& x, const NonlinearSpec& spec) {
  check_cone(x, spec);
  const DirectionGrid grid = evaluation_grid(spec.grid, x);
  const auto probs = x.space().probs();
  const auto off = kernels::directional_offsets(grid.directions(), [&](Vec2 u) {
    const auto h = scenario_supports(x, u);
    return e_value(spec.family_for(u), probs, h);
  });
  return from_support(grid.directions(), off);
}

ConvexSet2 sublinear_union_oracle(const RandomConvexSet& x, const NonlinearSpec& spec) {
  check_oracle(x, spec);
  const auto parts = reweighted_expectations(x, spec.family);
  return convex_hull(parts);
}

ConvexSet2 superlinear_reduced_max(const RandomConvexSet& x, const NonlinearSpec& spec) {
  check_cone(x, spec);
  const DirectionGrid grid = evaluation_grid(spec.grid, x);
  const auto probs = x.space().probs();
  const auto off = kernels::directional_offsets(grid.directions(), [&](Vec2 u) {
    const auto h = scenario_supports(x, u);
    const auto n_inf = std::count_if(h.begin(), h.end(), [](double v) { return is_inf(v); });
    // a direction outside the polar of every value carries no constraint
    if (n_inf == static_cast<long>(h.size())) return kInf;
    if (n_inf > 0) throw DomainError("support is infinite in some scenarios only; values disagree on the cone");
    return u_value(spec.family_for(u), probs, h);
  });
  return from_support(grid.directions(), off);
}

ConvexSet2 superlinear_intersection_oracle(const RandomConvexSet& x, const NonlinearSpec& spec) {
  check_oracle(x, spec);
  const auto parts = reweighted_expectations(x, spec.family);
  ConvexSet2 acc = parts.front();
  for (std::size_t i = 1; i < parts.size() && !acc.empty(); ++i) acc = intersect(acc, parts[i]);
  return acc;
}

ConvexSet2 superlinear_cone_translate(const RandomVector2& xi, const Cone2& k, const NonlinearSpec& spec) {
  if (k.is_full()) throw DomainError("cone must not be the whole plane");
  spec.validate();
  if (!approx_equal(k, spec.cone)) throw DomainError("cone differs from the cone of the expectation");
  if (k.kind() == Cone2::Kind::wedge && spec.per_direction.empty()) {
    // lattice cone: the intersection is a translate, fixed by the two
    // boundary normals of the polar
    const Cone2 g = polar_cone(k);
    const Vec2 n0 = g.d0(), n1 = g.d1();
    const double c0 = u_value(spec.family, xi.dot(n0));
    const double c1 = u_value(spec.family, xi.dot(n1));
    return ConvexSet2::point(solve2(n0, n1, c0, c1), k);
  }
  const auto x = RandomConvexSet::translate(xi, ConvexSet2::point({}, k), k);
  return superlinear_reduced_max(x, spec);
}

Vec2 vector_sublinear(const RandomVector2& xi, const NonlinearSpec& spec) {
  spec.validate();
  if (!approx_equal(spec.cone, Cone2::lower_quadrant()))
    throw DomainError("componentwise expectation needs the lower quadrant cone");
  return {e_value(spec.family_for({1.0, 0.0}), xi.coordinate(0)),
          e_value(spec.family_for({0.0, 1.0}), xi.coordinate(1))};
}

ConvexSet2 zonoid_region(const RandomVector2& xi, double alpha, std::size_t grid_size) {
  const auto m = RepresentingFamily::avar(alpha);
  if (xi.size() <= kZonoidVertexGuard) {
    std::vector<Vec2> pts;
    for (const RandomScalar& g : extreme_densities(m, xi.space())) {
      Vec2 p;
      for (std::size_t i = 0; i < xi.size(); ++i) p += (xi.space().prob(i) * g[i]) * xi[i];
      pts.push_back(p);
    }
    return ConvexSet2::from_points(std::move(pts));
  }
  const auto x = RandomConvexSet::translate(xi, ConvexSet2::point({}), Cone2::zero());
  return sublinear(x, NonlinearSpec::make(m, Cone2::zero(), grid_size));
}

ConvexSet2 lift_expectation(const RandomScalar& beta) {
  if (!beta.finite()) throw DomainError("lift expectation needs finite values");
  std::vector<ConvexSet2> segs;
  for (std::size_t i = 0; i < beta.size(); ++i) segs.push_back(ConvexSet2::from_points({{0.0, 0.0}, {1.0, beta[i]}}));
  return weighted_sum(segs, beta.space().probs());
}

std::pair<double, double> lift_slice(const ConvexSet2& z, double alpha) {
  if (!(alpha > 0.0 && alpha <= 1.0)) throw DomainError("slice level must lie in (0, 1]");
  if (z.empty()) throw DomainError("slice of the empty set");
  auto hs = z.halfspaces();
  hs.push_back({{1.0, 0.0}, alpha});
  hs.push_back({{-1.0, 0.0}, -alpha});
  const ConvexSet2 cut = intersect_halfspaces(hs);
  if (cut.empty() || !cut.bounded()) throw DomainError("slice level outside the lift");
  double lo = kInf, hi = -kInf;
  for (Vec2 v : cut.vertices()) {
    lo = std::min(lo, v.y);
    hi = std::max(hi, v.y);
  }
  return {lo / alpha, hi / alpha};
}

}  // namespace setexp
