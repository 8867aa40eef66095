#include "setexp/random_set.hpp"

#include <cmath>
#include <string>

#include "setexp/errors.hpp"

namespace setexp {

RandomConvexSet::RandomConvexSet(ScenarioSpace space, std::vector<ConvexSet2> values, Cone2 cone)
    : space_(std::move(space)), values_(std::move(values)), cone_(cone) {
  if (values_.size() != space_.size()) throw DomainError("random set needs one value per scenario");
  if (cone_.is_full()) throw DomainError("declared cone must not be the whole plane");
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (values_[i].empty()) throw DomainError("random set value " + std::to_string(i) + " is empty");
    if (!values_[i].recession().contains(cone_, 1e-9))
      throw DomainError("random set value " + std::to_string(i) + " is not closed under the declared cone");
  }
}

RandomConvexSet RandomConvexSet::deterministic(ScenarioSpace space, const ConvexSet2& f, const Cone2& cone) {
  std::vector<ConvexSet2> v(space.size(), f);
  return {std::move(space), std::move(v), cone};
}

RandomConvexSet RandomConvexSet::translate(const RandomVector2& xi, const ConvexSet2& f, const Cone2& cone) {
  std::vector<ConvexSet2> v;
  for (Vec2 p : xi.points()) v.push_back(f.translated(p));
  return {xi.space(), std::move(v), cone};
}

RandomConvexSet RandomConvexSet::halfspace(const RandomVector2& eta, const RandomScalar& beta) {
  if (!(eta.space() == beta.space())) throw DomainError("normal and offset live on different spaces");
  std::vector<ConvexSet2> v;
  Cone2 common = Cone2::full();
  for (std::size_t i = 0; i < eta.size(); ++i) {
    if (!std::isfinite(beta[i])) throw DomainError("half-space offset must be finite");
    const HalfSpace2 h{eta[i], beta[i]};
    v.push_back(intersect_halfspaces(std::span(&h, 1)));
    common = cone_intersection(common, v.back().recession());
  }
  return {eta.space(), std::move(v), common};
}

RandomConvexSet RandomConvexSet::scaled_by(const RandomScalar& beta, const ConvexSet2& f) {
  std::vector<ConvexSet2> v;
  for (double b : beta.values()) {
    if (!(b >= 0.0) || !std::isfinite(b)) throw DomainError("scaling factors must be finite and non-negative");
    v.push_back(b > 0.0 ? scale(f, b) : ConvexSet2::point({}, f.recession()));
  }
  return {beta.space(), std::move(v), f.recession()};
}

bool RandomConvexSet::deterministic() const {
  for (const auto& v : values_)
    if (!approx_equal(v, values_.front(), 1e-12)) return false;
  return true;
}

RandomConvexSet RandomConvexSet::translated(Vec2 a) const {
  std::vector<ConvexSet2> v;
  for (const auto& s : values_) v.push_back(s.translated(a));
  return {space_, std::move(v), cone_};
}

RandomConvexSet RandomConvexSet::translated(const RandomVector2& a) const {
  if (!(a.space() == space_)) throw DomainError("translation lives on a different space");
  std::vector<ConvexSet2> v;
  for (std::size_t i = 0; i < size(); ++i) v.push_back(values_[i].translated(a[i]));
  return {space_, std::move(v), cone_};
}

RandomConvexSet RandomConvexSet::scaled(double c) const {
  std::vector<ConvexSet2> v;
  for (const auto& s : values_) v.push_back(scale(s, c));
  return {space_, std::move(v), cone_};
}

RandomConvexSet operator+(const RandomConvexSet& a, const RandomConvexSet& b) {
  if (!(a.space() == b.space())) throw DomainError("summands live on different spaces");
  std::vector<ConvexSet2> v;
  for (std::size_t i = 0; i < a.size(); ++i) v.push_back(minkowski_sum(a[i], b[i]));
  return {a.space(), std::move(v), cone_sum(a.cone(), b.cone())};
}

Selection::Selection(const RandomConvexSet& x, RandomVector2 v) : v_(std::move(v)) {
  if (!(v_.space() == x.space())) throw DomainError("selection lives on a different space");
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!contains_point(x[i], v_[i], kTolerance))
      throw DomainError("selection leaves the set at scenario " + std::to_string(i));
  }
}

RandomScalar support_rv(const RandomConvexSet& x, Vec2 u) {
  std::vector<double> h;
  h.reserve(x.size());
  for (const auto& s : x.values()) h.push_back(support(s, u));
  return {x.space(), std::move(h)};
}

RandomScalar support_rv(const RandomConvexSet& x, const RandomVector2& zeta) {
  if (!(zeta.space() == x.space())) throw DomainError("direction lives on a different space");
  std::vector<double> h;
  for (std::size_t i = 0; i < x.size(); ++i) h.push_back(support(x[i], zeta[i]));
  return {x.space(), std::move(h)};
}

ConvexSet2 selection_expectation(const RandomConvexSet& x) { return weighted_sum(x.values(), x.space().probs()); }

ConvexSet2 weighted_expectation(const RandomConvexSet& x, std::span<const double> gamma) {
  if (gamma.size() != x.size()) throw DomainError("density length differs from scenario count");
  std::vector<double> w(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) w[i] = x.space().prob(i) * gamma[i];
  return weighted_sum(x.values(), w);
}

RandomConvexSet conditional_selection_expectation(const RandomConvexSet& x, const Partition& part) {
  if (part.scenario_count() != x.size()) throw DomainError("partition size differs from scenario count");
  std::vector<ConvexSet2> v(x.size());
  for (const auto& block : part.blocks()) {
    double mass = 0.0;
    for (std::size_t i : block) mass += x.space().prob(i);
    std::vector<ConvexSet2> sets;
    std::vector<double> w;
    for (std::size_t i : block) {
      sets.push_back(x[i]);
      w.push_back(x.space().prob(i) / mass);
    }
    const ConvexSet2 avg = weighted_sum(sets, w);
    for (std::size_t i : block) v[i] = avg;
  }
  return {x.space(), std::move(v), x.cone()};
}

DirectionGrid evaluation_grid(const DirectionGrid& base, const RandomConvexSet& x) {
  std::vector<Vec2> extra = normal_fan(x.values());
  // directions where two scenarios' supporting vertices swap order
  const auto supported = [](const ConvexSet2& a, Vec2 p, Vec2 u) {
    const double h = support(a, u);
    return !is_inf(h) && std::abs(dot(p, u) - h) <= 1e-12 * (1.0 + std::abs(h));
  };
  for (std::size_t i = 0; i < x.size(); ++i) {
    for (std::size_t j = i + 1; j < x.size(); ++j) {
      for (Vec2 p : x[i].vertices()) {
        for (Vec2 q : x[j].vertices()) {
          const Vec2 d = p - q;
          if (norm(d) <= 1e-12) continue;
          const Vec2 w = unit(rot_cw(d));
          for (Vec2 u : {w, -w}) {
            if (base.restriction().contains(u, 1e-12) && supported(x[i], p, u) && supported(x[j], q, u))
              extra.push_back(u);
          }
        }
      }
    }
  }
  return base.augmented(extra);
}

ConvexSet2 firey_expectation(const RandomConvexSet& x, double p, std::size_t grid_size) {
  if (!(p >= 1.0) || !std::isfinite(p)) throw DomainError("Firey exponent must be at least 1");
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!contains_point(x[i], {}))
      throw DomainError("Firey expectation needs the origin in every value (scenario " + std::to_string(i) + ")");
  }
  const DirectionGrid grid = evaluation_grid(DirectionGrid::uniform(grid_size, polar_cone(x.cone())), x);
  std::vector<double> off;
  off.reserve(grid.size());
  for (Vec2 u : grid.directions()) {
    double acc = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
      const double h = support(x[i], u);
      if (is_inf(h)) {
        acc = kInf;
        break;
      }
      if (h < -1e-12) throw DomainError("negative support value in Firey expectation");
      acc += x.space().prob(i) * std::pow(std::max(h, 0.0), p);
    }
    off.push_back(is_inf(acc) ? kInf : std::pow(acc, 1.0 / p));
  }
  return from_support(grid.directions(), off);
}

ConvexSet2 fixed_points(const RandomConvexSet& x) {
  ConvexSet2 acc = x[0];
  for (std::size_t i = 1; i < x.size() && !acc.empty(); ++i) acc = intersect(acc, x[i]);
  return acc;
}

ConvexSet2 support_set(const RandomConvexSet& x) { return convex_hull(x.values()); }

}  // namespace setexp
