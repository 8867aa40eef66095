#pragma once

#include <vector>

#include "setexp/geometry.hpp"
#include "setexp/scenario.hpp"

namespace setexp {

// One non-empty convex set per scenario, each closed under the declared cone.
class RandomConvexSet {
 public:
  RandomConvexSet(ScenarioSpace space, std::vector<ConvexSet2> values, Cone2 cone);

  static RandomConvexSet deterministic(ScenarioSpace space, const ConvexSet2& f, const Cone2& cone);
  // xi + F scenario-wise
  static RandomConvexSet translate(const RandomVector2& xi, const ConvexSet2& f, const Cone2& cone);
  // {x : <eta, x> <= beta} scenario-wise; the declared cone is the common
  // recession of all values
  static RandomConvexSet halfspace(const RandomVector2& eta, const RandomScalar& beta);
  // beta * F scenario-wise, beta >= 0 (zero values give the recession of F)
  static RandomConvexSet scaled_by(const RandomScalar& beta, const ConvexSet2& f);

  const ScenarioSpace& space() const { return space_; }
  std::size_t size() const { return values_.size(); }
  const ConvexSet2& operator[](std::size_t i) const { return values_[i]; }
  const std::vector<ConvexSet2>& values() const { return values_; }
  const Cone2& cone() const { return cone_; }
  bool deterministic() const;

  RandomConvexSet translated(Vec2 a) const;
  RandomConvexSet translated(const RandomVector2& a) const;
  RandomConvexSet scaled(double c) const;

 private:
  ScenarioSpace space_;
  std::vector<ConvexSet2> values_;
  Cone2 cone_;
};

RandomConvexSet operator+(const RandomConvexSet& a, const RandomConvexSet& b);

// A random vector lying in X at every scenario.
class Selection {
 public:
  static constexpr double kTolerance = 1e-9;
  Selection(const RandomConvexSet& x, RandomVector2 v);
  const RandomVector2& vector() const { return v_; }

 private:
  RandomVector2 v_;
};

RandomScalar support_rv(const RandomConvexSet& x, Vec2 u);
RandomScalar support_rv(const RandomConvexSet& x, const RandomVector2& zeta);

ConvexSet2 selection_expectation(const RandomConvexSet& x);
// E(gamma X) = sum_w p_w gamma_w X(w), with 0 X(w) dropped
ConvexSet2 weighted_expectation(const RandomConvexSet& x, std::span<const double> gamma);
RandomConvexSet conditional_selection_expectation(const RandomConvexSet& x, const Partition& part);

// Grid directions in the polar of X's cone, refined by the edge normals of
// all scenario values and the directions where two scenarios' supporting
// vertices tie.
DirectionGrid evaluation_grid(const DirectionGrid& base, const RandomConvexSet& x);

ConvexSet2 firey_expectation(const RandomConvexSet& x, double p, std::size_t grid_size = 3600);
ConvexSet2 fixed_points(const RandomConvexSet& x);
ConvexSet2 support_set(const RandomConvexSet& x);

}  // namespace setexp
