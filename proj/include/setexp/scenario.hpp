#pragma once

#include <cstddef>
#include <memory>
#include <span>
#include <vector>

#include "setexp/vec2.hpp"

namespace setexp {

// Finite probability space: strictly positive weights summing to one.
class ScenarioSpace {
 public:
  static constexpr double kSumTolerance = 1e-12;

  explicit ScenarioSpace(std::vector<double> probs);
  static ScenarioSpace uniform(std::size_t n);

  std::size_t size() const { return probs_->size(); }
  double prob(std::size_t i) const { return (*probs_)[i]; }
  std::span<const double> probs() const { return *probs_; }

  friend bool operator==(const ScenarioSpace& a, const ScenarioSpace& b) {
    return a.probs_ == b.probs_ || *a.probs_ == *b.probs_;
  }

 private:
  std::shared_ptr<const std::vector<double>> probs_;
};

// Scenario-indexed extended real; +inf allowed, -inf never.
class RandomScalar {
 public:
  RandomScalar(ScenarioSpace space, std::vector<double> values);
  static RandomScalar constant(ScenarioSpace space, double c);

  const ScenarioSpace& space() const { return space_; }
  std::size_t size() const { return values_.size(); }
  double operator[](std::size_t i) const { return values_[i]; }
  std::span<const double> values() const { return values_; }

  bool finite() const;
  double expectation() const;  // +inf if any value is +inf

  RandomScalar operator-() const;  // requires finite values
  friend RandomScalar operator+(const RandomScalar& a, const RandomScalar& b);
  friend RandomScalar operator*(double c, const RandomScalar& a);

 private:
  ScenarioSpace space_;
  std::vector<double> values_;
};

class RandomVector2 {
 public:
  RandomVector2(ScenarioSpace space, std::vector<Vec2> points);
  static RandomVector2 constant(ScenarioSpace space, Vec2 p);

  const ScenarioSpace& space() const { return space_; }
  std::size_t size() const { return points_.size(); }
  Vec2 operator[](std::size_t i) const { return points_[i]; }
  std::span<const Vec2> points() const { return points_; }

  Vec2 expectation() const;
  RandomScalar coordinate(int axis) const;
  RandomScalar dot(Vec2 u) const;
  RandomVector2 translated(Vec2 a) const;

 private:
  ScenarioSpace space_;
  std::vector<Vec2> points_;
};

// Disjoint, exhaustive, non-empty blocks of scenario indices.
class Partition {
 public:
  Partition(std::size_t n, std::vector<std::vector<std::size_t>> blocks);
  static Partition trivial(std::size_t n);   // one block
  static Partition discrete(std::size_t n);  // singletons

  // Every set partition of {0..n-1} (Bell number many).
  static std::vector<Partition> enumerate(std::size_t n);

  std::size_t scenario_count() const { return n_; }
  const std::vector<std::vector<std::size_t>>& blocks() const { return blocks_; }

 private:
  std::size_t n_;
  std::vector<std::vector<std::size_t>> blocks_;
};

// Lower (left-continuous) s-quantile of the scenario distribution.
double quantile(const RandomScalar& beta, double s);

RandomScalar conditional_expectation(const RandomScalar& beta, const Partition& part);

}  // namespace setexp
