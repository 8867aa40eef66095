#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "setexp/numeric_expectation.hpp"
#include "setexp/random_set.hpp"

namespace setexp {

inline constexpr std::size_t kDefaultGridSize = 3600;

// Numeric family, direction grid over the polar of C, and optional
// per-direction families keyed by unit direction (nearest key wins).
struct NonlinearSpec {
  RepresentingFamily family = RepresentingFamily::expectation();
  DirectionGrid grid;
  Cone2 cone;
  std::vector<std::pair<Vec2, RepresentingFamily>> per_direction;

  static NonlinearSpec make(RepresentingFamily family, const Cone2& cone, std::size_t grid_size = kDefaultGridSize);

  const RepresentingFamily& family_for(Vec2 u) const;
  void validate() const;
};

ConvexSet2 sublinear(const RandomConvexSet& x, const NonlinearSpec& spec);
ConvexSet2 sublinear_union_oracle(const RandomConvexSet& x, const NonlinearSpec& spec);

ConvexSet2 superlinear_reduced_max(const RandomConvexSet& x, const NonlinearSpec& spec);
ConvexSet2 superlinear_intersection_oracle(const RandomConvexSet& x, const NonlinearSpec& spec);
// U(xi + K); a translate x + K when K is a wedge
ConvexSet2 superlinear_cone_translate(const RandomVector2& xi, const Cone2& k, const NonlinearSpec& spec);

// Minimal extension: hull of U(eta + C) over selections eta drawn from a
// boundary discretisation of every scenario value.
ConvexSet2 superlinear_min_lower(const RandomConvexSet& x, const NonlinearSpec& spec, int resolution);

struct Example62 {
  Cone2 k;
  ConvexSet2 reduced_max;  // x + K
  ConvexSet2 minimal;
  Vec2 x;
};
// xi equal to 0 or a with equal probabilities, X = xi + K, C the lower
// quadrant, AVaR family.
Example62 example62(Vec2 a, double pi, double pi_prime, double alpha, int resolution);
Cone2 example62_cone(double pi, double pi_prime);
Vec2 example62_closed_form(Vec2 a, double pi, double pi_prime, double alpha);

Vec2 vector_sublinear(const RandomVector2& xi, const NonlinearSpec& spec);

ConvexSet2 zonoid_region(const RandomVector2& xi, double alpha, std::size_t grid_size = kDefaultGridSize);

// Z = E conv({0} u {1} x beta), a polygon in (mass, value) coordinates.
ConvexSet2 lift_expectation(const RandomScalar& beta);
// alpha^{-1} {x : (alpha, x) in Z} as an interval.
std::pair<double, double> lift_slice(const ConvexSet2& z, double alpha);

// Law of the set of distinct indices among N iid scenario draws, N
// geometric with P(N = 1) = lambda.
struct SubsetLaw {
  std::vector<std::uint64_t> masks;
  std::vector<double> probs;
};
SubsetLaw geometric_subset_law(const ScenarioSpace& space, double lambda);
SubsetLaw sampled_subset_law(const ScenarioSpace& space, double lambda, std::size_t samples, std::uint64_t seed);

// E(co(X_1 u ... u X_N)) via geometric_max_expectation on the grid.
ConvexSet2 parametric_sub(const RandomConvexSet& x, double lambda, std::size_t grid_size = kDefaultGridSize);
// Same family for a general base, evaluated on the subset space of `law`.
ConvexSet2 parametric_sub(const RandomConvexSet& x, const SubsetLaw& law, const NonlinearSpec& spec);

// E(X_1 n ... n X_N) by Monte Carlo; empty when some drawn intersection is.
ConvexSet2 parametric_super(const RandomConvexSet& x, double lambda, std::size_t samples, std::uint64_t seed,
                            std::string* diagnostic = nullptr);
ConvexSet2 parametric_super_exact(const RandomConvexSet& x, double lambda, std::string* diagnostic = nullptr);
ConvexSet2 parametric_super(const RandomConvexSet& x, const SubsetLaw& law, const NonlinearSpec& spec,
                            std::string* diagnostic = nullptr);

}  // namespace setexp
