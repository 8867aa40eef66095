#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "setexp/scenario.hpp"

namespace setexp {

// Density family M; e(b) = sup E(gamma b), u(b) = inf E(gamma b) over
// gamma in M with E gamma = 1.
class RepresentingFamily {
 public:
  enum class Kind { expectation, avar, max_of_n, density_band };

  static RepresentingFamily expectation() { return RepresentingFamily(); }
  static RepresentingFamily avar(double alpha);
  static RepresentingFamily max_of_n(int n);
  static RepresentingFamily density_band(RandomScalar lower, RandomScalar upper);

  Kind kind() const { return kind_; }
  double alpha() const { return alpha_; }
  int n() const { return n_; }
  const RandomScalar& lower() const { return *lower_; }
  const RandomScalar& upper() const { return *upper_; }

  // Law invariant families can be evaluated on any scenario space.
  bool law_invariant() const { return kind_ != Kind::density_band; }
  // Whether gamma = 1 belongs to the family.
  bool contains_unit_density() const;

 private:
  RepresentingFamily() = default;

  Kind kind_ = Kind::expectation;
  double alpha_ = 1.0;
  int n_ = 1;
  std::optional<RandomScalar> lower_, upper_;
};

const char* to_string(RepresentingFamily::Kind k);

double e_value(const RepresentingFamily& m, const RandomScalar& beta);
double u_value(const RepresentingFamily& m, const RandomScalar& beta);
double e_value(const RepresentingFamily& m, std::span<const double> probs, std::span<const double> values);
double u_value(const RepresentingFamily& m, std::span<const double> probs, std::span<const double> values);

std::vector<RandomScalar> extreme_densities(const RepresentingFamily& m, const ScenarioSpace& space);

// E max / E min of N iid copies, N geometric on {1,2,...} with P(N=1)=lambda.
double geometric_max_expectation(const RandomScalar& beta, double lambda);
double geometric_min_expectation(const RandomScalar& beta, double lambda);

struct MonteCarloEstimate {
  double mean = 0.0;
  double std_error = 0.0;
};
MonteCarloEstimate geometric_max_monte_carlo(const RandomScalar& beta, double lambda, std::size_t samples,
                                             std::uint64_t seed);

}  // namespace setexp
