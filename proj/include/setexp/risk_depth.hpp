#pragma once

#include <cstdint>
#include <vector>

#include "setexp/set_expectation.hpp"

namespace setexp {

enum class Provenance { consumption_only, full_exchange, cone_exchange };

struct Portfolio {
  RandomConvexSet set;
  Provenance provenance;
};

// consumption_only: xi + R_-^2; full_exchange: {x : x1 + x2 <= xi1 + xi2};
// cone_exchange: xi + K for a wedge K containing R_-^2.
Portfolio make_portfolio(const RandomVector2& xi, Provenance mode, const Cone2& k = Cone2::lower_quadrant());

bool is_acceptable(const Portfolio& p, const NonlinearSpec& spec);
ConvexSet2 risk_set(const Portfolio& p, const NonlinearSpec& spec);

// Equally weighted observations sharing a recession cone.
class SampleOfSets {
 public:
  explicit SampleOfSets(std::vector<ConvexSet2> observations);
  const std::vector<ConvexSet2>& observations() const { return obs_; }
  std::size_t size() const { return obs_.size(); }
  const Cone2& cone() const { return obs_.front().recession(); }

 private:
  std::vector<ConvexSet2> obs_;
};

RandomConvexSet empirical_resample(const SampleOfSets& sample);

struct DepthOptions {
  RepresentingFamily family = RepresentingFamily::expectation();
  double lambda_tol = 1e-3;
  double containment_tol = 1e-6;
  std::size_t grid_size = kDefaultGridSize;
  std::size_t exact_limit = 10;  // scenario count up to which the subset law is exact
  std::size_t samples = 20000;
  std::uint64_t seed = 0;
};

// sup{lambda in (0,1] : U_lambda(X) c F c E_lambda(X)}, 0 when no ladder
// level down to lambda_tol qualifies.
double depth(const ConvexSet2& f, const RandomConvexSet& x, const DepthOptions& opt = {});

// Observations whose leave-one-out depth is below the threshold.
std::vector<std::size_t> flag_outliers(const SampleOfSets& sample, const NonlinearSpec& spec, double threshold,
                                       const DepthOptions& opt = {});

}  // namespace setexp
