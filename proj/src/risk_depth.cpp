#include "setexp/risk_depth.hpp"

#include <cmath>

#include "setexp/errors.hpp"

namespace setexp {

Portfolio make_portfolio(const RandomVector2& xi, Provenance mode, const Cone2& k) {
  switch (mode) {
    case Provenance::consumption_only: {
      const Cone2 c = Cone2::lower_quadrant();
      return {RandomConvexSet::translate(xi, ConvexSet2::point({}, c), c), mode};
    }
    case Provenance::full_exchange: {
      const Cone2 c = Cone2::halfplane({1.0, 1.0});
      return {RandomConvexSet::translate(xi, ConvexSet2::point({}, c), c), mode};
    }
    case Provenance::cone_exchange:
      if (k.kind() != Cone2::Kind::wedge || !k.contains(Cone2::lower_quadrant(), 1e-12))
        throw DomainError("exchange cone must be a wedge containing the lower quadrant");
      return {RandomConvexSet::translate(xi, ConvexSet2::point({}, k), k), mode};
  }
  throw DomainError("unknown portfolio provenance");
}

bool is_acceptable(const Portfolio& p, const NonlinearSpec& spec) {
  const ConvexSet2 u = superlinear_reduced_max(p.set, spec);
  return !u.empty() && contains_point(u, {}, 1e-9);
}

ConvexSet2 risk_set(const Portfolio& p, const NonlinearSpec& spec) {
  return superlinear_reduced_max(p.set, spec).reflected();
}

SampleOfSets::SampleOfSets(std::vector<ConvexSet2> observations) : obs_(std::move(observations)) {
  if (obs_.empty()) throw DomainError("sample of sets must not be empty");
  for (std::size_t i = 0; i < obs_.size(); ++i) {
    if (obs_[i].empty()) throw DomainError("observation " + std::to_string(i) + " is empty");
    if (!approx_equal(obs_[i].recession(), obs_.front().recession()))
      throw DomainError("observation " + std::to_string(i) + " has a different recession cone");
  }
}

RandomConvexSet empirical_resample(const SampleOfSets& sample) {
  return {ScenarioSpace::uniform(sample.size()), sample.observations(), sample.cone()};
}

namespace {

struct Families {
  const RandomConvexSet& x;
  const DepthOptions& opt;
  NonlinearSpec spec;

  SubsetLaw law(double lambda) const {
    if (x.size() <= opt.exact_limit) return geometric_subset_law(x.space(), lambda);
    return sampled_subset_law(x.space(), lambda, opt.samples, opt.seed);
  }

  bool between(const ConvexSet2& f, double lambda) const {
    const SubsetLaw l = law(lambda);
    const ConvexSet2 lo = parametric_super(x, l, spec);
    if (!lo.empty() && !contains(f, lo, opt.containment_tol)) return false;
    const ConvexSet2 hi = parametric_sub(x, l, spec);
    return contains(hi, f, opt.containment_tol);
  }
};

}  // namespace

double depth(const ConvexSet2& f, const RandomConvexSet& x, const DepthOptions& opt) {
  if (f.empty()) throw DomainError("depth of the empty set");
  if (!(opt.lambda_tol > 0.0 && opt.lambda_tol < 1.0)) throw DomainError("lambda tolerance must lie in (0, 1)");
  const Families fam{x, opt, NonlinearSpec::make(opt.family, x.cone(), opt.grid_size)};
  if (fam.between(f, 1.0)) return 1.0;
  double fail = 1.0;
  double lambda = 0.5;
  while (lambda >= opt.lambda_tol && !fam.between(f, lambda)) {
    fail = lambda;
    lambda *= 0.5;
  }
  if (lambda < opt.lambda_tol) return 0.0;
  double ok = lambda;
  while (fail - ok > opt.lambda_tol) {
    const double mid = 0.5 * (ok + fail);
    if (fam.between(f, mid))
      ok = mid;
    else
      fail = mid;
  }
  return ok;
}

std::vector<std::size_t> flag_outliers(const SampleOfSets& sample, const NonlinearSpec& spec, double threshold,
                                       const DepthOptions& opt) {
  std::vector<std::size_t> out;
  if (threshold <= 0.0 || sample.size() < 2) return out;
  DepthOptions o = opt;
  o.family = spec.family;
  for (std::size_t i = 0; i < sample.size(); ++i) {
    std::vector<ConvexSet2> rest;
    for (std::size_t j = 0; j < sample.size(); ++j)
      if (j != i) rest.push_back(sample.observations()[j]);
    const RandomConvexSet x = empirical_resample(SampleOfSets(std::move(rest)));
    if (depth(sample.observations()[i], x, o) < threshold) out.push_back(i);
  }
  return out;
}

}  // namespace setexp
