#include <bit>
#include <cmath>
#include <map>
#include <optional>
#include <random>

#include "setexp/errors.hpp"
#include "setexp/kernels.hpp"
#include "setexp/set_expectation.hpp"

namespace setexp {

namespace {

constexpr std::size_t kExactLawGuard = 12;
constexpr double kNegligibleMass = 1e-15;

void check_lambda(double lambda) {
  if (!(lambda > 0.0 && lambda <= 1.0)) throw DomainError("lambda must lie in (0, 1]");
}

ScenarioSpace law_space(const SubsetLaw& law) { return ScenarioSpace(law.probs); }

std::vector<std::size_t> members(std::uint64_t mask) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; mask; ++i, mask >>= 1)
    if (mask & 1) out.push_back(i);
  return out;
}

RandomConvexSet union_hulls(const RandomConvexSet& x, const SubsetLaw& law) {
  std::vector<ConvexSet2> v;
  for (std::uint64_t mask : law.masks) {
    std::vector<ConvexSet2> parts;
    for (std::size_t i : members(mask)) parts.push_back(x[i]);
    v.push_back(convex_hull(parts));
  }
  return {law_space(law), std::move(v), x.cone()};
}

std::optional<RandomConvexSet> intersections(const RandomConvexSet& x, const SubsetLaw& law, std::string* diagnostic) {
  std::vector<ConvexSet2> v;
  for (std::uint64_t mask : law.masks) {
    const auto idx = members(mask);
    ConvexSet2 acc = x[idx[0]];
    for (std::size_t k = 1; k < idx.size() && !acc.empty(); ++k) acc = intersect(acc, x[idx[k]]);
    if (acc.empty()) {
      if (diagnostic) {
        *diagnostic = "empty intersection of scenarios";
        for (std::size_t i : idx) *diagnostic += " " + std::to_string(i);
      }
      return std::nullopt;
    }
    v.push_back(std::move(acc));
  }
  return RandomConvexSet(law_space(law), std::move(v), x.cone());
}

void normalise(SubsetLaw& law) {
  double total = 0.0;
  for (double p : law.probs) total += p;
  for (double& p : law.probs) p /= total;
}

}  // namespace

SubsetLaw geometric_subset_law(const ScenarioSpace& space, double lambda) {
  check_lambda(lambda);
  const std::size_t n = space.size();
  if (n > kExactLawGuard)
    throw CapacityError("exact subset law limited to " + std::to_string(kExactLawGuard) + " scenarios");
  const std::uint64_t full = (std::uint64_t{1} << n) - 1;
  // g[T] = E p_T^N = G(p_T)
  std::vector<double> g(full + 1, 0.0);
  for (std::uint64_t t = 1; t <= full; ++t) {
    double pt = 0.0;
    for (std::size_t i : members(t)) pt += space.prob(i);
    pt = std::min(pt, 1.0);
    g[t] = lambda * pt / (1.0 - (1.0 - lambda) * pt);
  }
  SubsetLaw law;
  for (std::uint64_t s = 1; s <= full; ++s) {
    // inclusion-exclusion over subsets of s
    double p = 0.0;
    const int size_s = std::popcount(s);
    for (std::uint64_t t = s; t; t = (t - 1) & s) p += ((size_s - std::popcount(t)) % 2 ? -g[t] : g[t]);
    if (p > kNegligibleMass) {
      law.masks.push_back(s);
      law.probs.push_back(p);
    }
  }
  normalise(law);
  return law;
}

SubsetLaw sampled_subset_law(const ScenarioSpace& space, double lambda, std::size_t samples, std::uint64_t seed) {
  check_lambda(lambda);
  if (samples == 0) throw DomainError("Monte Carlo needs at least one sample");
  if (space.size() > 63) throw CapacityError("subset sampling limited to 63 scenarios");
  std::mt19937_64 rng(seed);
  std::geometric_distribution<long> count(lambda);
  std::discrete_distribution<std::size_t> pick(space.probs().begin(), space.probs().end());
  std::map<std::uint64_t, std::size_t> freq;
  for (std::size_t s = 0; s < samples; ++s) {
    const long k = count(rng) + 1;
    std::uint64_t mask = 0;
    for (long j = 0; j < k; ++j) mask |= std::uint64_t{1} << pick(rng);
    ++freq[mask];
  }
  SubsetLaw law;
  for (const auto& [mask, c] : freq) {
    law.masks.push_back(mask);
    law.probs.push_back(static_cast<double>(c) / samples);
  }
  normalise(law);
  return law;
}

ConvexSet2 parametric_sub(const RandomConvexSet& x, double lambda, std::size_t grid_size) {
  check_lambda(lambda);
  const DirectionGrid grid = evaluation_grid(DirectionGrid::uniform(grid_size, polar_cone(x.cone())), x);
  const auto off = kernels::directional_offsets(grid.directions(), [&](Vec2 u) {
    const RandomScalar h = support_rv(x, u);
    if (!h.finite()) return kInf;
    return geometric_max_expectation(h, lambda);
  });
  return from_support(grid.directions(), off);
}

ConvexSet2 parametric_sub(const RandomConvexSet& x, const SubsetLaw& law, const NonlinearSpec& spec) {
  const RandomConvexSet y = union_hulls(x, law);
  if (spec.family.kind() == RepresentingFamily::Kind::expectation && spec.per_direction.empty())
    return selection_expectation(y);
  if (!spec.family.law_invariant()) throw DomainError("parametric families need a law invariant base");
  return sublinear(y, spec);
}

ConvexSet2 parametric_super(const RandomConvexSet& x, const SubsetLaw& law, const NonlinearSpec& spec,
                            std::string* diagnostic) {
  const auto y = intersections(x, law, diagnostic);
  if (!y) return ConvexSet2::empty_set();
  if (spec.family.kind() == RepresentingFamily::Kind::expectation && spec.per_direction.empty())
    return selection_expectation(*y);
  if (!spec.family.law_invariant()) throw DomainError("parametric families need a law invariant base");
  return superlinear_reduced_max(*y, spec);
}

ConvexSet2 parametric_super(const RandomConvexSet& x, double lambda, std::size_t samples, std::uint64_t seed,
                            std::string* diagnostic) {
  const auto law = sampled_subset_law(x.space(), lambda, samples, seed);
  return parametric_super(x, law, NonlinearSpec::make(RepresentingFamily::expectation(), x.cone(), 8), diagnostic);
}

ConvexSet2 parametric_super_exact(const RandomConvexSet& x, double lambda, std::string* diagnostic) {
  const auto law = geometric_subset_law(x.space(), lambda);
  return parametric_super(x, law, NonlinearSpec::make(RepresentingFamily::expectation(), x.cone(), 8), diagnostic);
}

}  // namespace setexp
