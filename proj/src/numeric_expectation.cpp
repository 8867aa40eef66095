#include "setexp/numeric_expectation.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <random>
#include <string>

#include "setexp/errors.hpp"

namespace setexp {

namespace {

constexpr std::size_t kVertexGuard = 12;
constexpr std::size_t kPermutationGuard = 8;

struct Atom {
  double value;
  double mass;
};

// Distinct values ascending with their masses.
std::vector<Atom> atoms(std::span<const double> probs, std::span<const double> values) {
  std::vector<std::size_t> idx(values.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
  std::vector<Atom> out;
  for (std::size_t i : idx) {
    if (!out.empty() && out.back().value == values[i])
      out.back().mass += probs[i];
    else
      out.push_back({values[i], probs[i]});
  }
  return out;
}

bool any_inf(std::span<const double> v) {
  return std::any_of(v.begin(), v.end(), [](double x) { return is_inf(x); });
}

// Average of the top `alpha` mass of the sorted atoms.
double upper_tail_mean(const std::vector<Atom>& a, double alpha) {
  double need = alpha, acc = 0.0;
  for (auto it = a.rbegin(); it != a.rend() && need > 0.0; ++it) {
    const double take = std::min(need, it->mass);
    acc += ext_mul(take, it->value);
    need -= take;
  }
  return acc / alpha;
}

double lower_tail_mean(const std::vector<Atom>& a, double alpha) {
  double need = alpha, acc = 0.0;
  for (auto it = a.begin(); it != a.end() && need > 0.0; ++it) {
    const double take = std::min(need, it->mass);
    acc += take * it->value;
    need -= take;
  }
  return acc / alpha;
}

// Greedy LP over lower <= gamma <= upper, E gamma = 1: fill the largest
// (maximise) or smallest values first.
double band_value(const RepresentingFamily& m, std::span<const double> probs, std::span<const double> values,
                  bool maximise) {
  const auto lo = m.lower().values();
  const auto hi = m.upper().values();
  if (lo.size() != values.size()) throw DomainError("density band defined on a different scenario space");
  std::vector<std::size_t> idx(values.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
    return maximise ? values[a] > values[b] : values[a] < values[b];
  });
  double rest = 1.0;
  for (std::size_t i = 0; i < values.size(); ++i) rest -= probs[i] * lo[i];
  double acc = 0.0;
  for (std::size_t i : idx) {
    double g = lo[i];
    if (rest > 0.0) {
      const double room = probs[i] * (hi[i] - lo[i]);
      const double take = std::min(room, rest);
      g += take / probs[i];
      rest -= take;
    }
    acc += ext_mul(probs[i] * g, values[i]);
  }
  return acc;
}

double max_of_n_value(const std::vector<Atom>& a, int n) {
  double acc = 0.0, prev = 0.0, cdf = 0.0;
  for (const Atom& at : a) {
    cdf += at.mass;
    const double cur = std::pow(std::min(cdf, 1.0), n);
    acc += ext_mul(cur - prev, at.value);
    prev = cur;
  }
  return acc;
}

double min_of_n_value(const std::vector<Atom>& a, int n) {
  double acc = 0.0, prev = 0.0, sf = 0.0;
  for (auto it = a.rbegin(); it != a.rend(); ++it) {
    sf += it->mass;
    const double cur = std::pow(std::min(sf, 1.0), n);
    acc += (cur - prev) * it->value;
    prev = cur;
  }
  return acc;
}

double geometric_transform(double f, double lambda) { return lambda * f / (1.0 - (1.0 - lambda) * f); }

void check_lambda(double lambda) {
  if (!(lambda > 0.0 && lambda <= 1.0)) throw DomainError("lambda must lie in (0, 1]");
}

}  // namespace

RepresentingFamily RepresentingFamily::avar(double alpha) {
  if (!(alpha > 0.0 && alpha <= 1.0)) throw DomainError("AVaR level must lie in (0, 1]");
  RepresentingFamily m;
  m.kind_ = Kind::avar;
  m.alpha_ = alpha;
  return m;
}

RepresentingFamily RepresentingFamily::max_of_n(int n) {
  if (n < 1) throw DomainError("max-of-n needs n >= 1");
  RepresentingFamily m;
  m.kind_ = Kind::max_of_n;
  m.n_ = n;
  return m;
}

RepresentingFamily RepresentingFamily::density_band(RandomScalar lower, RandomScalar upper) {
  if (!(lower.space() == upper.space())) throw DomainError("band bounds on different spaces");
  double lo_mass = 0.0, hi_mass = 0.0;
  for (std::size_t i = 0; i < lower.size(); ++i) {
    if (!(lower[i] >= 0.0 && lower[i] <= upper[i]) || !std::isfinite(upper[i]))
      throw DomainError("density band needs 0 <= lower <= upper < inf");
    lo_mass += lower.space().prob(i) * lower[i];
    hi_mass += lower.space().prob(i) * upper[i];
  }
  if (lo_mass > 1.0 + 1e-12 || hi_mass < 1.0 - 1e-12) throw DomainError("density band admits no unit-mean density");
  RepresentingFamily m;
  m.kind_ = Kind::density_band;
  m.lower_ = std::move(lower);
  m.upper_ = std::move(upper);
  return m;
}

bool RepresentingFamily::contains_unit_density() const {
  if (kind_ != Kind::density_band) return true;
  for (std::size_t i = 0; i < lower_->size(); ++i)
    if ((*lower_)[i] > 1.0 || (*upper_)[i] < 1.0) return false;
  return true;
}

const char* to_string(RepresentingFamily::Kind k) {
  switch (k) {
    case RepresentingFamily::Kind::expectation:
      return "expectation";
    case RepresentingFamily::Kind::avar:
      return "avar";
    case RepresentingFamily::Kind::max_of_n:
      return "max_of_n";
    case RepresentingFamily::Kind::density_band:
      return "density_band";
  }
  return "?";
}

double e_value(const RepresentingFamily& m, std::span<const double> probs, std::span<const double> values) {
  switch (m.kind()) {
    case RepresentingFamily::Kind::expectation: {
      double acc = 0.0;
      for (std::size_t i = 0; i < values.size(); ++i) acc += ext_mul(probs[i], values[i]);
      return acc;
    }
    case RepresentingFamily::Kind::avar:
      if (any_inf(values)) return kInf;
      return upper_tail_mean(atoms(probs, values), m.alpha());
    case RepresentingFamily::Kind::max_of_n:
      if (any_inf(values)) return kInf;
      return max_of_n_value(atoms(probs, values), m.n());
    case RepresentingFamily::Kind::density_band:
      return band_value(m, probs, values, true);
  }
  return kInf;
}

double u_value(const RepresentingFamily& m, std::span<const double> probs, std::span<const double> values) {
  if (any_inf(values)) throw DomainError("superlinear expectation of a variable taking +inf");
  switch (m.kind()) {
    case RepresentingFamily::Kind::expectation: {
      double acc = 0.0;
      for (std::size_t i = 0; i < values.size(); ++i) acc += probs[i] * values[i];
      return acc;
    }
    case RepresentingFamily::Kind::avar:
      return lower_tail_mean(atoms(probs, values), m.alpha());
    case RepresentingFamily::Kind::max_of_n:
      return min_of_n_value(atoms(probs, values), m.n());
    case RepresentingFamily::Kind::density_band:
      return band_value(m, probs, values, false);
  }
  return 0.0;
}

double e_value(const RepresentingFamily& m, const RandomScalar& beta) {
  return e_value(m, beta.space().probs(), beta.values());
}

double u_value(const RepresentingFamily& m, const RandomScalar& beta) {
  return u_value(m, beta.space().probs(), beta.values());
}

std::vector<RandomScalar> extreme_densities(const RepresentingFamily& m, const ScenarioSpace& space) {
  const std::size_t n = space.size();
  if (m.kind() == RepresentingFamily::Kind::expectation) return {RandomScalar::constant(space, 1.0)};

  if (m.kind() == RepresentingFamily::Kind::max_of_n) {
    if (n > kPermutationGuard)
      throw CapacityError("max-of-n vertex enumeration limited to " + std::to_string(kPermutationGuard) + " scenarios");
    // vertices of the core of the capacity c(A) = 1 - (1 - P(A))^n: one
    // marginal vector per ordering of the scenarios
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::map<std::vector<double>, bool> seen;
    std::vector<RandomScalar> out;
    do {
      std::vector<double> g(n);
      double mass = 0.0, prev = 0.0;
      for (std::size_t i : perm) {
        mass += space.prob(i);
        const double cap = 1.0 - std::pow(std::max(0.0, 1.0 - mass), m.n());
        g[i] = (cap - prev) / space.prob(i);
        prev = cap;
      }
      std::vector<double> key(g);
      for (double& k : key) k = std::round(k * 1e9) / 1e9;
      if (seen.emplace(key, true).second) out.emplace_back(space, std::move(g));
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
  }

  if (n > kVertexGuard)
    throw CapacityError("vertex enumeration limited to " + std::to_string(kVertexGuard) + " scenarios");
  std::vector<double> lo(n), hi(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (m.kind() == RepresentingFamily::Kind::avar) {
      lo[i] = 0.0;
      hi[i] = 1.0 / m.alpha();
    } else {
      if (m.lower().size() != n) throw DomainError("density band defined on a different scenario space");
      lo[i] = m.lower()[i];
      hi[i] = m.upper()[i];
    }
  }
  // a vertex has every coordinate but at most one at a bound
  std::map<std::vector<double>, bool> seen;
  std::vector<RandomScalar> out;
  const double tol = 1e-12;
  for (std::size_t free = 0; free < n; ++free) {
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (n - 1)); ++mask) {
      std::vector<double> g(n);
      double mass = 0.0;
      std::size_t bit = 0;
      for (std::size_t i = 0; i < n; ++i) {
        if (i == free) continue;
        g[i] = (mask >> bit++) & 1 ? hi[i] : lo[i];
        mass += space.prob(i) * g[i];
      }
      const double gf = (1.0 - mass) / space.prob(free);
      if (gf < lo[free] - tol || gf > hi[free] + tol) continue;
      g[free] = std::clamp(gf, lo[free], hi[free]);
      std::vector<double> key(g);
      for (double& k : key) k = std::round(k * 1e9) / 1e9;
      if (seen.emplace(key, true).second) out.emplace_back(space, std::move(g));
    }
  }
  return out;
}

double geometric_max_expectation(const RandomScalar& beta, double lambda) {
  check_lambda(lambda);
  if (!beta.finite()) throw DomainError("geometric expectation needs finite values");
  const auto a = atoms(beta.space().probs(), beta.values());
  double acc = 0.0, prev = 0.0, cdf = 0.0;
  for (const Atom& at : a) {
    cdf = std::min(1.0, cdf + at.mass);
    const double cur = geometric_transform(cdf, lambda);
    acc += (cur - prev) * at.value;
    prev = cur;
  }
  return acc;
}

double geometric_min_expectation(const RandomScalar& beta, double lambda) {
  check_lambda(lambda);
  if (!beta.finite()) throw DomainError("geometric expectation needs finite values");
  const auto a = atoms(beta.space().probs(), beta.values());
  double acc = 0.0, prev = 0.0, sf = 0.0;
  for (auto it = a.rbegin(); it != a.rend(); ++it) {
    sf = std::min(1.0, sf + it->mass);
    const double cur = geometric_transform(sf, lambda);
    acc += (cur - prev) * it->value;
    prev = cur;
  }
  return acc;
}

MonteCarloEstimate geometric_max_monte_carlo(const RandomScalar& beta, double lambda, std::size_t samples,
                                             std::uint64_t seed) {
  check_lambda(lambda);
  if (samples < 2) throw DomainError("Monte Carlo needs at least two samples");
  if (!beta.finite()) throw DomainError("geometric expectation needs finite values");
  std::mt19937_64 rng(seed);
  std::geometric_distribution<long> count(lambda);
  std::discrete_distribution<std::size_t> pick(beta.space().probs().begin(), beta.space().probs().end());
  double sum = 0.0, sq = 0.0;
  for (std::size_t s = 0; s < samples; ++s) {
    const long n = count(rng) + 1;
    double best = -kInf;
    for (long k = 0; k < n; ++k) best = std::max(best, beta[pick(rng)]);
    sum += best;
    sq += best * best;
  }
  const double mean = sum / samples;
  const double var = std::max(0.0, (sq - samples * mean * mean) / (samples - 1));
  return {mean, std::sqrt(var / samples)};
}

}  // namespace setexp
