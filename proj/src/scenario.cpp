#include "setexp/scenario.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "setexp/errors.hpp"

namespace setexp {

ScenarioSpace::ScenarioSpace(std::vector<double> probs) {
  if (probs.empty()) throw DomainError("scenario space needs at least one scenario");
  double sum = 0.0;
  for (std::size_t i = 0; i < probs.size(); ++i) {
    if (!(probs[i] > 0.0) || !std::isfinite(probs[i])) {
      std::ostringstream os;
      os << "probability of scenario " << i << " must be positive, got " << probs[i];
      throw DomainError(os.str());
    }
    sum += probs[i];
  }
  if (std::abs(sum - 1.0) > kSumTolerance) {
    std::ostringstream os;
    os.precision(15);
    os << "probs sum " << sum;
    throw DomainError(os.str());
  }
  probs_ = std::make_shared<const std::vector<double>>(std::move(probs));
}

ScenarioSpace ScenarioSpace::uniform(std::size_t n) {
  if (n == 0) throw DomainError("scenario space needs at least one scenario");
  return ScenarioSpace(std::vector<double>(n, 1.0 / static_cast<double>(n)));
}

RandomScalar::RandomScalar(ScenarioSpace space, std::vector<double> values)
    : space_(std::move(space)), values_(std::move(values)) {
  if (values_.size() != space_.size()) throw DomainError("random scalar length does not match scenario count");
  for (double v : values_) {
    if (std::isnan(v) || v == -kInf) throw DomainError("random scalar values must lie in (-inf, inf]");
  }
}

RandomScalar RandomScalar::constant(ScenarioSpace space, double c) {
  const std::size_t n = space.size();
  return RandomScalar(std::move(space), std::vector<double>(n, c));
}

bool RandomScalar::finite() const {
  return std::none_of(values_.begin(), values_.end(), [](double v) { return is_inf(v); });
}

double RandomScalar::expectation() const {
  double s = 0.0;
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (is_inf(values_[i])) return kInf;
    s += space_.prob(i) * values_[i];
  }
  return s;
}

RandomScalar RandomScalar::operator-() const {
  if (!finite()) throw DomainError("cannot negate an infinite random scalar");
  std::vector<double> v(values_.size());
  std::transform(values_.begin(), values_.end(), v.begin(), [](double a) { return -a; });
  return RandomScalar(space_, std::move(v));
}

RandomScalar operator+(const RandomScalar& a, const RandomScalar& b) {
  if (!(a.space_ == b.space_)) throw DomainError("random scalars live on different spaces");
  std::vector<double> v(a.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = a.values_[i] + b.values_[i];
  return RandomScalar(a.space_, std::move(v));
}

RandomScalar operator*(double c, const RandomScalar& a) {
  if (c < 0.0 && !a.finite()) throw DomainError("negative multiple of an infinite random scalar");
  std::vector<double> v(a.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = ext_mul(c, a.values_[i]);
  return RandomScalar(a.space_, std::move(v));
}

RandomVector2::RandomVector2(ScenarioSpace space, std::vector<Vec2> points)
    : space_(std::move(space)), points_(std::move(points)) {
  if (points_.size() != space_.size()) throw DomainError("random vector length does not match scenario count");
  for (Vec2 p : points_) {
    if (!std::isfinite(p.x) || !std::isfinite(p.y)) throw DomainError("random vector must be finite");
  }
}

RandomVector2 RandomVector2::constant(ScenarioSpace space, Vec2 p) {
  const std::size_t n = space.size();
  return RandomVector2(std::move(space), std::vector<Vec2>(n, p));
}

Vec2 RandomVector2::expectation() const {
  Vec2 s;
  for (std::size_t i = 0; i < points_.size(); ++i) s += space_.prob(i) * points_[i];
  return s;
}

RandomScalar RandomVector2::coordinate(int axis) const {
  std::vector<double> v(points_.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = axis == 0 ? points_[i].x : points_[i].y;
  return RandomScalar(space_, std::move(v));
}

RandomScalar RandomVector2::dot(Vec2 u) const {
  std::vector<double> v(points_.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = setexp::dot(points_[i], u);
  return RandomScalar(space_, std::move(v));
}

RandomVector2 RandomVector2::translated(Vec2 a) const {
  std::vector<Vec2> p(points_);
  for (auto& q : p) q += a;
  return RandomVector2(space_, std::move(p));
}

Partition::Partition(std::size_t n, std::vector<std::vector<std::size_t>> blocks) : n_(n), blocks_(std::move(blocks)) {
  std::vector<int> seen(n, 0);
  for (const auto& b : blocks_) {
    if (b.empty()) throw DomainError("partition blocks must be non-empty");
    for (std::size_t i : b) {
      if (i >= n) throw DomainError("partition index out of range");
      if (seen[i]++) throw DomainError("partition blocks must be disjoint");
    }
  }
  if (std::find(seen.begin(), seen.end(), 0) != seen.end())
    throw DomainError("partition blocks must cover every scenario");
}

Partition Partition::trivial(std::size_t n) {
  std::vector<std::size_t> all(n);
  std::iota(all.begin(), all.end(), 0);
  return Partition(n, {all});
}

Partition Partition::discrete(std::size_t n) {
  std::vector<std::vector<std::size_t>> blocks(n);
  for (std::size_t i = 0; i < n; ++i) blocks[i] = {i};
  return Partition(n, std::move(blocks));
}

std::vector<Partition> Partition::enumerate(std::size_t n) {
  // Restricted growth strings: label[i] <= 1 + max(label[0..i-1]).
  std::vector<Partition> out;
  if (n == 0) return out;
  std::vector<std::size_t> label(n, 0);
  while (true) {
    std::size_t blocks = *std::max_element(label.begin(), label.end()) + 1;
    std::vector<std::vector<std::size_t>> b(blocks);
    for (std::size_t i = 0; i < n; ++i) b[label[i]].push_back(i);
    out.emplace_back(n, std::move(b));

    std::size_t i = n;
    while (i-- > 1) {
      std::size_t mx = *std::max_element(label.begin(), label.begin() + static_cast<std::ptrdiff_t>(i));
      if (label[i] <= mx) {
        ++label[i];
        std::fill(label.begin() + static_cast<std::ptrdiff_t>(i) + 1, label.end(), 0);
        break;
      }
    }
    if (i == 0) break;
  }
  return out;
}

double quantile(const RandomScalar& beta, double s) {
  if (!(s > 0.0 && s < 1.0)) throw DomainError("quantile level must lie in (0,1)");
  if (!beta.finite()) throw DomainError("quantile of an infinite random scalar");
  std::vector<std::size_t> order(beta.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return beta[a] < beta[b]; });
  double cum = 0.0;
  for (std::size_t i : order) {
    cum += beta.space().prob(i);
    if (cum >= s - 1e-14) return beta[i];
  }
  return beta[order.back()];
}

RandomScalar conditional_expectation(const RandomScalar& beta, const Partition& part) {
  if (part.scenario_count() != beta.size()) throw DomainError("partition does not match scenario count");
  if (!beta.finite()) throw DomainError("conditional expectation of an infinite random scalar");
  std::vector<double> out(beta.size());
  for (const auto& block : part.blocks()) {
    double mass = 0.0, acc = 0.0;
    for (std::size_t i : block) {
      mass += beta.space().prob(i);
      acc += beta.space().prob(i) * beta[i];
    }
    for (std::size_t i : block) out[i] = acc / mass;
  }
  return RandomScalar(beta.space(), std::move(out));
}

}  // namespace setexp
