#include "taxfrontier/skill_distribution.hpp"

#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>

namespace taxfrontier {

SkillDistribution::SkillDistribution(Kind kind,
                                     std::function<double(double)> density,
                                     double a, double b)
    : kind_(kind), density_(std::move(density)), a_(a), b_(b) {}

SkillDistribution SkillDistribution::uniform(double a, double b) {
  if (!std::isfinite(a) || !std::isfinite(b)) {
    throw std::invalid_argument("uniform: bounds must be finite");
  }
  if (a < 0.0) {
    throw std::invalid_argument("uniform: support must lie in [0, inf)");
  }
  if (!(b > a)) {
    throw std::invalid_argument("uniform: upper bound must exceed lower bound");
  }
  SkillDistribution d(Kind::kUniform, {}, a, b);
  if (!std::isfinite(d.moment(4))) {
    throw std::invalid_argument("uniform: E[N^4] overflows for this support");
  }
  return d;
}

SkillDistribution SkillDistribution::custom(
    std::function<double(double)> density, double a, double b) {
  if (!density) throw std::invalid_argument("custom: density callable required");
  if (!std::isfinite(a) || !std::isfinite(b) || a < 0.0 || !(b > a)) {
    throw std::invalid_argument("custom: support must be a bounded interval in [0, inf)");
  }
  SkillDistribution d(Kind::kCustom, std::move(density), a, b);
  const double mass = d.expect([](double) { return 1.0; });
  if (std::fabs(mass - 1.0) > 1e-10) {
    throw std::invalid_argument(
        "custom: density integrates to " + std::to_string(mass) +
        " over the support, expected 1 within 1e-10");
  }
  return d;
}

double SkillDistribution::density(double n) const {
  if (n < a_ || n > b_) return 0.0;
  if (kind_ == Kind::kUniform) return 1.0 / (b_ - a_);
  return density_(n);
}

double SkillDistribution::moment(int k) const {
  if (k != 1 && k != 2 && k != 4) {
    throw std::invalid_argument("moment: unsupported power " +
                                std::to_string(k) + " (expected 1, 2 or 4)");
  }
  if (kind_ == Kind::kUniform) {
    // (b^{k+1} - a^{k+1}) / ((k+1)(b-a))
    return (std::pow(b_, k + 1) - std::pow(a_, k + 1)) /
           ((k + 1) * (b_ - a_));
  }
  return expect([k](double n) { return std::pow(n, k); });
}

double SkillDistribution::expect(const std::function<double(double)>& g,
                                 double lo, double hi) const {
  lo = std::max(lo, a_);
  hi = std::min(hi, b_);
  if (!(lo < hi)) return 0.0;
  return integrate([&](double n) { return g(n) * density(n); }, lo, hi, quad_);
}

double SkillDistribution::expect(
    const std::function<double(double)>& g) const {
  return expect(g, a_, b_);
}

}  // namespace taxfrontier
