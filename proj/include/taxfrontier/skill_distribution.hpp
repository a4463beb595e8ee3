#pragma once

#include <functional>

#include "taxfrontier/quadrature.hpp"

namespace taxfrontier {

/// Distribution of the skill parameter n >= 0 (productivity per unit of
/// effort). Bounded support only. The uniform family has exact moments;
/// anything else is supplied as a density callable plus support and is
/// integrated numerically.
///
/// Values are immutable after construction; all operations are pure and safe
/// to call concurrently.
class SkillDistribution {
 public:
  static SkillDistribution uniform(double a, double b);

  /// density must integrate to 1 over [a, b] within 1e-10 (checked here).
  static SkillDistribution custom(std::function<double(double)> density,
                                  double a, double b);

  double support_lo() const { return a_; }
  double support_hi() const { return b_; }
  bool is_uniform() const { return kind_ == Kind::kUniform; }

  double density(double n) const;

  /// E[N^k] for k in {1, 2, 4}. Exact closed form for the uniform family.
  double moment(int k) const;

  /// Integral of g(n) f(n) dn over [lo, hi] clamped to the support.
  /// Empty intervals (lo > hi, or no overlap with the support) yield 0.
  /// g is assumed smooth on the clamped interval; callers must split at any
  /// known kink before calling.
  double expect(const std::function<double(double)>& g, double lo,
                double hi) const;

  /// Expectation over the whole support.
  double expect(const std::function<double(double)>& g) const;

  const QuadratureOptions& quadrature_options() const { return quad_; }
  void set_quadrature_options(const QuadratureOptions& opt) { quad_ = opt; }

 private:
  enum class Kind { kUniform, kCustom };

  SkillDistribution(Kind kind, std::function<double(double)> density, double a,
                    double b);

  Kind kind_;
  std::function<double(double)> density_;  // empty for the uniform family
  double a_ = 0.0;
  double b_ = 1.0;
  QuadratureOptions quad_;
};

}  // namespace taxfrontier
