#pragma once

#include "taxfrontier/skill_distribution.hpp"
#include "taxfrontier/tax_policy.hpp"

namespace taxfrontier {

/// A schedule whose subsidy alpha has been set so that total collected tax
/// is zero. residual is the verification quadrature of the per-household tax
/// against the skill density at the balanced alpha; it should be ~0
/// (|residual| <= 1e-9 * max(1, E[N^2])).
struct BalancedPolicy {
  TaxPolicy policy;
  double residual = 0.0;
};

/// Linear schedule: alpha = (1 - beta) * beta * E[N^2], exactly.
BalancedPolicy balance_linear(double beta, const SkillDistribution& d);

/// Two-bracket schedule: alpha equals the expected tax collected above the
/// subsidy, integrated per regime (split at n3 for beta1 <= beta2, at n1 and
/// n2 for beta1 >= beta2). Requires beta1, beta2 in [0, 1] and y1 > 0.
BalancedPolicy balance_two_bracket(double beta1, double beta2, double y1,
                                   const SkillDistribution& d);

/// Quadrature of the realized tax t*(n) under p, split at the regime
/// thresholds. Zero (to quadrature accuracy) for a balanced policy.
double tax_revenue(const TaxPolicy& p, const SkillDistribution& d);

}  // namespace taxfrontier
