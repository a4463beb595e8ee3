#pragma once

#include "taxfrontier/skill_distribution.hpp"

namespace taxfrontier {

/// Aggregate outcome of a balanced schedule: mean utility U, utility
/// standard deviation sigma_u (the social-tension measure) and the
/// scalarized objective V = U - c * sigma_u.
struct WelfarePoint {
  double U = 0.0;
  double sigma_u = 0.0;
  double V = 0.0;
  double c = 0.0;
};

/// Linear schedule under quadratic disutility, with alpha balanced:
///   U = beta (1 - beta/2) E[N^2],  sigma_u = beta^2/2 * sigma(N^2).
WelfarePoint welfare_linear(double beta, const SkillDistribution& d, double c);

/// Same closed forms evaluated from raw moments; used for normalized units
/// (en2 = 1, sigma_n2 = 1), where U and sigma_u coincide with their
/// dimensionless counterparts.
WelfarePoint welfare_linear_from_moments(double beta, double en2,
                                         double sigma_n2, double c);

/// Two-bracket schedule with alpha balanced. U comes from the alpha-free
/// regime-split integrals; sigma_u^2 = E[g^2] - E[g]^2 where
/// g(n) = u*(n) - alpha, so neither quantity depends on the subsidy.
/// Requires beta1, beta2 in [0, 1], y1 > 0, c >= 0.
WelfarePoint welfare_two_bracket(double beta1, double beta2, double y1,
                                 const SkillDistribution& d, double c);

}  // namespace taxfrontier
