#pragma once

#include "taxfrontier/errors.hpp"

namespace taxfrontier {

/// Piecewise-linear tax schedule with at most one kink:
///
///   t(y) = -alpha + (1 - beta1) * y                          for y <= y1
///   t(y) = -alpha + (1 - beta1) * y1 + (1 - beta2) * (y - y1) for y >  y1
///
/// beta1/beta2 are the retained shares per bracket, alpha the lump-sum
/// subsidy. beta1 == beta2 (or y1 == 0) collapses to the linear schedule.
struct TaxPolicy {
  double alpha = 0.0;
  double beta1 = 1.0;
  double beta2 = 1.0;
  double y1 = 0.0;

  static TaxPolicy linear(double beta, double alpha = 0.0);
  static TaxPolicy two_bracket(double beta1, double beta2, double y1,
                               double alpha = 0.0);

  bool is_linear() const { return beta1 == beta2 || y1 == 0.0; }

  /// Throws std::invalid_argument unless beta1, beta2 in [0,1], alpha >= 0,
  /// y1 >= 0.
  void validate() const;
};

/// Skill levels at which the individually optimal regime switches:
///   n1 = sqrt(y1 / beta1), n2 = sqrt(y1 / beta2),
///   n3 = sqrt(2 y1 / (beta1 + beta2)).
/// Always min(n1,n2) <= n3 <= max(n1,n2); all three coincide when
/// beta1 == beta2.
struct RegimeThresholds {
  double n1 = 0.0;
  double n2 = 0.0;
  double n3 = 0.0;
};

/// Tax owed on pre-tax income y >= 0.
double tax_at(const TaxPolicy& p, double y);

/// Regime thresholds for a genuinely two-bracket schedule. Requires y1 > 0,
/// beta1 > 0, beta2 > 0; otherwise throws degenerate_policy_error (callers
/// treat such schedules as single-bracket).
RegimeThresholds thresholds(const TaxPolicy& p);

}  // namespace taxfrontier
