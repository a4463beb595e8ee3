#pragma once

#include "taxfrontier/tax_policy.hpp"

namespace taxfrontier {

/// Individually optimal choice of one skill-n household: effort, pre-tax
/// income y = n * l, realized utility and tax paid.
struct HouseholdOutcome {
  double l_star = 0.0;
  double y_star = 0.0;
  double u_star = 0.0;
  double t_star = 0.0;
};

/// Closed-form optimum of u(c, l) = c - l^2/2 with c = n*l - t(n*l) under a
/// piecewise-linear schedule. At regime boundaries (where the optimum is not
/// unique) the lower-index regime is reported; the utility value is the same
/// either way.
HouseholdOutcome respond_quadratic(const TaxPolicy& p, double n);

/// Brute-force reference: maximizes n*l - t(n*l) - l^2/2 over the grid
/// {0, step, 2*step, ..., l_hi}, then refines the best bracket by
/// golden-section search. Requires l_hi >= max(beta1, beta2) * n + 1 so the
/// interior optimum cannot sit at the scan boundary.
HouseholdOutcome respond_oracle(const TaxPolicy& p, double n, double l_hi,
                                double step = 1e-3);

}  // namespace taxfrontier
