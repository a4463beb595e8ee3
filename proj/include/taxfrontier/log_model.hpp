#pragma once

#include "taxfrontier/frontier.hpp"
#include "taxfrontier/household.hpp"
#include "taxfrontier/skill_distribution.hpp"
#include "taxfrontier/welfare.hpp"

namespace taxfrontier {

/// Linear tax with utility u(c, l) = ln(c) + A ln(1 - l), consumption
/// c = alpha + beta * n * l, skills uniform on [0, s]. The subsidy alpha is
/// always derived from budget balance. Below the participation threshold
/// n0 = A * alpha / beta a household supplies zero effort.
struct LogModelParams {
  double A = 1.0;
  double s = 1.0;
  double beta = 0.5;
  double alpha = 0.0;
  double n0 = 0.0;
};

struct LogBalanceResult {
  double alpha = 0.0;          // root of the budget equation (primary)
  double alpha_closed_form = 0.0;  // reference closed form; exact at A = 1
  double residual = 0.0;       // budget quadrature at the root
};

/// Solves the zero-revenue condition for alpha by bracketing + bisection to
/// relative tolerance ~1e-13. The closed-form value is reported alongside;
/// the two agree to 1e-9 relative at A = 1. Throws numeric_error if the
/// bracket has no sign change.
LogBalanceResult log_balance(double A, double beta, double s);

/// Convenience: balanced parameter set for (A, beta, s).
LogModelParams make_log_params(double A, double beta, double s);

/// First-order-condition optimum for one household:
///   l* = max(0, (beta n - A alpha) / ((A + 1) beta n)).
HouseholdOutcome log_respond(const LogModelParams& p, double n);

/// Brute-force reference: grid scan of u over l in [0, 1) plus
/// golden-section refinement (u is concave in l).
HouseholdOutcome log_respond_oracle(const LogModelParams& p, double n,
                                    double step = 1e-3);

/// U = E[u*(N)] and sigma_u from the centered second moment, by quadrature
/// split at the participation threshold.
WelfarePoint log_welfare(double A, double beta, double s, double c);

struct LogOptimum {
  double beta = 0.0;
  double alpha = 0.0;
  WelfarePoint welfare;
};

/// Maximizes V = U - c * sigma_u over a beta grid on (0, 1), then refines
/// the bracketing cell by golden-section search.
LogOptimum log_optimize(double A, double s, double c,
                        double beta_grid_step = 1e-4);

/// Beta sweep of (beta, U, sigma_u), truncated to the efficient portion
/// (samples past the U-maximizing beta are dominated and dropped).
FrontierCurve log_frontier(double A, double s, int beta_steps, double c = 0.0);

}  // namespace taxfrontier
