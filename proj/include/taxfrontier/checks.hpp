#pragma once

#include <string>
#include <vector>

#include "taxfrontier/skill_distribution.hpp"

namespace taxfrontier {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct CheckOptions {
  unsigned workers = 0;  // 0 = hardware concurrency
  bool quick = false;    // reduced trial counts, skip grid-scale checks
  // Deliberate-bug sentinel: balance the two-bracket budget with the kink
  // regime integrated between the retained shares instead of between the
  // skill thresholds. The budget-residual check must fail under this flag.
  bool tamper_budget_limits = false;
};

// Quadrature / distribution plumbing.
CheckResult check_quadrature_normalization(const SkillDistribution& d);
CheckResult check_moment_consistency(const SkillDistribution& d);
CheckResult check_expect_additivity(const SkillDistribution& d, int trials);

// Schedule geometry.
CheckResult check_threshold_ordering(int trials);
CheckResult check_tax_continuity(int trials);
CheckResult check_retained_income_monotone(int trials);

// Household optimum.
CheckResult check_household_oracle(int trials);
CheckResult check_household_indifference(int trials);
CheckResult check_household_monotone_in_skill(int trials);

// Budget balance.
CheckResult check_budget_residual(const SkillDistribution& d, int trials,
                                  bool tampered = false);
CheckResult check_budget_alpha_nonnegative(const SkillDistribution& d,
                                           int trials);
CheckResult check_budget_case_split_continuity(const SkillDistribution& d);

// Welfare statistics.
CheckResult check_welfare_linear_reduction(const SkillDistribution& d);
CheckResult check_sigma_alpha_invariance(const SkillDistribution& d,
                                         int trials);
CheckResult check_sigma_blind_quadrature(const SkillDistribution& d,
                                         int trials);

// Linear-schedule frontier.
CheckResult check_frontier_identity(const SkillDistribution& d, int steps);
CheckResult check_linear_closed_forms();
CheckResult check_linear_closed_form_vs_grid(const SkillDistribution& d);

// No-tax optimality, restated as computable finite differences.
CheckResult check_mean_utility_increasing_in_shares(const SkillDistribution& d,
                                                    int trials);
CheckResult check_no_tax_argmax(const SkillDistribution& d, unsigned workers);

// Two-bracket benchmark table (N ~ uniform[0, 10], default grid).
CheckResult check_table1_values(const SkillDistribution& d);
CheckResult check_table1_optimizer(const SkillDistribution& d,
                                   unsigned workers);
CheckResult check_frontier_two_bracket_reference(const SkillDistribution& d,
                                                 unsigned workers);
CheckResult check_optimizer_non_dominated(const SkillDistribution& d,
                                          unsigned workers);
CheckResult check_grid_determinism(const SkillDistribution& d);

// Logarithmic-utility model.
CheckResult check_log_budget_residual();
CheckResult check_log_foc_oracle(int trials);
CheckResult check_log_scale_covariance();
CheckResult check_log_variance_decomposition();
CheckResult check_log_unimodality();
CheckResult check_log_optima();

/// The full invariant suite, in a fixed order.
std::vector<CheckResult> run_verify_suite(const SkillDistribution& d,
                                          const CheckOptions& opt);

/// Per-row reproduction of the benchmark table (one result per row,
/// |dV| <= 1e-3).
std::vector<CheckResult> run_table1_suite(const SkillDistribution& d);

}  // namespace taxfrontier
