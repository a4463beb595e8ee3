#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "taxfrontier/skill_distribution.hpp"
#include "taxfrontier/welfare.hpp"

namespace taxfrontier {

/// One inclusive sweep axis: values lo, lo + step, ..., hi.
struct AxisSpec {
  double lo = 0.0;
  double hi = 0.0;
  double step = 0.0;

  std::int64_t count() const;
  double value(std::int64_t i) const;
};

/// Search grid for the two-bracket optimizer. The default is 100 x 100 x 10:
/// both retained shares sweep [0.01, 1.00] and the kink sweeps [0.01, 0.1],
/// all at step 0.01.
struct GridSpec {
  AxisSpec beta1{0.01, 1.00, 0.01};
  AxisSpec beta2{0.01, 1.00, 0.01};
  AxisSpec y1{0.01, 0.10, 0.01};

  std::int64_t cells() const;
  void validate() const;
};

struct LinearOptimum {
  double beta = 0.0;
  WelfarePoint welfare;
};

struct TwoBracketOptimum {
  double beta1 = 0.0;
  double beta2 = 0.0;
  double y1 = 0.0;
  WelfarePoint welfare;
};

enum class FrontierKind { kLinearBetaSweep, kTwoBracketCSweep, kLogBetaSweep };

/// One frontier sample. The policy columns that do not apply to the sweep
/// (y1 for single-bracket rows) stay empty.
struct FrontierSample {
  double sweep_param = 0.0;
  double beta1 = 0.0;
  double beta2 = 0.0;
  std::optional<double> y1;
  std::optional<double> alpha;
  WelfarePoint welfare;
};

struct FrontierCurve {
  FrontierKind kind = FrontierKind::kLinearBetaSweep;
  std::vector<FrontierSample> samples;
};

/// Maximizer of V = U - c * sigma_u over linear schedules:
/// beta* = E[N^2] / (E[N^2] + c * sigma(N^2)), clamped to [0, 1].
LinearOptimum optimal_linear_closed_form(double c, const SkillDistribution& d);

/// Normalized units (E[N^2] = 1, sigma(N^2) = 1): beta* = 1 / (1 + c),
/// sigma = 1 / (2 (c+1)^2), U = (2c + 1) / (2 (c+1)^2).
LinearOptimum optimal_linear_closed_form_normalized(double c);

/// Sweeps beta uniformly over [0, 1] with beta_steps samples (>= 2). In
/// normalized units every sample satisfies 2 sigma = (sigma + U)^2.
FrontierCurve frontier_linear(const SkillDistribution& d, int beta_steps,
                              double c = 0.0);
FrontierCurve frontier_linear_normalized(int beta_steps, double c = 0.0);

/// Exhaustive deterministic grid search of V = U - c * sigma_u. Every cell
/// is a pure evaluation; cells are scanned in parallel and reduced with the
/// lexicographic (beta1, beta2, y1) tie-break, so the argmax is identical
/// for any worker count. workers = 0 picks the hardware concurrency.
TwoBracketOptimum optimize_two_bracket(double c, const SkillDistribution& d,
                                       const GridSpec& grid = {},
                                       unsigned workers = 0);

/// Runs optimize_two_bracket for each weight and emits the (sigma_u, U)
/// locus, ordered by c ascending.
FrontierCurve frontier_two_bracket(const std::vector<double>& c_values,
                                   const SkillDistribution& d,
                                   const GridSpec& grid = {},
                                   unsigned workers = 0);

}  // namespace taxfrontier
