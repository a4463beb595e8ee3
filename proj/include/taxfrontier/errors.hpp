#pragma once

#include <stdexcept>
#include <string>

namespace taxfrontier {

/// Numeric failure: quadrature non-convergence, a budget equation whose
/// bracket has no sign change, or non-finite values inside an integrand.
class numeric_error : public std::runtime_error {
 public:
  explicit numeric_error(const std::string& what) : std::runtime_error(what) {}
};

/// A piecewise schedule whose regime thresholds are undefined (kink at zero
/// income or a zero retained share). Callers treat such schedules as
/// effectively single-bracket.
class degenerate_policy_error : public std::invalid_argument {
 public:
  explicit degenerate_policy_error(const std::string& what)
      : std::invalid_argument(what) {}
};

/// Logarithmic-utility model state that cannot be evaluated (alpha <= 0).
class invalid_model_error : public std::invalid_argument {
 public:
  explicit invalid_model_error(const std::string& what)
      : std::invalid_argument(what) {}
};

}  // namespace taxfrontier
