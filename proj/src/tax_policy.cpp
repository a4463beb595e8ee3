#include "taxfrontier/tax_policy.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace taxfrontier {

TaxPolicy TaxPolicy::linear(double beta, double alpha) {
  TaxPolicy p{alpha, beta, beta, 0.0};
  p.validate();
  return p;
}

TaxPolicy TaxPolicy::two_bracket(double beta1, double beta2, double y1,
                                 double alpha) {
  TaxPolicy p{alpha, beta1, beta2, y1};
  p.validate();
  return p;
}

void TaxPolicy::validate() const {
  if (!(beta1 >= 0.0 && beta1 <= 1.0) || !(beta2 >= 0.0 && beta2 <= 1.0)) {
    throw std::invalid_argument("TaxPolicy: retained shares must lie in [0, 1]");
  }
  if (!(alpha >= 0.0)) {
    throw std::invalid_argument("TaxPolicy: subsidy alpha must be >= 0");
  }
  if (!(y1 >= 0.0)) {
    throw std::invalid_argument("TaxPolicy: kink income y1 must be >= 0");
  }
}

double tax_at(const TaxPolicy& p, double y) {
  p.validate();
  if (!(y >= 0.0)) {
    throw std::invalid_argument("tax_at: pre-tax income must be >= 0");
  }
  if (y <= p.y1) return -p.alpha + (1.0 - p.beta1) * y;
  return -p.alpha + (1.0 - p.beta1) * p.y1 + (1.0 - p.beta2) * (y - p.y1);
}

RegimeThresholds thresholds(const TaxPolicy& p) {
  p.validate();
  if (!(p.y1 > 0.0) || !(p.beta1 > 0.0) || !(p.beta2 > 0.0)) {
    throw degenerate_policy_error(
        "thresholds: schedule is effectively single-bracket (y1 = 0 or a "
        "zero retained share)");
  }
  return RegimeThresholds{std::sqrt(p.y1 / p.beta1), std::sqrt(p.y1 / p.beta2),
                          std::sqrt(2.0 * p.y1 / (p.beta1 + p.beta2))};
}

}  // namespace taxfrontier
