#include "taxfrontier/budget.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "taxfrontier/household.hpp"

namespace taxfrontier {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void check_shares(double beta1, double beta2) {
  if (!(beta1 >= 0.0 && beta1 <= 1.0) || !(beta2 >= 0.0 && beta2 <= 1.0)) {
    throw std::invalid_argument("balance: retained shares must lie in [0, 1]");
  }
}

}  // namespace

double tax_revenue(const TaxPolicy& p, const SkillDistribution& d) {
  const auto t = [&](double n) { return respond_quadratic(p, n).t_star; };
  if (p.is_linear()) return d.expect(t);

  double s0 = 0.0, s1 = kInf;  // split points inside the support
  if (p.beta1 < p.beta2) {
    s0 = s1 = std::sqrt(2.0 * p.y1 / (p.beta1 + p.beta2));
  } else {
    s0 = std::sqrt(p.y1 / p.beta1);
    s1 = p.beta2 > 0.0 ? std::sqrt(p.y1 / p.beta2) : kInf;
  }
  return d.expect(t, d.support_lo(), s0) + d.expect(t, s0, s1) +
         d.expect(t, s1, d.support_hi());
}

BalancedPolicy balance_linear(double beta, const SkillDistribution& d) {
  check_shares(beta, beta);
  const double alpha = (1.0 - beta) * beta * d.moment(2);
  BalancedPolicy out;
  out.policy = TaxPolicy::linear(beta, std::max(alpha, 0.0));
  out.residual = tax_revenue(out.policy, d);
  return out;
}

BalancedPolicy balance_two_bracket(double beta1, double beta2, double y1,
                                   const SkillDistribution& d) {
  check_shares(beta1, beta2);
  if (!(y1 > 0.0)) {
    throw std::invalid_argument("balance: kink income y1 must be > 0");
  }

  const double hi = d.support_hi();
  double alpha = 0.0;
  if (beta1 <= beta2) {
    // Concave schedule: first bracket up to n3, second above.
    const double n3 = std::sqrt(2.0 * y1 / (beta1 + beta2));
    alpha = d.expect([&](double n) { return (1.0 - beta1) * beta1 * n * n; },
                     0.0, n3) +
            d.expect(
                [&](double n) {
                  return (1.0 - beta2) * beta2 * n * n + (beta2 - beta1) * y1;
                },
                n3, hi);
  } else {
    // Convex schedule: kink regime on [n1, n2] pays (1 - beta1) * y1 flat.
    const double n1 = std::sqrt(y1 / beta1);
    const double n2 = beta2 > 0.0 ? std::sqrt(y1 / beta2) : kInf;
    alpha = d.expect([&](double n) { return (1.0 - beta1) * beta1 * n * n; },
                     0.0, n1) +
            (1.0 - beta1) * y1 * d.expect([](double) { return 1.0; }, n1, n2) +
            d.expect(
                [&](double n) {
                  return (1.0 - beta2) * beta2 * n * n + (beta2 - beta1) * y1;
                },
                n2, hi);
  }

  BalancedPolicy out;
  out.policy = TaxPolicy::two_bracket(beta1, beta2, y1, std::max(alpha, 0.0));
  out.residual = tax_revenue(out.policy, d);
  return out;
}

}  // namespace taxfrontier
