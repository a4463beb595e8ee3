#include "taxfrontier/welfare.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace taxfrontier {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void check_args(double beta1, double beta2, double c) {
  if (!(beta1 >= 0.0 && beta1 <= 1.0) || !(beta2 >= 0.0 && beta2 <= 1.0)) {
    throw std::invalid_argument("welfare: retained shares must lie in [0, 1]");
  }
  if (!(c >= 0.0)) {
    throw std::invalid_argument("welfare: tension weight c must be >= 0");
  }
}

WelfarePoint make_point(double U, double var, double c) {
  WelfarePoint w;
  w.U = U;
  w.sigma_u = std::sqrt(std::max(var, 0.0));
  w.c = c;
  w.V = w.U - c * w.sigma_u;
  return w;
}

}  // namespace

WelfarePoint welfare_linear_from_moments(double beta, double en2,
                                         double sigma_n2, double c) {
  check_args(beta, beta, c);
  const double U = beta * (1.0 - 0.5 * beta) * en2;
  const double sigma = 0.5 * beta * beta * sigma_n2;
  return make_point(U, sigma * sigma, c);
}

WelfarePoint welfare_linear(double beta, const SkillDistribution& d,
                            double c) {
  const double en2 = d.moment(2);
  const double var_n2 = d.moment(4) - en2 * en2;
  return welfare_linear_from_moments(beta, en2,
                                     std::sqrt(std::max(var_n2, 0.0)), c);
}

WelfarePoint welfare_two_bracket(double beta1, double beta2, double y1,
                                 const SkillDistribution& d, double c) {
  check_args(beta1, beta2, c);
  if (!(y1 > 0.0)) {
    throw std::invalid_argument("welfare: kink income y1 must be > 0");
  }

  const double hi = d.support_hi();
  double U = 0.0;   // mean utility, subsidy already netted out by balance
  double m1 = 0.0;  // E[u* - alpha]
  double m2 = 0.0;  // E[(u* - alpha)^2]

  if (beta1 <= beta2) {
    const double n3 = std::sqrt(2.0 * y1 / (beta1 + beta2));
    const double shift = y1 * (beta2 - beta1);
    U = d.expect([&](double n) { return (beta1 - 0.5 * beta1 * beta1) * n * n; },
                 0.0, n3) +
        d.expect([&](double n) { return (beta2 - 0.5 * beta2 * beta2) * n * n; },
                 n3, hi);
    m1 = d.expect([&](double n) { return 0.5 * beta1 * beta1 * n * n; }, 0.0,
                  n3) +
         d.expect([&](double n) { return 0.5 * beta2 * beta2 * n * n - shift; },
                  n3, hi);
    m2 = d.expect(
             [&](double n) {
               const double g = 0.5 * beta1 * beta1 * n * n;
               return g * g;
             },
             0.0, n3) +
         d.expect(
             [&](double n) {
               const double g = 0.5 * beta2 * beta2 * n * n - shift;
               return g * g;
             },
             n3, hi);
  } else {
    const double n1 = std::sqrt(y1 / beta1);
    const double n2 = beta2 > 0.0 ? std::sqrt(y1 / beta2) : kInf;
    const double shift = y1 * (beta2 - beta1);
    U = d.expect([&](double n) { return (beta1 - 0.5 * beta1 * beta1) * n * n; },
                 0.0, n1) +
        d.expect([&](double n) { return y1 - y1 * y1 / (2.0 * n * n); }, n1,
                 n2) +
        d.expect([&](double n) { return (beta2 - 0.5 * beta2 * beta2) * n * n; },
                 n2, hi);
    m1 = d.expect([&](double n) { return 0.5 * beta1 * beta1 * n * n; }, 0.0,
                  n1) +
         d.expect([&](double n) { return beta1 * y1 - y1 * y1 / (2.0 * n * n); },
                  n1, n2) +
         d.expect([&](double n) { return 0.5 * beta2 * beta2 * n * n - shift; },
                  n2, hi);
    m2 = d.expect(
             [&](double n) {
               const double g = 0.5 * beta1 * beta1 * n * n;
               return g * g;
             },
             0.0, n1) +
         d.expect(
             [&](double n) {
               const double g = beta1 * y1 - y1 * y1 / (2.0 * n * n);
               return g * g;
             },
             n1, n2) +
         d.expect(
             [&](double n) {
               const double g = 0.5 * beta2 * beta2 * n * n - shift;
               return g * g;
             },
             n2, hi);
  }

  return make_point(U, m2 - m1 * m1, c);
}

}  // namespace taxfrontier
