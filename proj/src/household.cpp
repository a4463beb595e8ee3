#include "taxfrontier/household.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace taxfrontier {

namespace {

HouseholdOutcome interior(double alpha, double beta, double n) {
  // l* = beta * n inside a bracket with retained share beta.
  HouseholdOutcome out;
  out.l_star = beta * n;
  out.y_star = n * out.l_star;
  out.u_star = alpha + 0.5 * beta * beta * n * n;
  out.t_star = -alpha + (1.0 - beta) * beta * n * n;
  return out;
}

HouseholdOutcome second_bracket(const TaxPolicy& p, double n) {
  HouseholdOutcome out;
  out.l_star = p.beta2 * n;
  out.y_star = n * out.l_star;
  out.u_star = p.alpha + 0.5 * p.beta2 * p.beta2 * n * n -
               p.y1 * (p.beta2 - p.beta1);
  out.t_star = -p.alpha + (1.0 - p.beta2) * p.beta2 * n * n +
               (p.beta2 - p.beta1) * p.y1;
  return out;
}

}  // namespace

HouseholdOutcome respond_quadratic(const TaxPolicy& p, double n) {
  p.validate();
  if (!(n >= 0.0)) {
    throw std::invalid_argument("respond_quadratic: skill must be >= 0");
  }

  if (p.is_linear()) {
    const double beta = p.y1 == 0.0 ? p.beta2 : p.beta1;
    return interior(p.alpha, beta, n);
  }

  if (p.beta1 < p.beta2) {
    // Concave schedule: one switch at n3, first bracket below it.
    const double n3 = std::sqrt(2.0 * p.y1 / (p.beta1 + p.beta2));
    if (n <= n3) return interior(p.alpha, p.beta1, n);
    return second_bracket(p, n);
  }

  // Convex schedule: interior below n1, bunched at the kink on [n1, n2],
  // interior in the second bracket above n2.
  const double n1 = std::sqrt(p.y1 / p.beta1);
  const double n2 = p.beta2 > 0.0 ? std::sqrt(p.y1 / p.beta2)
                                  : std::numeric_limits<double>::infinity();
  if (n < n1) return interior(p.alpha, p.beta1, n);
  if (n <= n2) {
    HouseholdOutcome out;
    out.l_star = p.y1 / n;  // n >= n1 > 0 here
    out.y_star = n * out.l_star;
    out.u_star = p.alpha + p.beta1 * p.y1 - p.y1 * p.y1 / (2.0 * n * n);
    out.t_star = -p.alpha + (1.0 - p.beta1) * p.y1;
    return out;
  }
  return second_bracket(p, n);
}

HouseholdOutcome respond_oracle(const TaxPolicy& p, double n, double l_hi,
                                double step) {
  p.validate();
  if (!(n >= 0.0)) {
    throw std::invalid_argument("respond_oracle: skill must be >= 0");
  }
  if (!(step > 0.0)) {
    throw std::invalid_argument("respond_oracle: step must be > 0");
  }
  if (!(l_hi >= std::max(p.beta1, p.beta2) * n + 1.0)) {
    throw std::invalid_argument(
        "respond_oracle: effort cap must be >= max(beta1, beta2) * n + 1");
  }

  const auto util = [&](double l) {
    const double y = n * l;
    return y - tax_at(p, y) - 0.5 * l * l;
  };

  double best_l = 0.0;
  double best_u = util(0.0);
  const long cells = static_cast<long>(std::ceil(l_hi / step));
  for (long i = 1; i <= cells; ++i) {
    const double l = std::min(i * step, l_hi);
    const double u = util(l);
    if (u > best_u) {
      best_u = u;
      best_l = l;
    }
  }

  // Golden-section refinement on the bracketing cell. The utility is
  // piecewise quadratic, so it is unimodal within one grid cell.
  double lo = std::max(0.0, best_l - step);
  double hi = std::min(l_hi, best_l + step);
  const double phi = 0.5 * (std::sqrt(5.0) - 1.0);
  double x1 = hi - phi * (hi - lo);
  double x2 = lo + phi * (hi - lo);
  double f1 = util(x1);
  double f2 = util(x2);
  while (hi - lo > 1e-12) {
    if (f1 < f2) {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + phi * (hi - lo);
      f2 = util(x2);
    } else {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - phi * (hi - lo);
      f1 = util(x1);
    }
  }
  const double mid = 0.5 * (lo + hi);
  if (util(mid) > best_u) {
    best_l = mid;
    best_u = util(mid);
  }

  HouseholdOutcome out;
  out.l_star = best_l;
  out.y_star = n * best_l;
  out.u_star = best_u;
  out.t_star = tax_at(p, out.y_star);
  return out;
}

}  // namespace taxfrontier
