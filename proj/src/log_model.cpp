#include "taxfrontier/log_model.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>

#include "taxfrontier/budget.hpp"

namespace taxfrontier {

namespace {

void check_model_args(double A, double beta, double s) {
  if (!(A > 0.0) || !std::isfinite(A)) {
    throw std::invalid_argument("log model: leisure weight A must be > 0");
  }
  if (!(beta > 0.0 && beta < 1.0)) {
    throw std::invalid_argument("log model: retained share must lie in (0, 1)");
  }
  if (!(s > 0.0) || !std::isfinite(s)) {
    throw std::invalid_argument("log model: skill upper bound s must be > 0");
  }
}

// Expected tax revenue at a candidate subsidy; zero at the balanced alpha.
// The integral cancels to ~0 near the root while its pieces scale with
// alpha, so the absolute quadrature tolerance must follow that scale or the
// round-off floor becomes unreachable.
double revenue(double A, double beta, double s, double alpha,
               const SkillDistribution& d) {
  SkillDistribution scaled = d;
  QuadratureOptions q = d.quadrature_options();
  q.abs_tol = std::max(q.abs_tol, 1e-14 * std::max(1.0, alpha));
  scaled.set_quadrature_options(q);

  const double n0 = std::min(A * alpha / beta, s);
  const double flat = scaled.expect([&](double) { return -alpha; }, 0.0, n0);
  const double working = scaled.expect(
      [&](double n) {
        const double y = (beta * n - A * alpha) / ((A + 1.0) * beta);
        return -alpha + (1.0 - beta) * y;
      },
      n0, s);
  return flat + working;
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

LogBalanceResult log_balance(double A, double beta, double s) {
  check_model_args(A, beta, s);
  const SkillDistribution d = SkillDistribution::uniform(0.0, s);

  double lo = 0.0;               // revenue > 0: everyone works, no subsidy
  double hi = beta * s / A;      // revenue = -alpha: nobody works
  double r_lo = revenue(A, beta, s, lo, d);
  double r_hi = revenue(A, beta, s, hi, d);
  if (!(r_lo > 0.0) || !(r_hi < 0.0)) {
    throw numeric_error("log_balance: no sign change in the subsidy bracket");
  }
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (!(lo < mid && mid < hi)) break;
    if (revenue(A, beta, s, mid, d) > 0.0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }

  LogBalanceResult out;
  out.alpha = 0.5 * (lo + hi);
  out.residual = revenue(A, beta, s, out.alpha, d);
  const double x_cf =
      A / (1.0 - beta) *
      (1.0 + A * beta -
       std::sqrt((A + 1.0) * beta * (2.0 + (A - 1.0) * beta)));
  out.alpha_closed_form = x_cf * beta * s;
  return out;
}

LogModelParams make_log_params(double A, double beta, double s) {
  LogModelParams p;
  p.A = A;
  p.s = s;
  p.beta = beta;
  p.alpha = log_balance(A, beta, s).alpha;
  p.n0 = A * p.alpha / beta;
  return p;
}

namespace {

void check_params(const LogModelParams& p) {
  check_model_args(p.A, p.beta, p.s);
  if (!(p.alpha > 0.0)) {
    throw invalid_model_error("log model: subsidy alpha must be > 0");
  }
}

double utility_at(const LogModelParams& p, double n, double l) {
  return std::log(p.alpha + p.beta * n * l) + p.A * std::log(1.0 - l);
}

}  // namespace

HouseholdOutcome log_respond(const LogModelParams& p, double n) {
  check_params(p);
  if (!(n >= 0.0) || n > p.s) {
    throw std::invalid_argument("log_respond: skill must lie in [0, s]");
  }

  HouseholdOutcome out;
  if (p.beta * n <= p.A * p.alpha) {
    out.l_star = 0.0;
    out.y_star = 0.0;
    out.u_star = std::log(p.alpha);
    out.t_star = -p.alpha;
    return out;
  }
  out.l_star = (p.beta * n - p.A * p.alpha) / ((p.A + 1.0) * p.beta * n);
  out.y_star = n * out.l_star;
  out.u_star = utility_at(p, n, out.l_star);
  out.t_star = -p.alpha + (1.0 - p.beta) * out.y_star;
  return out;
}

HouseholdOutcome log_respond_oracle(const LogModelParams& p, double n,
                                    double step) {
  check_params(p);
  if (!(n >= 0.0) || n > p.s) {
    throw std::invalid_argument("log_respond_oracle: skill must lie in [0, s]");
  }
  if (!(step > 0.0 && step < 1.0)) {
    throw std::invalid_argument("log_respond_oracle: step must lie in (0, 1)");
  }

  const double l_hi = 1.0 - 1e-12;
  const auto util = [&](double l) { return utility_at(p, n, l); };

  double best_l = 0.0;
  double best_u = util(0.0);
  for (double l = step; l < 1.0; l += step) {
    const double u = util(std::min(l, l_hi));
    if (u > best_u) {
      best_u = u;
      best_l = std::min(l, l_hi);
    }
  }

  double lo = std::max(0.0, best_l - step);
  double hi = std::min(l_hi, best_l + step);
  const double phi = 0.5 * (std::sqrt(5.0) - 1.0);
  double x1 = hi - phi * (hi - lo);
  double x2 = lo + phi * (hi - lo);
  double f1 = util(x1);
  double f2 = util(x2);
  while (hi - lo > 1e-14) {
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
  out.t_star = -p.alpha + (1.0 - p.beta) * out.y_star;
  return out;
}

WelfarePoint log_welfare(double A, double beta, double s, double c) {
  if (!(c >= 0.0)) {
    throw std::invalid_argument("log_welfare: tension weight c must be >= 0");
  }
  const LogModelParams p = make_log_params(A, beta, s);
  const SkillDistribution d = SkillDistribution::uniform(0.0, s);

  const auto u = [&](double n) {
    if (p.beta * n <= p.A * p.alpha) return std::log(p.alpha);
    const double l =
        (p.beta * n - p.A * p.alpha) / ((p.A + 1.0) * p.beta * n);
    return utility_at(p, n, l);
  };

  const double mean = d.expect(u, 0.0, p.n0) + d.expect(u, p.n0, s);
  const auto centered = [&](double n) {
    const double del = u(n) - mean;
    return del * del;
  };
  const double var =
      d.expect(centered, 0.0, p.n0) + d.expect(centered, p.n0, s);
  return make_point(mean, var, c);
}

LogOptimum log_optimize(double A, double s, double c, double beta_grid_step) {
  if (!(c >= 0.0)) {
    throw std::invalid_argument("log_optimize: tension weight c must be >= 0");
  }
  if (!(beta_grid_step > 0.0 && beta_grid_step < 0.5)) {
    throw std::invalid_argument("log_optimize: grid step must lie in (0, 0.5)");
  }

  const std::int64_t count = std::llround(1.0 / beta_grid_step) - 1;
  double best_beta = 0.0;
  double best_v = -std::numeric_limits<double>::infinity();
  for (std::int64_t i = 1; i <= count; ++i) {
    const double beta = static_cast<double>(i) * beta_grid_step;
    const double v = log_welfare(A, beta, s, c).V;
    if (v > best_v) {
      best_v = v;
      best_beta = beta;
    }
  }

  double lo = std::max(best_beta - beta_grid_step, beta_grid_step * 0.25);
  double hi = std::min(best_beta + beta_grid_step, 1.0 - beta_grid_step * 0.25);
  const double phi = 0.5 * (std::sqrt(5.0) - 1.0);
  double x1 = hi - phi * (hi - lo);
  double x2 = lo + phi * (hi - lo);
  double f1 = log_welfare(A, x1, s, c).V;
  double f2 = log_welfare(A, x2, s, c).V;
  while (hi - lo > 1e-7) {
    if (f1 < f2) {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + phi * (hi - lo);
      f2 = log_welfare(A, x2, s, c).V;
    } else {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - phi * (hi - lo);
      f1 = log_welfare(A, x1, s, c).V;
    }
  }
  double beta = 0.5 * (lo + hi);
  if (log_welfare(A, beta, s, c).V < best_v) beta = best_beta;

  LogOptimum out;
  out.beta = beta;
  out.alpha = log_balance(A, beta, s).alpha;
  out.welfare = log_welfare(A, beta, s, c);
  return out;
}

FrontierCurve log_frontier(double A, double s, int beta_steps, double c) {
  if (beta_steps < 2) {
    throw std::invalid_argument("log_frontier: need at least 2 samples");
  }

  FrontierCurve curve;
  curve.kind = FrontierKind::kLogBetaSweep;
  curve.samples.reserve(static_cast<std::size_t>(beta_steps));
  std::size_t u_max_at = 0;
  for (int i = 1; i <= beta_steps; ++i) {
    const double beta = static_cast<double>(i) / (beta_steps + 1);
    FrontierSample sample;
    sample.sweep_param = beta;
    sample.beta1 = sample.beta2 = beta;
    sample.alpha = log_balance(A, beta, s).alpha;
    sample.welfare = log_welfare(A, beta, s, c);
    curve.samples.push_back(sample);
    if (sample.welfare.U > curve.samples[u_max_at].welfare.U) {
      u_max_at = curve.samples.size() - 1;
    }
  }
  // Keep only the efficient portion: past the U maximum both U falls and
  // sigma_u rises, so those samples are dominated.
  curve.samples.resize(u_max_at + 1);
  return curve;
}

}  // namespace taxfrontier
