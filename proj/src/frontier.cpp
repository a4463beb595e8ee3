#include "taxfrontier/frontier.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <limits>
#include <stdexcept>
#include <thread>

#include "taxfrontier/budget.hpp"

namespace taxfrontier {

std::int64_t AxisSpec::count() const {
  if (!(step > 0.0) || hi < lo) return 0;
  return std::llround((hi - lo) / step) + 1;
}

double AxisSpec::value(std::int64_t i) const {
  return std::min(lo + static_cast<double>(i) * step, hi);
}

std::int64_t GridSpec::cells() const {
  return beta1.count() * beta2.count() * y1.count();
}

void GridSpec::validate() const {
  if (cells() <= 0) {
    throw std::invalid_argument("GridSpec: empty grid");
  }
  if (beta1.lo < 0.0 || beta1.hi > 1.0 || beta2.lo < 0.0 || beta2.hi > 1.0) {
    throw std::invalid_argument("GridSpec: retained shares must stay in [0, 1]");
  }
  if (!(y1.lo > 0.0)) {
    throw std::invalid_argument("GridSpec: kink incomes must be > 0");
  }
}

LinearOptimum optimal_linear_closed_form(double c,
                                         const SkillDistribution& d) {
  if (!(c >= 0.0)) {
    throw std::invalid_argument("optimal_linear: weight c must be >= 0");
  }
  const double en2 = d.moment(2);
  const double var_n2 = std::max(d.moment(4) - en2 * en2, 0.0);
  const double sigma_n2 = std::sqrt(var_n2);
  double beta = en2 / (en2 + c * sigma_n2);  // stationary point of V(beta)
  beta = std::clamp(beta, 0.0, 1.0);
  return LinearOptimum{beta, welfare_linear_from_moments(beta, en2, sigma_n2, c)};
}

LinearOptimum optimal_linear_closed_form_normalized(double c) {
  if (!(c >= 0.0)) {
    throw std::invalid_argument("optimal_linear: weight c must be >= 0");
  }
  const double beta = 1.0 / (1.0 + c);
  return LinearOptimum{beta, welfare_linear_from_moments(beta, 1.0, 1.0, c)};
}

namespace {

FrontierCurve linear_sweep(int beta_steps, double c, double en2,
                           double sigma_n2) {
  if (beta_steps < 2) {
    throw std::invalid_argument("frontier_linear: need at least 2 samples");
  }
  FrontierCurve curve;
  curve.kind = FrontierKind::kLinearBetaSweep;
  curve.samples.reserve(static_cast<std::size_t>(beta_steps));
  for (int i = 0; i < beta_steps; ++i) {
    const double beta = static_cast<double>(i) / (beta_steps - 1);
    FrontierSample s;
    s.sweep_param = beta;
    s.beta1 = s.beta2 = beta;
    s.alpha = (1.0 - beta) * beta * en2;
    s.welfare = welfare_linear_from_moments(beta, en2, sigma_n2, c);
    curve.samples.push_back(s);
  }
  return curve;
}

}  // namespace

FrontierCurve frontier_linear(const SkillDistribution& d, int beta_steps,
                              double c) {
  const double en2 = d.moment(2);
  const double var_n2 = std::max(d.moment(4) - en2 * en2, 0.0);
  return linear_sweep(beta_steps, c, en2, std::sqrt(var_n2));
}

FrontierCurve frontier_linear_normalized(int beta_steps, double c) {
  return linear_sweep(beta_steps, c, 1.0, 1.0);
}

namespace {

struct BestCell {
  double V = -std::numeric_limits<double>::infinity();
  std::int64_t idx = std::numeric_limits<std::int64_t>::max();
  WelfarePoint welfare;
};

// Strict total order: larger V wins, equal V goes to the smaller
// lexicographic (beta1, beta2, y1) index. Associative and commutative, so
// the reduction result is independent of how cells are partitioned.
bool better(const BestCell& a, const BestCell& b) {
  if (a.V != b.V) return a.V > b.V;
  return a.idx < b.idx;
}

}  // namespace

TwoBracketOptimum optimize_two_bracket(double c, const SkillDistribution& d,
                                       const GridSpec& grid, unsigned workers) {
  if (!(c >= 0.0)) {
    throw std::invalid_argument("optimize_two_bracket: weight c must be >= 0");
  }
  grid.validate();

  const std::int64_t n1 = grid.beta1.count();
  const std::int64_t n2 = grid.beta2.count();
  const std::int64_t n3 = grid.y1.count();
  const std::int64_t cells = n1 * n2 * n3;

  if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
  const auto nthreads =
      static_cast<unsigned>(std::min<std::int64_t>(workers, cells));

  const auto eval = [&](std::int64_t idx) {
    const std::int64_t i3 = idx % n3;
    const std::int64_t i2 = (idx / n3) % n2;
    const std::int64_t i1 = idx / (n2 * n3);
    BestCell cell;
    cell.idx = idx;
    cell.welfare = welfare_two_bracket(grid.beta1.value(i1),
                                       grid.beta2.value(i2),
                                       grid.y1.value(i3), d, c);
    cell.V = cell.welfare.V;
    return cell;
  };

  std::vector<BestCell> bests(nthreads);
  std::vector<std::exception_ptr> failures(nthreads);
  std::vector<std::thread> pool;
  pool.reserve(nthreads);
  for (unsigned t = 0; t < nthreads; ++t) {
    pool.emplace_back([&, t] {
      try {
        const std::int64_t begin = cells * t / nthreads;
        const std::int64_t end = cells * (t + 1) / nthreads;
        BestCell local;
        for (std::int64_t idx = begin; idx < end; ++idx) {
          BestCell cell = eval(idx);
          if (better(cell, local)) local = cell;
        }
        bests[t] = local;
      } catch (...) {
        failures[t] = std::current_exception();
      }
    });
  }
  for (auto& th : pool) th.join();
  for (const auto& failure : failures) {
    if (failure) std::rethrow_exception(failure);
  }

  BestCell best;
  for (const auto& local : bests) {
    if (better(local, best)) best = local;
  }

  const std::int64_t i3 = best.idx % n3;
  const std::int64_t i2 = (best.idx / n3) % n2;
  const std::int64_t i1 = best.idx / (n2 * n3);
  return TwoBracketOptimum{grid.beta1.value(i1), grid.beta2.value(i2),
                           grid.y1.value(i3), best.welfare};
}

FrontierCurve frontier_two_bracket(const std::vector<double>& c_values,
                                   const SkillDistribution& d,
                                   const GridSpec& grid, unsigned workers) {
  if (c_values.empty()) {
    throw std::invalid_argument("frontier_two_bracket: no weights given");
  }
  std::vector<double> cs = c_values;
  std::sort(cs.begin(), cs.end());

  FrontierCurve curve;
  curve.kind = FrontierKind::kTwoBracketCSweep;
  curve.samples.reserve(cs.size());
  for (double c : cs) {
    const TwoBracketOptimum opt = optimize_two_bracket(c, d, grid, workers);
    FrontierSample s;
    s.sweep_param = c;
    s.beta1 = opt.beta1;
    s.beta2 = opt.beta2;
    s.y1 = opt.y1;
    s.alpha = balance_two_bracket(opt.beta1, opt.beta2, opt.y1, d).policy.alpha;
    s.welfare = opt.welfare;
    curve.samples.push_back(s);
  }
  return curve;
}

}  // namespace taxfrontier
