#include <doctest.h>

#include <cmath>
#include <random>
#include <stdexcept>

#include "taxfrontier/checks.hpp"
#include "taxfrontier/log_model.hpp"

using namespace taxfrontier;

TEST_CASE("budget balance at A = 1 has a simple closed form") {
  // alpha / (beta s) = (1 - sqrt(beta)) / (1 + sqrt(beta)).
  const auto bal = log_balance(1.0, 0.6138, 1.0);
  const double x = (1.0 - std::sqrt(0.6138)) / (1.0 + std::sqrt(0.6138));
  CHECK(bal.alpha == doctest::Approx(x * 0.6138).epsilon(1e-9));
  CHECK(bal.alpha == doctest::Approx(0.0745273).epsilon(1e-5));
  CHECK(bal.alpha_closed_form == doctest::Approx(bal.alpha).epsilon(1e-9));
  CHECK(std::fabs(bal.residual) <= 1e-10 * bal.alpha);

  // alpha scales linearly with s.
  const auto big = log_balance(1.0, 0.6138, 1e12);
  CHECK(big.alpha == doctest::Approx(bal.alpha * 1e12).epsilon(1e-9));

  // The subsidy vanishes as the retained share approaches 1.
  CHECK(log_balance(1.0, 0.999999, 1.0).alpha <= 1e-6);
}

TEST_CASE("log model argument validation") {
  CHECK_THROWS_AS(log_balance(0.0, 0.5, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(log_balance(1.0, 0.0, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(log_balance(1.0, 1.0, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(log_balance(1.0, 0.5, 0.0), std::invalid_argument);
}

TEST_CASE("household response from the first-order condition") {
  LogModelParams p;
  p.A = 1.0;
  p.s = 100.0;
  p.beta = 0.5;
  p.alpha = 1.0;
  p.n0 = p.A * p.alpha / p.beta;  // = 2

  // Interior optimum; values pinned by the brute-force maximizer.
  const auto out = log_respond(p, 10.0);
  CHECK(out.l_star == doctest::Approx(0.4).epsilon(1e-12));
  CHECK(out.u_star ==
        doctest::Approx(std::log(3.0) + std::log(0.6)).epsilon(1e-12));
  CHECK(out.t_star == doctest::Approx(1.0).epsilon(1e-12));
  const auto brute = log_respond_oracle(p, 10.0);
  CHECK(std::fabs(out.u_star - brute.u_star) <= 1e-9);

  // Below the participation threshold.
  const auto idle = log_respond(p, 1.0);
  CHECK(idle.l_star == 0.0);
  CHECK(idle.u_star == doctest::Approx(std::log(p.alpha)).epsilon(1e-14));
  CHECK(idle.t_star == doctest::Approx(-p.alpha).epsilon(1e-14));

  CHECK_THROWS_AS(log_respond(p, -1.0), std::invalid_argument);
  CHECK_THROWS_AS(log_respond(p, 101.0), std::invalid_argument);
  p.alpha = 0.0;
  CHECK_THROWS_AS(log_respond(p, 1.0), invalid_model_error);
}

TEST_CASE("first-order condition matches brute force on random models") {
  CHECK(check_log_foc_oracle(100).pass);
}

TEST_CASE("effort stays below the interior bound 1/(A+1)") {
  std::mt19937 rng(61);
  std::uniform_real_distribution<double> weight(0.5, 2.0);
  std::uniform_real_distribution<double> share(0.05, 0.95);
  std::uniform_real_distribution<double> subsidy(0.01, 2.0);
  std::uniform_real_distribution<double> skill(0.0, 10.0);
  for (int t = 0; t < 200; ++t) {
    LogModelParams p;
    p.A = weight(rng);
    p.s = 10.0;
    p.beta = share(rng);
    p.alpha = subsidy(rng);
    p.n0 = p.A * p.alpha / p.beta;
    const double l = log_respond(p, skill(rng)).l_star;
    CHECK(l >= 0.0);
    CHECK(l < 1.0 / (p.A + 1.0));
  }
}

TEST_CASE("welfare under logarithmic utility") {
  const auto w = log_welfare(1.0, 0.6138, 1e12, 0.0);
  CHECK(w.U == doctest::Approx(25.478783).epsilon(2e-5));
  CHECK(w.sigma_u == doctest::Approx(0.317936).epsilon(2e-4));

  const auto w2 = log_welfare(1.0, 0.427, 1e12, 1.0);
  CHECK(w2.U == doctest::Approx(25.428130).epsilon(2e-5));
  CHECK(w2.sigma_u == doctest::Approx(0.187947).epsilon(2e-4));
  CHECK(w2.V == doctest::Approx(w2.U - w2.sigma_u).epsilon(1e-12));
}

TEST_CASE("dispersion is invariant to an additive utility shift") {
  const auto p = make_log_params(1.0, 0.5, 1.0);
  const auto d = SkillDistribution::uniform(0.0, 1.0);
  const auto u = [&](double n) { return log_respond(p, n).u_star; };

  const auto var_of = [&](double shift) {
    const double mean = d.expect([&](double n) { return u(n) + shift; }, 0.0,
                                 p.n0) +
                        d.expect([&](double n) { return u(n) + shift; }, p.n0,
                                 1.0);
    const auto centered = [&](double n) {
      const double del = u(n) + shift - mean;
      return del * del;
    };
    return d.expect(centered, 0.0, p.n0) + d.expect(centered, p.n0, 1.0);
  };
  CHECK(std::fabs(std::sqrt(var_of(0.0)) - std::sqrt(var_of(5.0))) <= 1e-10);
}

TEST_CASE("U shifts by ln(lambda) when the skill scale grows") {
  CHECK(check_log_scale_covariance().pass);
}

TEST_CASE("variance decomposition at A = 1 matches the direct definition") {
  CHECK(check_log_variance_decomposition().pass);
}

TEST_CASE("optimum is invariant to s up to the additive shift in U") {
  // V-argmax does not depend on s, so the expensive s = 1e12 anchors can be
  // exercised at s = 1 with a coarser grid.
  const auto at_c0 = log_optimize(1.0, 1.0, 0.0, 1e-3);
  CHECK(at_c0.beta == doctest::Approx(0.6138).epsilon(3e-3));

  const auto at_c1 = log_optimize(1.0, 1.0, 1.0, 1e-3);
  CHECK(at_c1.beta == doctest::Approx(0.427).epsilon(5e-3));
  CHECK(at_c1.welfare.sigma_u == doctest::Approx(0.188).epsilon(5e-3));

  CHECK_THROWS_AS(log_optimize(1.0, 1.0, -1.0, 1e-3), std::invalid_argument);
  CHECK_THROWS_AS(log_optimize(1.0, 1.0, 0.0, 0.9), std::invalid_argument);
}

TEST_CASE("heavier tension weights push the optimal share down") {
  // sigma_u increases with beta, so the scalarization drags the optimum
  // toward the low-dispersion end as c grows.
  const double b0 = log_optimize(1.0, 1.0, 0.0, 2e-3).beta;
  const double b1 = log_optimize(1.0, 1.0, 1.0, 2e-3).beta;
  const double b5 = log_optimize(1.0, 1.0, 5.0, 2e-3).beta;
  CHECK(b1 < b0);
  CHECK(b5 < b1);
}

TEST_CASE("log frontier keeps only the efficient portion") {
  const auto curve = log_frontier(1.0, 1.0, 40);
  REQUIRE(!curve.samples.empty());
  CHECK(curve.samples.size() < 40);  // truncated past the U maximum
  const auto& last = curve.samples.back();
  for (const auto& s : curve.samples) {
    CHECK(s.welfare.U <= last.welfare.U + 1e-12);
  }
  // The cut sits at the U-maximizing share.
  CHECK(last.sweep_param == doctest::Approx(0.6138).epsilon(0.03));
}
