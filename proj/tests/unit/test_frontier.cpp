#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "taxfrontier/checks.hpp"
#include "taxfrontier/frontier.hpp"

using namespace taxfrontier;

namespace {
const SkillDistribution& u010() {
  static const auto d = SkillDistribution::uniform(0.0, 10.0);
  return d;
}
}  // namespace

TEST_CASE("grid axes enumerate inclusive ranges") {
  const GridSpec grid;
  CHECK(grid.beta1.count() == 100);
  CHECK(grid.beta2.count() == 100);
  CHECK(grid.y1.count() == 10);
  CHECK(grid.cells() == 100000);
  CHECK(grid.beta1.value(0) == doctest::Approx(0.01).epsilon(1e-15));
  CHECK(grid.beta1.value(99) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(grid.y1.value(9) == doctest::Approx(0.1).epsilon(1e-12));
}

TEST_CASE("closed-form linear optimum, normalized units") {
  const auto none = optimal_linear_closed_form_normalized(0.0);
  CHECK(none.beta == 1.0);
  CHECK(none.welfare.U == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(none.welfare.sigma_u == doctest::Approx(0.5).epsilon(1e-14));

  const auto unit = optimal_linear_closed_form_normalized(1.0);
  CHECK(unit.beta == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(unit.welfare.sigma_u == doctest::Approx(0.125).epsilon(1e-14));
  CHECK(unit.welfare.U == doctest::Approx(0.375).epsilon(1e-14));

  CHECK_THROWS_AS(optimal_linear_closed_form_normalized(-0.5),
                  std::invalid_argument);
}

TEST_CASE("closed-form linear optimum, general distribution") {
  const auto opt = optimal_linear_closed_form(0.5, u010());
  CHECK(opt.beta == doctest::Approx(0.690983).epsilon(1e-5));
  // Stationarity cross-check against a dense scalarized grid search.
  CHECK(check_linear_closed_form_vs_grid(u010()).pass);
}

TEST_CASE("linear frontier sweep and the parabola identity") {
  const auto curve = frontier_linear_normalized(6);
  REQUIRE(curve.samples.size() == 6);
  CHECK(curve.samples.front().sweep_param == 0.0);
  CHECK(curve.samples.back().sweep_param == 1.0);

  // beta = 0.6 sample: sigma = beta^2 / 2, U = beta (1 - beta/2).
  const auto& mid = curve.samples[3];
  CHECK(mid.sweep_param == doctest::Approx(0.6).epsilon(1e-15));
  CHECK(mid.welfare.sigma_u == doctest::Approx(0.18).epsilon(1e-14));
  CHECK(mid.welfare.U == doctest::Approx(0.42).epsilon(1e-14));

  for (const auto& s : curve.samples) {
    const double sig = s.welfare.sigma_u, u = s.welfare.U;
    CHECK(std::fabs(2.0 * sig - (sig + u) * (sig + u)) <= 1e-12);
  }

  CHECK_THROWS_AS(frontier_linear_normalized(1), std::invalid_argument);
}

TEST_CASE("frontier samples are efficient: U nondecreasing in sigma") {
  const auto curve = frontier_linear(u010(), 51);
  for (std::size_t i = 1; i < curve.samples.size(); ++i) {
    CHECK(curve.samples[i].welfare.sigma_u >=
          curve.samples[i - 1].welfare.sigma_u - 1e-12);
    CHECK(curve.samples[i].welfare.U >= curve.samples[i - 1].welfare.U - 1e-12);
  }
}

TEST_CASE("grid optimizer on a small grid") {
  GridSpec grid;
  grid.beta1 = {0.2, 1.0, 0.2};
  grid.beta2 = {0.2, 1.0, 0.2};
  grid.y1 = {0.05, 0.1, 0.05};
  CHECK(grid.cells() == 50);

  // c = 0 is maximized by no tax at all; ties across y1 resolve to the
  // smallest kink by the lexicographic tie-break.
  const auto opt = optimize_two_bracket(0.0, u010(), grid, 3);
  CHECK(opt.beta1 == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(opt.beta2 == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(opt.y1 == doctest::Approx(0.05).epsilon(1e-12));
  CHECK(opt.welfare.U == doctest::Approx(50.0 / 3.0).epsilon(1e-9));

  // Identical results for any worker count.
  const auto one = optimize_two_bracket(0.4, u010(), grid, 1);
  const auto four = optimize_two_bracket(0.4, u010(), grid, 4);
  CHECK(one.beta1 == four.beta1);
  CHECK(one.beta2 == four.beta2);
  CHECK(one.y1 == four.y1);
  CHECK(one.welfare.V == four.welfare.V);

  CHECK_THROWS_AS(optimize_two_bracket(-0.1, u010(), grid, 1),
                  std::invalid_argument);
  GridSpec empty;
  empty.beta1 = {0.5, 0.4, 0.01};
  CHECK_THROWS_AS(optimize_two_bracket(0.0, u010(), empty, 1),
                  std::invalid_argument);
}

TEST_CASE("two-bracket frontier with a single c = 0") {
  GridSpec grid;
  grid.beta1 = {0.25, 1.0, 0.25};
  grid.beta2 = {0.25, 1.0, 0.25};
  grid.y1 = {0.1, 0.1, 0.1};
  const auto curve = frontier_two_bracket({0.0}, u010(), grid, 2);
  REQUIRE(curve.samples.size() == 1);
  const double en2 = u010().moment(2);
  const double sn2 = std::sqrt(u010().moment(4) - en2 * en2);
  CHECK(curve.samples[0].welfare.U == doctest::Approx(0.5 * en2).epsilon(1e-9));
  CHECK(curve.samples[0].welfare.sigma_u ==
        doctest::Approx(0.5 * sn2).epsilon(1e-9));
  CHECK(curve.samples[0].alpha.has_value());
  CHECK(*curve.samples[0].alpha == doctest::Approx(0.0).epsilon(1e-12));

  CHECK_THROWS_AS(frontier_two_bracket({}, u010(), grid, 1),
                  std::invalid_argument);
}
