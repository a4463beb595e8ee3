#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "taxfrontier/checks.hpp"
#include "taxfrontier/welfare.hpp"

using namespace taxfrontier;

namespace {
const SkillDistribution& u010() {
  static const auto d = SkillDistribution::uniform(0.0, 10.0);
  return d;
}
}  // namespace

TEST_CASE("linear welfare closed forms") {
  const auto full = welfare_linear(1.0, u010(), 0.0);
  CHECK(full.U == doctest::Approx(50.0 / 3.0).epsilon(1e-14));
  CHECK(full.sigma_u == doctest::Approx(14.907120).epsilon(1e-7));

  const auto none = welfare_linear(0.0, u010(), 0.0);
  CHECK(none.U == 0.0);
  CHECK(none.sigma_u == 0.0);

  const auto half = welfare_linear(0.5, u010(), 0.0);
  CHECK(half.U == doctest::Approx(12.5).epsilon(1e-12));
  CHECK(half.sigma_u == doctest::Approx(3.726780).epsilon(1e-6));

  CHECK_THROWS_AS(welfare_linear(0.5, u010(), -1.0), std::invalid_argument);
  CHECK_THROWS_AS(welfare_linear(-0.1, u010(), 0.0), std::invalid_argument);
}

TEST_CASE("scalarized objective definition") {
  const auto w = welfare_linear(0.7, u010(), 0.8);
  CHECK(w.V == doctest::Approx(w.U - 0.8 * w.sigma_u).epsilon(1e-14));
  CHECK(w.c == 0.8);
}

TEST_CASE("two-bracket welfare against the reference rows") {
  // Uniform[0, 10] benchmark rows; loose tolerance against the published
  // 4-decimal values, tight tolerance against an independent closed
  // antiderivative recomputation.
  const auto c5 = welfare_two_bracket(0.81, 0.69, 0.1, u010(), 0.5);
  CHECK(std::fabs(c5.U - 15.0655) <= 1e-3);
  CHECK(std::fabs(c5.sigma_u - 7.0976) <= 1e-3);
  CHECK(std::fabs(c5.V - 11.5167) <= 1e-3);
  CHECK(c5.U == doctest::Approx(15.065049).epsilon(2e-6));
  CHECK(c5.sigma_u == doctest::Approx(7.097607).epsilon(2e-6));

  const auto c1 = welfare_two_bracket(0.95, 0.92, 0.1, u010(), 0.1);
  CHECK(std::fabs(c1.U - 16.5600) <= 1e-3);
  CHECK(std::fabs(c1.sigma_u - 12.6174) <= 1e-3);
  CHECK(std::fabs(c1.V - 15.2982) <= 1e-3);
  CHECK(c1.U == doctest::Approx(16.560002).epsilon(2e-6));
  CHECK(c1.sigma_u == doctest::Approx(12.617459).epsilon(2e-6));
}

TEST_CASE("equal shares reduce to the linear closed forms") {
  for (int i = 0; i <= 10; ++i) {
    const double beta = i * 0.1;
    const auto lin = welfare_linear(beta, u010(), 0.3);
    const auto two = welfare_two_bracket(beta, beta, 2.0, u010(), 0.3);
    CHECK(std::fabs(lin.U - two.U) <= 1e-9);
    CHECK(std::fabs(lin.sigma_u - two.sigma_u) <= 1e-9);
  }
}

TEST_CASE("dispersion ignores the subsidy and matches blind quadrature") {
  CHECK(check_sigma_alpha_invariance(u010(), 20).pass);
  CHECK(check_sigma_blind_quadrature(u010(), 20).pass);
}

TEST_CASE("welfare argument validation") {
  CHECK_THROWS_AS(welfare_two_bracket(0.5, 0.9, 0.0, u010(), 0.0),
                  std::invalid_argument);
  CHECK_THROWS_AS(welfare_two_bracket(0.5, 1.1, 1.0, u010(), 0.0),
                  std::invalid_argument);
}
