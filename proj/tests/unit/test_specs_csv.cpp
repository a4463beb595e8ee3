#include <doctest.h>

#include <stdexcept>

#include "taxfrontier/csv.hpp"
#include "taxfrontier/specs.hpp"

using namespace taxfrontier;

TEST_CASE("distribution spec strings") {
  const auto d = parse_distribution_spec("uniform:0:10");
  CHECK(d.is_uniform());
  CHECK(d.support_lo() == 0.0);
  CHECK(d.support_hi() == 10.0);

  CHECK_THROWS_AS(parse_distribution_spec("uniform:5"), std::invalid_argument);
  CHECK_THROWS_AS(parse_distribution_spec("pareto:1:2"), std::invalid_argument);
  CHECK_THROWS_AS(parse_distribution_spec("uniform:x:10"),
                  std::invalid_argument);
  CHECK_THROWS_AS(parse_distribution_spec("uniform:10:0"),
                  std::invalid_argument);
}

TEST_CASE("policy spec strings") {
  const auto lin = parse_policy_spec("linear:0.5");
  CHECK(lin.linear);
  CHECK(lin.beta1 == 0.5);
  CHECK(lin.beta2 == 0.5);

  const auto two = parse_policy_spec("twobracket:0.9:0.5:4");
  CHECK_FALSE(two.linear);
  CHECK(two.beta1 == 0.9);
  CHECK(two.beta2 == 0.5);
  CHECK(two.y1 == 4.0);

  CHECK_THROWS_AS(parse_policy_spec("linear"), std::invalid_argument);
  CHECK_THROWS_AS(parse_policy_spec("twobracket:0.9:0.5"),
                  std::invalid_argument);
  CHECK_THROWS_AS(parse_policy_spec("flat:0.5"), std::invalid_argument);
}

TEST_CASE("number parsing is strict and locale independent") {
  CHECK(parse_double("1e-4") == 1e-4);
  CHECK(parse_double(" 0.5 ") == 0.5);
  CHECK(parse_double("-3") == -3.0);
  CHECK_THROWS_AS(parse_double("abc"), std::invalid_argument);
  CHECK_THROWS_AS(parse_double("1.0x"), std::invalid_argument);
  CHECK_THROWS_AS(parse_double(""), std::invalid_argument);
}

TEST_CASE("config text parsing") {
  const auto cfg = parse_config_text(
      "c = 0.3\n"
      "# a comment\n"
      "beta-step=0.01   # trailing comment\n"
      "\n"
      "dist = uniform:0:10\n");
  CHECK(cfg.size() == 3);
  CHECK(cfg.at("c") == "0.3");
  CHECK(cfg.at("beta-step") == "0.01");
  CHECK(cfg.at("dist") == "uniform:0:10");

  CHECK_THROWS_AS(parse_config_text("just words\n"), std::invalid_argument);
  CHECK_THROWS_AS(parse_config_text("= 3\n"), std::invalid_argument);
}

TEST_CASE("doubles render with 6 significant digits") {
  CHECK(format_double(15.2982) == "15.2982");
  CHECK(format_double(16.56) == "16.56");
  CHECK(format_double(0.0) == "0");
  CHECK(format_double(100.0 / 3.0) == "33.3333");
  CHECK(format_double(1e-7) == "1e-07");
  CHECK(format_double(7.45127e10) == "7.45127e+10");
}

TEST_CASE("csv rows follow the shared schema") {
  WelfarePoint w;
  w.U = 12.5;
  w.sigma_u = 3.72678;
  w.c = 0.5;
  w.V = w.U - w.c * w.sigma_u;

  CsvBuilder csv;
  csv.comment("default c = 0.5");
  csv.header(kWelfareHeader);
  csv.row(welfare_row(0.5, 0.5, 0.5, std::nullopt, 25.0 / 3.0, w));
  CHECK(csv.str() ==
        "# default c = 0.5\n"
        "c,beta1,beta2,y1,alpha,U,sigma_u,V\n"
        "0.5,0.5,0.5,,8.33333,12.5,3.72678,10.6366\n");

  FrontierSample s;
  s.sweep_param = 0.1;
  s.beta1 = 0.95;
  s.beta2 = 0.92;
  s.y1 = 0.1;
  s.alpha = 2.4504;
  s.welfare = w;
  const auto row = frontier_row(s);
  REQUIRE(row.size() == kFrontierHeader.size());
  CHECK(row[0] == "0.1");
  CHECK(row[4] == "0.1");
  CHECK(row[5] == "2.4504");
}
