// Command-line surface: parses distribution/policy specs, runs the solvers
// and emits deterministic CSV reports. Exit codes: 0 success, 1 failed
// verification, 2 argument/config error, 3 numeric failure.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "taxfrontier/budget.hpp"
#include "taxfrontier/checks.hpp"
#include "taxfrontier/csv.hpp"
#include "taxfrontier/errors.hpp"
#include "taxfrontier/frontier.hpp"
#include "taxfrontier/household.hpp"
#include "taxfrontier/log_model.hpp"
#include "taxfrontier/specs.hpp"
#include "taxfrontier/welfare.hpp"

namespace {

using namespace taxfrontier;

struct CommonOpts {
  std::string output;
  std::string config;
  double quad_tol = 0.0;  // 0 = library default
  int threads = -1;       // -1 = unset (env TAXFRONTIER_THREADS, then auto)

  CLI::Option* quad_tol_opt = nullptr;
  CLI::Option* threads_opt = nullptr;
};

void add_common(CLI::App* sub, CommonOpts* common) {
  sub->add_option("-o,--output", common->output,
                  "write the report to this file instead of stdout");
  sub->add_option("--config", common->config,
                  "flat 'key = value' config file; command-line flags win");
  common->quad_tol_opt =
      sub->add_option("--quad-tol", common->quad_tol,
                      "relative quadrature tolerance override");
  common->threads_opt =
      sub->add_option("--threads", common->threads,
                      "worker cap for grid evaluation (0 = auto)");
  for (auto* opt : sub->get_options()) {
    opt->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
  }
}

QuadratureOptions quadrature_from(const CommonOpts& common) {
  QuadratureOptions q;
  if (common.quad_tol_opt->count() > 0) {
    if (!(common.quad_tol > 0.0)) {
      throw std::invalid_argument("--quad-tol must be > 0");
    }
    q.rel_tol = common.quad_tol;
    q.abs_tol = common.quad_tol * 1e-2;
  }
  return q;
}

SkillDistribution make_dist(const std::string& spec, const CommonOpts& common) {
  SkillDistribution d = parse_distribution_spec(spec);
  d.set_quadrature_options(quadrature_from(common));
  return d;
}

unsigned resolve_workers(const CommonOpts& common) {
  if (common.threads_opt->count() > 0) {
    if (common.threads < 0) {
      throw std::invalid_argument("--threads must be >= 0");
    }
    return static_cast<unsigned>(common.threads);
  }
  if (const char* env = std::getenv("TAXFRONTIER_THREADS")) {
    const double v = parse_double(env);
    if (v < 0 || v != static_cast<unsigned>(v)) {
      throw std::invalid_argument("TAXFRONTIER_THREADS must be a "
                                  "nonnegative integer");
    }
    return static_cast<unsigned>(v);
  }
  return 0;
}

void echo_default(CsvBuilder& out, const CLI::Option* opt,
                  const std::string& key, const std::string& value) {
  if (opt == nullptr || opt->count() == 0) {
    out.comment("default " + key + " = " + value);
  }
}

void echo_common_defaults(CsvBuilder& out, const CommonOpts& common) {
  echo_default(out, common.quad_tol_opt, "quad-tol", "1e-12");
}

// Balanced policy + welfare for a parsed policy spec; shared by the
// respond/balance/welfare commands.
struct PolicyEval {
  BalancedPolicy balanced;
  WelfarePoint welfare;
  std::optional<double> y1_cell;
};

PolicyEval eval_policy(const PolicySpec& spec, const SkillDistribution& d,
                       double c) {
  PolicyEval ev;
  if (spec.linear) {
    ev.balanced = balance_linear(spec.beta1, d);
    ev.welfare = welfare_linear(spec.beta1, d, c);
  } else {
    ev.balanced = balance_two_bracket(spec.beta1, spec.beta2, spec.y1, d);
    ev.welfare = welfare_two_bracket(spec.beta1, spec.beta2, spec.y1, d, c);
    ev.y1_cell = spec.y1;
  }
  return ev;
}

std::vector<double> parse_c_list(const std::string& text) {
  std::vector<double> out;
  std::string token;
  std::istringstream in(text);
  while (std::getline(in, token, ',')) out.push_back(parse_double(token));
  if (out.empty()) throw std::invalid_argument("empty c list");
  return out;
}

int run_cli(int argc, char** argv) {
  CLI::App app{"piecewise-linear income-tax frontier solver"};
  app.require_subcommand(1);

  int exit_code = 0;
  std::string report;
  std::string output_path;
  std::function<void()> action;

  // ---- respond ----
  auto* respond = app.add_subcommand(
      "respond", "optimal effort/utility/tax of one household");
  {
    static CommonOpts common;
    static std::string dist_spec, policy_spec;
    static double n = 0.0;
    respond->add_option("--dist", dist_spec, "skill distribution, uniform:<a>:<b>")
        ->required();
    respond->add_option("--policy", policy_spec,
                        "linear:<beta> or twobracket:<b1>:<b2>:<y1>")
        ->required();
    respond->add_option("--n", n, "skill level")->required();
    add_common(respond, &common);
    respond->callback([&, p = &common] {
      const auto d = make_dist(dist_spec, *p);
      const auto ev = eval_policy(parse_policy_spec(policy_spec), d, 0.0);
      const auto out = respond_quadratic(ev.balanced.policy, n);
      CsvBuilder csv;
      echo_common_defaults(csv, *p);
      csv.comment("balanced alpha = " + format_double(ev.balanced.policy.alpha));
      csv.header({"n", "l_star", "y_star", "u_star", "t_star"});
      csv.row({cell(n), cell(out.l_star), cell(out.y_star), cell(out.u_star),
               cell(out.t_star)});
      report = csv.str();
      output_path = p->output;
    });
  }

  // ---- balance ----
  auto* balance = app.add_subcommand(
      "balance", "subsidy alpha that zeroes total collected tax");
  {
    static CommonOpts common;
    static std::string dist_spec, policy_spec;
    static double c = 0.0;
    balance->add_option("--dist", dist_spec, "skill distribution")->required();
    balance->add_option("--policy", policy_spec, "tax schedule")->required();
    auto* c_opt = balance->add_option("--c", c, "tension weight for the V column");
    add_common(balance, &common);
    balance->callback([&, p = &common, c_opt] {
      const auto d = make_dist(dist_spec, *p);
      const auto ev = eval_policy(parse_policy_spec(policy_spec), d, c);
      CsvBuilder csv;
      echo_default(csv, c_opt, "c", "0");
      echo_common_defaults(csv, *p);
      csv.comment("residual = " + format_double(ev.balanced.residual));
      csv.header(kWelfareHeader);
      csv.row(welfare_row(c, ev.balanced.policy.beta1, ev.balanced.policy.beta2,
                          ev.y1_cell, ev.balanced.policy.alpha, ev.welfare));
      report = csv.str();
      output_path = p->output;
    });
  }

  // ---- welfare ----
  auto* welfare = app.add_subcommand(
      "welfare", "mean utility and utility dispersion of a balanced schedule");
  {
    static CommonOpts common;
    static std::string dist_spec, policy_spec;
    static double c = 0.0;
    welfare->add_option("--dist", dist_spec, "skill distribution")->required();
    welfare->add_option("--policy", policy_spec, "tax schedule")->required();
    auto* c_opt = welfare->add_option("--c", c, "tension weight");
    add_common(welfare, &common);
    welfare->callback([&, p = &common, c_opt] {
      const auto d = make_dist(dist_spec, *p);
      const auto ev = eval_policy(parse_policy_spec(policy_spec), d, c);
      CsvBuilder csv;
      echo_default(csv, c_opt, "c", "0");
      echo_common_defaults(csv, *p);
      csv.header(kWelfareHeader);
      csv.row(welfare_row(c, ev.balanced.policy.beta1, ev.balanced.policy.beta2,
                          ev.y1_cell, ev.balanced.policy.alpha, ev.welfare));
      report = csv.str();
      output_path = p->output;
    });
  }

  // ---- frontier-linear ----
  auto* frontier_lin = app.add_subcommand(
      "frontier-linear", "beta sweep of the linear-schedule frontier");
  {
    static CommonOpts common;
    static std::string dist_spec;
    static bool normalized = false;
    static int steps = 101;
    static double c = 0.0;
    auto* dist_opt =
        frontier_lin->add_option("--dist", dist_spec, "skill distribution");
    auto* norm_opt = frontier_lin->add_flag(
        "--normalized", normalized, "unit moments (E[N^2] = sigma(N^2) = 1)");
    dist_opt->excludes(norm_opt);
    auto* steps_opt = frontier_lin->add_option("--steps", steps, "sample count");
    auto* c_opt = frontier_lin->add_option("--c", c, "tension weight");
    add_common(frontier_lin, &common);
    frontier_lin->callback([&, p = &common, dist_opt, steps_opt, c_opt] {
      if (dist_opt->count() == 0 && !normalized) {
        throw std::invalid_argument("need --dist or --normalized");
      }
      FrontierCurve curve;
      if (normalized) {
        curve = frontier_linear_normalized(steps, c);
      } else {
        curve = frontier_linear(make_dist(dist_spec, *p), steps, c);
      }
      CsvBuilder csv;
      echo_default(csv, steps_opt, "steps", "101");
      echo_default(csv, c_opt, "c", "0");
      echo_common_defaults(csv, *p);
      csv.header(kFrontierHeader);
      for (const auto& s : curve.samples) csv.row(frontier_row(s));
      report = csv.str();
      output_path = p->output;
    });
  }

  // ---- optimize-linear ----
  auto* opt_lin = app.add_subcommand(
      "optimize-linear", "closed-form optimal linear schedule for a weight c");
  {
    static CommonOpts common;
    static std::string dist_spec;
    static bool normalized = false;
    static double c = 0.0;
    auto* dist_opt = opt_lin->add_option("--dist", dist_spec, "skill distribution");
    auto* norm_opt = opt_lin->add_flag("--normalized", normalized,
                                       "unit moments");
    dist_opt->excludes(norm_opt);
    auto* c_opt = opt_lin->add_option("--c", c, "tension weight");
    add_common(opt_lin, &common);
    opt_lin->callback([&, p = &common, dist_opt, c_opt] {
      if (dist_opt->count() == 0 && !normalized) {
        throw std::invalid_argument("need --dist or --normalized");
      }
      LinearOptimum opt;
      double alpha = 0.0;
      if (normalized) {
        opt = optimal_linear_closed_form_normalized(c);
        alpha = (1.0 - opt.beta) * opt.beta;
      } else {
        const auto d = make_dist(dist_spec, *p);
        opt = optimal_linear_closed_form(c, d);
        alpha = balance_linear(opt.beta, d).policy.alpha;
      }
      CsvBuilder csv;
      echo_default(csv, c_opt, "c", "0");
      echo_common_defaults(csv, *p);
      csv.header(kWelfareHeader);
      csv.row(welfare_row(c, opt.beta, opt.beta, std::nullopt, alpha,
                          opt.welfare));
      report = csv.str();
      output_path = p->output;
    });
  }

  // ---- grid options shared by the two-bracket commands ----
  struct GridOpts {
    GridSpec grid;
    std::vector<CLI::Option*> opts;
    void add(CLI::App* sub) {
      opts = {
          sub->add_option("--beta1-min", grid.beta1.lo, "first-bracket share, low end"),
          sub->add_option("--beta1-max", grid.beta1.hi, "first-bracket share, high end"),
          sub->add_option("--beta1-step", grid.beta1.step, "first-bracket share step"),
          sub->add_option("--beta2-min", grid.beta2.lo, "second-bracket share, low end"),
          sub->add_option("--beta2-max", grid.beta2.hi, "second-bracket share, high end"),
          sub->add_option("--beta2-step", grid.beta2.step, "second-bracket share step"),
          sub->add_option("--y1-min", grid.y1.lo, "kink income, low end"),
          sub->add_option("--y1-max", grid.y1.hi, "kink income, high end"),
          sub->add_option("--y1-step", grid.y1.step, "kink income step"),
      };
    }
    void echo(CsvBuilder& csv) const {
      static const char* keys[] = {"beta1-min", "beta1-max", "beta1-step",
                                   "beta2-min", "beta2-max", "beta2-step",
                                   "y1-min",    "y1-max",    "y1-step"};
      const double values[] = {grid.beta1.lo, grid.beta1.hi, grid.beta1.step,
                               grid.beta2.lo, grid.beta2.hi, grid.beta2.step,
                               grid.y1.lo,    grid.y1.hi,    grid.y1.step};
      for (std::size_t i = 0; i < opts.size(); ++i) {
        echo_default(csv, opts[i], keys[i], format_double(values[i]));
      }
    }
  };

  // ---- optimize-two-bracket ----
  auto* opt_two = app.add_subcommand(
      "optimize-two-bracket", "grid search of V over two-bracket schedules");
  {
    static CommonOpts common;
    static std::string dist_spec;
    static double c = 0.0;
    static GridOpts grid_opts;
    opt_two->add_option("--dist", dist_spec, "skill distribution")->required();
    auto* c_opt = opt_two->add_option("--c", c, "tension weight");
    grid_opts.add(opt_two);
    add_common(opt_two, &common);
    opt_two->callback([&, p = &common, c_opt] {
      const auto d = make_dist(dist_spec, *p);
      const unsigned workers = resolve_workers(*p);
      const auto opt = optimize_two_bracket(c, d, grid_opts.grid, workers);
      const double alpha =
          balance_two_bracket(opt.beta1, opt.beta2, opt.y1, d).policy.alpha;
      CsvBuilder csv;
      echo_default(csv, c_opt, "c", "0");
      grid_opts.echo(csv);
      // The worker count never appears in the report: output bytes are
      // identical for any parallelism degree.
      echo_common_defaults(csv, *p);
      csv.header(kWelfareHeader);
      csv.row(welfare_row(c, opt.beta1, opt.beta2, opt.y1, alpha, opt.welfare));
      report = csv.str();
      output_path = p->output;
    });
  }

  // ---- frontier-two-bracket ----
  auto* frontier_two = app.add_subcommand(
      "frontier-two-bracket", "optimal (sigma_u, U) locus over a list of c");
  {
    static CommonOpts common;
    static std::string dist_spec;
    static std::string c_list = "0.1,0.2,0.3,0.4,0.5";
    static GridOpts grid_opts;
    frontier_two->add_option("--dist", dist_spec, "skill distribution")
        ->required();
    auto* c_opt =
        frontier_two->add_option("--c-list", c_list, "comma-separated weights");
    grid_opts.add(frontier_two);
    add_common(frontier_two, &common);
    frontier_two->callback([&, p = &common, c_opt] {
      const auto d = make_dist(dist_spec, *p);
      const unsigned workers = resolve_workers(*p);
      const auto curve =
          frontier_two_bracket(parse_c_list(c_list), d, grid_opts.grid, workers);
      CsvBuilder csv;
      echo_default(csv, c_opt, "c-list", c_list);
      grid_opts.echo(csv);
      echo_common_defaults(csv, *p);
      csv.header(kFrontierHeader);
      for (const auto& s : curve.samples) csv.row(frontier_row(s));
      report = csv.str();
      output_path = p->output;
    });
  }

  // ---- log-optimize ----
  auto* log_opt = app.add_subcommand(
      "log-optimize", "optimal linear schedule under logarithmic utility");
  {
    static CommonOpts common;
    static double A = 1.0, s = 1e12, c = 0.0, beta_step = 1e-4;
    auto* a_opt = log_opt->add_option("--A", A, "leisure weight");
    auto* s_opt = log_opt->add_option("--s", s, "skill upper bound");
    auto* c_opt = log_opt->add_option("--c", c, "tension weight");
    auto* step_opt =
        log_opt->add_option("--beta-step", beta_step, "beta grid step");
    add_common(log_opt, &common);
    log_opt->callback([&, p = &common, a_opt, s_opt, c_opt, step_opt] {
      const auto opt = log_optimize(A, s, c, beta_step);
      CsvBuilder csv;
      echo_default(csv, a_opt, "A", "1");
      echo_default(csv, s_opt, "s", "1e+12");
      echo_default(csv, c_opt, "c", "0");
      echo_default(csv, step_opt, "beta-step", "0.0001");
      echo_common_defaults(csv, *p);
      csv.header(kWelfareHeader);
      csv.row(welfare_row(c, opt.beta, opt.beta, std::nullopt, opt.alpha,
                          opt.welfare));
      report = csv.str();
      output_path = p->output;
    });
  }

  // ---- log-frontier ----
  auto* log_front = app.add_subcommand(
      "log-frontier", "efficient (sigma_u, U) sweep under logarithmic utility");
  {
    static CommonOpts common;
    static double A = 1.0, s = 1e12, c = 0.0;
    static int steps = 200;
    auto* a_opt = log_front->add_option("--A", A, "leisure weight");
    auto* s_opt = log_front->add_option("--s", s, "skill upper bound");
    auto* steps_opt = log_front->add_option("--steps", steps, "sample count");
    auto* c_opt = log_front->add_option("--c", c, "tension weight");
    add_common(log_front, &common);
    log_front->callback([&, p = &common, a_opt, s_opt, steps_opt, c_opt] {
      const auto curve = log_frontier(A, s, steps, c);
      CsvBuilder csv;
      echo_default(csv, a_opt, "A", "1");
      echo_default(csv, s_opt, "s", "1e+12");
      echo_default(csv, steps_opt, "steps", "200");
      echo_default(csv, c_opt, "c", "0");
      echo_common_defaults(csv, *p);
      csv.header(kFrontierHeader);
      for (const auto& sample : curve.samples) csv.row(frontier_row(sample));
      report = csv.str();
      output_path = p->output;
    });
  }

  // ---- verify ----
  auto* verify = app.add_subcommand(
      "verify", "run the invariant suite and report pass/fail per check");
  {
    static CommonOpts common;
    static std::string dist_spec = "uniform:0:10";
    static bool table1 = false, quick = false, tamper = false;
    verify->add_option("--dist", dist_spec, "skill distribution");
    verify->add_flag("--table1", table1,
                     "only reproduce the benchmark table of reference optima");
    verify->add_flag("--quick", quick,
                     "reduced trial counts; skips the grid-scale checks");
    verify->add_flag("--tamper-budget-limits", tamper,
                     "deliberate-bug sentinel: balance the budget with "
                     "retained-share integration limits (must fail)");
    add_common(verify, &common);
    verify->callback([&, p = &common] {
      const auto d = make_dist(dist_spec, *p);
      CheckOptions opts;
      opts.workers = resolve_workers(*p);
      opts.quick = quick;
      opts.tamper_budget_limits = tamper;
      const auto results =
          table1 ? run_table1_suite(d) : run_verify_suite(d, opts);
      std::string text;
      int failures = 0;
      for (const auto& r : results) {
        failures += r.pass ? 0 : 1;
        text += (r.pass ? "PASS  " : "FAIL  ") + r.name + ": " + r.detail + "\n";
      }
      text += std::to_string(results.size()) + " checks, " +
              std::to_string(failures) + " failed\n";
      report = text;
      output_path = p->output;
      exit_code = failures == 0 ? 0 : 1;
    });
  }

  // Config-file handling: entries become flags injected right after the
  // subcommand, so anything given explicitly on the command line (parsed
  // with a take-last policy) wins.
  std::vector<std::string> args(argv + 1, argv + argc);
  std::string config_path;
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "--config" && i + 1 < args.size()) config_path = args[i + 1];
    else if (args[i].rfind("--config=", 0) == 0) config_path = args[i].substr(9);
  }
  if (!config_path.empty()) {
    const auto entries = load_config_file(config_path);
    std::size_t sub_at = args.size();
    for (std::size_t i = 0; i < args.size(); ++i) {
      if (!args[i].empty() && args[i][0] != '-') {
        sub_at = i;
        break;
      }
    }
    if (sub_at < args.size()) {
      std::vector<std::string> injected;
      for (const auto& [key, value] : entries) {
        if (key == "config") continue;
        injected.push_back("--" + key + "=" + value);
      }
      args.insert(args.begin() + static_cast<std::ptrdiff_t>(sub_at) + 1,
                  injected.begin(), injected.end());
    }
  }

  std::vector<const char*> cargs;
  cargs.push_back("taxfrontier");
  for (const auto& a : args) cargs.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(cargs.size()), cargs.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  if (output_path.empty()) {
    std::fputs(report.c_str(), stdout);
  } else {
    std::ofstream out(output_path, std::ios::binary);
    if (!out) {
      throw std::invalid_argument("cannot write output file '" + output_path +
                                  "'");
    }
    out << report;
  }
  return exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run_cli(argc, argv);
  } catch (const taxfrontier::numeric_error& e) {
    std::cerr << "numeric error: " << e.what() << "\n";
    return 3;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
