// End-to-end tests of the command-line binary (path in TAXFRONTIER_BIN):
// exit codes, CSV schema, default echoing, config-file precedence and
// byte-level determinism across worker counts.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
};

std::string binary() {
  const char* bin = std::getenv("TAXFRONTIER_BIN");
  REQUIRE(bin != nullptr);
  return bin;
}

RunResult run(const std::string& args, const std::string& env = "") {
  const std::string cmd = env + " " + binary() + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult r;
  std::array<char, 4096> buf{};
  std::size_t got = 0;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) {
    r.out.append(buf.data(), got);
  }
  const int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

// Cells of the first data row (the line right after the header).
std::vector<std::string> first_row(const std::string& csv,
                                   const std::string& header_prefix) {
  std::istringstream in(csv);
  std::string line;
  bool seen_header = false;
  while (std::getline(in, line)) {
    if (!seen_header) {
      seen_header = line.rfind(header_prefix, 0) == 0;
      continue;
    }
    std::vector<std::string> cells;
    std::string cell;
    std::istringstream row(line);
    while (std::getline(row, cell, ',')) cells.push_back(cell);
    if (!line.empty() && line.back() == ',') cells.emplace_back();
    return cells;
  }
  return {};
}

}  // namespace

TEST_CASE("balance: a full retained share collects nothing") {
  const auto r = run("balance --dist uniform:0:10 --policy linear:1");
  CHECK(r.exit_code == 0);
  const auto row = first_row(r.out, "c,beta1");
  REQUIRE(row.size() == 8);
  CHECK(row[4] == "0");        // alpha
  CHECK(row[3].empty());       // y1 blank for linear schedules
  CHECK(r.out.find("# default c = 0") != std::string::npos);
}

TEST_CASE("optimize-linear in normalized units") {
  const auto r = run("optimize-linear --normalized --c 1");
  CHECK(r.exit_code == 0);
  const auto row = first_row(r.out, "c,beta1");
  REQUIRE(row.size() == 8);
  CHECK(row[1] == "0.5");      // beta
  CHECK(row[5] == "0.375");    // U
  CHECK(row[6] == "0.125");    // sigma_u
}

TEST_CASE("welfare at a reference-table row") {
  const auto r =
      run("welfare --dist uniform:0:10 --policy twobracket:0.81:0.69:0.1 "
          "--c 0.5");
  CHECK(r.exit_code == 0);
  const auto row = first_row(r.out, "c,beta1");
  REQUIRE(row.size() == 8);
  const double v = std::stod(row[7]);
  CHECK(v == doctest::Approx(11.5167).epsilon(2e-4));
}

TEST_CASE("respond prints one household outcome") {
  const auto r =
      run("respond --dist uniform:0:10 --policy twobracket:0.9:0.5:4 --n 2.5");
  CHECK(r.exit_code == 0);
  const auto row = first_row(r.out, "n,l_star");
  REQUIRE(row.size() == 5);
  CHECK(row[1] == "1.6");
  CHECK(r.out.find("balanced alpha = ") != std::string::npos);
}

TEST_CASE("argument errors exit with 2") {
  CHECK(run("balance --dist uniform:0:10 --policy linear:2").exit_code == 2);
  CHECK(run("balance --dist nope --policy linear:0.5").exit_code == 2);
  CHECK(run("no-such-command").exit_code == 2);
  CHECK(run("welfare --dist uniform:0:10").exit_code == 2);  // missing policy
}

TEST_CASE("numeric failures exit with 3") {
  const auto r =
      run("welfare --dist uniform:0:10 --policy twobracket:0.5:0.9:4 "
          "--quad-tol 1e-30");
  CHECK(r.exit_code == 3);
  CHECK(r.out.empty());  // no partial CSV
}

TEST_CASE("output is byte-identical across worker counts") {
  const std::string args =
      "optimize-two-bracket --dist uniform:0:10 --c 0.1 "
      "--beta1-step 0.05 --beta2-step 0.05";
  const auto serial = run(args, "TAXFRONTIER_THREADS=1");
  const auto wide = run(args, "TAXFRONTIER_THREADS=16");
  const auto flagged = run(args + " --threads 7");
  CHECK(serial.exit_code == 0);
  CHECK(serial.out == wide.out);
  CHECK(serial.out == flagged.out);
}

TEST_CASE("config file supplies defaults, flags win") {
  const std::string path = "taxfrontier_test_config.tmp";
  {
    std::ofstream cfg(path);
    cfg << "c = 0.5\n";
  }
  const std::string base =
      "welfare --dist uniform:0:10 --policy linear:0.5 --config " + path;

  const auto from_cfg = run(base);
  CHECK(from_cfg.exit_code == 0);
  CHECK(first_row(from_cfg.out, "c,beta1")[0] == "0.5");
  CHECK(from_cfg.out.find("# default c") == std::string::npos);

  const auto overridden = run(base + " --c 0.25");
  CHECK(overridden.exit_code == 0);
  CHECK(first_row(overridden.out, "c,beta1")[0] == "0.25");

  std::remove(path.c_str());
}

TEST_CASE("verify --table1 reproduces every reference row") {
  const auto r = run("verify --table1");
  CHECK(r.exit_code == 0);
  std::size_t passes = 0, at = 0;
  while ((at = r.out.find("PASS  table1-row", at)) != std::string::npos) {
    ++passes;
    ++at;
  }
  CHECK(passes == 5);
}

TEST_CASE("verify --quick passes and the tampered budget fails") {
  const auto ok = run("verify --quick");
  CHECK(ok.exit_code == 0);
  CHECK(ok.out.find("FAIL") == std::string::npos);

  const auto bad = run("verify --quick --tamper-budget-limits");
  CHECK(bad.exit_code == 1);
  CHECK(bad.out.find("FAIL  budget-residual[tampered-limits]") !=
        std::string::npos);
}

TEST_CASE("reports can be written to a file") {
  const std::string path = "taxfrontier_test_report.tmp";
  const auto r = run("balance --dist uniform:0:10 --policy linear:0.5 -o " +
                     path);
  CHECK(r.exit_code == 0);
  CHECK(r.out.empty());
  std::ifstream in(path);
  REQUIRE(in.good());
  std::stringstream buf;
  buf << in.rdbuf();
  CHECK(buf.str().find("c,beta1,beta2,y1,alpha,U,sigma_u,V") !=
        std::string::npos);
  std::remove(path.c_str());
}
