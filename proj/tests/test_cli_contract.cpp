#include <doctest.h>

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "extensor/verify.hpp"

using namespace extensor;

#ifndef EXTENSOR_CLI_PATH
#define EXTENSOR_CLI_PATH "extensor"
#endif

namespace {
int run_cli(const std::string& args) {
  std::string cmd = std::string(EXTENSOR_CLI_PATH) + " " + args + " > /dev/null 2>&1";
  int rc = std::system(cmd.c_str());
  return WEXITSTATUS(rc);
}

std::string slurp(const std::string& path) {
  std::ifstream f(path);
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}
}  // namespace

TEST_CASE("suite registry") {
  CHECK(suite_names().size() == 15);
  CHECK_THROWS_AS(run_suite("no-such-suite", SuiteOptions{}), std::invalid_argument);
}

TEST_CASE("cli exit codes") {
  CHECK(run_cli("verify ccr --n 2") == 0);
  CHECK(run_cli("verify no-such-suite") == 2);
  CHECK(run_cli("compute capelli --r 5 --n 2") == 2);  // parameter out of range
  CHECK(run_cli("compute character --lambda 2,1 --cycle 3") == 0);
  // Term budget guard aborts with exit 3.
  CHECK(run_cli("verify ccr --n 3 --max-terms 2") == 3);
}

TEST_CASE("cli reports are byte-identical across runs") {
  std::string p1 = "/tmp/extensor_report_1.json", p2 = "/tmp/extensor_report_2.json";
  REQUIRE(run_cli("verify eigenvalues --n 2 --p 2 --seed 7 --json " + p1) == 0);
  REQUIRE(run_cli("verify eigenvalues --n 2 --p 2 --seed 7 --json " + p2) == 0);
  std::string a = slurp(p1), b = slurp(p2);
  CHECK(!a.empty());
  CHECK(a == b);
  // Seeded suites too.
  REQUIRE(run_cli("verify preimm-expansions --seed 99 --json " + p1) == 0);
  REQUIRE(run_cli("verify preimm-expansions --seed 99 --json " + p2) == 0);
  CHECK(slurp(p1) == slurp(p2));
}

TEST_CASE("cli compute golden values") {
  std::string path = "/tmp/extensor_compute.txt";
  std::string cmd = std::string(EXTENSOR_CLI_PATH) + " compute capelli --r 1 --n 3 > " + path;
  REQUIRE(std::system(cmd.c_str()) == 0);
  CHECK(slurp(path) == "E11 + E22 + E33\n");
  cmd = std::string(EXTENSOR_CLI_PATH) + " compute character --lambda 2,1 --cycle 3 > " + path;
  REQUIRE(std::system(cmd.c_str()) == 0);
  CHECK(slurp(path) == "-1\n");
  cmd = std::string(EXTENSOR_CLI_PATH) +
        " compute hc-eigenvalue --element capelli:2 --n 2 --mu 1,1 > " + path;
  REQUIRE(std::system(cmd.c_str()) == 0);
  CHECK(slurp(path) == "2\n");
}
