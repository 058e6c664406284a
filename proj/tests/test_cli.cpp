#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "cookiecut/io.hpp"

using namespace cookiecut;
namespace fs = std::filesystem;

namespace {

struct RunResult {
  int exit_code = -1;
  std::string output;
};

RunResult run_cli(const std::string& args) {
  const fs::path out_file = fs::temp_directory_path() / "cookiecut_cli_out.txt";
  const std::string cmd =
      std::string(COOKIECUT_BIN) + " " + args + " > " + out_file.string() + " 2>&1";
  const int status = std::system(cmd.c_str());
  RunResult result;
  result.exit_code = WEXITSTATUS(status);
  std::ifstream in(out_file);
  std::ostringstream ss;
  ss << in.rdbuf();
  result.output = ss.str();
  return result;
}

fs::path temp_file(const std::string& name, const std::string& contents) {
  const fs::path path = fs::temp_directory_path() / name;
  std::ofstream(path) << contents;
  return path;
}

}  // namespace

TEST_CASE("solve then verify round-trips with exit 0") {
  const fs::path inst = temp_file("cli_inst.json", R"({"m":1,"cookies":[[1],[2],[3],[2]]})");
  const fs::path plan = fs::temp_directory_path() / "cli_plan.json";

  const RunResult solved = run_cli("solve --input " + inst.string() + " --children 2 --output " +
                                   plan.string());
  CHECK(solved.exit_code == 0);
  CHECK(solved.output.find("fair: yes") != std::string::npos);
  // the summary's guarantee line is the bounds-module value: floor((4-1)/2)
  CHECK(solved.output.find("guarantee: 1") != std::string::npos);

  const RunResult verified = run_cli("verify --input " + inst.string() + " --plan " + plan.string());
  CHECK(verified.exit_code == 0);
  CHECK(verified.output.find("verdict: OK") != std::string::npos);
}

TEST_CASE("a tampered plan fails verification with exit 1") {
  const fs::path inst = temp_file("cli_inst2.json", R"({"m":1,"cookies":[[1],[2],[3],[2]]})");
  const fs::path plan = fs::temp_directory_path() / "cli_plan2.json";
  REQUIRE(run_cli("solve --input " + inst.string() + " --children 2 --output " + plan.string())
              .exit_code == 0);

  Allocation alloc = read_allocation(plan.string());
  REQUIRE(!alloc.shares.empty());
  REQUIRE(!alloc.shares[0].empty());
  alloc.shares[0][0].second *= rat(9, 10);
  write_allocation(plan.string(), alloc);

  const RunResult verified = run_cli("verify --input " + inst.string() + " --plan " + plan.string());
  CHECK(verified.exit_code == 1);
  CHECK(verified.output.find("agent") != std::string::npos);  // offending residual named
}

TEST_CASE("malformed input exits 2") {
  const fs::path bad = temp_file("cli_bad.json", "{oops");
  CHECK(run_cli("solve --input " + bad.string() + " --children 2").exit_code == 2);
  const fs::path negative = temp_file("cli_neg.json", R"({"m":1,"cookies":[[-3]]})");
  CHECK(run_cli("solve --input " + negative.string() + " --children 2").exit_code == 2);
}

TEST_CASE("oversized prime solves exit 3 without --force") {
  std::ostringstream cookies;
  cookies << R"({"m":2,"cookies":[)";
  for (int i = 0; i < 25; ++i) cookies << (i > 0 ? "," : "") << "[1,2]";
  cookies << "]}";
  const fs::path inst = temp_file("cli_big.json", cookies.str());
  CHECK(run_cli("solve --input " + inst.string() + " --children 5 --method prime").exit_code == 3);
}

TEST_CASE("bounds prints the table and the machine line") {
  const RunResult res = run_cli("bounds --n 20 --m 2 --r 3");
  CHECK(res.exit_code == 0);
  CHECK(res.output.find("\"main\":4") != std::string::npos);
  CHECK(res.output.find("\"conjecture\":5") != std::string::npos);
  CHECK(res.output.find("\"naive\":1") != std::string::npos);
}

TEST_CASE("adversary output feeds straight back into the solver") {
  const fs::path inst = fs::temp_directory_path() / "cli_tight.json";
  CHECK(run_cli("adversary --m 1 --r 2 --n 4 --output " + inst.string()).exit_code == 0);
  const RunResult solved = run_cli("solve --input " + inst.string() + " --children 2");
  CHECK(solved.exit_code == 0);
  CHECK(solved.output.find("fair: yes") != std::string::npos);
}

TEST_CASE("oracle and probe commands run within the envelope") {
  const fs::path inst = temp_file("cli_small.json", R"({"m":1,"cookies":[[1],[1],[1]]})");
  const RunResult oracle = run_cli("oracle --input " + inst.string() + " --children 2 --budget 1");
  CHECK(oracle.exit_code == 0);
  CHECK(oracle.output.find("best_min_full: 1") != std::string::npos);

  const RunResult probe = run_cli("probe --nmax 4 --mmax 1 --r 2 --trials 10 --seed 5");
  CHECK(probe.exit_code == 0);
  CHECK(probe.output.find("violations: 0") != std::string::npos);
}

TEST_CASE("decimal instances switch to the tolerance path") {
  const fs::path inst = temp_file("cli_dec.json", R"({"m":1,"cookies":[[0.5],[1.5]]})");
  const RunResult solved = run_cli("solve --input " + inst.string() + " --children 2");
  CHECK(solved.exit_code == 0);
  CHECK(solved.output.find("fair: yes") != std::string::npos);
}
