#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <string>

// Drives the installed binary end to end: output shapes, determinism and
// exit codes.

namespace {

namespace fs = std::filesystem;

struct RunResult {
  int exit_code = -1;
  std::string output;  // stdout only
};

std::string binary_path() {
  const char* env = std::getenv("ELLPRIME_BIN");
  REQUIRE_MESSAGE(env != nullptr, "ELLPRIME_BIN must point at the CLI");
  return env;
}

RunResult run(const std::string& args) {
  const std::string command = binary_path() + " " + args + " 2>/dev/null";
  RunResult result;
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buffer;
  std::size_t got;
  while ((got = fread(buffer.data(), 1, buffer.size(), pipe)) > 0)
    result.output.append(buffer.data(), got);
  const int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

struct TempDir {
  fs::path path;
  TempDir() : path(fs::temp_directory_path() / "ellprime_cli_test") {
    fs::remove_all(path);
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
};

}  // namespace

TEST_CASE("order command") {
  const RunResult good = run("order --curve 0,2 --p 877");
  CHECK(good.exit_code == 0);
  CHECK(good.output == "p=877 n=937 ap=-59\n");

  const RunResult quartic = run("order --curve -1,0 --p 5");
  CHECK(quartic.exit_code == 0);
  CHECK(quartic.output == "p=5 n=8 ap=-2\n");

  const RunResult bad = run("order --curve 0,2 --p 3");
  CHECK(bad.exit_code == 1);  // bad reduction
  CHECK(bad.output.empty());

  const RunResult csv = run("--format csv order --curve 0,2 --p 877");
  CHECK(csv.output == "p,n,ap\n877,937,-59\n");

  const RunResult jsonl = run("--format jsonl order --curve 0,2 --p 877");
  CHECK(jsonl.output == "{\"ap\":-59,\"n\":937,\"p\":877}\n");

  // --format is accepted after the subcommand as well
  const RunResult postfix = run("order --curve 0,2 --p 877 --format csv");
  CHECK(postfix.output == "p,n,ap\n877,937,-59\n");
}

TEST_CASE("usage and bounds exit codes") {
  CHECK(run("order --curve 0,2").exit_code == 2);        // missing --p
  CHECK(run("nonsense").exit_code == 2);
  CHECK(run("density bogus").exit_code == 2);
  CHECK(run("check bogus").exit_code == 2);
  CHECK(run("scan --curve 0,2 --x 2000000").exit_code == 3);  // over guard
  CHECK(run("density P0 --cutoff 10").exit_code == 3);
}

TEST_CASE("scan command with cache") {
  TempDir dir;
  const std::string base =
      "scan --curve 0,2 --x 1000 --cache " + dir.path.string();
  const RunResult first = run(base);
  CHECK(first.exit_code == 0);
  CHECK(first.output.find("count 19") != std::string::npos);
  CHECK(first.output.find("brun partial sum 0.200977274053") !=
        std::string::npos);
  CHECK(fs::exists(dir.path / "0_2.scan.csv"));

  // second run reuses the cache and is byte-identical
  const RunResult second = run(base);
  CHECK(second.output == first.output);

  // empty result below the first good prime
  const RunResult empty =
      run("scan --curve 0,2 --x 4 --cache " + dir.path.string());
  CHECK(empty.exit_code == 0);
  CHECK(empty.output.find("count 0") != std::string::npos);

  const RunResult quartic =
      run("scan --curve -1,0 --x 1000 --t 8 --cache " + dir.path.string());
  CHECK(quartic.exit_code == 0);
  CHECK(quartic.output.find("count 29") != std::string::npos);
}

TEST_CASE("density command renders 12 significant digits") {
  const RunResult p0 = run("density P0 --cutoff 100000");
  CHECK(p0.exit_code == 0);
  CHECK(p0.output.find("value 0.505166") != std::string::npos);
  CHECK(p0.output == run("density P0 --cutoff 100000").output);

  const RunResult serre = run("density serre --D -3 --cutoff 100000");
  CHECK(serre.output.find("value 0.56129") != std::string::npos);

  const RunResult cm4 = run("density cm4 --cutoff 100000");
  CHECK(cm4.output.find("value 0.533") != std::string::npos);

  const RunResult bad_d = run("density serre --D -2 --cutoff 1000");
  CHECK(bad_d.exit_code == 1);
}

TEST_CASE("table command") {
  const RunResult t1 = run("table --id 1");
  CHECK(t1.exit_code == 1);  // known mismatching rows
  CHECK(t1.output.find("excluded (bad reduction)") != std::string::npos);
  CHECK(t1.output.find("937") != std::string::npos);
  CHECK(t1.output.find("archived brun constant .520067922") !=
        std::string::npos);
  CHECK(t1.output.find("matches neither") != std::string::npos);

  // table 3's archived constant does equal its own row reciprocal sum
  const RunResult t3_text = run("table --id 3");
  CHECK(t3_text.output.find("equals this table's own row sum") !=
        std::string::npos);

  const RunResult t3 = run("table --id 3");
  CHECK(t3.exit_code == 0);

  const RunResult csv = run("--format csv table --id 5");
  CHECK(csv.exit_code == 0);
  CHECK(csv.output.rfind("table,p,expected,computed,status\n", 0) == 0);
  CHECK(run("table --id 7").exit_code == 1);
}

TEST_CASE("survey command csv shape") {
  const RunResult csv = run("--format csv survey --from 10000 --to 10100");
  CHECK(csv.exit_code == 0);
  CHECK(csv.output.rfind("p,lo,hi,lambda_sum,threshold,pass\n", 0) == 0);
  CHECK(csv.output.find("10007") != std::string::npos);
}

TEST_CASE("check suites") {
  const RunResult lseries = run("check lseries");
  CHECK(lseries.exit_code == 0);
  CHECK(lseries.output.find("PASS lseries.expansion_0_2") !=
        std::string::npos);
  CHECK(lseries.output.find("PASS lseries.multiplicativity") !=
        std::string::npos);

  const RunResult tables = run("check tables");
  CHECK(tables.exit_code == 1);  // tables 1 and 4 carry known bad rows
  CHECK(tables.output.find("PASS tables.2") != std::string::npos);
  CHECK(tables.output.find("PASS tables.3") != std::string::npos);
  CHECK(tables.output.find("PASS tables.5") != std::string::npos);
  CHECK(tables.output.find("FAIL tables.1") != std::string::npos);

  const RunResult jsonl = run("--format jsonl check lseries");
  CHECK(jsonl.exit_code == 0);
  CHECK(jsonl.output.find("\"pass\":true") != std::string::npos);
}
