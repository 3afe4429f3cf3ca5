#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#include "doctest.h"
#include "json.hpp"

namespace {

struct RunResult {
  int exit_code = -1;
  std::string output;  // stdout + stderr
};

RunResult run_cli(const std::string& args) {
  const std::string cmd = std::string(PARITY_FORGE_CLI_PATH) + " " + args + " 2>&1";
  std::array<char, 4096> buf{};
  RunResult r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  while (fgets(buf.data(), buf.size(), pipe)) r.output += buf.data();
  int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string temp_path(const std::string& name) {
  return std::string("/tmp/parity-forge-test-") + name;
}

}  // namespace

TEST_CASE("decompose") {
  RunResult r = run_cli("decompose 40");
  CHECK(r.exit_code == 0);
  CHECK(r.output == "40 = 2^3 * 5\n");
}

TEST_CASE("sqrt 2 --json: irrational by parity degree with embedded trace") {
  RunResult r = run_cli("sqrt 2 --json");
  CHECK(r.exit_code == 0);
  auto j = nlohmann::json::parse(r.output);
  CHECK(j["schema"] == "parity-forge/envelope/1");
  CHECK(j["result"]["kind"] == "irrational");
  CHECK(j["result"]["strategy"] == "PARITY_DEGREE");
  CHECK(j["trace"]["schema"] == "parity-forge/trace/1");
}

TEST_CASE("JSON output is byte-stable") {
  CHECK(run_cli("sqrt 12 --json").output == run_cli("sqrt 12 --json").output);
  CHECK(run_cli("perfect --max-k 13 --json").output ==
        run_cli("perfect --max-k 13 --json").output);
}

TEST_CASE("exit codes") {
  CHECK(run_cli("sqrt 4").exit_code == 0);
  CHECK(run_cli("sqrt 45 --strategies RESIDUE_SCAN").exit_code == 3);
  CHECK(run_cli("sqrt abc").exit_code == 2);
  CHECK(run_cli("decompose 0").exit_code == 2);
  CHECK(run_cli("sqrt 2 --strategies NO_SUCH_STRATEGY").exit_code == 64);
  CHECK(run_cli("frobnicate 2").exit_code == 64);
  CHECK(run_cli("--help").exit_code == 0);
}

TEST_CASE("prove then check exits 0, for every variant") {
  for (const char* variant : {"parity", "standard", "alexander", "viii14"}) {
    const std::string file = temp_path(std::string("prove-") + variant + ".json");
    RunResult prove = run_cli(std::string("prove sqrt2 --variant ") + variant +
                              " --trace " + file);
    CHECK(prove.exit_code == 0);
    RunResult check = run_cli("check " + file);
    CHECK(check.exit_code == 0);
    CHECK(check.output == "Accepted\n");
    std::remove(file.c_str());
  }
}

TEST_CASE("check rejects a tampered trace with exit 4") {
  const std::string file = temp_path("tampered.json");
  RunResult prove = run_cli("prove sqrt2 --variant standard --trace " + file);
  REQUIRE(prove.exit_code == 0);
  std::ifstream in(file);
  std::string text((std::istreambuf_iterator<char>(in)),
                   std::istreambuf_iterator<char>());
  auto j = nlohmann::json::parse(text);
  j["steps"][2]["rule"] = "VII27_SQUARES";
  std::ofstream out(file);
  out << j.dump();
  out.close();
  RunResult check = run_cli("check " + file);
  CHECK(check.exit_code == 4);
  std::remove(file.c_str());
}

TEST_CASE("check rejects junk with exit 4") {
  const std::string file = temp_path("junk.json");
  std::ofstream(file) << "{\"schema\": \"nope\"}";
  CHECK(run_cli("check " + file).exit_code == 4);
  std::remove(file.c_str());
}

TEST_CASE("egymul worksheet ends with the total") {
  RunResult r = run_cli("egymul 15 13");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("total: 195") != std::string::npos);
}

TEST_CASE("table, bijection and failure-demo") {
  RunResult t = run_cli("table --rows 2 --cols 3 --json");
  CHECK(t.exit_code == 0);
  auto tj = nlohmann::json::parse(t.output);
  CHECK(tj["result"]["cells"][0] == nlohmann::json({"2", "6", "10"}));
  CHECK(tj["result"]["cells"][1] == nlohmann::json({"4", "12", "20"}));

  CHECK(run_cli("bijection encode 2 1").output == "12\n");
  CHECK(run_cli("bijection decode 12").output == "(2, 1)\n");

  RunResult f = run_cli("failure-demo 4 --json");
  CHECK(f.exit_code == 0);
  auto fj = nlohmann::json::parse(f.output);
  CHECK(fj["result"]["found"] == true);
  CHECK(fj["result"]["n"] == "4");
}

TEST_CASE("big numbers pass through unharmed") {
  const std::string big = "340282366920938463463374607431768211456";  // 2^128
  RunResult r = run_cli("decompose " + big);
  CHECK(r.exit_code == 0);
  CHECK(r.output == big + " = 2^128 * 1\n");
}

TEST_CASE("residue cutoff honours the environment variable") {
  // Kernel 3 is above a cutoff of 1, so the scan is skipped and the
  // oracle decides instead.
  RunResult r = run_cli(
      "sqrt 12 --json --strategies ODD_KERNEL_REDUCTION,RESIDUE_SCAN,ORACLE_FALLBACK");
  auto j = nlohmann::json::parse(r.output);
  CHECK(j["result"]["strategy"] == "RESIDUE_SCAN");

  setenv("PARITY_FORGE_RESIDUE_CUTOFF", "1", 1);
  RunResult low = run_cli(
      "sqrt 12 --json --strategies ODD_KERNEL_REDUCTION,RESIDUE_SCAN,ORACLE_FALLBACK");
  unsetenv("PARITY_FORGE_RESIDUE_CUTOFF");
  auto lj = nlohmann::json::parse(low.output);
  CHECK(lj["result"]["strategy"] == "ORACLE_FALLBACK");
  CHECK(lj["result"]["kind"] == "irrational");
}
