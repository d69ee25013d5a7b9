#include <doctest.h>
#include <nlohmann/json.hpp>

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

namespace {

struct Run {
  int code;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string("'") + ARTERM_CLI_PATH + "' " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  char buf[4096];
  while (std::size_t got = std::fread(buf, 1, sizeof buf, pipe)) out.append(buf, got);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string write_temp(const std::string& name, const std::string& content) {
  const auto path = std::filesystem::temp_directory_path() / ("arterm_cli_" + name);
  std::ofstream(path) << content;
  return path.string();
}

const std::string kFibSpec = R"({"order": 2, "coeffs": ["-1", "-1"], "init": ["0", "1"]})";
const std::string kFibTerm = "'fl(3^(n^2+n) / (3^(2*n) -. (3^n + 1))) % 3^n'";

}  // namespace

TEST_CASE("synth") {
  const std::string spec = write_temp("fib.json", kFibSpec);
  Run r = run("synth " + spec);
  CHECK(r.code == 0);
  CHECK(r.out.find("fl(3^(n^2+n) / (3^(2*n) -. (3^n + 1))) % 3^n") != std::string::npos);
  CHECK(r.out.find("b=3 c=0") != std::string::npos);

  r = run("synth '" + kFibSpec + "' --format latex");
  CHECK(r.code == 0);
  CHECK(r.out.find("\\left\\lfloor \\frac{3^{n^2+n}}") != std::string::npos);

  r = run("synth '{\"coeffs\":[\"-2\",\"3\"],\"init\":[\"0\",\"1\"]}' --force-b 32");
  CHECK(r.code == 0);
  CHECK(r.out.find("b=32 c=3") != std::string::npos);

  CHECK(run("synth '{\"coeffs\":[\"-1\",\"1\"],\"init\":[\"0\",\"0\"]}'").code == 2);
  CHECK(run("synth '{\"coeffs\":[\"-1\"'").code == 1);
  CHECK(run("synth /nonexistent/spec.json").code == 1);
  CHECK(run("synth '" + kFibSpec + "' --force-b 2").code == 3);
}

TEST_CASE("synth reads stdin") {
  const std::string spec = write_temp("stdin.json", kFibSpec);
  const std::string cmd = std::string("'") + ARTERM_CLI_PATH + "' synth - < '" + spec + "' > /dev/null";
  CHECK(std::system(cmd.c_str()) == 0);
}

TEST_CASE("synth json round-trips through verify") {
  Run r = run("synth '" + kFibSpec + "' --format json");
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["b"] == "3");
  CHECK(j["certificate"]["holds"] == true);
  const std::string path = write_temp("result.json", r.out);
  r = run("verify --result " + path + " --format json");
  CHECK(r.code == 0);
  CHECK(nlohmann::json::parse(r.out)["ok"] == true);
}

TEST_CASE("eval") {
  CHECK(run("eval " + kFibTerm + " --n 10").out == "55\n");
  CHECK(run("eval '0^0'").out == "1\n");
  CHECK(run("eval 'fl(6^(n^2+n) / (6^(2*n) + 2 -. 3*6^n)) % 6^n' --n 4").out == "15\n");
  CHECK(run("eval 'x * y' --env x=6 --env y=7").out == "42\n");
  CHECK(run("eval '3 - 2'").code == 1);
  CHECK(run("eval 'n'").code == 1);
}

TEST_CASE("verify") {
  CHECK(run("verify --fixture A000045 --to 40").code == 0);
  Run r = run("verify --spec '" + kFibSpec + "' --term 'fl(2^(n^2+n) / (2^(2*n) -. (2^n + 1))) % 2^n' --from 1 "
              "--format json");
  CHECK(r.code == 3);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["first_failure"]["n"] == 1);
  CHECK(j["first_failure"]["expected"] == "1");
  CHECK(j["first_failure"]["got"] == "0");
  CHECK(run("verify --fixture A103469 --from 3 --to 60").code == 0);
  CHECK(run("verify --spec '" + kFibSpec + "' --synth --to 30").code == 0);
  CHECK(run("verify --fixture nope").code == 1);
  CHECK(run("verify --term " + kFibTerm).code == 1);
}

TEST_CASE("gf and expand") {
  CHECK(run("gf '" + kFibSpec + "'").out == "z / (1 - z - z^2)\n");
  CHECK(run("gf '{\"coeffs\":[\"0\",\"-1\",\"-1\"],\"init\":[\"1\",\"0\",\"0\"]}'").out ==
        "(1 - z^2) / (1 - z^2 - z^3)\n");
  CHECK(run("gf '" + kFibSpec + "' --shift 2").out == "(2 - z - 4z^2) / (1 - 3z + z^2 + 2z^3)\n");
  CHECK(run("expand '" + kFibSpec + "' --n 10").out == "0 1 1 2 3 5 8 13 21 34 55\n");
}

TEST_CASE("catalog") {
  Run r = run("catalog list");
  CHECK(r.code == 0);
  CHECK(r.out.find("A001081") != std::string::npos);
  r = run("catalog show A000045");
  CHECK(r.out.find("fl(3^(n^2+n) / (3^(2*n) -. (3^n + 1))) % 3^n") != std::string::npos);
  r = run("catalog export");
  CHECK(nlohmann::json::parse(r.out).size() >= 18);
  CHECK(run("catalog show nope").code == 1);
  CHECK(run("catalog").code == 1);
  CHECK(run("").code == 1);
  CHECK(run("--help").code == 0);
}
