#include <doctest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <string>

#include <json.hpp>

namespace {

struct Result {
  int status;
  std::string out;
};

Result run(const std::string& args, const std::string& env = "") {
  const std::string cmd = env + " " + FODLAB_BIN + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 4096> buf{};
  while (std::fgets(buf.data(), buf.size(), pipe)) out += buf.data();
  const int raw = pclose(pipe);
  return {WIFEXITED(raw) ? WEXITSTATUS(raw) : -1, out};
}

nlohmann::json without_timing(nlohmann::json j) {
  for (auto& r : j["reports"]) r.erase("wall_time_ms");
  return j;
}

}  // namespace

TEST_CASE("fwd and rev") {
  const Result f = run("fwd --map '[x0^2] : 1 -> 1'");
  CHECK(f.status == 0);
  CHECK(f.out.find("fib  [2*x0*x1] : 2 -> 1") != std::string::npos);
  const Result r = run("rev --map '[x0*x1] : 2 -> 1'");
  CHECK(r.status == 0);
  CHECK(r.out.find("[x1*x2; x0*x2] : 3 -> 2") != std::string::npos);
}

TEST_CASE("rdc2cdc") {
  const Result r = run("rdc2cdc --map '[x0*x1; x0^3] : 2 -> 2' --verify");
  CHECK(r.status == 0);
  CHECK(r.out.find("rdc2cdc ") != std::string::npos);
  CHECK(r.out.find("direct  ") != std::string::npos);
  CHECK(r.out.find("\nequal\n") != std::string::npos);
}

TEST_CASE("linearity") {
  CHECK(run("linearity --map '[3*x0] : 1 -> 1'").out == "linear\n");
  const Result sq = run("linearity --map '[x0^2] : 1 -> 1'");
  CHECK(sq.status == 1);
  CHECK(sq.out.find("not linear") != std::string::npos);
  CHECK(sq.out.find("[x1^2] : 2 -> 1") != std::string::npos);
  CHECK(run("linearity --map '[2*x0] : 1 -> 1' --triv-a '[2]' --triv-b '[2]'").status == 0);
  CHECK(run("linearity --map '[x0] : 1 -> 1' --triv-a '[1, 0; 0, 1]'").status == 2);
}

TEST_CASE("parse errors carry offsets") {
  const Result r = run("fwd --map '[x0 + ] : 1 -> 1'");
  CHECK(r.status == 2);
  CHECK(r.out.find("at byte") != std::string::npos);
}

TEST_CASE("check") {
  const Result ok = run("check --suite cdc --trials 10 --format json");
  CHECK(ok.status == 0);
  const auto j = nlohmann::json::parse(ok.out);
  CHECK(j["passed"] == true);
  CHECK(j["reports"].size() == 1);
  CHECK(j["reports"][0]["laws"].size() == 5);
  CHECK(run("check --suite bogus").status != 0);
  const Result text = run("check --suite oracle --trials 4 --format text");
  CHECK(text.status == 0);
  CHECK(text.out.find("suite oracle: passed") != std::string::npos);
}

TEST_CASE("FODLAB_SEED overrides --seed") {
  const auto a = without_timing(nlohmann::json::parse(run("check --suite rdc --trials 3 --seed 5").out));
  const auto b = without_timing(nlohmann::json::parse(run("check --suite rdc --trials 3 --seed 1", "FODLAB_SEED=5").out));
  CHECK(a == b);
}
