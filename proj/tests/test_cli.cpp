#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>
#include <sys/wait.h>

#include <json.hpp>

namespace {

struct Result {
  int status;
  std::string out;
};

Result run(const std::string& args) {
  const std::string cmd = std::string(FREIMAN_CLI) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe);
  std::string out;
  char buf[4096];
  for (std::size_t n; (n = fread(buf, 1, sizeof buf, pipe)) > 0;) out.append(buf, n);
  const int raw = pclose(pipe);
  return {WIFEXITED(raw) ? WEXITSTATUS(raw) : -1, out};
}

std::string write_temp(const std::string& name, const std::string& text) {
  const auto dir = std::filesystem::temp_directory_path() / "freiman-cli-test";
  std::filesystem::create_directories(dir);
  const auto path = dir / name;
  std::ofstream(path) << text;
  return path.string();
}

}  // namespace

TEST_CASE("graph classify") {
  const auto path = write_temp("c4.json", R"({"n":4,"edges":[[1,2],[2,3],[3,4],[4,1]]})");
  const auto r = run("--no-timing graph classify " + path);
  CHECK(r.status == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["freiman"] == true);
  CHECK(j["numeric"]["mu_series"] == nlohmann::json({1, 4, 9}));
  CHECK(j["numeric"]["h"] == nlohmann::json({1, 1, 0}));
  CHECK_FALSE(j.contains("timing"));
  CHECK(nlohmann::json::parse(run("graph classify " + path).out).contains("timing"));
  CHECK(run("--format table graph classify " + path).out.find("freiman: true") != std::string::npos);
}

TEST_CASE("matroid classify") {
  const auto path = write_temp("k4.txt", "p 4 6\n1 2\n1 3\n1 4\n2 3\n2 4\n3 4\n");
  const auto r = run("--no-timing matroid classify " + path);
  CHECK(r.status == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["freiman"] == false);
  CHECK(j["analytic_spread"]["formula"] == 6);
  CHECK(j["matroid"]["basis_count"] == 16);
  CHECK(j["regularity"].is_null());
  CHECK(nlohmann::json::parse(run("--no-timing matroid classify --hvector " + path).out)["regularity"] == 5);
}

TEST_CASE("ideal analyze") {
  const auto path = write_temp("i.txt", "x1*x2, x2*x3, x3*x4, x1*x4\n");
  const auto r = run("--no-timing ideal analyze --max-power 3 " + path);
  CHECK(r.status == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["series"]["mu"] == nlohmann::json({1, 4, 9, 16}));
  CHECK(j["freiman"] == true);
}

TEST_CASE("exit codes") {
  CHECK(run("ideal analyze " + write_temp("bad.txt", "x1, x1*x2\n")).status == 1);
  const auto parse = run("ideal analyze " + write_temp("bad.txt", "x1, x1*x2\n"));
  CHECK(parse.out.empty());
  CHECK(run("ideal analyze " + write_temp("nq.txt", "x1^2, x1*x2, x2^3\n")).status == 2);
  CHECK(run("graph classify " + write_temp("empty.txt", "p 3 0\n")).status == 2);
  CHECK(run("--cap 5 graph classify " + write_temp("k5.txt", "p 5 10\n1 2\n1 3\n1 4\n1 5\n2 3\n2 4\n2 5\n3 4\n3 5\n4 5\n")).status == 3);
  CHECK(run("graph classify /nonexistent/file").status == 1);
  CHECK(run("graph frobnicate").status == 1);
  CHECK(run("--help").status == 0);
}

TEST_CASE("resource cap from the environment") {
  const auto path = write_temp("k5b.txt", "p 5 10\n1 2\n1 3\n1 4\n1 5\n2 3\n2 4\n2 5\n3 4\n3 5\n4 5\n");
  const std::string cmd = "FREIMAN_CAP=5 " + std::string(FREIMAN_CLI) + " graph classify " + path + " >/dev/null 2>&1";
  const int raw = std::system(cmd.c_str());
  CHECK(WEXITSTATUS(raw) == 3);
  CHECK(run("--cap 0 graph classify " + path).status == 2);
}

TEST_CASE("verify is deterministic") {
  const std::string args = "--no-timing verify --mode random --count 40 --seed 42 --max-vertices 7 --dump-dir " +
                           (std::filesystem::temp_directory_path() / "freiman-cli-test" / "ce").string();
  const auto a = run(args), b = run(args);
  CHECK(a.status == 0);
  CHECK(a.out == b.out);
  CHECK(nlohmann::json::parse(a.out)["all_passed"] == true);
}
