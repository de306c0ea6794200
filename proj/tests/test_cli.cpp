#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <unistd.h>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

namespace {

std::string temp_path(const std::string& suffix) {
  static int counter = 0;
  return (std::filesystem::temp_directory_path() /
          ("gin3_cli_test_" + std::to_string(::getpid()) + "_" + std::to_string(counter++) +
           suffix))
      .string();
}

struct RunResult {
  int exit_code = -1;
  std::string out;
};

// Runs the installed CLI binary and captures stdout.
RunResult run_cli(const std::string& args, const std::string& env_prefix = "") {
  const std::string out_path = temp_path(".out");
  const std::string cmd = (env_prefix.empty() ? "" : env_prefix + " ") +
                          std::string(GIN3_CLI_PATH) + " " + args + " > " + out_path +
                          " 2>/dev/null";
  const int status = std::system(cmd.c_str());
  RunResult result;
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  std::ifstream in(out_path);
  std::stringstream ss;
  ss << in.rdbuf();
  result.out = ss.str();
  std::remove(out_path.c_str());
  return result;
}

}  // namespace

TEST_CASE("predict prints the expected generators and exits zero") {
  const RunResult r = run_cli("predict --degrees 3,3,9");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("mu=13") != std::string::npos);
  CHECK(r.out.find("x3^13") != std::string::npos);
}

TEST_CASE("predict sorts unsorted degrees to the same output") {
  const RunResult a = run_cli("predict --degrees 3,3,9 --format json");
  const RunResult b = run_cli("predict --degrees 9,3,3 --format json");
  CHECK(a.exit_code == 0);
  CHECK(b.exit_code == 0);
  CHECK(a.out == b.out);
}

TEST_CASE("hypothesis violations exit with the usage code") {
  CHECK(run_cli("predict --degrees 1,2,3").exit_code == 2);
  CHECK(run_cli("predict --degrees 3,3").exit_code == 2);
  CHECK(run_cli("predict").exit_code == 2);
  CHECK(run_cli("definitely-not-a-command").exit_code == 2);
}

TEST_CASE("verify passes on a sound triple and fails on the stable-only ideal") {
  CHECK(run_cli("verify --degrees 4,5,6").exit_code == 0);

  // x1^2, x1*x2, x2^3, x1*x3^2: strongly stable but not almost revlex
  const std::string path = temp_path(".json");
  {
    std::ofstream f(path);
    f << R"({"generators": [[2,0,0],[1,1,0],[0,3,0],[1,0,2]]})";
  }
  const RunResult r = run_cli("verify --ideal-file " + path);
  std::remove(path.c_str());
  CHECK(r.exit_code == 1);
  CHECK(r.out.find("pass  strongly-stable") != std::string::npos);
  CHECK(r.out.find("FAIL  almost-revlex") != std::string::npos);
}

TEST_CASE("predict output feeds verify --ideal-file") {
  const std::string path = temp_path(".json");
  const RunResult p = run_cli("predict --degrees 2,2,3 --format json");
  REQUIRE(p.exit_code == 0);
  {
    std::ofstream f(path);
    f << p.out;
  }
  const RunResult v = run_cli("verify --degrees 2,2,3 --ideal-file " + path);
  std::remove(path.c_str());
  CHECK(v.exit_code == 0);
}

TEST_CASE("json output is byte-identical across invocations") {
  const RunResult a = run_cli("oracle --degrees 2,2,2 --seeds 1,2 --format json");
  const RunResult b = run_cli("oracle --degrees 2,2,2 --seeds 1,2 --format json");
  CHECK(a.exit_code == 0);
  CHECK(a.out == b.out);
}

TEST_CASE("oracle exit codes") {
  CHECK(run_cli("oracle --degrees 2,2,3 --seeds 1..3").exit_code == 0);
  CHECK(run_cli("oracle --degrees 2,2,2 --no-coordinate-change --monomial --seeds 1").exit_code ==
        1);
  // pinned degenerate draw over F_3 exhausts a zero retry budget
  CHECK(run_cli("oracle --degrees 2,2,2 --prime 3 --retry-limit 0 --seeds 3").exit_code == 3);
}

TEST_CASE("small sweep summarizes and exits zero") {
  const RunResult r = run_cli("sweep --max 3");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("4 triples") != std::string::npos);
  CHECK(r.out.find("structural: 4/4 passed") != std::string::npos);
}

TEST_CASE("closed-form comparison annotates from the corrections catalogue") {
  const RunResult r = run_cli("predict --degrees 5,5,5 --compare-closed-form --format json");
  REQUIRE(r.exit_code == 0);
  nlohmann::json j = nlohmann::json::parse(r.out);
  CHECK(!j.at("closed_form").at("raw_matches").get<bool>());  // odd-d center exponent
  CHECK(j.at("closed_form").at("corrected_matches").get<bool>());
  CHECK(!j.at("closed_form").contains("corrections_catalogue"));

  // GIN3_FIXTURES points the tool at the committed catalogue
  const RunResult annotated =
      run_cli("predict --degrees 5,5,5 --compare-closed-form --format json",
              std::string("GIN3_FIXTURES=") + GIN3_FIXTURE_DIR + "/closed_form_corrections.json");
  REQUIRE(annotated.exit_code == 0);
  j = nlohmann::json::parse(annotated.out);
  CHECK(j.at("closed_form").at("corrections_catalogue").size() == 4);
}

TEST_CASE("hilbert table output") {
  const RunResult r = run_cli("hilbert --degrees 2,2,3 --format json");
  CHECK(r.exit_code == 0);
  const nlohmann::json j = nlohmann::json::parse(r.out);
  CHECK(j.at("H") == nlohmann::json::parse("[1,3,4,3,1]"));
  CHECK(j.at("degrees") == nlohmann::json::parse("[2,2,3]"));
}
