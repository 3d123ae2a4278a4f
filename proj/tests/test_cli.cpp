#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "hyperising/cli.hpp"
#include "hyperising/error.hpp"

using nlohmann::json;
namespace fs = std::filesystem;
namespace cli = hyperising::cli;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string write_input(const std::string& name, const std::string& text) {
  const auto dir = fs::temp_directory_path() / "hyperising_cli_test";
  fs::create_directories(dir);
  const auto path = dir / name;
  std::ofstream(path) << text;
  return path.string();
}

const std::string kK2 = R"({"n": 2, "edges": [{"v": [0, 1], "beta": 0.5}]})";
const std::string kPath = R"({"n": 3, "edges": [{"v": [0, 1], "beta": 0.5}, {"v": [1, 2], "beta": 0.5}]})";
const std::string kEdge3 = R"({"n": 3, "edges": [{"v": [0, 1, 2], "beta": -0.3333333333333333}]})";
const std::string kEdge3In = R"({"n": 3, "edges": [{"v": [0, 1, 2], "beta": 0.4}]})";

json strip_timings(json j) {
  j.erase("timings_ms");
  return j;
}

}  // namespace

TEST_CASE("lambda parsing") {
  CHECK(cli::parse_lambda("0.3") == std::complex<double>(0.3, 0.0));
  CHECK(cli::parse_lambda("0.25,-1e-1") == std::complex<double>(0.25, -0.1));
  CHECK(cli::parse_lambda(" 1.5 , 2 ") == std::complex<double>(1.5, 2.0));
  for (const char* bad : {"", "a", "1,", ",2", "1,2,3", "1x", "nan", "inf,0"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(cli::parse_lambda(bad), hyperising::InvalidInput);
  }
}

TEST_CASE("approx on K2") {
  const auto path = write_input("k2.json", kK2);
  const auto r = run({"approx", path, "--lambda", "0.3", "--epsilon", "0.01"});
  REQUIRE(r.code == cli::kExitOk);
  const auto j = json::parse(r.out);
  CHECK(j["command"] == "approx");
  CHECK(j["input_digest"].get<std::string>().size() == 64);
  CHECK(j["guarantee"] == true);
  const double re = j["result"]["z_hat"][0], im = j["result"]["z_hat"][1];
  CHECK(std::abs(std::complex<double>(re, im) - 1.39) <= 0.0139);
  CHECK(j["result"]["m"] == 6);
  CHECK(j.contains("timings_ms"));
  CHECK(j["parameters"]["epsilon"] == 0.01);
}

TEST_CASE("exit codes") {
  const auto path = write_input("k2.json", kK2);
  auto r = run({"approx", path, "--lambda", "1,0", "--epsilon", "0.1"});
  CHECK(r.code == cli::kExitRefusal);
  CHECK(r.out.empty());
  CHECK(r.err.find("unit circle") != std::string::npos);

  r = run({"approx", "/nonexistent/file.json", "--lambda", "0.3"});
  CHECK(r.code == cli::kExitInput);
  CHECK(r.out.empty());

  const auto broken = write_input("broken.json", "{\"n\": 2, \"edges\": [");
  r = run({"zeros", broken});
  CHECK(r.code == cli::kExitInput);
  CHECK(r.out.empty());

  r = run({"approx", path, "--lambda", "0.3", "--epsilon", "1.5"});
  CHECK(r.code == cli::kExitInput);
  r = run({"bogus"});
  CHECK(r.code == cli::kExitInput);
  r = run({"tight-example", "--k", "4", "--beta", "0.3"});
  CHECK(r.code == cli::kExitRefusal);
  CHECK(r.out.empty());
  r = run({"--m-cap", "1", "approx", path, "--lambda", "0.9", "--epsilon", "0.1"});
  CHECK(r.code == cli::kExitRefusal);
  CHECK(r.err.find("m = ") != std::string::npos);
}

TEST_CASE("zeros of the single 3-edge at beta = -1/3") {
  const auto path = write_input("edge3.json", kEdge3);
  const auto r = run({"zeros", path});
  REQUIRE(r.code == cli::kExitOk);
  const auto j = json::parse(r.out);
  CHECK(j["result"]["in_range"] == true);
  CHECK(j["result"]["pass"] == true);
  CHECK(j["result"]["max_circle_deviation"].get<double>() <= 1e-6);
  CHECK(j["result"]["roots"].size() == 3);
}

TEST_CASE("check-range all pass at beta = 0.4, k = 3") {
  const auto path = write_input("edge3in.json", kEdge3In);
  const auto r = run({"check-range", path});
  REQUIRE(r.code == cli::kExitOk);
  const auto j = json::parse(r.out);
  CHECK(j["guarantee"] == true);
  CHECK(j["result"]["all_pass"] == true);
}

TEST_CASE("enumerate the path to t = 2") {
  const auto path = write_input("path.json", kPath);
  const auto r = run({"enumerate", path, "--t", "2", "--sets"});
  REQUIRE(r.code == cli::kExitOk);
  const auto j = json::parse(r.out);
  CHECK(j["result"]["counts"] == json{{"1", 3}, {"2", 2}});
  CHECK(j["result"]["sets"]["2"] == json::parse("[[0,1],[1,2]]"));
}

TEST_CASE("coeffs, exact and tight-example") {
  const auto path = write_input("k2.json", kK2);
  auto r = run({"coeffs", path, "--m", "4"});
  REQUIRE(r.code == cli::kExitOk);
  auto j = json::parse(r.out);
  CHECK(j["result"]["p"].size() == 4);
  CHECK(j["result"]["e"].size() == 4);
  CHECK(j["result"]["e"][0][0].get<double>() == doctest::Approx(-1.0));
  CHECK(j["result"]["p"][1][0].get<double>() == doctest::Approx(-1.0));

  r = run({"exact", path, "--lambda", "0.3"});
  REQUIRE(r.code == cli::kExitOk);
  j = json::parse(r.out);
  CHECK(j["result"]["z"][0].get<double>() == doctest::Approx(1.39));

  r = run({"tight-example", "--k", "3", "--beta", "-0.4"});
  REQUIRE(r.code == cli::kExitOk);
  j = json::parse(r.out);
  CHECK(j["result"]["sign_change"]["p_at_1"].get<double>() == doctest::Approx(-0.4));
}

TEST_CASE("reports are identical across thread counts") {
  const auto path = write_input("path.json", kPath);
  const auto a = run({"--threads", "1", "approx", path, "--lambda", "0.5,0.2", "--epsilon", "0.01"});
  const auto b = run({"--threads", "3", "approx", path, "--lambda", "0.5,0.2", "--epsilon", "0.01"});
  REQUIRE(a.code == 0);
  REQUIRE(b.code == 0);
  auto ja = strip_timings(json::parse(a.out)), jb = strip_timings(json::parse(b.out));
  CHECK(ja["result"] == jb["result"]);
  ja["parameters"].erase("threads");
  jb["parameters"].erase("threads");
  CHECK(ja == jb);
  const auto c = run({"--threads", "1", "approx", path, "--lambda", "0.5,0.2", "--epsilon", "0.01"});
  CHECK(strip_timings(json::parse(c.out)).dump() == strip_timings(json::parse(a.out)).dump());
}

TEST_CASE("sweep is reproducible from its seed") {
  const auto a = run({"--seed", "5", "sweep", "--k", "3", "--beta", "0.4", "--instances", "4", "--n-max", "8"});
  const auto b = run({"--seed", "5", "sweep", "--k", "3", "--beta", "0.4", "--instances", "4", "--n-max", "8"});
  REQUIRE(a.code == 0);
  CHECK(json::parse(a.out)["result"] == json::parse(b.out)["result"]);
}

TEST_CASE("environment variables configure, flags win") {
  const auto path = write_input("k2.json", kK2);
  ::setenv("HYPERISING_M_CAP", "1", 1);
  auto r = run({"approx", path, "--lambda", "0.3", "--epsilon", "0.1"});
  CHECK(r.code == cli::kExitRefusal);
  r = run({"--m-cap", "10", "approx", path, "--lambda", "0.3", "--epsilon", "0.1"});
  CHECK(r.code == cli::kExitOk);
  ::unsetenv("HYPERISING_M_CAP");
}

TEST_CASE("installed binary honours the exit-code contract") {
  const auto path = write_input("k2.json", kK2);
  const std::string tool = HYPERISING_TOOL;
  auto status = [&](const std::string& args) {
    const int raw = std::system((tool + " " + args + " >/dev/null 2>&1").c_str());
    return WEXITSTATUS(raw);
  };
  CHECK(status("approx " + path + " --lambda 0.3 --epsilon 0.01") == 0);
  CHECK(status("approx " + path + " --lambda 1,0") == 2);
  CHECK(status("approx /nonexistent.json --lambda 0.3") == 1);
}
