#include "doctest.h"

#include <sys/wait.h>

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "zdgame/io.hpp"

namespace fs = std::filesystem;

namespace {

struct Run {
  int code = -1;
  std::string out;
};

const fs::path& workdir() {
  static const fs::path dir = [] {
    auto d = fs::temp_directory_path() / "zdgame_test_cli";
    fs::remove_all(d);
    fs::create_directories(d);
    std::ofstream(d / "chicken.json") << R"({"n":2,"m":2,"A":[[1,0.5],[1.5,0]]})";
    std::ofstream(d / "chicken15.json") << R"({"n":2,"m":2,"A":[[1,0],[1.5,0]]})";
    std::ofstream(d / "pd.json") << R"({"n":2,"m":2,"A":[[3,0],[5,1]]})";
    std::ofstream(d / "keep_alpha.json")
        << R"({"player":"alpha","n":2,"m":2,"order":"alpha-major",
              "rows":[[1,0],[1,0],[0,1],[0,1]]})";
    std::ofstream(d / "keep_beta.json")
        << R"({"player":"beta","n":2,"m":2,"order":"alpha-major",
              "rows":[[1,0],[0,1],[1,0],[0,1]]})";
    std::ofstream(d / "bad.json") << "{\"n\": 2, \"m\": 2,\n \"A\": [[1, 0.5.0]]}";
    return d;
  }();
  return dir;
}

Run cli(const std::string& args) {
  const std::string cmd = "cd '" + workdir().string() + "' && '" +
                          std::string(ZDGAME_CLI_PATH) + "' " + args +
                          " 2>&1";
  Run run;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  char buf[4096];
  std::size_t got = 0;
  while ((got = fread(buf, 1, sizeof(buf), pipe)) > 0) run.out.append(buf, got);
  const int status = pclose(pipe);
  run.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return run;
}

std::string slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

bool contains(const std::string& text, const std::string& needle) {
  return text.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("analyze") {
  REQUIRE(cli("random-strategy chicken.json --player alpha --kind uniform --out pu.json").code == 0);
  REQUIRE(cli("random-strategy chicken.json --player beta --kind uniform --out qu.json").code == 0);
  const auto r = cli("analyze chicken.json pu.json qu.json --csv analyze.csv");
  CHECK(r.code == 0);
  CHECK(contains(r.out, "stationary v: (0.25, 0.25, 0.25, 0.25)"));
  CHECK(contains(r.out, "pi_alpha: 0.75"));
  CHECK(contains(r.out, "pi_beta: 0.75"));
  CHECK(slurp(workdir() / "analyze.csv") ==
        "n,m,pi_alpha,pi_beta,feasibility,d_one,v1,v2,v3,v4\n"
        "2,2,0.75,0.75,true,-1,0.25,0.25,0.25,0.25\n");

  const auto stuck = cli("analyze chicken.json keep_alpha.json keep_beta.json");
  CHECK(stuck.code == 2);
  CHECK(contains(stuck.out, "non-unique stationary distribution"));
}

TEST_CASE("zd") {
  const auto r = cli("zd chicken.json 0.1 -0.2 0 --out zd.json");
  CHECK(r.code == 0);
  CHECK(contains(r.out, "first components: (0.9, 0.75, 0.05, 0)"));
  const auto s = zdgame::io::load_strategy(workdir() / "zd.json");
  CHECK(s.rows()(0, 0) == 0.9);

  const auto bad = cli("zd chicken.json 0 0 0.5");
  CHECK(bad.code == 1);
  CHECK(contains(bad.out, "state 0"));
  CHECK(contains(bad.out, "state 1"));

  const auto uniform = cli("zd chicken.json 0.1 -0.2 0 --fill uniform");
  const auto last = cli("zd chicken.json 0.1 -0.2 0 --fill all-to-last");
  CHECK(uniform.code == 0);
  CHECK(last.code == 0);
  CHECK(contains(last.out, "max residual over 100 opponents"));

  CHECK(cli("zd chicken.json 0 0 0").code == 3);
  CHECK(cli("zd chicken.json 1 2 3 --player gamma").code == 3);
}

TEST_CASE("extort") {
  CHECK(cli("extort chicken.json --bounds").out == "λ ∈ [1, 3]\n");
  CHECK(cli("extort chicken15.json --bounds").out == "λ ∈ [1, ∞)\n");
  const auto tmax = cli("extort chicken.json --lambda 2 --theta-max");
  CHECK(tmax.code == 0);
  CHECK(tmax.out == "0.4\n");

  const auto r = cli("extort chicken.json --lambda 2 --theta 0.1 --out ext.json");
  CHECK(r.code == 0);
  CHECK(contains(r.out, "first components: (0.9, 0.75, 0.05, 0)"));
  CHECK(cli("extort chicken.json --lambda 2 --theta 0.41").code == 1);
  CHECK(cli("extort chicken.json --lambda 4 --theta 0.1").code == 1);
  CHECK(cli("extort pd.json --lambda 2").code == 3);
}

TEST_CASE("pin") {
  const auto r = cli("pin pd.json --target 2");
  CHECK(r.code == 0);
  CHECK(contains(r.out, "first components: (0.75, 0.25, 0.5, 0.25)"));
  const auto pos = r.out.find("max deviation: ");
  REQUIRE(pos != std::string::npos);
  CHECK(std::stod(r.out.substr(pos + 15)) < 1e-9);

  CHECK(cli("pin pd.json --target 10").code == 1);

  const auto csv = cli("pin pd.json --target 2 --report csv --opponents 5");
  CHECK(csv.code == 0);
  CHECK(csv.out.rfind("opponent,pi_alpha,pi_beta,deviation\n", 0) == 0);
  CHECK(std::count(csv.out.begin(), csv.out.end(), '\n') == 6);
}

TEST_CASE("simulate") {
  REQUIRE(cli("extort chicken.json --lambda 2 --theta 0.1 --out ext.json").code == 0);
  REQUIRE(cli("random-strategy chicken.json --seed 11 --out opp.json").code == 0);
  const auto r = cli(
      "simulate chicken.json ext.json opp.json --rounds 1000000 --seed 3 "
      "--lambda 2 --csv sim1.csv");
  CHECK(r.code == 0);
  const auto pos = r.out.find("lambda_hat: ");
  REQUIRE(pos != std::string::npos);
  const double lambda_hat = std::stod(r.out.substr(pos + 12));
  CHECK(lambda_hat >= 1.9);
  CHECK(lambda_hat <= 2.1);

  REQUIRE(cli("simulate chicken.json ext.json opp.json --rounds 1000000 "
                 "--seed 3 --lambda 2 --csv sim2.csv").code == 0);
  const auto bytes = slurp(workdir() / "sim1.csv");
  CHECK(bytes == slurp(workdir() / "sim2.csv"));
  CHECK(bytes.rfind("opponent,seed,rounds,burn_in,", 0) == 0);

  const auto zero = cli("simulate chicken.json ext.json opp.json --rounds 0");
  CHECK(zero.code == 3);
  CHECK(contains(zero.out, "rounds"));
}

TEST_CASE("scan") {
  const auto r = cli("scan chicken.json --lambda-grid 1,2,3,4 --theta-grid 0.1 --out scan.csv");
  CHECK(r.code == 0);
  std::istringstream rows(slurp(workdir() / "scan.csv"));
  std::string line;
  std::getline(rows, line);
  CHECK(line == "lambda,theta,factor_ok,feasible,theta_max,max_residual");
  std::vector<std::string> flags;
  while (std::getline(rows, line)) {
    std::istringstream cells(line);
    std::string cell;
    for (int k = 0; k < 4; ++k) std::getline(cells, cell, ',');
    flags.push_back(cell);
  }
  CHECK(flags == std::vector<std::string>{"true", "true", "true", "false"});

  const auto straddle =
      cli("scan chicken.json --lambda-grid 2 --theta-grid 0.399,0.4,0.401 --opponents 3");
  CHECK(straddle.code == 0);
  CHECK(contains(straddle.out, "2,0.4,true,true,0.4,"));
  CHECK(contains(straddle.out, "2,0.401,true,false,0.4,"));

  CHECK(cli("scan chicken.json --lambda-grid '' --theta-grid 0.1").code == 3);
  CHECK(cli("scan chicken.json --lambda-grid 2 --theta-grid 1:0:0.1").code == 3);
}

TEST_CASE("input errors") {
  CHECK(cli("analyze missing.json pu.json qu.json").code == 3);
  const auto bad = cli("extort bad.json --bounds");
  CHECK(bad.code == 3);
  CHECK(contains(bad.out, "line 2"));
  CHECK(cli("").code == 3);
  CHECK(cli("--help").code == 0);
}
