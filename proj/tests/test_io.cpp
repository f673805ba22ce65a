#include "doctest.h"

#include <clocale>
#include <filesystem>
#include <fstream>
#include <limits>
#include <random>
#include <sstream>

#include "support/oracles.hpp"
#include "zdgame/error.hpp"
#include "zdgame/io.hpp"

using namespace zdgame;

namespace {

std::filesystem::path scratch(const std::string& name) {
  auto dir = std::filesystem::temp_directory_path() / "zdgame_test_io";
  std::filesystem::create_directories(dir);
  return dir / name;
}

double random_double(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-1e3, 1e3);
  std::uniform_int_distribution<int> e(-300, 300);
  switch (rng() % 4) {
    case 0: return u(rng);
    case 1: return std::ldexp(u(rng), e(rng) / 10);
    case 2: return static_cast<double>(static_cast<int>(u(rng)));
    default: return u(rng) * 1e-12;
  }
}

}  // namespace

TEST_CASE("load the chicken document") {
  const auto game = io::parse_game(R"({"n":2,"m":2,"A":[[1,0.5],[1.5,0]]})");
  const auto chicken = chicken_family(0.5);
  CHECK(game.alpha_payoffs() == chicken.alpha_payoffs());
  CHECK(game.beta_payoffs() == chicken.beta_payoffs());
  CHECK(game.is_symmetric());

  const auto path = scratch("chicken.json");
  {
    std::ofstream out(path);
    out << "{\n  \"n\": 2, \"m\": 2,\n  \"A\": [[1, 0.5], [1.5, 0]]\n}\n";
  }
  CHECK(io::load_game(path).alpha_payoffs() == chicken.alpha_payoffs());
}

TEST_CASE("explicit B is read in owner order") {
  const auto game =
      io::parse_game(R"({"n":2,"m":3,"A":[[1,2,3],[4,5,6]],"B":[[7,8],[9,10],[11,12]]})");
  CHECK(game.dims() == GameDims{2, 3});
  CHECK(game.beta_payoff({1, 2}) == 12);
  CHECK(game.beta_payoff({0, 1}) == 9);
  CHECK(game.alpha_payoff({1, 2}) == 6);
}

TEST_CASE("schema errors") {
  CHECK_THROWS_AS(io::parse_game(R"({"n":2,"m":3,"A":[[1,2,3],[4,5,6]]})"),
                  SchemaError);
  CHECK_THROWS_AS(io::parse_game(R"({"n":2,"m":2,"A":[[1,2],[4]]})"), SchemaError);
  CHECK_THROWS_AS(io::parse_game(R"({"n":2,"m":2,"A":[[1,2],[4,"x"]]})"),
                  SchemaError);
  CHECK_THROWS_AS(io::parse_game(R"({"n":0,"m":2,"A":[]})"), SchemaError);
  CHECK_THROWS_AS(io::parse_game(R"({"m":2,"A":[[1,2]]})"), SchemaError);
  CHECK_THROWS_AS(io::parse_game("[1,2]"), SchemaError);

  try {
    io::parse_game(R"({"n":2,"m":2,"A":[[1,2],[4,"x"]]})");
  } catch (const SchemaError& e) {
    CHECK(std::string(e.what()).find("A[1][1]") != std::string::npos);
  }
}

TEST_CASE("malformed numbers are parse errors with a location") {
  const std::string text = "{\"n\": 2, \"m\": 2,\n\"A\": [[1, 0.5],\n [1.5.2, 0]]}";
  CHECK_THROWS_AS(io::parse_game(text), ParseError);
  try {
    io::parse_game(text);
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("line 3") != std::string::npos);
  }
  CHECK_THROWS_AS(io::parse_game("{\"n\": 2,"), ParseError);
}

TEST_CASE("missing file is an I/O error") {
  CHECK_THROWS_AS(io::load_game(scratch("does_not_exist.json")), IoError);
}

TEST_CASE("strategy documents") {
  const auto s = io::parse_strategy(
      R"({"player":"alpha","n":2,"m":2,"order":"alpha-major",
          "rows":[[0.9,0.1],[0.75,0.25],[0.05,0.95],[0,1]]})");
  CHECK(s.player() == Player::kAlpha);
  CHECK(s.rows()(1, 0) == 0.75);

  CHECK_THROWS_AS(io::parse_strategy(
                      R"({"player":"alpha","n":2,"m":2,"order":"beta-major",
                          "rows":[[1,0],[1,0],[1,0],[1,0]]})"),
                  SchemaError);
  CHECK_THROWS_AS(io::parse_strategy(
                      R"({"player":"gamma","n":2,"m":2,"order":"alpha-major",
                          "rows":[[1,0],[1,0],[1,0],[1,0]]})"),
                  SchemaError);
  // Rows must be probability vectors.
  CHECK_THROWS_AS(io::parse_strategy(
                      R"({"player":"beta","n":2,"m":2,"order":"alpha-major",
                          "rows":[[0.7,0.7],[1,0],[1,0],[1,0]]})"),
                  SchemaError);
  // Beta rows have m columns.
  const auto q = io::parse_strategy(
      R"({"player":"beta","n":2,"m":3,"order":"alpha-major",
          "rows":[[1,0,0],[0,1,0],[0,0,1],[1,0,0],[0,1,0],[0,0,1]]})");
  CHECK(q.rows().cols() == 3);
}

TEST_CASE("format_number round-trips and ignores the locale") {
  std::setlocale(LC_ALL, "de_DE.UTF-8");
  CHECK(io::format_number(0.5) == "0.5");
  CHECK(io::format_number(3.0) == "3");
  CHECK(io::format_number(-0.0) == "-0");
  CHECK(io::format_number(0.1 + 0.2) == "0.30000000000000004");
  std::mt19937_64 rng(50);
  for (int k = 0; k < 10000; ++k) {
    const double x = random_double(rng);
    const std::string text = io::format_number(x);
    CHECK(text.find(',') == std::string::npos);
    CHECK(std::strtod(text.c_str(), nullptr) == x);
  }
  std::setlocale(LC_ALL, "C");
  CHECK(io::format_number(std::numeric_limits<double>::infinity()) == "inf");
}

TEST_CASE("game round trip is bit-identical") {
  std::mt19937_64 rng(51);
  for (int trial = 0; trial < 100; ++trial) {
    const GameDims d{2 + trial % 3, 1 + (trial / 3) % 4};
    Eigen::MatrixXd a(d.n, d.m), b(d.m, d.n);
    for (Eigen::Index i = 0; i < a.size(); ++i) a.data()[i] = random_double(rng);
    for (Eigen::Index i = 0; i < b.size(); ++i) b.data()[i] = random_double(rng);
    const auto game = make_game(a, b);
    const auto back = io::parse_game(io::format_game(game));
    CHECK(back.alpha_payoffs() == game.alpha_payoffs());
    CHECK(back.beta_payoffs() == game.beta_payoffs());
    CHECK(io::format_game(back) == io::format_game(game));
  }

  const auto path = scratch("game.json");
  const auto game = testing::random_game({3, 2}, rng);
  io::save_game(path, game);
  CHECK(io::load_game(path).beta_payoffs() == game.beta_payoffs());
}

TEST_CASE("strategy round trip is bit-identical") {
  std::mt19937_64 rng(52);
  for (int trial = 0; trial < 100; ++trial) {
    const GameDims d{2 + trial % 3, 1 + (trial / 3) % 4};
    const Player player = trial % 2 ? Player::kBeta : Player::kAlpha;
    const auto s = random_strategy(player, d, rng);
    const auto back = io::parse_strategy(io::format_strategy(s));
    CHECK(back.player() == s.player());
    CHECK(back.dims() == s.dims());
    CHECK(back.rows() == s.rows());
  }
  const auto path = scratch("strategy.json");
  const auto s = random_strategy(Player::kBeta, {2, 3}, rng);
  io::save_strategy(path, s);
  CHECK(io::load_strategy(path).rows() == s.rows());
}

TEST_CASE("csv writer") {
  std::ostringstream out;
  io::CsvWriter csv(out, {"id", "label", "value", "ok"});
  csv.cell(1).cell("a,b").cell(0.25).cell(true);
  csv.end_row();
  csv.cell(2LL).cell("plain").cell(-1e-20).cell(false);
  csv.end_row();
  CHECK(out.str() ==
        "id,label,value,ok\n1,\"a,b\",0.25,true\n2,plain,-1e-20,false\n");

  csv.cell(3);
  CHECK_THROWS_AS(csv.end_row(), InternalError);
}
