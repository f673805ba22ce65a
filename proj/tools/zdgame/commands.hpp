#pragma once

#include <cstdint>
#include <optional>
#include <string>

namespace zdgame::cli {

struct AnalyzeOptions {
  std::string game;
  std::string p;
  std::string q;
  std::string csv;
};

struct ZdOptions {
  std::string game;
  double a = 0.0;
  double b = 0.0;
  double c = 0.0;
  std::string player = "alpha";
  std::string fill = "uniform";
  std::string out;
  int opponents = 100;
  std::uint64_t seed = 42;
};

struct ExtortOptions {
  std::string game;
  std::optional<double> lambda;
  std::optional<double> theta;
  bool theta_max = false;
  bool bounds = false;
  std::string fill = "uniform";
  std::string out;
  int opponents = 100;
  std::uint64_t seed = 42;
};

struct PinOptions {
  std::string game;
  double target = 0.0;
  std::string player = "alpha";
  std::string fill = "uniform";
  int opponents = 100;
  std::uint64_t seed = 42;
  std::string report = "text";
  std::string out;
};

struct SimulateOptions {
  std::string game;
  std::string p;
  std::string q;
  long long rounds = 1'000'000;
  std::uint64_t seed = 0;
  std::optional<long long> burn_in;
  std::string csv;
  std::optional<double> lambda;
  double delta = 0.0;
};

struct ScanOptions {
  std::string game;
  std::string lambda_grid;
  std::string theta_grid;
  std::string out;
  int opponents = 20;
  std::uint64_t seed = 42;
};

struct RandomStrategyOptions {
  std::string game;
  std::string player = "beta";
  std::string kind = "random";
  int move = 1;
  std::uint64_t seed = 42;
  std::string out;
};

int run_analyze(const AnalyzeOptions& opt);
int run_zd(const ZdOptions& opt);
int run_extort(const ExtortOptions& opt);
int run_pin(const PinOptions& opt);
int run_simulate(const SimulateOptions& opt);
int run_scan(const ScanOptions& opt);
int run_random_strategy(const RandomStrategyOptions& opt);

}  // namespace zdgame::cli
