#include <iostream>

#include "CLI11.hpp"
#include "commands.hpp"
#include "support.hpp"
#include "zdgame/error.hpp"

using namespace zdgame::cli;


int main(int argc, char** argv) {
  CLI::App app{"zero-determinant strategies for iterated bimatrix games",
               "zdgame"};
  app.require_subcommand(1);
  app.option_defaults()->always_capture_default();
  app.set_version_flag("--version", "zdgame 0.1.0");

  AnalyzeOptions analyze;
  auto* analyze_cmd = app.add_subcommand(
      "analyze", "stationary distribution, scores and determinant for (p, q)");
  analyze_cmd->add_option("game", analyze.game, "game document")->required();
  analyze_cmd->add_option("p", analyze.p, "alpha strategy document")->required();
  analyze_cmd->add_option("q", analyze.q, "beta strategy document")->required();
  analyze_cmd->add_option("--csv", analyze.csv, "write a CSV row to this file");

  ZdOptions zd;
  auto* zd_cmd = app.add_subcommand(
      "zd", "synthesize a strategy enforcing a*pi_alpha + b*pi_beta + c = 0");
  zd_cmd->add_option("game", zd.game, "game document")->required();
  zd_cmd->add_option("a", zd.a)->required();
  zd_cmd->add_option("b", zd.b)->required();
  zd_cmd->add_option("c", zd.c)->required();
  zd_cmd->add_option("--player", zd.player, "alpha or beta")
      ->check(CLI::IsMember({"alpha", "beta"}));
  zd_cmd->add_option("--fill", zd.fill, "completion of moves 2..K")
      ->check(CLI::IsMember({"uniform", "all-to-last"}));
  zd_cmd->add_option("--out", zd.out, "strategy document to write");
  zd_cmd->add_option("--opponents", zd.opponents, "random opponents to verify")
      ->check(CLI::NonNegativeNumber);
  zd_cmd->add_option("--seed", zd.seed, "seed for the opponent set");

  ExtortOptions extort;
  auto* extort_cmd =
      app.add_subcommand("extort", "extortion strategies in symmetric games");
  extort_cmd->add_option("game", extort.game, "game document")->required();
  extort_cmd->add_option("--lambda", extort.lambda, "extortion factor");
  extort_cmd->add_option("--theta", extort.theta, "scale, 0 < theta <= theta_max");
  extort_cmd->add_flag("--theta-max", extort.theta_max,
                       "print the largest feasible theta for --lambda");
  extort_cmd->add_flag("--bounds", extort.bounds,
                       "print the admissible range of lambda");
  extort_cmd->add_option("--fill", extort.fill, "completion of moves 2..n")
      ->check(CLI::IsMember({"uniform", "all-to-last"}));
  extort_cmd->add_option("--out", extort.out, "strategy document to write");
  extort_cmd->add_option("--opponents", extort.opponents, "random opponents to verify")
      ->check(CLI::NonNegativeNumber);
  extort_cmd->add_option("--seed", extort.seed, "seed for the opponent set");

  PinOptions pin;
  auto* pin_cmd = app.add_subcommand("pin", "pin the opponent's expected score");
  pin_cmd->add_option("game", pin.game, "game document")->required();
  pin_cmd->add_option("--target", pin.target, "score to pin")->required();
  pin_cmd->add_option("--player", pin.player, "pinning player")
      ->check(CLI::IsMember({"alpha", "beta"}));
  pin_cmd->add_option("--fill", pin.fill, "completion of moves 2..K")
      ->check(CLI::IsMember({"uniform", "all-to-last"}));
  pin_cmd->add_option("--opponents", pin.opponents, "random opponents to verify")
      ->check(CLI::NonNegativeNumber);
  pin_cmd->add_option("--seed", pin.seed, "seed for the opponent set");
  pin_cmd->add_option("--report", pin.report, "text or csv")
      ->check(CLI::IsMember({"text", "csv"}));
  pin_cmd->add_option("--out", pin.out, "strategy document to write");

  SimulateOptions sim;
  auto* sim_cmd = app.add_subcommand("simulate", "Monte Carlo play of p against q");
  sim_cmd->add_option("game", sim.game, "game document")->required();
  sim_cmd->add_option("p", sim.p, "alpha strategy document")->required();
  sim_cmd->add_option("q", sim.q, "beta strategy document")->required();
  sim_cmd->add_option("--rounds", sim.rounds, "rounds to play");
  sim_cmd->add_option("--seed", sim.seed, "generator seed");
  sim_cmd->add_option("--burn-in", sim.burn_in,
                      "discarded rounds (default 1% of rounds, at least 100)");
  sim_cmd->add_option("--csv", sim.csv, "write a CSV row to this file");
  sim_cmd->add_option("--lambda", sim.lambda, "report lambda_hat against this factor");
  sim_cmd->add_option("--delta", sim.delta, "offset subtracted before the ratio");

  ScanOptions scan;
  auto* scan_cmd =
      app.add_subcommand("scan", "feasibility of extortion over a (lambda, theta) grid");
  scan_cmd->add_option("game", scan.game, "game document")->required();
  scan_cmd->add_option("--lambda-grid", scan.lambda_grid,
                       "comma list or start:stop:step")->required();
  scan_cmd->add_option("--theta-grid", scan.theta_grid,
                       "comma list or start:stop:step")->required();
  scan_cmd->add_option("--out", scan.out, "CSV file (default stdout)");
  scan_cmd->add_option("--opponents", scan.opponents, "random opponents per row")
      ->check(CLI::NonNegativeNumber);
  scan_cmd->add_option("--seed", scan.seed, "seed for the opponent set");

  RandomStrategyOptions rs;
  auto* rs_cmd = app.add_subcommand("random-strategy",
                                    "write a random, uniform or pure strategy");
  rs_cmd->add_option("game", rs.game, "game document")->required();
  rs_cmd->add_option("--player", rs.player, "alpha or beta")
      ->check(CLI::IsMember({"alpha", "beta"}));
  rs_cmd->add_option("--kind", rs.kind, "random, uniform or pure")
      ->check(CLI::IsMember({"random", "uniform", "pure"}));
  rs_cmd->add_option("--move", rs.move, "1-based move for --kind pure")
      ->check(CLI::PositiveNumber);
  rs_cmd->add_option("--seed", rs.seed, "generator seed");
  rs_cmd->add_option("--out", rs.out, "strategy document (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInputError;
  }

  try {
    if (*analyze_cmd) return run_analyze(analyze);
    if (*zd_cmd) return run_zd(zd);
    if (*extort_cmd) return run_extort(extort);
    if (*pin_cmd) return run_pin(pin);
    if (*sim_cmd) return run_simulate(sim);
    if (*scan_cmd) return run_scan(scan);
    if (*rs_cmd) return run_random_strategy(rs);
  } catch (const zdgame::NoFeasiblePin& e) {
    std::cerr << "zdgame: " << e.what() << "\n";
    return kInfeasible;
  } catch (const zdgame::NonUniqueStationary& e) {
    std::cerr << "zdgame: " << e.what() << "\n";
    return kDegenerate;
  } catch (const zdgame::DegenerateRatio& e) {
    std::cerr << "zdgame: " << e.what() << "\n";
    return kDegenerate;
  } catch (const zdgame::DegenerateDenominator& e) {
    std::cerr << "zdgame: " << e.what() << "\n";
    return kDegenerate;
  } catch (const zdgame::InvalidArgument& e) {
    std::cerr << "zdgame: usage: " << e.what() << "\n";
    return kInputError;
  } catch (const zdgame::Error& e) {
    std::cerr << "zdgame: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}
