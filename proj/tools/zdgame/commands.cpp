#include "commands.hpp"

#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>

#include "support.hpp"
#include "zdgame/chain.hpp"
#include "zdgame/error.hpp"
#include "zdgame/extortion.hpp"
#include "zdgame/io.hpp"
#include "zdgame/simulate.hpp"
#include "zdgame/zd.hpp"

namespace zdgame::cli {

namespace {

std::ofstream open_output(const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open " + path + " for writing");
  return out;
}

void finish_output(std::ofstream& out, const std::string& path) {
  out.flush();
  if (!out) throw IoError("cannot write " + path);
}

MemoryOneStrategy load_as(const std::string& path, Player expected,
                          GameDims dims) {
  auto s = io::load_strategy(path);
  if (s.player() != expected) {
    throw SchemaError(path + ": expected a strategy for " +
                      std::string(to_string(expected)));
  }
  if (s.dims() != dims) {
    throw SchemaError(path + ": strategy dimensions do not match the game");
  }
  return s;
}

void write_strategy(const std::string& path, const MemoryOneStrategy& s) {
  io::save_strategy(path, s);
  std::cout << "strategy written to " << path << "\n";
}

}  // namespace

int run_analyze(const AnalyzeOptions& opt) {
  const auto game = io::load_game(opt.game);
  const GameDims dims = game.dims();
  const auto p = load_as(opt.p, Player::kAlpha, dims);
  const auto q = load_as(opt.q, Player::kBeta, dims);
  const auto chain = transition_matrix(dims, p, q);
  const auto& t = chain.entries();

  int zeros = 0;
  for (Eigen::Index k = 0; k < t.size(); ++k) zeros += t.data()[k] == 0.0;
  std::cout << "game: " << dims.n << "x" << dims.m << ", " << dims.states()
            << " states\n";
  std::cout << "transition matrix: " << chain.size() << "x" << chain.size()
            << ", " << zeros << " zero entries, max |row sum - 1| = "
            << pretty((t.rowwise().sum().array() - 1.0).abs().maxCoeff())
            << "\n";

  const auto feasibility = zd_feasibility_condition(chain);
  const auto v = stationary(chain).v;
  const auto scores = scores_from_stationary(game, v);
  const double d_one = press_dyson_determinant(
      p, q, Eigen::VectorXd::Ones(dims.states()));

  std::cout << "stationary v: " << pretty(v) << "\n";
  std::cout << "pi_alpha: " << pretty(scores.pi_alpha) << "\n";
  std::cout << "pi_beta: " << pretty(scores.pi_beta) << "\n";
  std::cout << "zd feasibility condition: "
            << (feasibility.holds ? "holds" : "fails") << "\n";
  std::cout << "D(p, q, 1): " << pretty(d_one) << "\n";

  if (!opt.csv.empty()) {
    auto out = open_output(opt.csv);
    std::vector<std::string> header{"n", "m", "pi_alpha", "pi_beta",
                                    "feasibility", "d_one"};
    for (int s = 0; s < dims.states(); ++s) {
      header.push_back("v" + std::to_string(s + 1));
    }
    io::CsvWriter csv(out, header);
    csv.cell(dims.n).cell(dims.m).cell(scores.pi_alpha).cell(scores.pi_beta)
        .cell(feasibility.holds).cell(d_one);
    for (int s = 0; s < dims.states(); ++s) csv.cell(v(s));
    csv.end_row();
    finish_output(out, opt.csv);
  }
  return kOk;
}

int run_zd(const ZdOptions& opt) {
  const auto game = io::load_game(opt.game);
  const GameDims dims = game.dims();
  const Player player = parse_player(opt.player);
  const FillRule fill = parse_fill(opt.fill);
  const ZDCoefficients coeffs(opt.a, opt.b, opt.c);

  const auto result = synthesize_zd(game, player, coeffs);
  if (!result.feasible) {
    std::cout << "infeasible: " << result.violations.size()
              << " state(s) violate [0, 1]\n";
    print_violations(std::cout, dims, result.violations);
    return kInfeasible;
  }

  const auto strategy =
      complete_from_first_component(player, dims, result.p1, fill);
  std::cout << "first components: " << pretty(result.p1) << "\n";
  const Player other =
      player == Player::kAlpha ? Player::kBeta : Player::kAlpha;
  const auto summary = relation_residuals(
      game, player, strategy,
      random_opponents(other, dims, opt.opponents, opt.seed), coeffs);
  std::cout << "relation " << pretty(coeffs.a()) << " * pi_alpha + "
            << pretty(coeffs.b()) << " * pi_beta + " << pretty(coeffs.c())
            << " = 0\n";
  std::cout << "max residual over " << summary.evaluated
            << " opponents: " << pretty(summary.max_residual) << "\n";
  if (summary.skipped > 0) {
    std::cout << "skipped " << summary.skipped
              << " opponents with non-unique stationary distribution\n";
  }
  if (!opt.out.empty()) write_strategy(opt.out, strategy);
  return kOk;
}

int run_extort(const ExtortOptions& opt) {
  const auto game = io::load_game(opt.game);
  const GameDims dims = game.dims();

  if (opt.bounds) {
    const auto bounds = extortion_factor_bounds(game);
    if (!bounds.feasible) {
      std::cout << "no extortion factor satisfies the conditions\n";
      return kInfeasible;
    }
    std::cout << "λ ∈ [" << pretty(bounds.lambda_min) << ", ";
    if (std::isinf(bounds.lambda_max)) {
      std::cout << "∞)\n";
    } else {
      std::cout << pretty(bounds.lambda_max) << "]\n";
    }
    return kOk;
  }

  if (!opt.lambda) throw InvalidArgument("--lambda is required");
  const double lambda = *opt.lambda;
  const auto factor = check_extortion_factor(game, lambda);
  if (!factor.ok) {
    std::cout << "lambda = " << pretty(lambda)
              << " violates the extortion factor conditions:\n";
    for (const auto& v : factor.violated) {
      std::cout << "  " << to_string(v.family) << " (i = " << v.i + 1
                << ", j = " << v.j + 1 << "): " << pretty(v.value) << "\n";
    }
    return kInfeasible;
  }

  if (opt.theta_max) {
    std::cout << pretty(theta_max(game, lambda)) << "\n";
    return kOk;
  }

  if (!opt.theta) throw InvalidArgument("--theta is required");
  const ExtortionParams params(lambda, *opt.theta);
  const auto result = extortion_strategy(game, params);
  if (!result.feasible) {
    std::cout << "infeasible: theta = " << pretty(params.theta)
              << " exceeds theta_max = " << pretty(theta_max(game, lambda))
              << "\n";
    print_violations(std::cout, dims, result.violations);
    return kInfeasible;
  }

  const double ann = game.alpha_payoffs()(dims.n - 1, dims.n - 1);
  const auto strategy = complete_from_first_component(
      Player::kAlpha, dims, result.p1, parse_fill(opt.fill));
  const auto summary = relation_residuals(
      game, Player::kAlpha, strategy,
      random_opponents(Player::kBeta, dims, opt.opponents, opt.seed),
      extortion_coefficients(lambda, ann, params.theta));
  std::cout << "first components: " << pretty(result.p1) << "\n";
  std::cout << "enforced: pi_alpha - " << pretty(ann) << " = "
            << pretty(lambda) << " * (pi_beta - " << pretty(ann) << ")\n";
  std::cout << "max residual over " << summary.evaluated
            << " opponents: " << pretty(summary.max_residual) << "\n";
  if (!opt.out.empty()) write_strategy(opt.out, strategy);
  return kOk;
}

int run_pin(const PinOptions& opt) {
  if (opt.report != "text" && opt.report != "csv") {
    throw InvalidArgument("--report must be text or csv");
  }
  const auto game = io::load_game(opt.game);
  const GameDims dims = game.dims();
  const Player pinner = parse_player(opt.player);
  const Player other =
      pinner == Player::kAlpha ? Player::kBeta : Player::kAlpha;

  const auto pin = pin_opponent_score(game, pinner, opt.target);
  const auto strategy = complete_from_first_component(
      pinner, dims, pin.synthesis.p1, parse_fill(opt.fill));
  const auto opponents = random_opponents(other, dims, opt.opponents, opt.seed);

  std::vector<double> pinned;
  std::ostringstream rows;
  io::CsvWriter csv(rows, {"opponent", "pi_alpha", "pi_beta", "deviation"});
  for (std::size_t k = 0; k < opponents.size(); ++k) {
    const auto [alpha, beta] = ordered(pinner, strategy, opponents[k]);
    ScorePair s;
    try {
      s = expected_scores(game, alpha, beta);
    } catch (const NonUniqueStationary&) {
      continue;
    }
    const double value = other == Player::kBeta ? s.pi_beta : s.pi_alpha;
    pinned.push_back(value);
    csv.cell(static_cast<long long>(k)).cell(s.pi_alpha).cell(s.pi_beta)
        .cell(std::abs(value - opt.target));
    csv.end_row();
  }

  double max_dev = 0.0;
  double mean = 0.0;
  for (double x : pinned) {
    max_dev = std::max(max_dev, std::abs(x - opt.target));
    mean += x;
  }
  mean /= static_cast<double>(std::max<std::size_t>(pinned.size(), 1));
  double variance = 0.0;
  for (double x : pinned) variance += (x - mean) * (x - mean);
  variance /= static_cast<double>(std::max<std::size_t>(pinned.size(), 1));

  if (opt.report == "csv") {
    std::cout << rows.str();
  } else {
    std::cout << "coefficients (a, b, c): (" << pretty(pin.coeffs.a()) << ", "
              << pretty(pin.coeffs.b()) << ", " << pretty(pin.coeffs.c())
              << ")\n";
    std::cout << "first components: " << pretty(pin.synthesis.p1) << "\n";
    std::cout << "opponents evaluated: " << pinned.size() << "\n";
    std::cout << "max deviation: " << pretty(max_dev) << "\n";
    std::cout << "variance: " << pretty(variance) << "\n";
  }
  if (!opt.out.empty()) io::save_strategy(opt.out, strategy);
  return kOk;
}

int run_simulate(const SimulateOptions& opt) {
  const auto game = io::load_game(opt.game);
  const GameDims dims = game.dims();
  const auto p = load_as(opt.p, Player::kAlpha, dims);
  const auto q = load_as(opt.q, Player::kBeta, dims);

  if (opt.rounds < 1) {
    throw InvalidArgument("--rounds must be at least 1");
  }
  auto config = SimulationConfig::with_defaults(opt.rounds, opt.seed);
  if (opt.burn_in) config.burn_in = *opt.burn_in;
  config.validate();

  const auto report = play(game, p, q, config);
  std::optional<double> tv;
  try {
    const auto v = stationary(transition_matrix(dims, p, q)).v;
    tv = total_variation(report.state_frequencies, v);
  } catch (const NonUniqueStationary&) {
  }
  std::optional<double> lambda_hat;
  if (opt.lambda) {
    const double denominator = report.empirical_pi_beta - opt.delta;
    if (std::abs(denominator) < 1e-9) {
      throw DegenerateRatio("empirical surplus of beta over delta is zero");
    }
    lambda_hat = (report.empirical_pi_alpha - opt.delta) / denominator;
  }

  std::cout << "rounds: " << config.rounds << " (burn-in " << config.burn_in
            << ", counted " << report.rounds_counted << ")\n";
  std::cout << "empirical pi_alpha: " << pretty(report.empirical_pi_alpha)
            << "\n";
  std::cout << "empirical pi_beta: " << pretty(report.empirical_pi_beta)
            << "\n";
  std::cout << "state frequencies: " << pretty(report.state_frequencies)
            << "\n";
  if (tv) {
    std::cout << "tv distance to stationary: " << pretty(*tv) << "\n";
  } else {
    std::cout << "tv distance to stationary: n/a (non-unique stationary "
                 "distribution)\n";
  }
  if (lambda_hat) {
    std::cout << "lambda_hat: " << pretty(*lambda_hat) << " (lambda = "
              << pretty(*opt.lambda) << ")\n";
  }

  if (!opt.csv.empty()) {
    auto out = open_output(opt.csv);
    io::CsvWriter csv(out, {"opponent", "seed", "rounds", "burn_in",
                            "pi_alpha", "pi_beta", "tv_distance", "lambda",
                            "lambda_hat"});
    csv.cell(0).cell(static_cast<long long>(config.seed))
        .cell(static_cast<long long>(config.rounds))
        .cell(static_cast<long long>(config.burn_in))
        .cell(report.empirical_pi_alpha).cell(report.empirical_pi_beta);
    if (tv) csv.cell(*tv); else csv.cell("");
    if (opt.lambda) csv.cell(*opt.lambda).cell(*lambda_hat);
    else csv.cell("").cell("");
    csv.end_row();
    finish_output(out, opt.csv);
  }
  return kOk;
}

int run_scan(const ScanOptions& opt) {
  const auto lambdas = parse_grid(opt.lambda_grid);
  const auto thetas = parse_grid(opt.theta_grid);
  const auto game = io::load_game(opt.game);
  const GameDims dims = game.dims();
  // Validates symmetry and normalization before any output.
  extortion_factor_bounds(game);
  const double ann = game.alpha_payoffs()(dims.n - 1, dims.n - 1);
  const auto opponents =
      random_opponents(Player::kBeta, dims, opt.opponents, opt.seed);

  std::ofstream file;
  if (!opt.out.empty()) file = open_output(opt.out);
  std::ostream& out = opt.out.empty() ? std::cout : file;
  io::CsvWriter csv(out, {"lambda", "theta", "factor_ok", "feasible",
                          "theta_max", "max_residual"});
  for (double lambda : lambdas) {
    const bool factor_ok = lambda >= 1.0 && check_extortion_factor(game, lambda).ok;
    const double tmax = factor_ok ? theta_max(game, lambda) : 0.0;
    for (double theta : thetas) {
      csv.cell(lambda).cell(theta).cell(factor_ok);
      if (!factor_ok || !(theta > 0.0)) {
        csv.cell(false).cell("").cell("");
        csv.end_row();
        continue;
      }
      const auto result = extortion_strategy(game, {lambda, theta});
      csv.cell(result.feasible).cell(tmax);
      if (result.feasible) {
        const auto strategy =
            complete_from_first_component(Player::kAlpha, dims, result.p1);
        const auto summary =
            relation_residuals(game, Player::kAlpha, strategy, opponents,
                               extortion_coefficients(lambda, ann, theta));
        csv.cell(summary.max_residual);
      } else {
        csv.cell("");
      }
      csv.end_row();
    }
  }
  if (!opt.out.empty()) finish_output(file, opt.out);
  return kOk;
}

int run_random_strategy(const RandomStrategyOptions& opt) {
  const auto game = io::load_game(opt.game);
  const GameDims dims = game.dims();
  const Player player = parse_player(opt.player);
  std::optional<MemoryOneStrategy> s;
  if (opt.kind == "random") {
    std::mt19937_64 rng(opt.seed);
    s = random_strategy(player, dims, rng);
  } else if (opt.kind == "uniform") {
    s = uniform_strategy(player, dims);
  } else if (opt.kind == "pure") {
    s = pure_repeat_strategy(player, dims, opt.move - 1);
  } else {
    throw InvalidArgument("--kind must be random, uniform or pure");
  }
  if (opt.out.empty()) {
    std::cout << io::format_strategy(*s);
  } else {
    io::save_strategy(opt.out, *s);
  }
  return kOk;
}

}  // namespace zdgame::cli
