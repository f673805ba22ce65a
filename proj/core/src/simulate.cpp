#include "zdgame/simulate.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <string>

#include "zdgame/chain.hpp"
#include "zdgame/error.hpp"
#include "zdgame/rng.hpp"

namespace zdgame {

namespace {

int sample_move(const Eigen::MatrixXd& rows, int state, std::mt19937_64& rng) {
  const double u = canonical_uniform(rng);
  const auto k = rows.cols();
  double cumulative = 0.0;
  for (Eigen::Index c = 0; c + 1 < k; ++c) {
    cumulative += rows(state, c);
    if (u < cumulative) return static_cast<int>(c);
  }
  return static_cast<int>(k - 1);
}

}  // namespace

SimulationConfig SimulationConfig::with_defaults(std::int64_t rounds,
                                                 std::uint64_t seed) {
  SimulationConfig config;
  config.rounds = rounds;
  config.seed = seed;
  config.burn_in = std::min(std::max<std::int64_t>(rounds / 100, 100),
                            std::max<std::int64_t>(rounds - 1, 0));
  return config;
}

void SimulationConfig::validate() const {
  if (rounds < 1) {
    throw InvalidArgument("rounds must be >= 1, got " + std::to_string(rounds));
  }
  if (burn_in < 0 || burn_in >= rounds) {
    throw InvalidArgument("burn-in must satisfy 0 <= burn_in < rounds");
  }
}

SimulationReport play(const BimatrixGame& game, const MemoryOneStrategy& p,
                      const MemoryOneStrategy& q,
                      const SimulationConfig& config) {
  config.validate();
  const GameDims dims = game.dims();
  if (p.player() != Player::kAlpha || q.player() != Player::kBeta ||
      p.dims() != dims || q.dims() != dims) {
    throw InvalidArgument("play expects alpha and beta strategies for the game");
  }
  const int size = dims.states();
  std::mt19937_64 rng(config.seed);

  int state = 0;
  if (config.initial_state) {
    state = config.initial_state->flat(dims);
    StateIndex::from_flat(state, dims);  // range check
  } else {
    state = std::min(size - 1,
                     static_cast<int>(canonical_uniform(rng) * size));
  }

  std::vector<std::int64_t> counts(static_cast<std::size_t>(size), 0);
  for (std::int64_t round = 1; round <= config.rounds; ++round) {
    if (round > config.burn_in) ++counts[static_cast<std::size_t>(state)];
    if (round == config.rounds) break;
    const int alpha_move = sample_move(p.rows(), state, rng);
    const int beta_move = sample_move(q.rows(), state, rng);
    state = StateIndex{alpha_move, beta_move}.flat(dims);
  }

  SimulationReport report;
  report.rounds_counted = config.rounds - config.burn_in;
  report.state_frequencies.resize(size);
  for (int s = 0; s < size; ++s) {
    report.state_frequencies(s) =
        static_cast<double>(counts[static_cast<std::size_t>(s)]) /
        static_cast<double>(report.rounds_counted);
  }
  report.empirical_pi_alpha = report.state_frequencies.dot(
      flatten_payoffs(game, Player::kAlpha).entries);
  report.empirical_pi_beta = report.state_frequencies.dot(
      flatten_payoffs(game, Player::kBeta).entries);
  return report;
}

double total_variation(const Eigen::VectorXd& x, const Eigen::VectorXd& y) {
  if (x.size() != y.size()) {
    throw InvalidArgument("distributions have different lengths");
  }
  return 0.5 * (x - y).cwiseAbs().sum();
}

StationaryComparison compare_to_stationary(const BimatrixGame& game,
                                           const MemoryOneStrategy& p,
                                           const MemoryOneStrategy& q,
                                           const SimulationConfig& config) {
  const auto v = stationary(transition_matrix(game.dims(), p, q)).v;
  const ScorePair exact = scores_from_stationary(game, v);
  const SimulationReport report = play(game, p, q, config);
  return {std::max(std::abs(report.empirical_pi_alpha - exact.pi_alpha),
                   std::abs(report.empirical_pi_beta - exact.pi_beta)),
          total_variation(report.state_frequencies, v)};
}

std::vector<EmpiricalExtortion> verify_extortion_empirically(
    const BimatrixGame& game, const MemoryOneStrategy& p_extort,
    const std::vector<MemoryOneStrategy>& opponents,
    const SimulationConfig& config, double delta) {
  std::vector<EmpiricalExtortion> out;
  out.reserve(opponents.size());
  for (std::size_t k = 0; k < opponents.size(); ++k) {
    SimulationConfig run = config;
    run.seed = config.seed + k;
    SimulationReport report = play(game, p_extort, opponents[k], run);
    const double denominator = report.empirical_pi_beta - delta;
    if (std::abs(denominator) < 1e-9) {
      throw DegenerateRatio("opponent " + std::to_string(k) +
                            ": empirical surplus of beta is zero");
    }
    const double lambda_hat =
        (report.empirical_pi_alpha - delta) / denominator;
    out.push_back({lambda_hat, std::move(report)});
  }
  return out;
}

}  // namespace zdgame
