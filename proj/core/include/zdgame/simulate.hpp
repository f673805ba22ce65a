#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <optional>
#include <vector>

#include "zdgame/game.hpp"
#include "zdgame/strategy.hpp"

namespace zdgame {

// Play runs on a single std::mt19937_64 stream seeded with `seed`. The first
// draw picks the initial state when none is given; afterwards each round
// consumes one draw for alpha's move followed by one for beta's.
struct SimulationConfig {
  std::int64_t rounds = 1'000'000;
  std::uint64_t seed = 0;
  std::optional<StateIndex> initial_state;  // nullopt: uniform over states
  std::int64_t burn_in = 10'000;

  // burn_in = clamp(rounds / 100, 100, rounds - 1).
  static SimulationConfig with_defaults(std::int64_t rounds,
                                        std::uint64_t seed);

  // Throws InvalidArgument unless rounds >= 1 and 0 <= burn_in < rounds.
  void validate() const;
};

struct SimulationReport {
  double empirical_pi_alpha = 0.0;
  double empirical_pi_beta = 0.0;
  Eigen::VectorXd state_frequencies;
  std::int64_t rounds_counted = 0;
};

// Round 1 is the initial state; round t + 1 is drawn from the rows of p and q
// at the state of round t. Rounds 1..burn_in are discarded.
SimulationReport play(const BimatrixGame& game, const MemoryOneStrategy& p,
                      const MemoryOneStrategy& q,
                      const SimulationConfig& config);

struct StationaryComparison {
  double max_score_gap = 0.0;
  double tv_distance = 0.0;
};

StationaryComparison compare_to_stationary(const BimatrixGame& game,
                                           const MemoryOneStrategy& p,
                                           const MemoryOneStrategy& q,
                                           const SimulationConfig& config);

// Total-variation distance between two distributions over the same states.
double total_variation(const Eigen::VectorXd& x, const Eigen::VectorXd& y);

struct EmpiricalExtortion {
  double lambda_hat = 0.0;
  SimulationReport report;
};

// (pi_alpha - delta) / (pi_beta - delta) against each opponent. Opponent k is
// played with seed config.seed + k. Throws DegenerateRatio when a denominator
// is below 1e-9 in magnitude.
std::vector<EmpiricalExtortion> verify_extortion_empirically(
    const BimatrixGame& game, const MemoryOneStrategy& p_extort,
    const std::vector<MemoryOneStrategy>& opponents,
    const SimulationConfig& config, double delta = 0.0);

}  // namespace zdgame
