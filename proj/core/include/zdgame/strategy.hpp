#pragma once

#include <Eigen/Dense>

#include <random>
#include <span>
#include <vector>

#include "zdgame/game.hpp"

namespace zdgame {

// Tolerance on row sums of conditional-probability tables.
inline constexpr double kProbabilityTolerance = 1e-12;

enum class RowNormalization {
  kStrict,       // rows must already sum to 1 within kProbabilityTolerance
  kRenormalize,  // nonnegative rows with positive sum are rescaled to sum 1
};

// Memory-one strategy of one player. rows() is nm x K (K = n for alpha,
// K = m for beta); rows()(s, k) is the probability of playing move k next,
// given that the previous joint outcome had flat index s in alpha-major order.
// Beta's table is always stored in this order regardless of how it was given.
class MemoryOneStrategy {
 public:
  Player player() const { return player_; }
  GameDims dims() const { return dims_; }
  int num_moves() const { return static_cast<int>(rows_.cols()); }
  const Eigen::MatrixXd& rows() const { return rows_; }

  double prob(int state, int move) const { return rows_(state, move); }
  Eigen::VectorXd first_component() const { return rows_.col(0); }

  friend bool operator==(const MemoryOneStrategy& x,
                         const MemoryOneStrategy& y) {
    return x.player_ == y.player_ && x.dims_ == y.dims_ && x.rows_ == y.rows_;
  }

 private:
  friend MemoryOneStrategy make_strategy(Player, GameDims, Eigen::MatrixXd,
                                         RowNormalization);

  MemoryOneStrategy(Player player, GameDims dims, Eigen::MatrixXd rows)
      : player_(player), dims_(dims), rows_(std::move(rows)) {}

  Player player_;
  GameDims dims_;
  Eigen::MatrixXd rows_;
};

// `rows` is given in alpha-major state order.
MemoryOneStrategy make_strategy(
    Player player, GameDims dims, Eigen::MatrixXd rows,
    RowNormalization normalization = RowNormalization::kStrict);

// Beta's table given in its own conditioning order: row t = j * n + i holds
// the distribution after outcome (beta_j, alpha_i).
MemoryOneStrategy make_beta_strategy_native(
    GameDims dims, const Eigen::MatrixXd& native_rows,
    RowNormalization normalization = RowNormalization::kStrict);

// Every row puts probability 1 on `move`.
MemoryOneStrategy pure_repeat_strategy(Player player, GameDims dims, int move);

// Every row is (1/K, ..., 1/K).
MemoryOneStrategy uniform_strategy(Player player, GameDims dims);

// Rows drawn independently and uniformly from the probability simplex.
MemoryOneStrategy random_strategy(Player player, GameDims dims,
                                  std::mt19937_64& rng);

// Column of P - I obtained by summing the columns of next states in which the
// owner plays its first move: p1[s(i,j)] - [i == 0] for alpha,
// q1[s(i,j)] - [j == 0] for beta.
struct UnilateralColumn {
  Eigen::VectorXd entries;
  Player owner = Player::kAlpha;
};

UnilateralColumn unilateral_column(const MemoryOneStrategy& strategy);

// 1 on states where `player`'s own move is its first strategy, else 0.
Eigen::VectorXd own_first_move_indicator(Player player, GameDims dims);

// How the mass 1 - p1[s] is spread over moves 2..K.
class FillRule {
 public:
  static FillRule uniform() { return FillRule({}); }
  static FillRule all_to_last();
  // Nonnegative weights over moves 2..K (length K - 1), not all zero.
  static FillRule weighted(std::vector<double> weights);

  // Normalized weights for a player with `moves` moves (length moves - 1).
  std::vector<double> weights_for(int moves) const;

 private:
  explicit FillRule(std::vector<double> weights)
      : weights_(std::move(weights)) {}

  std::vector<double> weights_;  // empty means uniform
  bool all_to_last_ = false;
};

MemoryOneStrategy complete_from_first_component(
    Player player, GameDims dims, std::span<const double> first_component,
    const FillRule& fill = FillRule::uniform());

MemoryOneStrategy complete_from_first_component(
    Player player, GameDims dims, const Eigen::VectorXd& first_component,
    const FillRule& fill = FillRule::uniform());

}  // namespace zdgame
