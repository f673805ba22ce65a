#pragma once

#include <Eigen/Dense>

#include <string_view>

namespace zdgame {

enum class Player { kAlpha, kBeta };

std::string_view to_string(Player player);

// Strategy counts of the two players: alpha has n, beta has m.
struct GameDims {
  int n = 0;
  int m = 0;

  int states() const { return n * m; }
  // Number of moves available to `player`.
  int moves(Player player) const { return player == Player::kAlpha ? n : m; }

  friend bool operator==(const GameDims&, const GameDims&) = default;
};

// A joint outcome (alpha_i, beta_j). Indices are zero-based; the flat
// position is alpha-major: flat = i * m + j.
struct StateIndex {
  int i = 0;
  int j = 0;

  int flat(GameDims dims) const { return i * dims.m + j; }
  static StateIndex from_flat(int flat, GameDims dims);

  friend bool operator==(const StateIndex&, const StateIndex&) = default;
};

// Two-player normal-form game. alpha_payoffs() is A (n x m) with
// A(i, j) = a_ij; beta_payoffs() is B (m x n) with B(j, i) = b_ji, the payoff
// to beta at the outcome (alpha_i, beta_j). Both matrices are indexed from
// their owner's side: rows are the owner's strategies.
class BimatrixGame {
 public:
  GameDims dims() const { return dims_; }
  const Eigen::MatrixXd& alpha_payoffs() const { return a_; }
  const Eigen::MatrixXd& beta_payoffs() const { return b_; }

  double alpha_payoff(StateIndex s) const { return a_(s.i, s.j); }
  double beta_payoff(StateIndex s) const { return b_(s.j, s.i); }

  // Beta's payoffs laid out over alpha's outcome grid (n x m), i.e. B^T.
  Eigen::MatrixXd beta_payoffs_by_outcome() const { return b_.transpose(); }

  // True when both players face the same payoff table: n == m and B == A
  // exactly, so beta's payoff at (alpha_i, beta_j) is a_ji and
  // beta_payoffs_by_outcome() == A^T.
  bool is_symmetric() const;

  friend bool operator==(const BimatrixGame& x, const BimatrixGame& y) {
    return x.dims_ == y.dims_ && x.a_ == y.a_ && x.b_ == y.b_;
  }

 private:
  friend BimatrixGame make_game(Eigen::MatrixXd a, Eigen::MatrixXd b);

  BimatrixGame(Eigen::MatrixXd a, Eigen::MatrixXd b);

  GameDims dims_;
  Eigen::MatrixXd a_;
  Eigen::MatrixXd b_;
};

// Validates shapes (A is n x m with n >= 2, m >= 1; B is m x n) and finiteness.
BimatrixGame make_game(Eigen::MatrixXd a, Eigen::MatrixXd b);

// Symmetric game: beta receives a_ji at (alpha_i, beta_j). A must be square.
BimatrixGame make_symmetric(const Eigen::MatrixXd& a);

// Chicken / Snowdrift / Hawk-Dove family [[1, 1 - r], [1 + r, 0]], r > 0.
BimatrixGame chicken_family(double r);

// Payoffs flattened over the alpha-major state order.
struct PayoffVector {
  Eigen::VectorXd entries;
  Player owner = Player::kAlpha;
};

// omega_alpha[s(i,j)] = a_ij, omega_beta[s(i,j)] = b_ji.
PayoffVector flatten_payoffs(const BimatrixGame& game, Player owner);

}  // namespace zdgame
