#include "zdgame/game.hpp"

#include <cmath>
#include <string>

#include "zdgame/error.hpp"

namespace zdgame {

std::string_view to_string(Player player) {
  return player == Player::kAlpha ? "alpha" : "beta";
}

StateIndex StateIndex::from_flat(int flat, GameDims dims) {
  if (flat < 0 || flat >= dims.states()) {
    throw InvalidArgument("state index " + std::to_string(flat) +
                          " out of range [0, " +
                          std::to_string(dims.states()) + ")");
  }
  return {flat / dims.m, flat % dims.m};
}

BimatrixGame::BimatrixGame(Eigen::MatrixXd a, Eigen::MatrixXd b)
    : dims_{static_cast<int>(a.rows()), static_cast<int>(a.cols())},
      a_(std::move(a)),
      b_(std::move(b)) {}

bool BimatrixGame::is_symmetric() const {
  return dims_.n == dims_.m && b_ == a_;
}

BimatrixGame make_game(Eigen::MatrixXd a, Eigen::MatrixXd b) {
  const auto n = a.rows();
  const auto m = a.cols();
  if (n < 2) {
    throw InvalidArgument("alpha needs at least 2 strategies, got " +
                          std::to_string(n));
  }
  if (m < 1) {
    throw InvalidArgument("beta needs at least 1 strategy");
  }
  if (b.rows() != m || b.cols() != n) {
    throw InvalidArgument("B must be " + std::to_string(m) + "x" +
                          std::to_string(n) + ", got " +
                          std::to_string(b.rows()) + "x" +
                          std::to_string(b.cols()));
  }
  if (!a.allFinite() || !b.allFinite()) {
    throw InvalidArgument("payoff entries must be finite");
  }
  return BimatrixGame(std::move(a), std::move(b));
}

BimatrixGame make_symmetric(const Eigen::MatrixXd& a) {
  if (a.rows() != a.cols()) {
    throw InvalidArgument("symmetric game needs a square payoff matrix, got " +
                          std::to_string(a.rows()) + "x" +
                          std::to_string(a.cols()));
  }
  return make_game(a, a);
}

BimatrixGame chicken_family(double r) {
  if (!(r > 0.0) || !std::isfinite(r)) {
    throw InvalidArgument("profit and loss ratio must be positive and finite");
  }
  Eigen::MatrixXd a(2, 2);
  a << 1.0, 1.0 - r, 1.0 + r, 0.0;
  return make_symmetric(a);
}

PayoffVector flatten_payoffs(const BimatrixGame& game, Player owner) {
  const GameDims dims = game.dims();
  PayoffVector out{Eigen::VectorXd(dims.states()), owner};
  for (int i = 0; i < dims.n; ++i) {
    for (int j = 0; j < dims.m; ++j) {
      const StateIndex s{i, j};
      out.entries(s.flat(dims)) = owner == Player::kAlpha
                                      ? game.alpha_payoff(s)
                                      : game.beta_payoff(s);
    }
  }
  return out;
}

}  // namespace zdgame
