#include "zdgame/strategy.hpp"

#include <cmath>
#include <numeric>
#include <string>

#include "zdgame/error.hpp"
#include "zdgame/rng.hpp"

namespace zdgame {

namespace {

void check_dims(GameDims dims) {
  if (dims.n < 2 || dims.m < 1) {
    throw InvalidArgument("invalid game dimensions " + std::to_string(dims.n) +
                          "x" + std::to_string(dims.m));
  }
}

}  // namespace

MemoryOneStrategy make_strategy(Player player, GameDims dims,
                                Eigen::MatrixXd rows,
                                RowNormalization normalization) {
  check_dims(dims);
  const int k = dims.moves(player);
  if (rows.rows() != dims.states() || rows.cols() != k) {
    throw InvalidArgument(
        std::string(to_string(player)) + " strategy must be " +
        std::to_string(dims.states()) + "x" + std::to_string(k) + ", got " +
        std::to_string(rows.rows()) + "x" + std::to_string(rows.cols()));
  }
  for (Eigen::Index s = 0; s < rows.rows(); ++s) {
    for (Eigen::Index c = 0; c < rows.cols(); ++c) {
      const double x = rows(s, c);
      if (!std::isfinite(x) || x < 0.0 || x > 1.0 + kProbabilityTolerance) {
        throw InvalidArgument("probability out of [0, 1] at row " +
                              std::to_string(s) + ", move " +
                              std::to_string(c) + ": " + std::to_string(x));
      }
    }
    const double sum = rows.row(s).sum();
    if (normalization == RowNormalization::kRenormalize && sum > 0.0) {
      rows.row(s) /= sum;
    } else if (std::abs(sum - 1.0) > kProbabilityTolerance) {
      throw InvalidArgument("row " + std::to_string(s) + " sums to " +
                            std::to_string(sum) + ", expected 1");
    }
  }
  return MemoryOneStrategy(player, dims, std::move(rows));
}

MemoryOneStrategy make_beta_strategy_native(GameDims dims,
                                            const Eigen::MatrixXd& native_rows,
                                            RowNormalization normalization) {
  check_dims(dims);
  if (native_rows.rows() != dims.states() || native_rows.cols() != dims.m) {
    throw InvalidArgument("beta strategy must be " +
                          std::to_string(dims.states()) + "x" +
                          std::to_string(dims.m));
  }
  Eigen::MatrixXd rows(dims.states(), dims.m);
  for (int i = 0; i < dims.n; ++i) {
    for (int j = 0; j < dims.m; ++j) {
      rows.row(StateIndex{i, j}.flat(dims)) = native_rows.row(j * dims.n + i);
    }
  }
  return make_strategy(Player::kBeta, dims, std::move(rows), normalization);
}

MemoryOneStrategy pure_repeat_strategy(Player player, GameDims dims,
                                       int move) {
  check_dims(dims);
  const int k = dims.moves(player);
  if (move < 0 || move >= k) {
    throw InvalidArgument("move " + std::to_string(move) + " out of range");
  }
  Eigen::MatrixXd rows = Eigen::MatrixXd::Zero(dims.states(), k);
  rows.col(move).setOnes();
  return make_strategy(player, dims, std::move(rows));
}

MemoryOneStrategy uniform_strategy(Player player, GameDims dims) {
  check_dims(dims);
  const int k = dims.moves(player);
  return make_strategy(player, dims,
                       Eigen::MatrixXd::Constant(dims.states(), k, 1.0 / k),
                       RowNormalization::kRenormalize);
}

MemoryOneStrategy random_strategy(Player player, GameDims dims,
                                  std::mt19937_64& rng) {
  check_dims(dims);
  const int k = dims.moves(player);
  Eigen::MatrixXd rows(dims.states(), k);
  // Normalized unit exponentials are uniform on the simplex.
  for (Eigen::Index s = 0; s < rows.rows(); ++s) {
    for (int c = 0; c < k; ++c) {
      rows(s, c) = -std::log1p(-canonical_uniform(rng));
    }
    const double sum = rows.row(s).sum();
    if (sum > 0.0) {
      rows.row(s) /= sum;
    } else {
      rows.row(s).setConstant(1.0 / k);
    }
  }
  return make_strategy(player, dims, std::move(rows),
                       RowNormalization::kRenormalize);
}

Eigen::VectorXd own_first_move_indicator(Player player, GameDims dims) {
  Eigen::VectorXd delta = Eigen::VectorXd::Zero(dims.states());
  for (int i = 0; i < dims.n; ++i) {
    for (int j = 0; j < dims.m; ++j) {
      const bool first = player == Player::kAlpha ? i == 0 : j == 0;
      if (first) delta(StateIndex{i, j}.flat(dims)) = 1.0;
    }
  }
  return delta;
}

UnilateralColumn unilateral_column(const MemoryOneStrategy& strategy) {
  return {strategy.first_component() -
              own_first_move_indicator(strategy.player(), strategy.dims()),
          strategy.player()};
}

FillRule FillRule::all_to_last() {
  FillRule rule({});
  rule.all_to_last_ = true;
  return rule;
}

FillRule FillRule::weighted(std::vector<double> weights) {
  double sum = 0.0;
  for (double w : weights) {
    if (!std::isfinite(w) || w < 0.0) {
      throw InvalidArgument("fill weights must be finite and nonnegative");
    }
    sum += w;
  }
  if (!(sum > 0.0)) {
    throw InvalidArgument("fill weights must not all be zero");
  }
  return FillRule(std::move(weights));
}

std::vector<double> FillRule::weights_for(int moves) const {
  const auto rest = static_cast<std::size_t>(moves - 1);
  if (rest == 0) return {};
  if (all_to_last_) {
    std::vector<double> w(rest, 0.0);
    w.back() = 1.0;
    return w;
  }
  if (weights_.empty()) {
    return std::vector<double>(rest, 1.0 / static_cast<double>(rest));
  }
  if (weights_.size() != rest) {
    throw InvalidArgument("fill weights need " + std::to_string(rest) +
                          " entries, got " + std::to_string(weights_.size()));
  }
  const double sum = std::accumulate(weights_.begin(), weights_.end(), 0.0);
  std::vector<double> w(weights_);
  for (double& x : w) x /= sum;
  return w;
}

MemoryOneStrategy complete_from_first_component(
    Player player, GameDims dims, std::span<const double> first_component,
    const FillRule& fill) {
  check_dims(dims);
  if (static_cast<int>(first_component.size()) != dims.states()) {
    throw InvalidArgument("first component needs " +
                          std::to_string(dims.states()) + " entries");
  }
  const int k = dims.moves(player);
  const std::vector<double> weights = fill.weights_for(k);
  Eigen::MatrixXd rows = Eigen::MatrixXd::Zero(dims.states(), k);
  for (int s = 0; s < dims.states(); ++s) {
    const double p1 = first_component[s];
    if (!std::isfinite(p1) || p1 < 0.0 || p1 > 1.0) {
      throw InvalidArgument("first component at state " + std::to_string(s) +
                            " is " + std::to_string(p1) +
                            ", outside [0, 1]");
    }
    rows(s, 0) = p1;
    const double rest = 1.0 - p1;
    if (k == 1) {
      if (rest > kProbabilityTolerance) {
        throw InvalidArgument(
            "single-move player cannot place remaining mass at state " +
            std::to_string(s));
      }
      continue;
    }
    for (int c = 1; c < k; ++c) rows(s, c) = rest * weights[c - 1];
  }
  return make_strategy(player, dims, std::move(rows));
}

MemoryOneStrategy complete_from_first_component(
    Player player, GameDims dims, const Eigen::VectorXd& first_component,
    const FillRule& fill) {
  return complete_from_first_component(
      player, dims,
      std::span<const double>(first_component.data(),
                              static_cast<std::size_t>(first_component.size())),
      fill);
}

}  // namespace zdgame
