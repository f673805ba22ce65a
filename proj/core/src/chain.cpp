#include "zdgame/chain.hpp"

#include <cmath>
#include <string>

#include "zdgame/error.hpp"

namespace zdgame {

namespace {

constexpr double kRowSumTolerance = 1e-10;
constexpr double kRankThreshold = 1e-10;
constexpr double kClampTolerance = 1e-12;
constexpr int kMaxMinorStates = 12;

Eigen::MatrixXd generator(const TransitionMatrix& p) {
  return p.entries() -
         Eigen::MatrixXd::Identity(p.size(), p.size());
}

Eigen::VectorXd singular_values(const Eigen::MatrixXd& m) {
  if (m.rows() <= 16) {
    return Eigen::JacobiSVD<Eigen::MatrixXd>(m).singularValues();
  }
  return Eigen::BDCSVD<Eigen::MatrixXd>(m).singularValues();
}

}  // namespace

TransitionMatrix TransitionMatrix::from_entries(GameDims dims,
                                                Eigen::MatrixXd entries) {
  const int size = dims.states();
  if (dims.n < 1 || dims.m < 1 || entries.rows() != size ||
      entries.cols() != size) {
    throw InvalidArgument("transition matrix must be " + std::to_string(size) +
                          "x" + std::to_string(size));
  }
  for (int r = 0; r < size; ++r) {
    for (int c = 0; c < size; ++c) {
      const double x = entries(r, c);
      if (!std::isfinite(x) || x < 0.0 || x > 1.0) {
        throw InvalidArgument("transition entry (" + std::to_string(r) + ", " +
                              std::to_string(c) + ") outside [0, 1]");
      }
    }
    if (std::abs(entries.row(r).sum() - 1.0) > kRowSumTolerance) {
      throw InvalidArgument("transition row " + std::to_string(r) +
                            " does not sum to 1");
    }
  }
  return TransitionMatrix(dims, std::move(entries));
}

TransitionMatrix transition_matrix(GameDims dims, const MemoryOneStrategy& p,
                                   const MemoryOneStrategy& q) {
  if (p.player() != Player::kAlpha || q.player() != Player::kBeta) {
    throw InvalidArgument("transition_matrix expects (alpha, beta) strategies");
  }
  if (p.dims() != dims || q.dims() != dims) {
    throw InvalidArgument("strategy dimensions do not match the game");
  }
  const int size = dims.states();
  Eigen::MatrixXd entries(size, size);
  for (int s = 0; s < size; ++s) {
    for (int k = 0; k < dims.n; ++k) {
      for (int l = 0; l < dims.m; ++l) {
        entries(s, StateIndex{k, l}.flat(dims)) = p.prob(s, k) * q.prob(s, l);
      }
    }
  }
  return TransitionMatrix(dims, std::move(entries));
}

int null_space_dimension(const TransitionMatrix& p) {
  const Eigen::VectorXd sv = singular_values(generator(p));
  const double threshold = kRankThreshold * sv(0);
  int count = 0;
  for (Eigen::Index k = 0; k < sv.size(); ++k) {
    if (sv(k) <= threshold) ++count;
  }
  return count;
}

StationaryDistribution stationary(const TransitionMatrix& p) {
  const int corank = null_space_dimension(p);
  if (corank > 1) {
    throw NonUniqueStationary(
        "non-unique stationary distribution: null space of P - I has "
        "dimension " +
        std::to_string(corank));
  }
  const int size = p.size();
  Eigen::MatrixXd system = generator(p).transpose();
  system.row(size - 1).setOnes();
  Eigen::VectorXd rhs = Eigen::VectorXd::Zero(size);
  rhs(size - 1) = 1.0;
  Eigen::VectorXd v = system.fullPivLu().solve(rhs);

  for (Eigen::Index k = 0; k < v.size(); ++k) {
    if (v(k) < -kClampTolerance) {
      throw InternalError("stationary component " + std::to_string(k) +
                          " is negative: " + std::to_string(v(k)));
    }
    if (v(k) < 0.0) v(k) = 0.0;
  }
  return {std::move(v), true};
}

CofactorVector cofactor_row_by_minors(const TransitionMatrix& p) {
  const Eigen::MatrixXd m = generator(p);
  const int size = p.size();
  const int last = size - 1;
  Eigen::VectorXd c(size);
  Eigen::MatrixXd minor(last, last);
  for (int k = 0; k < size; ++k) {
    // Rows other than k, first `last` columns.
    for (int r = 0, out = 0; r < size; ++r) {
      if (r == k) continue;
      minor.row(out++) = m.row(r).head(last);
    }
    const double det = last == 0 ? 1.0 : minor.partialPivLu().determinant();
    c(k) = ((k + last) % 2 == 0 ? 1.0 : -1.0) * det;
  }
  return {std::move(c)};
}

CofactorVector cofactor_row_by_scaling(const TransitionMatrix& p) {
  const int size = p.size();
  if (null_space_dimension(p) > 1) {
    return {Eigen::VectorXd::Zero(size)};
  }
  const Eigen::VectorXd v = stationary(p).v;
  Eigen::MatrixXd shifted = generator(p);
  shifted.colwise() += v;
  const double kappa =
      shifted.partialPivLu().determinant() / (size * v.squaredNorm());
  return {kappa * v};
}

CofactorVector cofactor_row(const TransitionMatrix& p) {
  if (p.size() <= kMaxMinorStates) return cofactor_row_by_minors(p);
  return cofactor_row_by_scaling(p);
}

FeasibilityCheck zd_feasibility_condition(const TransitionMatrix& p) {
  FeasibilityCheck out;
  out.cofactors = cofactor_row(p);
  const Eigen::VectorXd& c = out.cofactors.c;
  const bool nonzero_sum = std::abs(c.sum()) > 1e-10;
  const bool nonnegative = (c.array() >= -kClampTolerance).all();
  const bool nonpositive = (c.array() <= kClampTolerance).all();
  out.holds = nonzero_sum && (nonnegative || nonpositive);
  return out;
}

ScorePair scores_from_stationary(const BimatrixGame& game,
                                 const Eigen::VectorXd& v) {
  const double mass = v.sum();
  return {v.dot(flatten_payoffs(game, Player::kAlpha).entries) / mass,
          v.dot(flatten_payoffs(game, Player::kBeta).entries) / mass};
}

ScorePair expected_scores(const BimatrixGame& game, const MemoryOneStrategy& p,
                          const MemoryOneStrategy& q) {
  const auto chain = transition_matrix(game.dims(), p, q);
  return scores_from_stationary(game, stationary(chain).v);
}

}  // namespace zdgame
