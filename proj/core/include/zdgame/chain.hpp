#pragma once

#include <Eigen/Dense>

#include "zdgame/game.hpp"
#include "zdgame/strategy.hpp"

namespace zdgame {

// Row-stochastic matrix over joint outcomes (alpha-major). Entry
// (s(i,j), s(k,l)) is p^(k)_{(i,j)} * q^(l)_{(i,j)}.
class TransitionMatrix {
 public:
  GameDims dims() const { return dims_; }
  const Eigen::MatrixXd& entries() const { return entries_; }
  int size() const { return static_cast<int>(entries_.rows()); }

  // Wraps an arbitrary row-stochastic matrix (entries in [0, 1], rows summing
  // to 1 within 1e-10). Mostly useful for tests and diagnostics.
  static TransitionMatrix from_entries(GameDims dims, Eigen::MatrixXd entries);

 private:
  friend TransitionMatrix transition_matrix(GameDims, const MemoryOneStrategy&,
                                            const MemoryOneStrategy&);

  TransitionMatrix(GameDims dims, Eigen::MatrixXd entries)
      : dims_(dims), entries_(std::move(entries)) {}

  GameDims dims_;
  Eigen::MatrixXd entries_;
};

TransitionMatrix transition_matrix(GameDims dims, const MemoryOneStrategy& p,
                                   const MemoryOneStrategy& q);

struct StationaryDistribution {
  Eigen::VectorXd v;  // nonnegative, sums to 1
  bool unique = true;
};

// Dimension of the null space of P - I, counting singular values at or below
// 1e-10 * ||P - I||_2.
int null_space_dimension(const TransitionMatrix& p);

// Solves (P - I)^T x = 0 with the last equation replaced by sum(x) = 1.
// Throws NonUniqueStationary when the null space has dimension > 1.
StationaryDistribution stationary(const TransitionMatrix& p);

// Last row of Adj(P - I).
struct CofactorVector {
  Eigen::VectorXd c;
};

// Chooses explicit minors for nm <= 12 and null-space scaling otherwise.
CofactorVector cofactor_row(const TransitionMatrix& p);
// Signed (nm-1) x (nm-1) minors of P - I with the last column removed.
CofactorVector cofactor_row_by_minors(const TransitionMatrix& p);
// Adj(M) = kappa * 1 * v^T for corank-1 M with left null vector v, where
// kappa = det(M + v 1^T) / (nm * |v|^2); zero when the corank exceeds 1.
CofactorVector cofactor_row_by_scaling(const TransitionMatrix& p);

struct FeasibilityCheck {
  bool holds = false;
  CofactorVector cofactors;
};

// Cofactor sum nonzero (beyond 1e-10) and all cofactors of one sign (within
// 1e-12).
FeasibilityCheck zd_feasibility_condition(const TransitionMatrix& p);

struct ScorePair {
  double pi_alpha = 0.0;
  double pi_beta = 0.0;
};

ScorePair expected_scores(const BimatrixGame& game, const MemoryOneStrategy& p,
                          const MemoryOneStrategy& q);

// Same as above with the stationary vector already known.
ScorePair scores_from_stationary(const BimatrixGame& game,
                                 const Eigen::VectorXd& v);

}  // namespace zdgame
