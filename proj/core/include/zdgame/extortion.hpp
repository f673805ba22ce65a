#pragma once

#include <Eigen/Dense>

#include <array>
#include <limits>
#include <string>
#include <vector>

#include "zdgame/game.hpp"
#include "zdgame/zd.hpp"

namespace zdgame {

// Extortion machinery for symmetric games. Strategy 1 is read as
// full cooperation and strategy n as full noncooperation, with a_11 >= a_nn.

inline constexpr double kBoundaryTolerance = 1e-12;

struct ExtortionParams {
  double lambda = 1.0;
  double theta = 0.0;

  ExtortionParams(double lambda, double theta);
};

// Which family of admissibility conditions a violation belongs to.
enum class ConditionFamily {
  kFactorBelowOne,  // lambda < 1
  kFirstRow,        // a_1j - a_nn - lambda (a_j1 - a_nn) <= 0, j = 2..n
  kMiddleRows,      // a_ij - a_nn - lambda (a_ji - a_nn) >= 0, 1 < i < n
  kLastRow,         // a_nj - a_nn - lambda (a_jn - a_nn) >= 0, j = 1..n-1
};

std::string to_string(ConditionFamily family);

// Zero-based (i, j) of the violated inequality, and its left-hand side.
struct ConditionViolation {
  ConditionFamily family = ConditionFamily::kFactorBelowOne;
  int i = 0;
  int j = 0;
  double value = 0.0;
};

struct FactorCheck {
  bool ok = false;
  std::vector<ConditionViolation> violated;
};

FactorCheck check_extortion_factor(const BimatrixGame& game, double lambda);

struct FactorBounds {
  double lambda_min = 1.0;
  double lambda_max = std::numeric_limits<double>::infinity();
  bool feasible = false;
};

// Intersection of the admissible half-lines with [1, inf).
FactorBounds extortion_factor_bounds(const BimatrixGame& game);

// First components with offset a_nn, computed entry by entry from the closed
// form. Equals synthesize_zd_alpha(game, extortion_coefficients(lambda, a_nn,
// theta)).
SynthesisResult extortion_strategy(const BimatrixGame& game,
                                   const ExtortionParams& params);

// Largest theta keeping every extortion entry in [0, 1]; +inf when no entry
// depends on theta. Throws InvalidArgument if lambda is not admissible.
double theta_max(const BimatrixGame& game, double lambda);

// Closed form for chicken_family(r):
// (1 - theta (lambda - 1), 1 - theta ((lambda + 1) r + lambda - 1),
//  theta (1 + r - lambda (1 - r)), 0).
std::array<double, 4> chicken_extortion(double r, double lambda, double theta);

// The two conditions for a symmetric 2x2 game.
bool n2_conditions(const BimatrixGame& game, double lambda);

}  // namespace zdgame
