#pragma once

#include <Eigen/Dense>

#include <utility>
#include <vector>

#include "zdgame/chain.hpp"
#include "zdgame/game.hpp"
#include "zdgame/strategy.hpp"

namespace zdgame {

// Target relation a * pi_alpha + b * pi_beta + c = 0. Not all zero.
class ZDCoefficients {
 public:
  ZDCoefficients(double a, double b, double c);

  double a() const { return a_; }
  double b() const { return b_; }
  double c() const { return c_; }

  ZDCoefficients scaled(double t) const { return {t * a_, t * b_, t * c_}; }

 private:
  double a_;
  double b_;
  double c_;
};

// a * omega_alpha + b * omega_beta + c * 1.
Eigen::VectorXd combination_vector(const BimatrixGame& game,
                                   const ZDCoefficients& coeffs);

// P - I after the two column-operation sequences: the beta-controlled column
// q-bar sits at next state (alpha_1, beta_1) and the alpha-controlled column
// p-bar at (alpha_1, beta_2). When m == 1 beta has no choice, so p-bar sits at
// (alpha_1, beta_1) and no beta column is formed. The last column is left
// untouched and still equals the corresponding column of P - I.
Eigen::MatrixXd unilateral_form(const MemoryOneStrategy& p,
                                const MemoryOneStrategy& q);

// unilateral_form with the last column replaced by f.
Eigen::MatrixXd press_dyson_matrix(const MemoryOneStrategy& p,
                                   const MemoryOneStrategy& q,
                                   const Eigen::VectorXd& f);

// det(press_dyson_matrix(p, q, f)). Whenever D(p, q, 1) != 0,
// D(p, q, f) / D(p, q, 1) = (v . f) / (v . 1).
double press_dyson_determinant(const MemoryOneStrategy& p,
                               const MemoryOneStrategy& q,
                               const Eigen::VectorXd& f);

// a * pi_alpha + b * pi_beta + c as a ratio of determinants. Throws
// DegenerateDenominator when |D(p, q, 1)| < 1e-12 times its Hadamard bound.
double score_combination(const BimatrixGame& game, const MemoryOneStrategy& p,
                         const MemoryOneStrategy& q,
                         const ZDCoefficients& coeffs);

inline constexpr double kFeasibilityTolerance = 1e-12;

struct Violation {
  int state = 0;
  double value = 0.0;
};

struct SynthesisResult {
  Eigen::VectorXd p1;  // first-component probabilities, alpha-major
  bool feasible = false;
  std::vector<Violation> violations;
};

// Checks `p1` against [0, 1] with kFeasibilityTolerance, clamping entries that
// fall inside the tolerance band.
SynthesisResult make_synthesis_result(Eigen::VectorXd p1);

// p1[s(i,j)] = [i == 0] + a * a_ij + b * b_ji + c.
SynthesisResult synthesize_zd_alpha(const BimatrixGame& game,
                                    const ZDCoefficients& coeffs);
// q1[s(i,j)] = [j == 0] + a * a_ij + b * b_ji + c.
SynthesisResult synthesize_zd_beta(const BimatrixGame& game,
                                   const ZDCoefficients& coeffs);

SynthesisResult synthesize_zd(const BimatrixGame& game, Player player,
                              const ZDCoefficients& coeffs);

// Magnitudes 2^min_exponent .. 2^max_exponent, both signs. Scanned from the
// largest magnitude down, negative before positive.
struct ScaleGrid {
  int min_exponent = -20;
  int max_exponent = 4;

  std::vector<double> values() const;
};

struct PinResult {
  SynthesisResult synthesis;
  ZDCoefficients coeffs;
};

// Pins the opponent's expected score at `target`. For an alpha pinner the
// coefficients are (0, b, -b * target); for a beta pinner (a, 0, -a * target).
// Returns the first feasible grid point; throws NoFeasiblePin otherwise.
PinResult pin_opponent_score(const BimatrixGame& game, Player pinner,
                             double target, const ScaleGrid& grid = {});

// (theta, -theta * lambda, -(theta - theta * lambda) * delta), which enforces
// pi_alpha - delta = lambda * (pi_beta - delta). Requires lambda >= 1 and
// theta > 0.
ZDCoefficients extortion_coefficients(double lambda, double delta,
                                      double theta);

struct RelationCheck {
  double residual = 0.0;
  bool holds = false;
};

// |a * pi_alpha + b * pi_beta + c| from the stationary solve.
RelationCheck verify_linear_relation(const BimatrixGame& game,
                                     const MemoryOneStrategy& p,
                                     const MemoryOneStrategy& q,
                                     const ZDCoefficients& coeffs, double tol);

}  // namespace zdgame
