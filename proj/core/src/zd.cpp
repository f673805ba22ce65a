#include "zdgame/zd.hpp"

#include <cmath>
#include <string>

#include "zdgame/error.hpp"
#include "text.hpp"

namespace zdgame {

namespace {

void check_pair(const MemoryOneStrategy& p, const MemoryOneStrategy& q) {
  if (p.player() != Player::kAlpha || q.player() != Player::kBeta) {
    throw InvalidArgument("expected an (alpha, beta) strategy pair");
  }
  if (p.dims() != q.dims()) {
    throw InvalidArgument("strategy dimensions differ");
  }
}

// Product of column norms bounds |det| from above.
double hadamard_bound(const Eigen::MatrixXd& m) {
  double bound = 1.0;
  for (Eigen::Index c = 0; c < m.cols(); ++c) bound *= m.col(c).norm();
  return bound;
}

}  // namespace

ZDCoefficients::ZDCoefficients(double a, double b, double c)
    : a_(a), b_(b), c_(c) {
  if (!std::isfinite(a) || !std::isfinite(b) || !std::isfinite(c)) {
    throw InvalidArgument("ZD coefficients must be finite");
  }
  if (a == 0.0 && b == 0.0 && c == 0.0) {
    throw InvalidArgument("ZD coefficients (0, 0, 0) impose no relation");
  }
}

Eigen::VectorXd combination_vector(const BimatrixGame& game,
                                   const ZDCoefficients& coeffs) {
  const auto omega_a = flatten_payoffs(game, Player::kAlpha).entries;
  const auto omega_b = flatten_payoffs(game, Player::kBeta).entries;
  return (coeffs.a() * omega_a + coeffs.b() * omega_b).array() + coeffs.c();
}

Eigen::MatrixXd unilateral_form(const MemoryOneStrategy& p,
                                const MemoryOneStrategy& q) {
  check_pair(p, q);
  const GameDims dims = p.dims();
  const auto chain = transition_matrix(dims, p, q);
  const int size = chain.size();
  Eigen::MatrixXd m =
      chain.entries() - Eigen::MatrixXd::Identity(size, size);
  if (dims.m == 1) {
    // Column (alpha_1, beta_1) already is p1 - [i == 0].
    return m;
  }
  // Alpha's column first, from original columns only.
  const int p_col = StateIndex{0, 1}.flat(dims);
  for (int l = 0; l < dims.m; ++l) {
    if (l != 1) m.col(p_col) += m.col(StateIndex{0, l}.flat(dims));
  }
  const int q_col = StateIndex{0, 0}.flat(dims);
  for (int k = 1; k < dims.n; ++k) {
    m.col(q_col) += m.col(StateIndex{k, 0}.flat(dims));
  }
  return m;
}

Eigen::MatrixXd press_dyson_matrix(const MemoryOneStrategy& p,
                                   const MemoryOneStrategy& q,
                                   const Eigen::VectorXd& f) {
  Eigen::MatrixXd m = unilateral_form(p, q);
  if (f.size() != m.rows()) {
    throw InvalidArgument("f must have " + std::to_string(m.rows()) +
                          " entries, got " + std::to_string(f.size()));
  }
  if (!f.allFinite()) {
    throw InvalidArgument("f must be finite");
  }
  m.col(m.cols() - 1) = f;
  return m;
}

double press_dyson_determinant(const MemoryOneStrategy& p,
                               const MemoryOneStrategy& q,
                               const Eigen::VectorXd& f) {
  return press_dyson_matrix(p, q, f).partialPivLu().determinant();
}

double score_combination(const BimatrixGame& game, const MemoryOneStrategy& p,
                         const MemoryOneStrategy& q,
                         const ZDCoefficients& coeffs) {
  if (p.dims() != game.dims()) {
    throw InvalidArgument("strategy dimensions do not match the game");
  }
  const Eigen::VectorXd ones = Eigen::VectorXd::Ones(game.dims().states());
  const Eigen::MatrixXd denominator_matrix = press_dyson_matrix(p, q, ones);
  const double denominator = denominator_matrix.partialPivLu().determinant();
  if (std::abs(denominator) <= 1e-12 * hadamard_bound(denominator_matrix)) {
    throw DegenerateDenominator("D(p, q, 1) is numerically zero");
  }
  return press_dyson_determinant(p, q, combination_vector(game, coeffs)) /
         denominator;
}

SynthesisResult make_synthesis_result(Eigen::VectorXd p1) {
  SynthesisResult out;
  for (Eigen::Index s = 0; s < p1.size(); ++s) {
    double& x = p1(s);
    if (x < -kFeasibilityTolerance || x > 1.0 + kFeasibilityTolerance ||
        !std::isfinite(x)) {
      out.violations.push_back({static_cast<int>(s), x});
    } else if (x < 0.0) {
      x = 0.0;
    } else if (x > 1.0) {
      x = 1.0;
    }
  }
  out.feasible = out.violations.empty();
  out.p1 = std::move(p1);
  return out;
}

SynthesisResult synthesize_zd(const BimatrixGame& game, Player player,
                              const ZDCoefficients& coeffs) {
  return make_synthesis_result(own_first_move_indicator(player, game.dims()) +
                               combination_vector(game, coeffs));
}

SynthesisResult synthesize_zd_alpha(const BimatrixGame& game,
                                    const ZDCoefficients& coeffs) {
  return synthesize_zd(game, Player::kAlpha, coeffs);
}

SynthesisResult synthesize_zd_beta(const BimatrixGame& game,
                                   const ZDCoefficients& coeffs) {
  return synthesize_zd(game, Player::kBeta, coeffs);
}

std::vector<double> ScaleGrid::values() const {
  std::vector<double> out;
  for (int e = max_exponent; e >= min_exponent; --e) {
    const double magnitude = std::ldexp(1.0, e);
    out.push_back(-magnitude);
    out.push_back(magnitude);
  }
  return out;
}

PinResult pin_opponent_score(const BimatrixGame& game, Player pinner,
                             double target, const ScaleGrid& grid) {
  if (!std::isfinite(target)) {
    throw InvalidArgument("pin target must be finite");
  }
  for (double scale : grid.values()) {
    const ZDCoefficients coeffs =
        pinner == Player::kAlpha
            ? ZDCoefficients(0.0, scale, -scale * target)
            : ZDCoefficients(scale, 0.0, -scale * target);
    SynthesisResult synthesis = synthesize_zd(game, pinner, coeffs);
    if (synthesis.feasible) return {std::move(synthesis), coeffs};
  }
  throw NoFeasiblePin("no feasible strategy pins the opponent's score at " +
                      detail::shortest(target));
}

ZDCoefficients extortion_coefficients(double lambda, double delta,
                                      double theta) {
  if (!(lambda >= 1.0) || !std::isfinite(lambda)) {
    throw InvalidArgument("extortion factor must be finite and >= 1");
  }
  if (!(theta > 0.0) || !std::isfinite(theta)) {
    throw InvalidArgument("extortion scale theta must be positive");
  }
  if (!std::isfinite(delta)) {
    throw InvalidArgument("extortion offset must be finite");
  }
  const double a = theta;
  const double b = -theta * lambda;
  return {a, b, -(a + b) * delta};
}

RelationCheck verify_linear_relation(const BimatrixGame& game,
                                     const MemoryOneStrategy& p,
                                     const MemoryOneStrategy& q,
                                     const ZDCoefficients& coeffs,
                                     double tol) {
  const ScorePair scores = expected_scores(game, p, q);
  const double residual = std::abs(coeffs.a() * scores.pi_alpha +
                                   coeffs.b() * scores.pi_beta + coeffs.c());
  return {residual, residual < tol};
}

}  // namespace zdgame
