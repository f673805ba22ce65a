#include "zdgame/extortion.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "zdgame/error.hpp"
#include "text.hpp"

namespace zdgame {

namespace {

void check_symmetric_normalized(const BimatrixGame& game) {
  if (!game.is_symmetric()) {
    throw InvalidArgument("extortion analysis needs a symmetric game");
  }
  const auto& a = game.alpha_payoffs();
  const int last = game.dims().n - 1;
  if (a(0, 0) < a(last, last)) {
    throw InvalidArgument(
        "extortion analysis needs a_11 >= a_nn (strategy 1 must be mutual "
        "cooperation)");
  }
}

// One inequality u - lambda * w (<= or >=) 0.
struct AffineCondition {
  ConditionFamily family;
  int i;
  int j;
  double u;
  double w;
  bool at_most_zero;

  double value(double lambda) const { return u - lambda * w; }
  bool holds(double lambda) const {
    return at_most_zero ? value(lambda) <= kBoundaryTolerance
                        : value(lambda) >= -kBoundaryTolerance;
  }
};

std::vector<AffineCondition> conditions(const BimatrixGame& game) {
  const auto& a = game.alpha_payoffs();
  const int n = game.dims().n;
  const double ann = a(n - 1, n - 1);
  auto make = [&](ConditionFamily family, int i, int j, bool at_most_zero) {
    return AffineCondition{family,        i, j, a(i, j) - ann, a(j, i) - ann,
                           at_most_zero};
  };
  std::vector<AffineCondition> out;
  for (int j = 1; j < n; ++j) {
    out.push_back(make(ConditionFamily::kFirstRow, 0, j, true));
  }
  for (int i = 1; i < n - 1; ++i) {
    for (int j = 0; j < n; ++j) {
      out.push_back(make(ConditionFamily::kMiddleRows, i, j, false));
    }
  }
  for (int j = 0; j < n - 1; ++j) {
    out.push_back(make(ConditionFamily::kLastRow, n - 1, j, false));
  }
  return out;
}

// Coefficient of theta in each extortion entry (offset a_nn).
Eigen::VectorXd extortion_slopes(const BimatrixGame& game, double lambda) {
  const auto& a = game.alpha_payoffs();
  const GameDims dims = game.dims();
  const int n = dims.n;
  const double ann = a(n - 1, n - 1);
  Eigen::VectorXd slope(dims.states());
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const int s = StateIndex{i, j}.flat(dims);
      if (i == 0 && j == 0) {
        slope(s) = -(lambda - 1.0) * (a(0, 0) - ann);
      } else if (i == n - 1 && j == n - 1) {
        slope(s) = 0.0;
      } else {
        slope(s) = a(i, j) - ann - lambda * (a(j, i) - ann);
      }
    }
  }
  return slope;
}

}  // namespace

ExtortionParams::ExtortionParams(double lambda_in, double theta_in)
    : lambda(lambda_in), theta(theta_in) {
  if (!(lambda >= 1.0) || !std::isfinite(lambda)) {
    throw InvalidArgument("extortion factor must be finite and >= 1");
  }
  if (!(theta > 0.0) || !std::isfinite(theta)) {
    throw InvalidArgument("extortion scale theta must be positive and finite");
  }
}

std::string to_string(ConditionFamily family) {
  switch (family) {
    case ConditionFamily::kFactorBelowOne:
      return "factor-below-one";
    case ConditionFamily::kFirstRow:
      return "first-row";
    case ConditionFamily::kMiddleRows:
      return "middle-rows";
    case ConditionFamily::kLastRow:
      return "last-row";
  }
  return "unknown";
}

FactorCheck check_extortion_factor(const BimatrixGame& game, double lambda) {
  check_symmetric_normalized(game);
  FactorCheck out;
  if (!(lambda >= 1.0)) {
    out.violated.push_back({ConditionFamily::kFactorBelowOne, 0, 0, lambda});
  }
  for (const auto& cond : conditions(game)) {
    if (!cond.holds(lambda)) {
      out.violated.push_back(
          {cond.family, cond.i, cond.j, cond.value(lambda)});
    }
  }
  out.ok = out.violated.empty();
  return out;
}

FactorBounds extortion_factor_bounds(const BimatrixGame& game) {
  check_symmetric_normalized(game);
  FactorBounds bounds;
  bool empty = false;
  for (const auto& cond : conditions(game)) {
    if (cond.w == 0.0) {
      if (!cond.holds(0.0)) empty = true;
      continue;
    }
    const double root = cond.u / cond.w;
    // u - lambda w <= 0 bounds lambda from below when w > 0; >= flips it.
    const bool lower = (cond.w > 0.0) == cond.at_most_zero;
    if (lower) {
      bounds.lambda_min = std::max(bounds.lambda_min, root);
    } else {
      bounds.lambda_max = std::min(bounds.lambda_max, root);
    }
  }
  bounds.feasible =
      !empty && bounds.lambda_min <= bounds.lambda_max + kBoundaryTolerance;
  return bounds;
}

SynthesisResult extortion_strategy(const BimatrixGame& game,
                                   const ExtortionParams& params) {
  check_symmetric_normalized(game);
  const auto& a = game.alpha_payoffs();
  const GameDims dims = game.dims();
  const int n = dims.n;
  const double ann = a(n - 1, n - 1);
  const double lambda = params.lambda;
  const double theta = params.theta;

  Eigen::VectorXd p1(dims.states());
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const int s = StateIndex{i, j}.flat(dims);
      const double bracket = a(i, j) - ann - lambda * (a(j, i) - ann);
      if (i == 0 && j == 0) {
        p1(s) = 1.0 - theta * (lambda - 1.0) * (a(0, 0) - ann);
      } else if (i == 0) {
        p1(s) = 1.0 + theta * bracket;
      } else if (i == n - 1 && j == n - 1) {
        p1(s) = 0.0;
      } else {
        p1(s) = theta * bracket;
      }
    }
  }
  return make_synthesis_result(std::move(p1));
}

double theta_max(const BimatrixGame& game, double lambda) {
  const FactorCheck check = check_extortion_factor(game, lambda);
  if (!check.ok) {
    throw InvalidArgument("lambda = " + detail::shortest(lambda) +
                          " is not an admissible extortion factor");
  }
  const Eigen::VectorXd slope = extortion_slopes(game, lambda);
  const GameDims dims = game.dims();
  double best = std::numeric_limits<double>::infinity();
  for (int s = 0; s < dims.states(); ++s) {
    // Entries on alpha's first row start at 1 and may only fall; the rest
    // start at 0 and may only rise. Wrong-signed slopes are within tolerance.
    const bool starts_at_one = StateIndex::from_flat(s, dims).i == 0;
    const double rate = starts_at_one ? -slope(s) : slope(s);
    if (rate > 0.0) best = std::min(best, 1.0 / rate);
  }
  return best;
}

std::array<double, 4> chicken_extortion(double r, double lambda,
                                        double theta) {
  if (!(r > 0.0) || !std::isfinite(r)) {
    throw InvalidArgument("profit and loss ratio must be positive");
  }
  const ExtortionParams params(lambda, theta);
  if (r < 1.0 && lambda > (1.0 + r) / (1.0 - r) + kBoundaryTolerance) {
    throw InvalidArgument("extortion factor exceeds (1 + r) / (1 - r)");
  }
  return {1.0 - params.theta * (params.lambda - 1.0),
          1.0 - params.theta * ((params.lambda + 1.0) * r + params.lambda - 1.0),
          params.theta * (1.0 + r - params.lambda * (1.0 - r)), 0.0};
}

bool n2_conditions(const BimatrixGame& game, double lambda) {
  if (game.dims().n != 2 || !game.is_symmetric()) {
    throw InvalidArgument("n2_conditions needs a symmetric 2x2 game");
  }
  const auto& a = game.alpha_payoffs();
  const double a22 = a(1, 1);
  const double first = a(0, 1) - a22 - lambda * (a(1, 0) - a22);
  const double second = a(1, 0) - a22 - lambda * (a(0, 1) - a22);
  return lambda >= 1.0 && first <= kBoundaryTolerance &&
         second >= -kBoundaryTolerance;
}

}  // namespace zdgame
