#include "doctest.h"

#include <random>

#include "support/oracles.hpp"
#include "zdgame/error.hpp"
#include "zdgame/extortion.hpp"

using namespace zdgame;

namespace {

BimatrixGame sym(std::initializer_list<std::initializer_list<double>> rows) {
  const auto n = static_cast<Eigen::Index>(rows.size());
  Eigen::MatrixXd a(n, n);
  Eigen::Index r = 0;
  for (const auto& row : rows) {
    Eigen::Index c = 0;
    for (double x : row) a(r, c++) = x;
    ++r;
  }
  return make_symmetric(a);
}

// Random symmetric game with a_11 >= a_nn.
BimatrixGame random_normalized_symmetric(int n, std::mt19937_64& rng) {
  Eigen::MatrixXd a = testing::random_matrix(n, n, rng);
  if (a(0, 0) < a(n - 1, n - 1)) std::swap(a(0, 0), a(n - 1, n - 1));
  return make_symmetric(a);
}

}  // namespace

TEST_CASE("check_extortion_factor on the chicken game") {
  const auto game = chicken_family(0.5);
  CHECK(check_extortion_factor(game, 2).ok);
  const auto four = check_extortion_factor(game, 4);
  CHECK_FALSE(four.ok);
  REQUIRE(four.violated.size() == 1);
  CHECK(four.violated[0].family == ConditionFamily::kLastRow);
  CHECK(four.violated[0].i == 1);
  CHECK(four.violated[0].j == 0);
  CHECK(four.violated[0].value == doctest::Approx(-0.5));

  const auto low = check_extortion_factor(game, 0.5);
  CHECK_FALSE(low.ok);
  CHECK(low.violated[0].family == ConditionFamily::kFactorBelowOne);
}

TEST_CASE("middle-row diagonal condition forces a_ii <= a_nn") {
  const auto game = sym({{5, 0, 0}, {0, 2, 0}, {0, 0, 1}});
  const auto check = check_extortion_factor(game, 2);
  CHECK_FALSE(check.ok);
  bool diagonal = false;
  for (const auto& v : check.violated) {
    if (v.family == ConditionFamily::kMiddleRows && v.i == 1 && v.j == 1) {
      diagonal = true;
      CHECK(v.value == doctest::Approx((1 - 2) * (2 - 1)));
    }
  }
  CHECK(diagonal);
}

TEST_CASE("preconditions") {
  std::mt19937_64 rng(30);
  const auto asym = testing::random_game({2, 2}, rng);
  CHECK_THROWS_AS(check_extortion_factor(asym, 2), InvalidArgument);
  CHECK_THROWS_AS(extortion_factor_bounds(sym({{0, 1}, {1, 2}})), InvalidArgument);
  CHECK_THROWS_AS(extortion_strategy(asym, {2, 0.1}), InvalidArgument);
  CHECK_THROWS_AS(ExtortionParams(0.9, 0.1), InvalidArgument);
  CHECK_THROWS_AS(ExtortionParams(2, 0), InvalidArgument);
}

TEST_CASE("extortion_factor_bounds") {
  const auto half = extortion_factor_bounds(chicken_family(0.5));
  CHECK(half.feasible);
  CHECK(half.lambda_min == 1.0);
  CHECK(std::abs(half.lambda_max - 3.0) < 1e-12);

  const auto steep = extortion_factor_bounds(chicken_family(1.5));
  CHECK(steep.feasible);
  CHECK(steep.lambda_min == 1.0);
  CHECK(std::isinf(steep.lambda_max));

  const auto flat = extortion_factor_bounds(sym({{1, 0}, {0, 0}}));
  CHECK(flat.feasible);
  CHECK(flat.lambda_min == 1.0);
  CHECK(std::isinf(flat.lambda_max));

  // Condition families for which no lambda >= 1 works.
  const auto none = extortion_factor_bounds(sym({{1, 2}, {-1, 0}}));
  CHECK_FALSE(none.feasible);
}

TEST_CASE("bounds agree with check_extortion_factor and are tight") {
  std::mt19937_64 rng(31);
  std::uniform_real_distribution<double> u(0.0, 6.0);
  int tight = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 2 + trial % 3;
    const auto game = random_normalized_symmetric(n, rng);
    const auto bounds = extortion_factor_bounds(game);
    for (int k = 0; k < 10; ++k) {
      const double lambda = 1.0 + u(rng);
      const bool inside = bounds.feasible && lambda >= bounds.lambda_min &&
                          lambda <= bounds.lambda_max;
      CHECK(check_extortion_factor(game, lambda).ok == inside);
    }
    if (bounds.feasible && std::isfinite(bounds.lambda_max) &&
        bounds.lambda_max > bounds.lambda_min) {
      ++tight;
      const auto at = check_extortion_factor(game, bounds.lambda_max);
      CHECK(at.ok);
      const auto past = check_extortion_factor(
          game, bounds.lambda_max * (1 + 1e-9) + 1e-9);
      CHECK_FALSE(past.ok);
    }
  }
  CHECK(tight > 0);
}

TEST_CASE("extortion_strategy examples") {
  const auto game = chicken_family(0.5);
  const auto r = extortion_strategy(game, {2, 0.1});
  CHECK(r.feasible);
  CHECK(r.p1 == Eigen::Vector4d(0.9, 0.75, 0.05, 0));

  std::mt19937_64 rng(32);
  for (int trial = 0; trial < 20; ++trial) {
    const auto g = random_normalized_symmetric(3, rng);
    const auto fair = extortion_strategy(g, {1, 0.01});
    CHECK(fair.p1(0) == 1.0);
  }
}

TEST_CASE("extortion_strategy equals the generic ZD synthesis") {
  std::mt19937_64 rng(33);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 2 + trial % 3;
    const auto game = random_normalized_symmetric(n, rng);
    const double lambda = 1.0 + 3.0 * u(rng);
    const double theta = 0.001 + 0.2 * u(rng);
    const double ann = game.alpha_payoffs()(n - 1, n - 1);
    const auto direct = extortion_strategy(game, {lambda, theta});
    const auto generic =
        synthesize_zd_alpha(game, extortion_coefficients(lambda, ann, theta));
    CHECK(direct.feasible == generic.feasible);
    CHECK((direct.p1 - generic.p1).cwiseAbs().maxCoeff() <= 1e-14);
  }
}

TEST_CASE("theta_max") {
  const auto game = chicken_family(0.5);
  CHECK(theta_max(game, 2) == doctest::Approx(0.4).epsilon(1e-15));
  CHECK(theta_max(sym({{1, 0}, {0, 1}}), 1) ==
        std::numeric_limits<double>::infinity());
  CHECK_THROWS_AS(theta_max(game, 4), InvalidArgument);

  // Grid oracle: feasibility flips between neighbours around 0.4.
  int last_feasible = -1;
  for (int k = 1; k <= 6000; ++k) {
    if (extortion_strategy(game, {2, k * 1e-4}).feasible) last_feasible = k;
  }
  CHECK(last_feasible == 4000);
}

TEST_CASE("feasibility in theta is monotone and ends at theta_max") {
  std::mt19937_64 rng(34);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  int checked = 0;
  for (int trial = 0; trial < 400 && checked < 40; ++trial) {
    const auto game = random_normalized_symmetric(2 + trial % 2, rng);
    const auto bounds = extortion_factor_bounds(game);
    if (!bounds.feasible) continue;
    const double hi = std::isfinite(bounds.lambda_max) ? bounds.lambda_max
                                                       : bounds.lambda_min + 3;
    const double lambda = bounds.lambda_min + u(rng) * (hi - bounds.lambda_min);
    const double tmax = theta_max(game, lambda);
    if (!std::isfinite(tmax)) continue;
    ++checked;
    for (double f : {0.01, 0.25, 0.5, 0.99, 1.0}) {
      CHECK(extortion_strategy(game, {lambda, f * tmax}).feasible);
    }
    for (double f : {1.0 + 1e-9, 1.1, 2.0}) {
      CHECK_FALSE(extortion_strategy(game, {lambda, f * tmax}).feasible);
    }
  }
  CHECK(checked == 40);
}

TEST_CASE("chicken_extortion closed form") {
  const auto documented = chicken_extortion(0.5, 2, 0.1);
  CHECK(documented == std::array<double, 4>{0.9, 0.75, 0.05, 0});
  const auto general = extortion_strategy(chicken_family(0.5), {2, 0.1}).p1;
  for (int s = 0; s < 4; ++s) CHECK(documented[s] == general(s));
  const auto fair = chicken_extortion(0.5, 1, 0.1);
  CHECK(fair[0] == 1.0);
  CHECK(fair[1] == doctest::Approx(0.9));
  CHECK(fair[2] == doctest::Approx(0.1));
  CHECK(fair[3] == 0.0);
  CHECK_THROWS_AS(chicken_extortion(0.5, 3.5, 0.1), InvalidArgument);
  CHECK_NOTHROW(chicken_extortion(1.5, 50, 0.001));

  std::mt19937_64 rng(35);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int k = 0; k < 200; ++k) {
    const double r = 0.05 + 2.0 * u(rng);
    const double lmax = r < 1 ? (1 + r) / (1 - r) : 10.0;
    const double lambda = 1.0 + u(rng) * (lmax - 1.0);
    const double theta = 0.001 + 0.3 * u(rng);
    const auto closed = chicken_extortion(r, lambda, theta);
    const auto general = extortion_strategy(chicken_family(r), {lambda, theta});
    // Both sides round differently once the bracket grows.
    const double scale = std::max(1.0, theta * (lambda + 1.0) * (1.0 + r));
    for (int s = 0; s < 4; ++s) {
      CHECK(std::abs(closed[s] - general.p1(s)) <= 1e-14 * scale);
    }
  }
}

TEST_CASE("n2_conditions") {
  const auto chicken = chicken_family(0.5);
  CHECK(n2_conditions(chicken, 3));
  CHECK_FALSE(n2_conditions(chicken, 3 + 1e-6));
  CHECK(n2_conditions(sym({{3, 0}, {5, 1}}), 2));
  CHECK_THROWS_AS(n2_conditions(sym({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}), 2),
                  InvalidArgument);

  std::mt19937_64 rng(36);
  std::uniform_real_distribution<double> u(0.0, 5.0);
  for (int k = 0; k < 1000; ++k) {
    const auto game = random_normalized_symmetric(2, rng);
    const double lambda = 1.0 + u(rng);
    CHECK(n2_conditions(game, lambda) == check_extortion_factor(game, lambda).ok);
  }
}

TEST_CASE("extortion enforces the offset relation for all opponents") {
  std::mt19937_64 rng(37);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  int games = 0;
  for (int trial = 0; trial < 2000 && games < 6; ++trial) {
    const int n = 2 + trial % 2;
    const auto game = random_normalized_symmetric(n, rng);
    const auto bounds = extortion_factor_bounds(game);
    if (!bounds.feasible) continue;
    const double hi = std::isfinite(bounds.lambda_max) ? bounds.lambda_max
                                                       : bounds.lambda_min + 2;
    const double lambda = bounds.lambda_min + u(rng) * (hi - bounds.lambda_min);
    const double tmax = theta_max(game, lambda);
    const double theta = std::isfinite(tmax) ? tmax * (0.2 + 0.7 * u(rng)) : 0.1;
    const auto ext = extortion_strategy(game, {lambda, theta});
    REQUIRE(ext.feasible);
    ++games;
    const GameDims d = game.dims();
    const auto p = complete_from_first_component(Player::kAlpha, d, ext.p1);
    const double ann = game.alpha_payoffs()(n - 1, n - 1);
    for (int k = 0; k < 20; ++k) {
      const auto s = expected_scores(game, p, random_strategy(Player::kBeta, d, rng));
      CHECK(std::abs((s.pi_alpha - ann) - lambda * (s.pi_beta - ann)) < 1e-9);
    }
  }
  CHECK(games == 6);
}
