#include <benchmark/benchmark.h>

#include <random>

#include "zdgame/chain.hpp"
#include "zdgame/simulate.hpp"
#include "zdgame/zd.hpp"

using namespace zdgame;

namespace {

struct Instance {
  BimatrixGame game;
  MemoryOneStrategy p;
  MemoryOneStrategy q;
};

Instance make_instance(int n, int m) {
  std::mt19937_64 rng(static_cast<std::uint64_t>(n * 100 + m));
  std::uniform_real_distribution<double> u(-5.0, 5.0);
  Eigen::MatrixXd a(n, m), b(m, n);
  for (auto& x : a.reshaped()) x = u(rng);
  for (auto& x : b.reshaped()) x = u(rng);
  const GameDims d{n, m};
  auto p = random_strategy(Player::kAlpha, d, rng);
  auto q = random_strategy(Player::kBeta, d, rng);
  return {make_game(a, b), std::move(p), std::move(q)};
}

void BM_TransitionMatrix(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto in = make_instance(n, n);
  for (auto _ : state) {
    benchmark::DoNotOptimize(transition_matrix(in.game.dims(), in.p, in.q));
  }
}
BENCHMARK(BM_TransitionMatrix)->Arg(2)->Arg(3)->Arg(5)->Arg(8);

void BM_Stationary(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto in = make_instance(n, n);
  const auto chain = transition_matrix(in.game.dims(), in.p, in.q);
  for (auto _ : state) benchmark::DoNotOptimize(stationary(chain));
}
BENCHMARK(BM_Stationary)->Arg(2)->Arg(3)->Arg(5)->Arg(8);

void BM_CofactorByMinors(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto in = make_instance(n, n);
  const auto chain = transition_matrix(in.game.dims(), in.p, in.q);
  for (auto _ : state) benchmark::DoNotOptimize(cofactor_row_by_minors(chain));
}
BENCHMARK(BM_CofactorByMinors)->Arg(2)->Arg(3);

void BM_CofactorByScaling(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto in = make_instance(n, n);
  const auto chain = transition_matrix(in.game.dims(), in.p, in.q);
  for (auto _ : state) benchmark::DoNotOptimize(cofactor_row_by_scaling(chain));
}
BENCHMARK(BM_CofactorByScaling)->Arg(2)->Arg(3)->Arg(5)->Arg(8);

void BM_PressDysonDeterminant(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto in = make_instance(n, n);
  const Eigen::VectorXd f = flatten_payoffs(in.game, Player::kAlpha).entries;
  for (auto _ : state) {
    benchmark::DoNotOptimize(press_dyson_determinant(in.p, in.q, f));
  }
}
BENCHMARK(BM_PressDysonDeterminant)->Arg(2)->Arg(3)->Arg(5)->Arg(8);

void BM_Play(benchmark::State& state) {
  const auto in = make_instance(2, 2);
  SimulationConfig config;
  config.rounds = state.range(0);
  config.burn_in = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(play(in.game, in.p, in.q, config));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_Play)->Arg(10'000)->Arg(1'000'000)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
