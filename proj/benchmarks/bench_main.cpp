#include <benchmark/benchmark.h>

#include <numbers>

#include "qgame/discord.hpp"
#include "qgame/equilibrium.hpp"
#include "qgame/game.hpp"
#include "qgame/states.hpp"

namespace {

using namespace qgame;

GameInstance werner_game(double eta) {
    return {PayoffTensor::standard(), Priors::uniform(), werner(eta).matrix, "werner"};
}

void bm_expected_payoff_trace(benchmark::State& state) {
    const GameInstance game = werner_game(1.0);
    const StrategyProfile p{0.3, 1.1, 2.9, 4.2};
    for (auto _ : state) benchmark::DoNotOptimize(expected_payoff(game, p, Player::A));
}
BENCHMARK(bm_expected_payoff_trace);

void bm_expected_payoff_closed_form(benchmark::State& state) {
    const GameInstance game = werner_game(1.0);
    const PayoffEvaluator eval(game);
    const StrategyProfile p{0.3, 1.1, 2.9, 4.2};
    for (auto _ : state) benchmark::DoNotOptimize(eval.payoff(p, Player::A));
}
BENCHMARK(bm_expected_payoff_closed_form);

void bm_jacobian(benchmark::State& state) {
    const GameInstance game = werner_game(1.0);
    const PayoffEvaluator eval(game);
    const PayoffFunction f = [&](const StrategyProfile& p) { return eval.f(p); };
    const StrategyProfile p{0.3, 1.1, 2.9, 4.2};
    for (auto _ : state) benchmark::DoNotOptimize(jacobian(f, p));
}
BENCHMARK(bm_jacobian);

void bm_grid_scan(benchmark::State& state) {
    const GameInstance game = werner_game(0.1);
    SearchOptions options;
    options.resolution = static_cast<int>(state.range(0));
    options.threads = 1;
    for (auto _ : state) benchmark::DoNotOptimize(find_stationary_points(game, options));
}
BENCHMARK(bm_grid_scan)->Arg(9)->Arg(15)->Unit(benchmark::kMillisecond);

void bm_discord(benchmark::State& state) {
    const DensityMatrix rho = werner(0.7).matrix;
    for (auto _ : state) benchmark::DoNotOptimize(discord(rho));
}
BENCHMARK(bm_discord)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
