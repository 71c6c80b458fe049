#include <benchmark/benchmark.h>

#include <random>

#include "deltatour/coverage.hpp"
#include "deltatour/exact.hpp"
#include "deltatour/generators.hpp"
#include "deltatour/matching.hpp"
#include "deltatour/regimes.hpp"

using namespace deltatour;

namespace {

Graph medium_graph() { return random_connected_gnp(24, Rational(1, 5), 20240811); }

std::vector<std::vector<Rational>> random_weights(int n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> num(1, 50), den(1, 6);
  std::vector<std::vector<Rational>> w(n, std::vector<Rational>(n, Rational(0)));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) w[i][j] = w[j][i] = Rational(num(rng), den(rng));
  return w;
}

void BM_PointDistance(benchmark::State& state) {
  Graph g = medium_graph();
  Point p = Point::on_edge(g, g.edges()[0].first, g.edges()[0].second, Rational(1, 3));
  Point q = Point::on_edge(g, g.edges().back().first, g.edges().back().second, Rational(2, 5));
  for (auto _ : state) benchmark::DoNotOptimize(point_distance(g, p, q));
}
BENCHMARK(BM_PointDistance);

void BM_Validate(benchmark::State& state) {
  Graph g = medium_graph();
  SolveReport r = solve(g, Rational(1));
  for (auto _ : state) benchmark::DoNotOptimize(is_delta_tour(g, r.tour, Rational(1)));
}
BENCHMARK(BM_Validate);

void BM_SolvePerRegime(benchmark::State& state) {
  Graph g = medium_graph();
  std::vector<Rational> grid{Rational(0), Rational(1, 4), Rational(1, 2), Rational(9, 10),
                             Rational(1)};
  Rational delta = grid[static_cast<std::size_t>(state.range(0))];
  for (auto _ : state) benchmark::DoNotOptimize(solve(g, delta));
}
BENCHMARK(BM_SolvePerRegime)->DenseRange(0, 4);

void BM_BlossomMatching(benchmark::State& state) {
  auto w = random_weights(static_cast<int>(state.range(0)), 99);
  for (auto _ : state) benchmark::DoNotOptimize(matching_by_blossom(w));
}
BENCHMARK(BM_BlossomMatching)->Arg(16)->Arg(32);

void BM_ExactOracle(benchmark::State& state) {
  Graph g = star_graph(5);
  for (auto _ : state) benchmark::DoNotOptimize(exact_shortest_tour(g, Rational(1, 2)));
}
BENCHMARK(BM_ExactOracle);

}  // namespace

BENCHMARK_MAIN();
