#pragma once

#include <optional>
#include <string>

#include "deltatour/regimes.hpp"

namespace deltatour {

struct BenchRow {
  std::string instance;
  int n = 0, m = 0;
  Rational delta;
  std::string regime;
  std::optional<Rational> length;       // empty when the solve failed
  std::optional<Rational> lower_bound;
  std::optional<Rational> exact_length;  // when the oracle ran
  std::optional<Rational> ratio;         // length / exact, for exact > 0
  std::string error;
  double wall_ms = 0.0;
};

struct BenchOptions {
  std::vector<Rational> deltas;
  int exact_cap = 6;   // run the exact oracle for n <= exact_cap (0 disables)
  SolveMode mode = SolveMode::fixed;
  int threads = 1;     // worker pool size
  bool with_times = false;
};

// One row per (instance, delta); rows execute on a worker pool and come back
// ordered by instance then delta, so output is deterministic.
std::vector<BenchRow> run_bench(const std::vector<std::pair<std::string, Graph>>& instances,
                                const BenchOptions& opts);

std::string bench_csv(const std::vector<BenchRow>& rows, bool with_times);

}  // namespace deltatour
