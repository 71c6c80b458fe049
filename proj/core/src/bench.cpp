#include "deltatour/bench.hpp"

#include <atomic>
#include <chrono>
#include <sstream>
#include <thread>

#include "deltatour/exact.hpp"

namespace deltatour {

namespace {

BenchRow run_row(const std::string& name, const Graph& g, const Rational& delta,
                 const BenchOptions& opts) {
  BenchRow row;
  row.instance = name;
  row.n = g.vertex_count();
  row.m = g.edge_count();
  row.delta = delta;
  row.regime = regime_label(delta);
  auto start = std::chrono::steady_clock::now();
  try {
    SolveReport report = solve(g, delta, opts.mode);
    row.length = report.length;
    Rational lb = report.best_lower_bound();
    if (lb > Rational(0)) row.lower_bound = lb;
    if (opts.exact_cap > 0 && g.vertex_count() <= opts.exact_cap) {
      ExactResult ex = exact_shortest_tour(g, delta, 0, report.tour);
      row.exact_length = ex.length;
      if (!ex.length.is_zero()) row.ratio = report.length / ex.length;
    }
  } catch (const std::exception& e) {
    row.error = e.what();
  }
  auto end = std::chrono::steady_clock::now();
  row.wall_ms = std::chrono::duration<double, std::milli>(end - start).count();
  return row;
}

}  // namespace

std::vector<BenchRow> run_bench(const std::vector<std::pair<std::string, Graph>>& instances,
                                const BenchOptions& opts) {
  struct Task {
    const std::string* name;
    const Graph* graph;
    const Rational* delta;
  };
  std::vector<Task> tasks;
  for (const auto& [name, g] : instances)
    for (const auto& d : opts.deltas) tasks.push_back({&name, &g, &d});

  std::vector<BenchRow> rows(tasks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&]() {
    while (true) {
      std::size_t i = next.fetch_add(1);
      if (i >= tasks.size()) return;
      rows[i] = run_row(*tasks[i].name, *tasks[i].graph, *tasks[i].delta, opts);
    }
  };
  int threads = std::max(1, opts.threads);
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  return rows;
}

std::string bench_csv(const std::vector<BenchRow>& rows, bool with_times) {
  std::ostringstream out;
  out << "instance,n,m,delta,regime,length,length_approx,lower_bound,exact_length,ratio,error";
  if (with_times) out << ",wall_ms";
  out << "\n";
  auto opt = [](const std::optional<Rational>& r) { return r ? r->str() : std::string(); };
  for (const auto& row : rows) {
    out << row.instance << "," << row.n << "," << row.m << "," << row.delta.str() << ","
        << row.regime << "," << opt(row.length) << ","
        << (row.length ? row.length->approx_str() : std::string()) << "," << opt(row.lower_bound)
        << "," << opt(row.exact_length) << "," << opt(row.ratio) << "," << row.error;
    if (with_times) out << "," << row.wall_ms;
    out << "\n";
  }
  return out.str();
}

}  // namespace deltatour
