// Command-line surface for the delta-tour solver: solve / validate / exact /
// bench / gen. Exit codes: 0 success (validate: tour is valid), 1 validate
// found an uncovered edge, 2 input or parse error, 3 internal validation
// failure.

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "deltatour/bench.hpp"
#include "deltatour/coverage.hpp"
#include "deltatour/exact.hpp"
#include "deltatour/generators.hpp"
#include "deltatour/io.hpp"

namespace fs = std::filesystem;
using namespace deltatour;

namespace {

Rational parse_delta(const std::string& text) {
  auto d = Rational::parse(text);
  if (!d || *d < Rational(0)) throw std::invalid_argument("bad delta: " + text);
  return *d;
}

std::vector<Rational> parse_delta_list(const std::string& text) {
  std::vector<Rational> out;
  std::istringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    out.push_back(parse_delta(item));
  }
  if (out.empty()) throw std::invalid_argument("empty delta list");
  return out;
}

void emit(const std::string& out_path, const std::string& content) {
  if (out_path.empty())
    std::cout << content << (content.empty() || content.back() == '\n' ? "" : "\n");
  else
    write_text_file(out_path, content);
}

int cmd_solve(const std::string& graph_path, const std::string& delta_text,
              const std::string& mode_text, const std::string& out_path) {
  Graph g = Graph::parse_file(graph_path);
  Rational delta = parse_delta(delta_text);
  SolveMode mode = mode_text == "input-delta" ? SolveMode::input_delta : SolveMode::fixed;
  SolveReport report = solve(g, delta, mode);
  emit(out_path, report_to_json(report));
  return 0;
}

int cmd_validate(const std::string& graph_path, const std::string& tour_path,
                 const std::string& delta_text) {
  Graph g = Graph::parse_file(graph_path);
  Rational delta = parse_delta(delta_text);
  Tour t = tour_from_json(g, read_text_file(tour_path));

  bool ok = true;
  std::cout << "edge\tmax_distance\twitness\tmode\n";
  for (Edge e : g.edges()) {
    CoverageVerdict v = max_edge_distance(g, e, t);
    bool covered = v.max_distance <= delta;
    if (!covered) {
      ok = false;
      v.mode = CoverageMode::uncovered_at_delta;
    }
    std::cout << e.first + 1 << "-" << e.second + 1 << "\t" << v.max_distance.str() << "\t"
              << v.witness.str() << "\t" << to_string(v.mode) << "\n";
  }
  std::cout << "tour_length\t" << tour_length(g, t).str() << "\n";
  std::cout << "delta_tour\t" << (ok ? "true" : "false") << "\n";
  return ok ? 0 : 1;
}

int cmd_exact(const std::string& graph_path, const std::string& delta_text, int max_stops,
              const std::string& out_path) {
  Graph g = Graph::parse_file(graph_path);
  Rational delta = parse_delta(delta_text);
  ExactResult res = exact_shortest_tour(g, delta, max_stops);
  std::ostringstream body;
  body << "{\n  \"length\": \"" << res.length.str() << "\",\n  \"length_approx\": "
       << res.length.approx_str() << ",\n  \"max_stops\": " << res.max_stops
       << ",\n  \"cap_binding\": " << (res.cap_binding ? "true" : "false")
       << ",\n  \"tour\": " << tour_to_json(res.tour) << "\n}";
  emit(out_path, body.str());
  return 0;
}

int cmd_gen(const std::string& family, int n, const std::string& p_text, std::uint64_t seed,
            const std::string& out_path, const std::string& out_dir) {
  auto write_graph = [&](const Graph& g, const std::string& path) {
    std::ostringstream ss;
    g.write(ss);
    emit(path, ss.str());
  };
  if (family == "path") {
    write_graph(path_graph(n), out_path);
  } else if (family == "cycle") {
    write_graph(cycle_graph(n), out_path);
  } else if (family == "star") {
    write_graph(star_graph(n), out_path);
  } else if (family == "tree") {
    write_graph(random_tree(n, seed), out_path);
  } else if (family == "gnp-connected") {
    write_graph(random_connected_gnp(n, parse_delta(p_text.empty() ? "1/2" : p_text), seed), out_path);
  } else if (family == "all-connected-n") {
    if (out_dir.empty()) throw std::invalid_argument("all-connected-n needs --out-dir");
    fs::create_directories(out_dir);
    auto graphs = all_connected_graphs(n);
    int idx = 0;
    for (const auto& g : graphs) {
      std::ostringstream name;
      name << out_dir << "/conn" << n << "_" << ++idx << ".g";
      std::ostringstream ss;
      g.write(ss);
      write_text_file(name.str(), ss.str());
    }
    std::cout << graphs.size() << " graphs written to " << out_dir << "\n";
  } else {
    throw std::invalid_argument("unknown family: " + family);
  }
  return 0;
}

int bench_threads() {
  if (const char* env = std::getenv("DELTA_TOUR_THREADS")) {
    int t = std::atoi(env);
    if (t >= 1) return t;
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

int cmd_bench(const std::string& corpus, const std::string& family, int count, int n,
              const std::string& p_text, std::uint64_t seed, const std::string& deltas_text,
              int exact_cap, const std::string& mode_text, bool with_times,
              const std::string& out_path) {
  std::vector<std::pair<std::string, Graph>> instances;
  if (!corpus.empty()) {
    std::vector<fs::path> files;
    for (const auto& entry : fs::directory_iterator(corpus))
      if (entry.is_regular_file() && entry.path().extension() == ".g") files.push_back(entry.path());
    std::sort(files.begin(), files.end());
    for (const auto& f : files) instances.emplace_back(f.stem().string(), Graph::parse_file(f.string()));
  } else if (family == "all-connected-n") {
    auto graphs = all_connected_graphs(n);
    int idx = 0;
    for (const auto& g : graphs) {
      std::ostringstream name;
      name << "conn" << n << "_" << ++idx;
      instances.emplace_back(name.str(), g);
    }
  } else if (family == "gnp-connected") {
    Rational p = parse_delta(p_text.empty() ? "1/2" : p_text);
    for (int i = 0; i < count; ++i) {
      std::ostringstream name;
      name << "gnp" << n << "_" << i;
      instances.emplace_back(name.str(), random_connected_gnp(n, p, seed + i));
    }
  } else if (family == "tree") {
    for (int i = 0; i < count; ++i) {
      std::ostringstream name;
      name << "tree" << n << "_" << i;
      instances.emplace_back(name.str(), random_tree(n, seed + i));
    }
  } else if (!family.empty()) {
    throw std::invalid_argument("bench: unsupported family " + family);
  }

  BenchOptions opts;
  opts.deltas = parse_delta_list(deltas_text);
  opts.exact_cap = exact_cap;
  opts.mode = mode_text == "input-delta" ? SolveMode::input_delta : SolveMode::fixed;
  opts.threads = bench_threads();
  opts.with_times = with_times;
  auto rows = run_bench(instances, opts);
  emit(out_path, bench_csv(rows, with_times));
  for (const auto& row : rows)
    if (!row.error.empty()) std::cerr << "row " << row.instance << " delta " << row.delta.str()
                                      << " failed: " << row.error << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"delta-tour solver"};
  app.require_subcommand(1);

  std::string graph_path, tour_path, delta_text, mode_text = "fixed", out_path, out_dir;
  std::string family, p_text, deltas_text, corpus_dir;
  int max_stops = 0, n = 0, count = 1, exact_cap = 6;
  std::uint64_t seed = 1;
  bool with_times = false;

  auto* solve_cmd = app.add_subcommand("solve", "solve an instance and write the report");
  solve_cmd->add_option("--graph", graph_path)->required();
  solve_cmd->add_option("--delta", delta_text)->required();
  solve_cmd->add_option("--mode", mode_text)->check(CLI::IsMember({"fixed", "input-delta"}));
  solve_cmd->add_option("--out", out_path);

  auto* validate_cmd = app.add_subcommand("validate", "check a tour against a covering range");
  validate_cmd->add_option("--graph", graph_path)->required();
  validate_cmd->add_option("--tour", tour_path)->required();
  validate_cmd->add_option("--delta", delta_text)->required();

  auto* exact_cmd = app.add_subcommand("exact", "exhaustive shortest tour at desk scale");
  exact_cmd->add_option("--graph", graph_path)->required();
  exact_cmd->add_option("--delta", delta_text)->required();
  exact_cmd->add_option("--max-stops", max_stops);
  exact_cmd->add_option("--out", out_path);

  auto* bench_cmd = app.add_subcommand("bench", "solve a corpus over a delta grid, emit CSV");
  bench_cmd->add_option("--corpus", corpus_dir);
  bench_cmd->add_option("--family", family)
      ->check(CLI::IsMember({"all-connected-n", "gnp-connected", "tree"}));
  bench_cmd->add_option("--count", count);
  bench_cmd->add_option("--n", n);
  bench_cmd->add_option("--p", p_text);
  bench_cmd->add_option("--seed", seed);
  bench_cmd->add_option("--deltas", deltas_text)->required();
  bench_cmd->add_option("--exact-cap", exact_cap);
  bench_cmd->add_option("--mode", mode_text)->check(CLI::IsMember({"fixed", "input-delta"}));
  bench_cmd->add_flag("--with-times", with_times);
  bench_cmd->add_option("--out", out_path);

  auto* gen_cmd = app.add_subcommand("gen", "emit graph files");
  gen_cmd->add_option("--family", family)
      ->required()
      ->check(CLI::IsMember({"path", "cycle", "star", "tree", "gnp-connected", "all-connected-n"}));
  gen_cmd->add_option("--n", n)->required();
  gen_cmd->add_option("--p", p_text);
  gen_cmd->add_option("--seed", seed);
  gen_cmd->add_option("--out", out_path);
  gen_cmd->add_option("--out-dir", out_dir);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (solve_cmd->parsed()) return cmd_solve(graph_path, delta_text, mode_text, out_path);
    if (validate_cmd->parsed()) return cmd_validate(graph_path, tour_path, delta_text);
    if (exact_cmd->parsed()) return cmd_exact(graph_path, delta_text, max_stops, out_path);
    if (bench_cmd->parsed())
      return cmd_bench(corpus_dir, family, count, n, p_text, seed, deltas_text, exact_cap,
                       mode_text, with_times, out_path);
    if (gen_cmd->parsed()) return cmd_gen(family, n, p_text, seed, out_path, out_dir);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::logic_error& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
