#include <catch2/catch_amalgamated.hpp>

#include <algorithm>

#include "deltatour/coverage.hpp"
#include "deltatour/exact.hpp"
#include "deltatour/generators.hpp"
#include "deltatour/niceness.hpp"
#include "deltatour/simplex.hpp"
#include "deltatour/tour_lp.hpp"
#include "test_support.hpp"

using namespace deltatour;
namespace dt = deltatour::testing;

namespace {

// Reference optimum via the full constraint family; independent of the
// lazy separation loop.
Rational full_family_lp(const Graph& g) {
  auto family = enumerate_cut_family(g);
  LpProblem lp;
  lp.num_vars = g.edge_count();
  lp.objective.assign(lp.num_vars, Rational(1));
  for (const auto& f : family) {
    LpGeConstraint row;
    for (int e = 0; e < g.edge_count(); ++e) {
      auto [u, v] = g.edges()[e];
      if (f[u] != f[v]) row.coeffs.emplace_back(e, Rational(1));
    }
    row.rhs = Rational(2);
    lp.rows.push_back(std::move(row));
  }
  if (lp.rows.empty()) return Rational(0);
  return solve_lp_min(lp).value;
}

std::map<Edge, Rational> uniform_z(const Graph& g, const Rational& value) {
  std::map<Edge, Rational> z;
  for (auto e : g.edges()) z[e] = value;
  return z;
}

}  // namespace

TEST_CASE("simplex solves tiny programs exactly") {
  // min x0 + x1 s.t. x0 + x1 >= 3, x0 >= 1
  LpProblem lp;
  lp.num_vars = 2;
  lp.objective = {Rational(1), Rational(1)};
  lp.rows.push_back({{{0, Rational(1)}, {1, Rational(1)}}, Rational(3)});
  lp.rows.push_back({{{0, Rational(1)}}, Rational(1)});
  auto opt = solve_lp_min(lp);
  CHECK(opt.value == Rational(3));
  CHECK(opt.x[0] + opt.x[1] == Rational(3));

  // fractional optimum: min x+y with 2x+y >= 1, x+2y >= 1
  LpProblem lp2;
  lp2.num_vars = 2;
  lp2.objective = {Rational(1), Rational(1)};
  lp2.rows.push_back({{{0, Rational(2)}, {1, Rational(1)}}, Rational(1)});
  lp2.rows.push_back({{{0, Rational(1)}, {1, Rational(2)}}, Rational(1)});
  CHECK(solve_lp_min(lp2).value == Rational(2, 3));
}

TEST_CASE("separation oracle named cases") {
  Graph path4(4, {{0, 1}, {1, 2}, {2, 3}});
  // all-2 satisfies every constraint
  CHECK(!separation_oracle(path4, uniform_z(path4, Rational(2))).has_value());
  // all-0 is split by the end edges
  auto violated = separation_oracle(path4, uniform_z(path4, Rational(0)));
  REQUIRE(violated.has_value());
  CHECK(cut_value(path4, uniform_z(path4, Rational(0)), *violated) < Rational(2));
  // the returned family member keeps one anchor edge on each side
  int inside = std::count(violated->begin(), violated->end(), true);
  CHECK(inside == 2);

  CHECK_THROWS_AS(separation_oracle(path4, uniform_z(path4, Rational(3))), std::invalid_argument);

  // stars have no two vertex-disjoint edges at all
  Graph star = star_graph(4);
  CHECK(!separation_oracle(star, uniform_z(star, Rational(0))).has_value());
}

TEST_CASE("lazy LP matches full enumeration and is feasible") {
  Graph path4(4, {{0, 1}, {1, 2}, {2, 3}});
  auto res = solve_tour_lp(path4);
  CHECK(res.optimum == Rational(2));
  CHECK(res.optimum == full_family_lp(path4));

  Graph star = star_graph(4);
  CHECK(solve_tour_lp(star).optimum == Rational(0));

  Graph c4 = cycle_graph(4);
  auto res4 = solve_tour_lp(c4);
  CHECK(res4.optimum == full_family_lp(c4));

  std::mt19937_64 rng(808);
  for (int trial = 0; trial < 20; ++trial) {
    std::uniform_int_distribution<int> n_pick(3, 7);
    Graph g = dt::random_connected_graph(rng, n_pick(rng));
    auto lp = solve_tour_lp(g);
    CHECK(lp.optimum == full_family_lp(g));
    for (const auto& f : enumerate_cut_family(g)) CHECK(cut_value(g, lp.z, f) >= Rational(2));
    for (auto [e, value] : lp.z) {
      CHECK(value >= Rational(0));
      CHECK(value <= Rational(2));
    }
    CHECK(!separation_oracle(g, lp.z).has_value());
  }
}

TEST_CASE("vertex cover tour basics") {
  Graph star = star_graph(4);
  Tour ts = vertex_cover_tour(star);
  CHECK(tour_length(star, ts) == Rational(0));
  CHECK(ts.stopped_vertices() == std::vector<VertexId>{0});

  Graph edge = dt::single_edge();
  CHECK(tour_length(edge, vertex_cover_tour(edge)) == Rational(0));

  Graph path4(4, {{0, 1}, {1, 2}, {2, 3}});
  Tour tp = vertex_cover_tour(path4);
  CHECK(tour_length(path4, tp) == Rational(2));
  auto stops = tp.stopped_vertices();
  CHECK(std::find(stops.begin(), stops.end(), 1) != stops.end());
  CHECK(std::find(stops.begin(), stops.end(), 2) != stops.end());
}

TEST_CASE("cover property and 1-tour validity on random graphs") {
  std::mt19937_64 rng(123123);
  for (int trial = 0; trial < 40; ++trial) {
    std::uniform_int_distribution<int> n_pick(2, 8);
    Graph g = dt::random_connected_graph(rng, n_pick(rng));
    auto cover = heuristic_vertex_cover(g);
    std::vector<bool> in_cover(g.vertex_count(), false);
    for (VertexId v : cover) in_cover[v] = true;
    for (auto [u, v] : g.edges()) CHECK((in_cover[u] || in_cover[v]));

    Tour t = make_nice(g, vertex_cover_tour(g));
    CHECK(is_delta_tour(g, t, Rational(1)));
  }
}

TEST_CASE("LP optimum lower-bounds the exact 1-tour") {
  for (int n = 1; n <= 4; ++n)
    for (const auto& g : all_connected_graphs(n)) {
      Rational lb = one_tour_lower_bound(g);
      auto exact = exact_shortest_tour(g, Rational(1));
      CHECK(lb <= exact.length);
    }
  // a cycle needs LP value equal to... certified below the exact length
  Graph c6 = cycle_graph(6);
  CHECK(one_tour_lower_bound(c6) <= exact_shortest_tour(c6, Rational(1)).length);
}
