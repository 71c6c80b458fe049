#include <catch2/catch_amalgamated.hpp>

#include "deltatour/coverage.hpp"
#include "deltatour/exact.hpp"
#include "deltatour/generators.hpp"
#include "deltatour/niceness.hpp"
#include "deltatour/regimes.hpp"
#include "test_support.hpp"

using namespace deltatour;
namespace dt = deltatour::testing;

TEST_CASE("regime labels follow the interval boundaries") {
  CHECK(regime_label(Rational(0)) == "zero");
  CHECK(regime_label(Rational(1, 6)) == "(0,1/6]");
  CHECK(regime_label(Rational(1, 4)) == "(1/6,1/2)");
  CHECK(regime_label(Rational(1, 2)) == "1/2");
  CHECK(regime_label(Rational(3, 5)) == "(1/2,33/40)");
  CHECK(regime_label(Rational(33, 40)) == "[33/40,1)");
  CHECK(regime_label(Rational(1)) == "[1,3/2)");
  CHECK(regime_label(Rational(5, 4)) == "[1,3/2)");
  CHECK(regime_label(Rational(3, 2)) == "[3/2,inf)");
}

TEST_CASE("dispatcher named cases") {
  Graph tri = dt::triangle();
  auto zero = solve(tri, Rational(0));
  CHECK(zero.length == Rational(3));
  CHECK(zero.regime == "zero");

  Graph edge = dt::single_edge();
  auto half = solve(edge, Rational(1, 2));
  CHECK(half.length == Rational(0));

  auto fx = dt::edge_shuttle_fixture();
  auto large = solve(fx.graph, Rational(5, 3));
  CHECK(is_delta_tour(fx.graph, large.tour, Rational(5, 3)));
  Rational exact = exact_shortest_tour(fx.graph, Rational(5, 3)).length;
  CHECK(exact == Rational(1, 3));
  CHECK(large.length >= exact);
}

TEST_CASE("small range: postman with scaled certificate") {
  Graph tri = dt::triangle();
  Tour t = approx_small_delta(tri, Rational(1, 6));
  CHECK(tour_length(tri, t) == Rational(3));
  auto report = solve(tri, Rational(1, 6));
  CHECK(report.theoretical_ratio == Rational(3, 2));

  Graph path(3, {{0, 1}, {1, 2}});
  auto r2 = solve(path, Rational(1, 10));
  CHECK(r2.length == Rational(4));
  Rational exact = exact_shortest_tour(path, Rational(1, 10)).length;
  CHECK(r2.length / exact <= Rational(5, 4));

  Graph tree = random_tree(6, 7);
  CHECK(solve(tree, Rational(1, 6)).length == Rational(10));

  CHECK_THROWS_AS(approx_small_delta(tri, Rational(1, 5)), std::invalid_argument);
}

TEST_CASE("auxiliary TSP construction") {
  Graph star = star_graph(4);
  AuxTsp aux = build_aux_tsp(star, Rational(1, 4));
  CHECK(aux.vertices.size() == 4);  // center plus one point per leaf edge
  CHECK(aux.edges.size() == 3);
  for (const auto& w : aux.weights) CHECK(w == Rational(3, 4));

  // below 1/4, a non-leaf edge carries two interior points
  Graph path4(4, {{0, 1}, {1, 2}, {2, 3}});
  AuxTsp below = build_aux_tsp(path4, Rational(1, 5));
  int interior = 0;
  for (const auto& p : below.vertices)
    if (!p.is_vertex() && p.lies_on(1, 2)) ++interior;
  CHECK(interior == 2);

  // at or above 1/4 a single point per non-leaf edge
  AuxTsp above = build_aux_tsp(path4, Rational(1, 3));
  interior = 0;
  for (const auto& p : above.vertices)
    if (!p.is_vertex() && p.lies_on(1, 2)) ++interior;
  CHECK(interior == 1);
}

TEST_CASE("mid range stays within 3/2 of the oracle") {
  Graph star = star_graph(4);
  Tour t = approx_mid_delta(star, Rational(1, 4));
  CHECK(tour_length(star, t) == Rational(9, 2));
  CHECK(is_delta_tour(star, t, Rational(1, 4)));
  CHECK(exact_shortest_tour(star, Rational(1, 4)).length == Rational(9, 2));

  for (auto [g, delta] : {std::pair<Graph, Rational>{dt::triangle(), Rational(1, 3)},
                          {Graph(3, {{0, 1}, {1, 2}}), Rational(1, 5)}}) {
    Tour tour = approx_mid_delta(g, delta);
    CHECK(is_delta_tour(g, tour, delta));
    Rational exact = exact_shortest_tour(g, delta).length;
    CHECK(Rational(2) * tour_length(g, tour) <= Rational(3) * exact);
  }
}

TEST_CASE("half range core TSP plus leaf detours") {
  Graph star = star_graph(4);
  CHECK(tour_length(star, approx_half(star)) == Rational(3));
  CHECK(exact_shortest_tour(star, Rational(1, 2)).length == Rational(3));

  Graph path(3, {{0, 1}, {1, 2}});
  CHECK(tour_length(path, approx_half(path)) == Rational(2));
  CHECK(exact_shortest_tour(path, Rational(1, 2)).length == Rational(2));

  Graph c4 = cycle_graph(4);
  CHECK(tour_length(c4, approx_half(c4)) == Rational(4));
  CHECK(exact_shortest_tour(c4, Rational(1, 2)).length == Rational(4));
}

TEST_CASE("lift reuses the half tour above 1/2") {
  Graph path(3, {{0, 1}, {1, 2}});
  Tour half = approx_half(path);
  Tour lifted = lift_half_to_delta(path, half, Rational(3, 5));
  CHECK(lifted == half);
  CHECK(is_delta_tour(path, lifted, Rational(3, 5)));

  auto report = solve(path, Rational(3, 5));
  CHECK(report.theoretical_ratio == Rational(15, 8));
  Rational exact = exact_shortest_tour(path, Rational(3, 5)).length;
  CHECK(report.length >= exact);
}

TEST_CASE("one tour is a valid 1-tour with attached LP bound") {
  Graph star = star_graph(4);
  CHECK(tour_length(star, one_tour(star)) == Rational(0));

  Graph path4(4, {{0, 1}, {1, 2}, {2, 3}});
  CHECK(tour_length(path4, one_tour(path4)) == Rational(2));
  CHECK(exact_shortest_tour(path4, Rational(1)).length == Rational(2));

  Graph c5 = cycle_graph(5);
  auto report = solve(c5, Rational(1));
  CHECK(is_delta_tour(c5, report.tour, Rational(1)));
  CHECK(report.opt_lp.has_value());
  CHECK(report.best_lower_bound() <= report.length);
}

TEST_CASE("augmentation below one") {
  Graph path(3, {{0, 1}, {1, 2}});
  Tour center = Tour::single(Point::vertex(1));
  Tour aug = augment_below_one(path, center, Rational(9, 10));
  CHECK(tour_length(path, aug) == Rational(2, 5));
  CHECK(is_delta_tour(path, aug, Rational(9, 10)));
  CHECK(exact_shortest_tour(path, Rational(9, 10)).length == Rational(2, 5));

  Graph star = star_graph(4);
  Tour at_center = Tour::single(Point::vertex(0));
  Tour aug2 = augment_below_one(star, at_center, Rational(33, 40));
  CHECK(tour_length(star, aug2) == Rational(21, 20));
  CHECK(is_delta_tour(star, aug2, Rational(33, 40)));

  // nothing to do when every vertex is already stopped
  Graph tri = dt::triangle();
  Tour walk = Tour::close_and_validate(
      tri, {Point::vertex(0), Point::vertex(1), Point::vertex(2), Point::vertex(0)});
  CHECK(augment_below_one(tri, walk, Rational(9, 10)) == walk);
}

TEST_CASE("downshift rewrites the discretized positions") {
  Graph path(3, {{0, 1}, {1, 2}});
  Rational delta(5, 4);
  // depth 3/2 - delta = 1/4 becomes 1/2; depth 2 - delta = 3/4 becomes a
  // traversal
  Tour t = Tour::close_and_validate(
      path, {Point::vertex(0), Point::vertex(1), Point::on_edge(path, 1, 2, Rational(1, 4)),
             Point::vertex(1), Point::vertex(0)});
  Tour shifted = downshift_to_one_tour(path, t, delta);
  bool has_mid = false;
  for (const auto& p : shifted.stops())
    if (!p.is_vertex() && p.lambda() == Rational(1, 2)) has_mid = true;
  CHECK(has_mid);

  Tour t2 = Tour::close_and_validate(
      path, {Point::vertex(0), Point::vertex(1), Point::on_edge(path, 1, 2, Rational(3, 4)),
             Point::vertex(1), Point::vertex(0)});
  Tour shifted2 = downshift_to_one_tour(path, t2, delta);
  for (const auto& p : shifted2.stops()) CHECK(p.is_vertex());
  CHECK(tour_length(path, shifted2) <= tour_length(path, t2) / (Rational(3) - Rational(2) * delta));

  // downshifted tours are valid 1-tours
  CHECK(is_delta_tour(path, shifted, Rational(1)));
  CHECK(is_delta_tour(path, shifted2, Rational(1)));
}

TEST_CASE("every solve output validates at its delta") {
  std::mt19937_64 rng(606);
  std::vector<Rational> grid{Rational(0),      Rational(1, 10), Rational(1, 4), Rational(1, 2),
                             Rational(3, 5),   Rational(33, 40), Rational(9, 10), Rational(1),
                             Rational(5, 4),   Rational(3, 2),  Rational(2)};
  for (int trial = 0; trial < 8; ++trial) {
    std::uniform_int_distribution<int> n_pick(1, 7);
    Graph g = dt::random_connected_graph(rng, n_pick(rng));
    for (const auto& delta : grid) {
      SolveReport r = solve(g, delta);
      CHECK(is_delta_tour(g, r.tour, delta));
      CHECK(r.best_lower_bound() <= r.length);
      if (r.certified_ratio) CHECK(*r.certified_ratio >= Rational(1));
    }
  }
}

TEST_CASE("input-delta mode also validates") {
  std::mt19937_64 rng(707);
  for (int trial = 0; trial < 5; ++trial) {
    Graph g = dt::random_connected_graph(rng, 5);
    for (const auto& delta : {Rational(3, 2), Rational(2), Rational(3)}) {
      SolveReport r = solve(g, delta, SolveMode::input_delta);
      CHECK(is_delta_tour(g, r.tour, delta));
      CHECK(r.tree_weight.has_value());
      CHECK(r.length <= Rational(2) * *r.tree_weight + Rational(0));
    }
  }
}
