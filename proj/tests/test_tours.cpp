#include <catch2/catch_amalgamated.hpp>

#include "deltatour/coverage.hpp"
#include "deltatour/niceness.hpp"
#include "deltatour/tour.hpp"
#include "test_support.hpp"

using namespace deltatour;
namespace dt = deltatour::testing;

TEST_CASE("tour construction enforces the closed-walk invariants") {
  Graph path(3, {{0, 1}, {1, 2}});
  CHECK_THROWS_AS(Tour::closed(path, {}), std::invalid_argument);
  // consecutive stops must share an edge
  CHECK_THROWS_AS(
      Tour::close_and_validate(path, {Point::vertex(0), Point::vertex(2), Point::vertex(0)}),
      std::invalid_argument);
  // consecutive stops must differ
  CHECK_THROWS_AS(
      Tour::closed(path, {Point::vertex(0), Point::vertex(0), Point::vertex(0)}),
      std::invalid_argument);
  Tour ok = Tour::close_and_validate(path, {Point::vertex(0), Point::vertex(1), Point::vertex(2),
                                            Point::vertex(1)});
  CHECK(ok.alpha() == 4);
}

TEST_CASE("tour length sums within-edge distances") {
  Graph edge = dt::single_edge();
  Tour peek = Tour::close_and_validate(
      edge, {Point::vertex(0), Point::on_edge(edge, 0, 1, Rational(1, 2)), Point::vertex(0)});
  CHECK(tour_length(edge, peek) == Rational(1));

  auto fx = dt::edge_shuttle_fixture();
  Point a = Point::on_edge(fx.graph, fx.v, fx.x, Rational(2, 3));   // 1/3 from x
  Point b = Point::on_edge(fx.graph, fx.v, fx.x, Rational(5, 6));   // 1/6 from x
  Tour shuttle = Tour::close_and_validate(fx.graph, {a, b, a});
  CHECK(tour_length(fx.graph, shuttle) == Rational(1, 3));

  CHECK(tour_length(edge, Tour::single(Point::vertex(0))) == Rational(0));
}

TEST_CASE("passes detects points on traversed segments only") {
  Graph edge = dt::single_edge();
  Tour traverse = Tour::close_and_validate(edge, {Point::vertex(0), Point::vertex(1), Point::vertex(0)});
  CHECK(passes(edge, traverse, Point::on_edge(edge, 0, 1, Rational(1, 3))));

  Tour half = Tour::close_and_validate(
      edge, {Point::vertex(0), Point::on_edge(edge, 0, 1, Rational(1, 2)), Point::vertex(0)});
  CHECK(!passes(edge, half, Point::on_edge(edge, 0, 1, Rational(3, 4))));
  CHECK(passes(edge, half, Point::on_edge(edge, 0, 1, Rational(1, 2))));
}

TEST_CASE("distance to tour is zero on passed points, else nearest stop") {
  Graph path(3, {{0, 1}, {1, 2}});
  Tour at_a = Tour::single(Point::vertex(0));
  CHECK(distance_to_tour(path, Point::vertex(0), at_a) == Rational(0));
  CHECK(distance_to_tour(path, Point::vertex(2), at_a) == Rational(2));

  Tour half = Tour::close_and_validate(
      path, {Point::vertex(0), Point::on_edge(path, 0, 1, Rational(1, 2)), Point::vertex(0)});
  CHECK(distance_to_tour(path, Point::vertex(1), half) == Rational(1, 2));
}

TEST_CASE("extension widens peeks and keeps the point set") {
  Graph edge = dt::single_edge();
  Tour half = Tour::close_and_validate(
      edge, {Point::vertex(0), Point::on_edge(edge, 0, 1, Rational(1, 2)), Point::vertex(0)});
  Tour ext = extension(edge, half);
  CHECK(ext.stops() == std::vector<Point>{Point::vertex(0), Point::vertex(1), Point::vertex(0)});

  Graph tri = dt::triangle();
  Tour integral = Tour::close_and_validate(
      tri, {Point::vertex(0), Point::vertex(1), Point::vertex(2), Point::vertex(0)});
  CHECK(extension(tri, integral) == integral);

  // single replacement among vertex stops
  Graph star(3, {{0, 1}, {0, 2}});
  Tour mixed = Tour::close_and_validate(
      star, {Point::vertex(0), Point::on_edge(star, 0, 1, Rational(1, 4)), Point::vertex(0),
             Point::vertex(2), Point::vertex(0)});
  Tour widened = extension(star, mixed);
  CHECK(widened.stops() == std::vector<Point>{Point::vertex(0), Point::vertex(1), Point::vertex(0),
                                              Point::vertex(2), Point::vertex(0)});

  // interior-to-interior pairs are rejected
  Tour shuttle = Tour::close_and_validate(
      edge, {Point::on_edge(edge, 0, 1, Rational(1, 3)), Point::on_edge(edge, 0, 1, Rational(2, 3)),
             Point::on_edge(edge, 0, 1, Rational(1, 3))});
  CHECK_THROWS_AS(extension(edge, shuttle), std::invalid_argument);
}

TEST_CASE("extension point set contains the original (sampled)") {
  std::mt19937_64 rng(41);
  int done = 0;
  while (done < 50) {
    Graph g = dt::random_connected_graph(rng, 6);
    Tour t = make_nice(g, dt::random_tour(g, rng, 8));
    if (t.alpha() < 3) continue;
    ++done;
    Tour ext = extension(g, t);
    for (const auto& p : t.stops()) CHECK(passes(g, ext, p));
    for (int i = 0; i < 5; ++i) {
      std::uniform_int_distribution<int> e_pick(0, g.edge_count() - 1);
      auto [u, v] = g.edges()[e_pick(rng)];
      Point sample = Point::on_edge(g, u, v, dt::random_unit_rational(rng));
      if (passes(g, t, sample)) CHECK(passes(g, ext, sample));
    }
  }
}

TEST_CASE("niceness predicate flags each violation") {
  Graph tri = dt::triangle();
  Tour good = Tour::close_and_validate(
      tri, {Point::vertex(0), Point::vertex(1), Point::vertex(2), Point::vertex(0)});
  CHECK(is_nice(tri, good));

  Graph edge = dt::single_edge();
  Tour two_interior = Tour::close_and_validate(
      edge, {Point::vertex(0), Point::on_edge(edge, 0, 1, Rational(1, 3)), Point::vertex(0),
             Point::on_edge(edge, 0, 1, Rational(2, 3)), Point::vertex(0)});
  CHECK(!is_nice(edge, two_interior));

  Tour six_traversals = Tour::close_and_validate(
      edge, {Point::vertex(0), Point::vertex(1), Point::vertex(0), Point::vertex(1),
             Point::vertex(0), Point::vertex(1), Point::vertex(0)});
  CHECK(!is_nice(edge, six_traversals));

  Tour tiny = Tour::single(Point::vertex(0));
  CHECK_THROWS_AS(is_nice(edge, tiny), std::invalid_argument);
}

TEST_CASE("make_nice on the named examples") {
  Graph tri = dt::triangle();
  Tour good = Tour::close_and_validate(
      tri, {Point::vertex(0), Point::vertex(1), Point::vertex(2), Point::vertex(0)});
  CHECK(make_nice(tri, good) == good);

  Graph edge = dt::single_edge();
  Tour six_traversals = Tour::close_and_validate(
      edge, {Point::vertex(0), Point::vertex(1), Point::vertex(0), Point::vertex(1),
             Point::vertex(0), Point::vertex(1), Point::vertex(0)});
  Tour reduced = make_nice(edge, six_traversals);
  CHECK(tour_length(edge, reduced) == Rational(2));
  CHECK(is_delta_tour(edge, reduced, Rational(1, 2)));

  // two consecutive interior stops on a path: the result has no
  // interior-to-interior pair and is not longer
  Graph path(3, {{0, 1}, {1, 2}});
  Tour rough = Tour::close_and_validate(
      path, {Point::vertex(0), Point::on_edge(path, 0, 1, Rational(1, 3)),
             Point::on_edge(path, 0, 1, Rational(2, 3)), Point::vertex(1), Point::vertex(2),
             Point::vertex(1), Point::vertex(0)});
  Rational radius = coverage_radius(path, rough);
  Tour cleaned = make_nice(path, rough);
  CHECK(tour_length(path, cleaned) <= tour_length(path, rough));
  if (cleaned.alpha() >= 3) CHECK(is_nice(path, cleaned));
  CHECK(is_delta_tour(path, cleaned, radius));
}

TEST_CASE("make_nice properties over random tours") {
  std::mt19937_64 rng(20240601);
  for (int trial = 0; trial < 300; ++trial) {
    std::uniform_int_distribution<int> n_pick(2, 8);
    Graph g = dt::random_connected_graph(rng, n_pick(rng));
    std::uniform_int_distribution<int> len_pick(1, 10);
    Tour t = dt::random_tour(g, rng, len_pick(rng));
    Rational radius = coverage_radius(g, t);

    Tour nice = make_nice(g, t);
    CHECK(tour_length(g, nice) <= tour_length(g, t));
    CHECK(nice.alpha() <= t.alpha());
    CHECK((nice.alpha() <= 2 || is_nice(g, nice)));
    CHECK(make_nice(g, nice) == nice);
    // still covers at the input's own radius, per edge
    for (Edge e : g.edges())
      CHECK(max_edge_distance(g, e, nice).max_distance <= radius);
  }
}
