#include <catch2/catch_amalgamated.hpp>

#include "deltatour/coverage.hpp"
#include "deltatour/niceness.hpp"
#include "test_support.hpp"

using namespace deltatour;
namespace dt = deltatour::testing;

TEST_CASE("max edge distance on a single edge") {
  Graph edge = dt::single_edge();
  // tour sits at one endpoint: the far endpoint is the witness
  Tour at_u = Tour::single(Point::vertex(0));
  auto v1 = max_edge_distance(edge, {0, 1}, at_u);
  CHECK(v1.max_distance == Rational(1));
  CHECK(v1.witness == Point::vertex(1));
  CHECK(distance_to_tour(edge, v1.witness, at_u) == v1.max_distance);

  // stops at both endpoints, no traversal: midpoint at 1/2
  Graph tri = dt::triangle();
  Tour both = Tour::close_and_validate(
      tri, {Point::vertex(0), Point::vertex(2), Point::vertex(1), Point::vertex(2),
            Point::vertex(0)});
  auto v2 = max_edge_distance(tri, {0, 1}, both);
  CHECK(v2.max_distance == Rational(1, 2));
  CHECK(v2.witness == Point::on_edge(tri, 0, 1, Rational(1, 2)));

  // traversal covers everything
  Tour traverse = Tour::close_and_validate(edge, {Point::vertex(0), Point::vertex(1), Point::vertex(0)});
  auto v3 = max_edge_distance(edge, {0, 1}, traverse);
  CHECK(v3.max_distance == Rational(0));
  CHECK(v3.mode == CoverageMode::traversed);
}

TEST_CASE("witness always attains the reported distance") {
  std::mt19937_64 rng(123);
  for (int trial = 0; trial < 200; ++trial) {
    std::uniform_int_distribution<int> n_pick(2, 7);
    Graph g = dt::random_connected_graph(rng, n_pick(rng));
    Tour t = dt::random_tour(g, rng, 6);
    for (Edge e : g.edges()) {
      auto v = max_edge_distance(g, e, t);
      CHECK(distance_to_tour(g, v.witness, t) == v.max_distance);
      CHECK(v.witness.lies_on(e.first, e.second));
    }
  }
}

TEST_CASE("covers_edge named cases") {
  Graph edge = dt::single_edge();
  Tour mid = Tour::single(Point::on_edge(edge, 0, 1, Rational(1, 2)));
  CHECK(covers_edge(edge, {0, 1}, mid, Rational(1, 2)));

  Graph tri = dt::triangle();
  Tour walk = Tour::close_and_validate(
      tri, {Point::vertex(0), Point::vertex(1), Point::vertex(2), Point::vertex(0)});
  CHECK(covers_edge(tri, {0, 1}, walk, Rational(0)));

  Graph path(3, {{0, 1}, {1, 2}});
  Tour center = Tour::single(Point::vertex(1));
  CHECK(!covers_edge(path, {0, 1}, center, Rational(1, 2)));
}

TEST_CASE("is_delta_tour on the figure fixtures") {
  auto fig = dt::double_triangle_fixture();
  CHECK(tour_length(fig.graph, fig.tour) == Rational(18));
  CHECK(is_delta_tour(fig.graph, fig.tour, Rational(1)));
  CHECK(!is_delta_tour(fig.graph, fig.tour, Rational(1, 2)));

  auto fx = dt::edge_shuttle_fixture();
  Point a = Point::on_edge(fx.graph, fx.v, fx.x, Rational(2, 3));
  Point b = Point::on_edge(fx.graph, fx.v, fx.x, Rational(5, 6));
  Tour shuttle = Tour::close_and_validate(fx.graph, {a, b, a});
  CHECK(is_delta_tour(fx.graph, shuttle, Rational(5, 3)));
  CHECK(!is_delta_tour(fx.graph, shuttle, Rational(3, 2)));

  std::mt19937_64 rng(5);
  Graph g = dt::random_connected_graph(rng, 6);
  Tour t = dt::random_tour(g, rng, 4);
  CHECK(is_delta_tour(g, t, Rational(g.diameter() + 1)));
}

TEST_CASE("monotonicity in delta") {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 60; ++trial) {
    Graph g = dt::random_connected_graph(rng, 6);
    Tour t = dt::random_tour(g, rng, 5);
    Rational radius = coverage_radius(g, t);
    CHECK(is_delta_tour(g, t, radius));
    CHECK(is_delta_tour(g, t, radius + Rational(1, 7)));
    if (radius > Rational(0)) CHECK(!is_delta_tour(g, t, radius - Rational(1, 1000)));
  }
}

TEST_CASE("characterization agrees with the geometric maximum") {
  std::mt19937_64 rng(20240101);
  int trials = 0;
  while (trials < 400) {
    std::uniform_int_distribution<int> n_pick(2, 7);
    Graph g = dt::random_connected_graph(rng, n_pick(rng));
    Tour t = make_nice(g, dt::random_tour(g, rng, 7));
    std::uniform_int_distribution<int> num(0, 12);
    Rational delta(num(rng), 4);
    ++trials;
    for (Edge e : g.edges()) {
      bool lemma = covers_edge(g, e, t, delta);
      bool geometric = max_edge_distance(g, e, t).max_distance <= delta;
      CHECK(lemma == geometric);
    }
  }
}
