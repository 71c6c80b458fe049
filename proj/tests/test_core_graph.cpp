#include <catch2/catch_amalgamated.hpp>

#include <sstream>

#include "deltatour/point.hpp"
#include "deltatour/tour.hpp"
#include "test_support.hpp"

using namespace deltatour;
namespace dt = deltatour::testing;

TEST_CASE("rational arithmetic stays canonical") {
  Rational a(2, 4);
  CHECK(a == Rational(1, 2));
  CHECK(a.str() == "1/2");
  CHECK((Rational(1, 3) + Rational(1, 6)) == Rational(1, 2));
  CHECK((Rational(5, 3) * Rational(3, 5)) == Rational(1));
  CHECK(Rational(7, 2).floor() == Rational(3));
  CHECK(Rational(-1, 2).floor() == Rational(-1));
  CHECK(Rational(7, 2).ceil() == Rational(4));
  CHECK(Rational(3).str() == "3");
  CHECK(Rational(-3, 9).str() == "-1/3");
}

TEST_CASE("rational parsing accepts fractions and terminating decimals") {
  CHECK(*Rational::parse("5/3") == Rational(5, 3));
  CHECK(*Rational::parse("0.825") == Rational(33, 40));
  CHECK(*Rational::parse("2") == Rational(2));
  CHECK(*Rational::parse("-1/2") == Rational(-1, 2));
  CHECK(*Rational::parse(".5") == Rational(1, 2));
  CHECK(!Rational::parse("1/0"));
  CHECK(!Rational::parse("abc"));
  CHECK(!Rational::parse(""));
}

TEST_CASE("graph parsing re-indexes 1-based input and rejects bad files") {
  std::istringstream in("# comment\n3 2\n1 2\n2 3\n");
  Graph g = Graph::parse(in);
  CHECK(g.vertex_count() == 3);
  CHECK(g.edge_count() == 2);
  CHECK(g.has_edge(0, 1));
  CHECK(g.has_edge(1, 2));
  CHECK(!g.has_edge(0, 2));

  std::istringstream loop("2 1\n1 1\n");
  CHECK_THROWS_AS(Graph::parse(loop), std::invalid_argument);
  std::istringstream dup("2 2\n1 2\n2 1\n");
  CHECK_THROWS_AS(Graph::parse(dup), std::invalid_argument);
  std::istringstream disconnected("4 2\n1 2\n3 4\n");
  CHECK_THROWS_AS(Graph::parse(disconnected), std::invalid_argument);
}

TEST_CASE("vertex distances are exact hop counts") {
  Graph path(3, {{0, 1}, {1, 2}});
  CHECK(path.vertex_distance(0, 2) == Rational(2));
  CHECK(path.vertex_distance(0, 0) == Rational(0));

  Graph tri = dt::triangle();
  CHECK(tri.vertex_distance(0, 1) == Rational(1));

  Graph star(4, {{0, 1}, {0, 2}, {0, 3}});
  CHECK(star.vertex_distance(1, 2) == Rational(2));
}

TEST_CASE("point canonicalization") {
  Graph g(6, {{0, 2}, {1, 2}, {1, 4}, {0, 1}, {2, 5}, {0, 3}});
  // mirror identity
  Point p = Point::on_edge(g, 2, 0, Rational(1, 4));
  CHECK(p.edge_u() == 0);
  CHECK(p.edge_v() == 2);
  CHECK(p.lambda() == Rational(3, 4));
  // endpoint collapses to a vertex
  Point q = Point::on_edge(g, 0, 1, Rational(1));
  CHECK(q.is_vertex());
  CHECK(q.as_vertex() == 1);
  // already canonical
  Point r = Point::on_edge(g, 1, 4, Rational(1, 3));
  CHECK(r.edge_u() == 1);
  CHECK(r.edge_v() == 4);
  CHECK(r.lambda() == Rational(1, 3));

  CHECK_THROWS_AS(Point::on_edge(g, 3, 4, Rational(1, 2)), std::invalid_argument);
  CHECK_THROWS_AS(Point::on_edge(g, 0, 1, Rational(3, 2)), std::invalid_argument);
}

TEST_CASE("point distance on shared and distinct edges") {
  Graph path(3, {{0, 1}, {1, 2}});
  // same edge: direct within-edge difference
  CHECK(point_distance(path, Point::on_edge(path, 0, 1, Rational(3, 10)),
                       Point::on_edge(path, 0, 1, Rational(4, 5))) == Rational(1, 2));
  // interior point to a far vertex
  CHECK(point_distance(path, Point::on_edge(path, 0, 1, Rational(1, 4)), Point::vertex(2)) ==
        Rational(7, 4));

  Graph tri = dt::triangle();
  CHECK(point_distance(tri, Point::on_edge(tri, 0, 1, Rational(1, 2)),
                       Point::on_edge(tri, 0, 2, Rational(1, 2))) == Rational(1));
}

TEST_CASE("point distance agrees with the subdivision oracle and is a metric") {
  std::mt19937_64 rng(20240811);
  const int pieces = 12;
  for (int trial = 0; trial < 40; ++trial) {
    std::uniform_int_distribution<int> n_pick(2, 8);
    Graph g = dt::random_connected_graph(rng, n_pick(rng));
    dt::SubdividedMetricOracle oracle(g, pieces);

    auto random_grid_point = [&]() {
      std::uniform_int_distribution<int> e_pick(0, g.edge_count() - 1);
      auto [u, v] = g.edges()[e_pick(rng)];
      std::uniform_int_distribution<int> s_pick(0, pieces);
      return Point::on_edge(g, u, v, Rational(s_pick(rng), pieces));
    };
    for (int i = 0; i < 25; ++i) {
      Point p = random_grid_point(), q = random_grid_point(), r = random_grid_point();
      Rational dpq = point_distance(g, p, q);
      CHECK(dpq == oracle.distance(p, q));
      CHECK(dpq == point_distance(g, q, p));
      CHECK((dpq.is_zero()) == (p == q));
      CHECK(dpq <= point_distance(g, p, r) + point_distance(g, r, q));
    }
  }
}

TEST_CASE("same-edge direct distance never beats routing around") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 30; ++trial) {
    Graph g = dt::random_connected_graph(rng, 6);
    auto [u, v] = g.edges()[0];
    Point p = Point::on_edge(g, u, v, dt::random_unit_rational(rng));
    Point q = Point::on_edge(g, u, v, dt::random_unit_rational(rng));
    CHECK(point_distance(g, p, q) <= (p == q ? Rational(0) : Rational(1)));
    if (!p.is_vertex() && !q.is_vertex())
      CHECK(point_distance(g, p, q) <= (p.lambda() - q.lambda()).abs());
  }
}

TEST_CASE("shortest point walk realizes the metric") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 30; ++trial) {
    Graph g = dt::random_connected_graph(rng, 7);
    std::uniform_int_distribution<int> e_pick(0, g.edge_count() - 1);
    auto [u1, v1] = g.edges()[e_pick(rng)];
    auto [u2, v2] = g.edges()[e_pick(rng)];
    Point p = Point::on_edge(g, u1, v1, dt::random_unit_rational(rng));
    Point q = Point::on_edge(g, u2, v2, dt::random_unit_rational(rng));
    auto walk = shortest_point_walk(g, p, q);
    REQUIRE(walk.front() == p);
    REQUIRE(walk.back() == q);
    Rational len(0);
    for (std::size_t i = 1; i < walk.size(); ++i) {
      auto [a, b] = segment_edge(g, walk[i - 1], walk[i]);
      len += (walk[i - 1].position_on(a, b) - walk[i].position_on(a, b)).abs();
    }
    CHECK(len == point_distance(g, p, q));
  }
}
