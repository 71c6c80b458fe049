#pragma once

#include <cstdint>
#include <random>

#include "deltatour/coverage.hpp"
#include "deltatour/graph.hpp"
#include "deltatour/tour.hpp"

namespace deltatour::testing {

// The 18-vertex double-triangle figure: an outer 15-cycle through three
// corner vertices with four subdivision vertices per side, an inner
// triangle, and a spoke from each corner to its inner vertex. Its shortest
// 1-tour walks the outer cycle and peeks to the midpoint of each spoke.
struct DoubleTriangleFixture {
  Graph graph;
  Tour tour;
};
DoubleTriangleFixture double_triangle_fixture();

// Five vertices: a triangle x,y,z with a path x-v-u attached; at covering
// range 5/3 the shortest tour shuttles between two interior points of edge
// v-x.
struct EdgeShuttleFixture {
  Graph graph;
  VertexId u, v, x, y, z;
};
EdgeShuttleFixture edge_shuttle_fixture();

Graph triangle();
Graph single_edge();

// Uniform small rational in [0,1] with denominator <= max_den.
Rational random_unit_rational(std::mt19937_64& rng, int max_den = 12);

// Random connected graph with n vertices (spanning tree plus random extras).
Graph random_connected_graph(std::mt19937_64& rng, int n);

// Random valid tour: a forward random walk over points glued to its own
// reverse. Positions are generic small rationals.
Tour random_tour(const Graph& g, std::mt19937_64& rng, int forward_steps);

// Random tour whose stops all come from the candidate set for delta.
Tour random_candidate_tour(const Graph& g, const Rational& delta, std::mt19937_64& rng,
                           int forward_steps);

// Brute-force metric oracle: subdivide each edge into k unit pieces and run
// Dijkstra on the subdivision graph. Exact for points whose positions are
// multiples of 1/k.
class SubdividedMetricOracle {
 public:
  SubdividedMetricOracle(const Graph& g, int pieces);
  Rational distance(const Point& p, const Point& q) const;
  int pieces() const { return k_; }

 private:
  int node_of(const Point& p) const;

  const Graph& g_;
  int k_;
  std::vector<std::vector<int>> dist_;  // in units of 1/k
};

}  // namespace deltatour::testing
