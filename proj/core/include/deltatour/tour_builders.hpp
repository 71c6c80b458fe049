#pragma once

#include "deltatour/tour.hpp"

namespace deltatour {

// Doubled spanning tree walked by an Euler tour: stops at every vertex,
// length at most 2n-2, and a valid delta-tour for every delta >= 1/2.
Tour spanning_double_tour(const Graph& g);

// Tour stopping at every given point: minimum spanning tree of the metric
// closure of the points under point_distance, doubled, Euler tour, each hop
// expanded to a shortest point walk. Length at most twice the closure MST
// weight.
Tour connect_points_tour(const Graph& g, const std::vector<Point>& points);

}  // namespace deltatour
