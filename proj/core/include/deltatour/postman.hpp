#pragma once

#include "deltatour/tour.hpp"

namespace deltatour {

// Shortest closed walk traversing every edge at least once: duplicate a
// minimum-weight T-join over the odd-degree vertices (perfect matching
// under shortest-path distances), then take an Euler tour. Integral tour,
// exact optimum, and a valid delta-tour for every delta >= 0.
Tour chinese_postman_tour(const Graph& g);

}  // namespace deltatour
