#pragma once

#include <optional>

#include "deltatour/candidates.hpp"
#include "deltatour/coverage.hpp"
#include "deltatour/tour.hpp"

namespace deltatour {

struct ExactResult {
  Tour tour;
  Rational length;
  int max_stops;      // cap in effect
  bool cap_binding;   // a branch below the incumbent was cut by the cap
  long nodes = 0;     // search nodes expanded
};

// Default stop cap min(12, ceil(2n / s_delta)).
int default_max_stops(const Graph& g, const Rational& delta);

// Shortest delta-tour by exhaustive search over candidate stopping points:
// full scans of one- and two-stop tours, then a depth-first search over
// closed walks whose interior stops are U-turn peeks at the discretized
// positions, under branch-and-bound against the best tour known. `hint`
// seeds the incumbent (it must be a valid delta-tour). When cap_binding is
// set the cap cut branches that were still under the incumbent, so the
// result is exact only within the cap.
ExactResult exact_shortest_tour(const Graph& g, const Rational& delta, int max_stops = 0,
                                const std::optional<Tour>& hint = std::nullopt);

// Best delta-tour with at most two stops over the candidate positions, when
// one exists. Every such tour lives inside a single edge, so this is a
// quadratic scan per edge.
std::optional<Tour> best_small_tour(const Graph& g, const Rational& delta);

}  // namespace deltatour
