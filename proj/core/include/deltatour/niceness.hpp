#pragma once

#include "deltatour/tour.hpp"

namespace deltatour {

// The five non-degeneracy conditions for tours with z >= 3:
//   1. no two consecutive stops inside an edge,
//   2. every interior stop is a U-turn (previous stop == next stop),
//   3. at most one interior stop per edge,
//   4. no interior stop on a traversed edge,
//   5. every edge traversed at most twice.
// Throws std::invalid_argument for z < 3, where niceness is undefined.
bool is_nice(const Graph& g, const Tour& t);

// Rewrites the tour to a fixpoint of the five reduction rules, scanned in a
// fixed order with restart after every application. Each rule strictly
// decreases the discrete length, so this terminates after at most alpha(t)
// rounds. The result is nice or has at most two stops, is never longer, and
// is still a delta-tour for every delta the input satisfied.
Tour make_nice(const Graph& g, const Tour& t);

}  // namespace deltatour
