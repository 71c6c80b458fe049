#pragma once

#include <vector>

#include "deltatour/point.hpp"

namespace deltatour {

// Base position set {0, frac(delta), frac(1/2+delta), frac(2*delta)}.
std::vector<Rational> base_positions(const Rational& delta);

// Positions {0, (k+1-2d)/2, k+1-2d, (k+2-2d)/2} with k = floor(2*delta),
// valid for delta >= 1/2; clipped to [0,1].
std::vector<Rational> half_integral_positions(const Rational& delta);

// Union of the two families (the second for delta >= 1/2), closed under
// lambda -> 1-lambda, intersected with [0,1], sorted and deduplicated.
// Throws on negative delta.
std::vector<Rational> stop_position_set(const Rational& delta);

// Candidate stopping points for some shortest delta-tour, one per
// (edge, position), canonical and deduplicated, together with the minimum
// positive gap s_delta between distinct canonical position values.
struct CandidateSet {
  std::vector<Rational> positions;  // sorted, in [0,1], includes 0 and 1
  std::vector<Point> points;
  Rational min_gap;  // s_delta; 1 when there is a single canonical value
};

CandidateSet candidate_points(const Graph& g, const Rational& delta);

// s_delta alone (the positions are graph-independent).
Rational position_min_gap(const Rational& delta);

}  // namespace deltatour
