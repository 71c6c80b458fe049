#pragma once

#include <string>

#include "deltatour/tour.hpp"

namespace deltatour {

enum class CoverageMode { traversed, peeked, endpoint_covered, uncovered_at_delta };

std::string to_string(CoverageMode m);

// Farthest point of an edge from the tour, attained exactly. `mode` is
// structural (how the tour touches the edge); validation flips it to
// uncovered_at_delta when the max exceeds the queried delta.
struct CoverageVerdict {
  Edge edge;
  Rational max_distance;
  Point witness;
  CoverageMode mode;
};

// Exact sup over points p on the edge of distance_to_tour(p, t): the edge is
// cut at the tour's on-edge stop positions, fully-passed pieces contribute
// zero, and each remaining piece [l, r] attains (d(l) + d(r) + (r-l)) / 2.
CoverageVerdict max_edge_distance(const Graph& g, Edge edge, const Tour& t);

// Case analysis on how many edge endpoints the tour stops at. Requires the
// tour to be nice or have at most two stops; throws otherwise. Agrees with
// max_edge_distance(edge, t) <= delta on its domain.
bool covers_edge(const Graph& g, Edge edge, const Tour& t, const Rational& delta);

// Authoritative delta-tour test: every edge's max distance is at most delta,
// evaluated on the tour as given (no normalization).
bool is_delta_tour(const Graph& g, const Tour& t, const Rational& delta);

// Max over edges of max_edge_distance: the smallest delta the tour covers.
Rational coverage_radius(const Graph& g, const Tour& t);

}  // namespace deltatour
