#pragma once

#include <vector>

#include "deltatour/point.hpp"

namespace deltatour {

// A closed walk of stopping points: p_0 ... p_z with p_0 == p_z, every two
// consecutive stops distinct and on a common edge. A single stop (z == 0) is
// a legal degenerate tour; an empty stop list is not.
//
// Tours are immutable values; all operations on them are pure functions
// taking the host graph explicitly.
class Tour {
 public:
  static Tour single(const Point& p) { return Tour({p}); }
  // Validates the closed-walk invariants against g. `stops` must already be
  // closed (first == last) unless it has a single element.
  static Tour closed(const Graph& g, std::vector<Point> stops);
  // Convenience: closes the sequence by appending the first stop if needed.
  static Tour close_and_validate(const Graph& g, std::vector<Point> stops);

  // Closed sequence p_0 ... p_z (single element for a point tour).
  const std::vector<Point>& stops() const { return stops_; }
  // Discrete length z.
  int alpha() const { return static_cast<int>(stops_.size()) - 1; }
  // Distinct stopping points.
  std::vector<Point> stop_set() const;
  // Vertices the tour stops at.
  std::vector<VertexId> stopped_vertices() const;

  friend bool operator==(const Tour& a, const Tour& b) = default;

 private:
  explicit Tour(std::vector<Point> stops) : stops_(std::move(stops)) {}

  std::vector<Point> stops_;
};

// Exact length: sum of within-edge distances of consecutive stops.
Rational tour_length(const Graph& g, const Tour& t);

// Host edge of the segment between two consecutive stops, as a normalized
// vertex pair. Throws when the pair shares no edge.
Edge segment_edge(const Graph& g, const Point& a, const Point& b);

// True iff the tour passes p, i.e. p lies on some segment between
// consecutive stops.
bool passes(const Graph& g, const Tour& t, const Point& p);

// 0 when passed, otherwise the minimum distance to a stopping point.
Rational distance_to_tour(const Graph& g, const Point& p, const Tour& t);

// Widens every U-turn segment <u, p(u,v,lambda), u> to a full traversal
// <u, v, u> and flattens pass-through interior stops, yielding an integral
// tour whose point set contains the input's. Throws on tours with two
// consecutive interior stops (normalize those first).
Tour extension(const Graph& g, const Tour& t);

}  // namespace deltatour
