#pragma once

#include <compare>
#include <functional>
#include <string>

#include "deltatour/graph.hpp"
#include "deltatour/rational.hpp"

namespace deltatour {

// A position in the continuous body of the graph: either a vertex, or an
// interior position on an edge. Canonical form: vertices store u == v and
// lambda == 0; interior points store u < v and lambda strictly inside (0,1),
// using the mirror identity to flip orientation when needed.
class Point {
 public:
  static Point vertex(VertexId v) { return Point(v, v, Rational(0)); }
  // p(u, v, lambda) with lambda measured from u. Validates {u,v} against g
  // and returns the canonical form (a vertex when lambda is 0 or 1).
  static Point on_edge(const Graph& g, VertexId u, VertexId v, const Rational& lambda);

  bool is_vertex() const { return u_ == v_; }
  VertexId as_vertex() const { return u_; }
  VertexId edge_u() const { return u_; }
  VertexId edge_v() const { return v_; }
  const Rational& lambda() const { return lam_; }

  // True when the point lies on edge {a,b} (for a vertex: is an endpoint).
  bool lies_on(VertexId a, VertexId b) const;
  // Position within edge {a,b} measured from min(a,b); requires lies_on.
  Rational position_on(VertexId a, VertexId b) const;
  // Distance from the given endpoint of an edge the point lies on.
  Rational offset_from(VertexId endpoint, VertexId other) const;

  std::string str() const;

  friend bool operator==(const Point& a, const Point& b) = default;
  friend std::strong_ordering operator<=>(const Point& a, const Point& b) {
    if (auto c = a.u_ <=> b.u_; c != 0) return c;
    if (auto c = a.v_ <=> b.v_; c != 0) return c;
    return a.lam_ <=> b.lam_;
  }

  std::size_t hash() const;

 private:
  Point(VertexId u, VertexId v, Rational lam) : u_(u), v_(v), lam_(std::move(lam)) {}

  VertexId u_;
  VertexId v_;
  Rational lam_;
};

// Re-expresses a point in canonical form, checking it against the graph.
// (Point::on_edge already canonicalizes; this is the spec-level entry used
// when deserializing raw records.)
Point canonicalize_point(const Graph& g, VertexId u, VertexId v, const Rational& lambda);

// The continuous metric d(p, q) on P(G): within-edge offset when a direct
// in-edge route wins, otherwise the best routing through host-edge
// endpoints.
Rational point_distance(const Graph& g, const Point& p, const Point& q);

// Stop sequence of a shortest p-q walk (consecutive entries share an edge),
// realizing point_distance(g, p, q).
std::vector<Point> shortest_point_walk(const Graph& g, const Point& p, const Point& q);

}  // namespace deltatour

template <>
struct std::hash<deltatour::Point> {
  std::size_t operator()(const deltatour::Point& p) const { return p.hash(); }
};
