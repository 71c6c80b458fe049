#pragma once

#include "deltatour/candidates.hpp"
#include "deltatour/tour.hpp"

namespace deltatour {

// Auxiliary graph for large covering ranges: candidate stopping points form
// a clique, and every maximal edge piece free of "exactly delta away"
// breakpoints gets a segment vertex adjacent to the candidates that cover
// it entirely (strictly within delta of one of its endpoints).
struct GammaGraph {
  struct Segment {
    Edge edge;
    Rational lo, hi;  // positions on the edge, lo < hi
  };

  Rational delta;
  int host_vertex_count = 0;
  std::vector<Point> candidates;               // clique part
  std::vector<Segment> segments;
  std::vector<std::vector<int>> candidate_segments;  // candidate -> covered segments
  std::vector<std::vector<int>> segment_candidates;  // segment -> covering candidates

  int vertex_count() const { return static_cast<int>(candidates.size() + segments.size()); }
  int candidate_index(const Point& p) const;  // -1 when absent

  // Weighted variant used when the covering range is part of the input:
  // candidate pairs weigh their point distance, candidate-segment edges
  // weigh n^3, which prices segment vertices out of any light dominating
  // tree.
  Rational clique_weight(const Graph& g, int ci, int cj) const;
  Rational segment_edge_weight() const;
};

// Q: the vertices plus every point at distance exactly delta from some
// candidate point. Requires delta > 1 (then no candidate sees its own edge).
std::vector<Point> exact_distance_points(const Graph& g, const Rational& delta);

GammaGraph build_gamma(const Graph& g, const Rational& delta);

// Whether the tour's stop set dominates the auxiliary graph; equivalent to
// the tour being a delta-tour when all stops are candidates (throws when
// one is not).
bool domination_equivalence_check(const Graph& g, const Tour& t, const GammaGraph& gamma);

// Greedy max-coverage dominating set, segment picks replaced by a covering
// candidate, so the result lies inside the candidate clique.
std::vector<Point> greedy_dominating_set(const GammaGraph& gamma);

// Fixed covering range (delta >= 3/2): greedy dominating set connected by a
// doubled spanning tree over hops of length at most 2*delta. Length is at
// most 4 * delta * |dominating set|.
struct LargeDeltaResult {
  Tour tour;
  int gamma_vertices = 0;
  int domset_size = 0;
  Rational tree_weight{0};
};
LargeDeltaResult fixed_delta_tour(const Graph& g, const Rational& delta);

// Covering range as part of the input (delta > 1): heuristic dominating
// tree over the weighted auxiliary graph, doubled into a tour of length at
// most twice the tree weight.
LargeDeltaResult input_delta_tour(const Graph& g, const Rational& delta);

}  // namespace deltatour
