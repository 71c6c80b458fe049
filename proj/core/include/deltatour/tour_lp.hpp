#pragma once

#include <map>
#include <optional>

#include "deltatour/tour.hpp"

namespace deltatour {

// Cut family for the tour LP: vertex sets F such that both sides induce at
// least one edge. Constraints read sum of z over edges crossing F >= 2.
using CutSet = std::vector<bool>;  // indicator over vertices

// Most violated cut under z, found by a minimum s-t cut for every pair of
// vertex-disjoint anchor edges (one contracted into the source, one into
// the sink). Returns the family member of smallest cut value when that
// value is below 2, otherwise nothing. Throws when z leaves [0,2].
std::optional<CutSet> separation_oracle(const Graph& g, const std::map<Edge, Rational>& z);

Rational cut_value(const Graph& g, const std::map<Edge, Rational>& z, const CutSet& f);

// Full family enumeration; test oracle for small graphs.
std::vector<CutSet> enumerate_cut_family(const Graph& g);

struct TourLpResult {
  Rational optimum;
  std::map<Edge, Rational> z;
  int constraints_generated = 0;
};

// Exact optimum of the tour LP by lazy constraint generation: solve the
// restricted LP with rational simplex, separate, repeat. An empty family
// (no two vertex-disjoint edges) yields 0.
TourLpResult solve_tour_lp(const Graph& g);

// The LP optimum, a certified lower bound on the length of every 1-tour.
Rational one_tour_lower_bound(const Graph& g);

// Maximal-matching vertex cover with redundant vertices pruned
// (low-degree-first).
std::vector<VertexId> heuristic_vertex_cover(const Graph& g);

// Integral tour whose vertex stops form a vertex cover: the heuristic cover
// connected by connect_points_tour. Validity is guaranteed; the factor-3
// bound of the rounding this replaces is reported per instance instead.
Tour vertex_cover_tour(const Graph& g);

}  // namespace deltatour
