#pragma once

#include <tuple>
#include <vector>

#include "deltatour/graph.hpp"
#include "deltatour/rational.hpp"

namespace deltatour {

// Edge-weighted graph over dense ids. Callers that need a matching or a TSP
// tour pass metric closures, so the algorithms below may assume
// completeness where documented.
struct WeightedGraph {
  int vertex_count = 0;
  std::vector<std::tuple<int, int, Rational>> edges;  // u < v, weight >= 0

  static WeightedGraph complete(const std::vector<std::vector<Rational>>& w);
  std::vector<std::vector<Rational>> dense() const;  // missing edges are an error
  bool is_complete() const;
};

// Minimum-weight perfect matching on a complete graph with an even number
// of vertices. Dispatches to the subset DP below 12 vertices and to the
// blossom algorithm otherwise; both are exact.
std::vector<Edge> min_weight_perfect_matching(const WeightedGraph& wg);

// Subset-DP backend, O(2^n * n); exact reference oracle.
std::vector<Edge> matching_by_subset_dp(const std::vector<std::vector<Rational>>& w);

// Primal-dual blossom backend with exact rational duals.
std::vector<Edge> matching_by_blossom(const std::vector<std::vector<Rational>>& w);

Rational matching_weight(const std::vector<std::vector<Rational>>& w, const std::vector<Edge>& m);

}  // namespace deltatour
