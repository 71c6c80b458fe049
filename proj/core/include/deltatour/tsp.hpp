#pragma once

#include "deltatour/matching.hpp"

namespace deltatour {

// Exact TSP by subset dynamic programming. Requires a complete metric
// instance with at most 16 vertices. Returns a closed vertex sequence
// v_0 ... v_0 (a single vertex yields {0, 0}... no: {0}).
std::vector<int> held_karp_tsp(const WeightedGraph& wg);

// MST + minimum-weight perfect matching on odd-degree tree vertices +
// Euler tour + shortcutting. Requires a complete metric instance; the
// triangle inequality is spot-checked and a violation throws (caller bug).
// Guarantee: at most 1.5 times the optimal closed tour.
std::vector<int> christofides_tsp(const WeightedGraph& wg);

Rational cycle_weight(const std::vector<std::vector<Rational>>& w, const std::vector<int>& cycle);

// Lexicographically tie-broken minimum spanning tree on a complete weighted
// graph; returns edge list.
std::vector<Edge> minimum_spanning_tree(const std::vector<std::vector<Rational>>& w);

}  // namespace deltatour
