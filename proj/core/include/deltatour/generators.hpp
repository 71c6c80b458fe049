#pragma once

#include <cstdint>
#include <vector>

#include "deltatour/graph.hpp"

namespace deltatour {

Graph path_graph(int n);
Graph cycle_graph(int n);
// Star with one center and n-1 leaves.
Graph star_graph(int n);
Graph random_tree(int n, std::uint64_t seed);
// G(n, p) resampled until connected; p as an exact fraction in (0, 1].
Graph random_connected_gnp(int n, const Rational& p, std::uint64_t seed);

// All connected graphs on n <= 7 vertices up to isomorphism (canonical form
// by permutation minimization), in a deterministic order.
std::vector<Graph> all_connected_graphs(int n);

}  // namespace deltatour
