#pragma once

#include <utility>
#include <vector>

namespace deltatour {

// Edge multiset over dense vertex ids; used internally for Euler-tour
// construction (tour doubling, postman duplication, traversal reduction).
struct Multigraph {
  int vertex_count = 0;
  std::vector<std::pair<int, int>> edges;

  std::vector<int> degrees() const;
};

// Closed vertex sequence v_0 ... v_k = v_0 using every multi-edge exactly
// once (Hierholzer). Requires all degrees even and the support connected;
// throws std::invalid_argument otherwise. Vertices with degree zero are
// ignored. Deterministic: starts at the smallest non-isolated vertex and
// scans incident edges in insertion order.
std::vector<int> euler_tour(const Multigraph& m);

}  // namespace deltatour
