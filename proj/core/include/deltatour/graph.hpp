#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "deltatour/rational.hpp"

namespace deltatour {

using VertexId = int;
using Edge = std::pair<VertexId, VertexId>;  // normalized u < v

// Simple connected unweighted graph. Vertices are dense 0-based ids; the
// file format is 1-based and gets re-indexed at load. Immutable after
// construction, so distance tables can be shared freely.
class Graph {
 public:
  Graph(int vertex_count, std::vector<Edge> edges);

  // Parses "n m" followed by m lines "u v" (1-based). Lines starting with
  // '#' are comments. Throws std::invalid_argument on malformed input,
  // duplicate/loop edges, or a disconnected graph.
  static Graph parse(std::istream& in);
  static Graph parse_file(const std::string& path);

  int vertex_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<VertexId>& neighbors(VertexId u) const { return adj_[u]; }
  int degree(VertexId u) const { return static_cast<int>(adj_[u].size()); }

  bool has_edge(VertexId u, VertexId v) const;
  // Index into edges() for {u,v}; -1 when absent.
  int edge_index(VertexId u, VertexId v) const;

  // Hop distance between vertices (edges have unit length).
  int hop_distance(VertexId u, VertexId v) const { return dist_[u][v]; }
  Rational vertex_distance(VertexId u, VertexId v) const { return Rational(dist_[u][v]); }
  int diameter() const;

  // Some vertex on a shortest u-v path adjacent to u (u itself when u == v).
  VertexId shortest_path_step(VertexId u, VertexId v) const;
  // Vertex sequence u, ..., v along a lexicographically-least shortest path.
  std::vector<VertexId> shortest_vertex_path(VertexId u, VertexId v) const;

  void write(std::ostream& out) const;

 private:
  int n_;
  std::vector<Edge> edges_;
  std::vector<std::vector<VertexId>> adj_;
  std::vector<std::vector<int>> dist_;
  std::map<Edge, int> edge_idx_;
};

}  // namespace deltatour
