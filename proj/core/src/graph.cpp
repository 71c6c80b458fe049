#include "deltatour/graph.hpp"

#include <algorithm>
#include <deque>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace deltatour {

Graph::Graph(int vertex_count, std::vector<Edge> edges) : n_(vertex_count) {
  if (n_ <= 0) throw std::invalid_argument("graph: vertex count must be positive");
  for (auto& [u, v] : edges) {
    if (u == v) throw std::invalid_argument("graph: loop edge");
    if (u < 0 || v < 0 || u >= n_ || v >= n_) throw std::invalid_argument("graph: vertex id out of range");
    if (u > v) std::swap(u, v);
  }
  std::sort(edges.begin(), edges.end());
  if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
    throw std::invalid_argument("graph: parallel edge");
  edges_ = std::move(edges);

  adj_.assign(n_, {});
  for (int i = 0; i < static_cast<int>(edges_.size()); ++i) {
    auto [u, v] = edges_[i];
    adj_[u].push_back(v);
    adj_[v].push_back(u);
    edge_idx_[edges_[i]] = i;
  }
  for (auto& a : adj_) std::sort(a.begin(), a.end());

  // BFS from every vertex; also serves as the connectivity check.
  dist_.assign(n_, std::vector<int>(n_, -1));
  for (int s = 0; s < n_; ++s) {
    auto& d = dist_[s];
    d[s] = 0;
    std::deque<int> queue{s};
    while (!queue.empty()) {
      int u = queue.front();
      queue.pop_front();
      for (int v : adj_[u])
        if (d[v] < 0) {
          d[v] = d[u] + 1;
          queue.push_back(v);
        }
    }
    for (int v = 0; v < n_; ++v)
      if (d[v] < 0) throw std::invalid_argument("graph: not connected");
  }
}

bool Graph::has_edge(VertexId u, VertexId v) const { return edge_index(u, v) >= 0; }

int Graph::edge_index(VertexId u, VertexId v) const {
  if (u > v) std::swap(u, v);
  auto it = edge_idx_.find({u, v});
  return it == edge_idx_.end() ? -1 : it->second;
}

int Graph::diameter() const {
  int d = 0;
  for (int u = 0; u < n_; ++u)
    for (int v = u + 1; v < n_; ++v) d = std::max(d, dist_[u][v]);
  return d;
}

VertexId Graph::shortest_path_step(VertexId u, VertexId v) const {
  if (u == v) return u;
  for (VertexId w : adj_[u])
    if (dist_[w][v] == dist_[u][v] - 1) return w;
  throw std::logic_error("graph: broken distance table");
}

std::vector<VertexId> Graph::shortest_vertex_path(VertexId u, VertexId v) const {
  std::vector<VertexId> path{u};
  while (u != v) {
    u = shortest_path_step(u, v);
    path.push_back(u);
  }
  return path;
}

Graph Graph::parse(std::istream& in) {
  std::string line;
  auto next_tokens = [&](std::vector<std::string>& out) {
    out.clear();
    while (std::getline(in, line)) {
      auto hash = line.find('#');
      if (hash != std::string::npos) line.erase(hash);
      std::istringstream ls(line);
      std::string tok;
      while (ls >> tok) out.push_back(tok);
      if (!out.empty()) return true;
    }
    return false;
  };

  std::vector<std::string> toks;
  if (!next_tokens(toks) || toks.size() != 2)
    throw std::invalid_argument("graph: expected header 'n m'");
  int n = 0, m = 0;
  try {
    n = std::stoi(toks[0]);
    m = std::stoi(toks[1]);
  } catch (const std::exception&) {
    throw std::invalid_argument("graph: bad header");
  }
  if (n <= 0 || m < 0) throw std::invalid_argument("graph: bad header");

  std::vector<Edge> edges;
  edges.reserve(m);
  for (int i = 0; i < m; ++i) {
    if (!next_tokens(toks) || toks.size() != 2)
      throw std::invalid_argument("graph: expected edge line 'u v'");
    int u = 0, v = 0;
    try {
      u = std::stoi(toks[0]);
      v = std::stoi(toks[1]);
    } catch (const std::exception&) {
      throw std::invalid_argument("graph: bad edge line");
    }
    if (u < 1 || v < 1 || u > n || v > n)
      throw std::invalid_argument("graph: edge endpoint out of range");
    edges.emplace_back(u - 1, v - 1);
  }
  return Graph(n, std::move(edges));
}

Graph Graph::parse_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("graph: cannot open " + path);
  return parse(in);
}

void Graph::write(std::ostream& out) const {
  out << n_ << " " << edges_.size() << "\n";
  for (auto [u, v] : edges_) out << u + 1 << " " << v + 1 << "\n";
}

}  // namespace deltatour
