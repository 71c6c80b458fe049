#include "deltatour/euler.hpp"

#include <algorithm>
#include <stdexcept>

namespace deltatour {

std::vector<int> Multigraph::degrees() const {
  std::vector<int> deg(vertex_count, 0);
  for (auto [u, v] : edges) {
    deg[u]++;
    deg[v]++;
  }
  return deg;
}

std::vector<int> euler_tour(const Multigraph& m) {
  if (m.edges.empty()) {
    if (m.vertex_count >= 1) return {0};
    throw std::invalid_argument("euler_tour: empty multigraph");
  }
  auto deg = m.degrees();
  for (int v = 0; v < m.vertex_count; ++v)
    if (deg[v] % 2 != 0) throw std::invalid_argument("euler_tour: odd-degree vertex");

  // incidence lists of edge ids
  std::vector<std::vector<int>> inc(m.vertex_count);
  for (int e = 0; e < static_cast<int>(m.edges.size()); ++e) {
    inc[m.edges[e].first].push_back(e);
    inc[m.edges[e].second].push_back(e);
  }

  int start = 0;
  while (deg[start] == 0) ++start;

  std::vector<bool> used(m.edges.size(), false);
  std::vector<std::size_t> cursor(m.vertex_count, 0);
  std::vector<int> stack{start}, walk;
  while (!stack.empty()) {
    int u = stack.back();
    while (cursor[u] < inc[u].size() && used[inc[u][cursor[u]]]) ++cursor[u];
    if (cursor[u] == inc[u].size()) {
      walk.push_back(u);
      stack.pop_back();
    } else {
      int e = inc[u][cursor[u]];
      used[e] = true;
      stack.push_back(m.edges[e].first == u ? m.edges[e].second : m.edges[e].first);
    }
  }
  if (walk.size() != m.edges.size() + 1)
    throw std::invalid_argument("euler_tour: multigraph support is not connected");
  std::reverse(walk.begin(), walk.end());
  return walk;
}

}  // namespace deltatour
