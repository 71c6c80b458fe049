#include "deltatour/tsp.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "deltatour/euler.hpp"

namespace deltatour {

Rational cycle_weight(const std::vector<std::vector<Rational>>& w, const std::vector<int>& cycle) {
  Rational total(0);
  for (std::size_t i = 1; i < cycle.size(); ++i) total += w[cycle[i - 1]][cycle[i]];
  return total;
}

std::vector<int> held_karp_tsp(const WeightedGraph& wg) {
  int n = wg.vertex_count;
  if (n > 16) throw std::invalid_argument("held_karp: more than 16 vertices");
  if (n == 1) return {0};
  auto w = wg.dense();
  if (n == 2) return {0, 1, 0};

  // dp[mask][v]: cheapest path starting at 0, visiting exactly mask, ending at v.
  int full = (1 << n) - 1;
  std::vector<std::vector<Rational>> dp(full + 1, std::vector<Rational>(n, Rational(-1)));
  std::vector<std::vector<int>> prev(full + 1, std::vector<int>(n, -1));
  dp[1][0] = Rational(0);
  for (int mask = 1; mask <= full; ++mask) {
    if (!(mask & 1)) continue;
    for (int v = 0; v < n; ++v) {
      if (!(mask & (1 << v)) || dp[mask][v] < Rational(0)) continue;
      for (int u = 1; u < n; ++u) {
        if (mask & (1 << u)) continue;
        int nm = mask | (1 << u);
        Rational cand = dp[mask][v] + w[v][u];
        if (dp[nm][u] < Rational(0) || cand < dp[nm][u]) {
          dp[nm][u] = cand;
          prev[nm][u] = v;
        }
      }
    }
  }
  int best_end = -1;
  Rational best(0);
  for (int v = 1; v < n; ++v) {
    Rational cand = dp[full][v] + w[v][0];
    if (best_end == -1 || cand < best) {
      best = cand;
      best_end = v;
    }
  }
  int mask = full, v = best_end;
  std::vector<int> back;
  while (v != -1) {
    back.push_back(v);
    int pv = prev[mask][v];
    mask &= ~(1 << v);
    v = pv;
  }
  std::reverse(back.begin(), back.end());
  // back starts at 0
  back.push_back(0);
  return back;
}

std::vector<Edge> minimum_spanning_tree(const std::vector<std::vector<Rational>>& w) {
  int n = static_cast<int>(w.size());
  std::vector<std::tuple<Rational, int, int>> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) edges.emplace_back(w[i][j], i, j);
  std::sort(edges.begin(), edges.end());

  std::vector<int> comp(n);
  for (int i = 0; i < n; ++i) comp[i] = i;
  std::function<int(int)> find = [&](int x) { return comp[x] == x ? x : comp[x] = find(comp[x]); };
  std::vector<Edge> tree;
  for (auto& [wt, i, j] : edges) {
    int a = find(i), b = find(j);
    if (a == b) continue;
    comp[a] = b;
    tree.emplace_back(i, j);
    if (static_cast<int>(tree.size()) == n - 1) break;
  }
  return tree;
}

std::vector<int> christofides_tsp(const WeightedGraph& wg) {
  int n = wg.vertex_count;
  if (n == 1) return {0};
  auto w = wg.dense();
  if (n == 2) return {0, 1, 0};

  // Spot-check the triangle inequality on a deterministic sample of triples.
  for (int i = 0; i < n && i < 6; ++i)
    for (int j = i + 1; j < n && j < 7; ++j)
      for (int k = j + 1; k < n && k < 8; ++k)
        if (w[i][k] > w[i][j] + w[j][k] || w[i][j] > w[i][k] + w[k][j] || w[j][k] > w[j][i] + w[i][k])
          throw std::invalid_argument("christofides: weights are not metric");

  auto tree = minimum_spanning_tree(w);
  std::vector<int> degree(n, 0);
  for (auto [u, v] : tree) {
    degree[u]++;
    degree[v]++;
  }
  std::vector<int> odd;
  for (int v = 0; v < n; ++v)
    if (degree[v] % 2 == 1) odd.push_back(v);

  std::vector<std::vector<Rational>> ow(odd.size(), std::vector<Rational>(odd.size(), Rational(0)));
  for (std::size_t i = 0; i < odd.size(); ++i)
    for (std::size_t j = 0; j < odd.size(); ++j)
      if (i != j) ow[i][j] = w[odd[i]][odd[j]];
  std::vector<Edge> matching =
      odd.size() < 12 ? matching_by_subset_dp(ow) : matching_by_blossom(ow);

  Multigraph mg;
  mg.vertex_count = n;
  for (auto [u, v] : tree) mg.edges.emplace_back(u, v);
  for (auto [i, j] : matching) mg.edges.emplace_back(odd[i], odd[j]);

  std::vector<int> walk = euler_tour(mg);
  std::vector<bool> seen(n, false);
  std::vector<int> cycle;
  for (int v : walk)
    if (!seen[v]) {
      seen[v] = true;
      cycle.push_back(v);
    }
  cycle.push_back(cycle.front());
  return cycle;
}

}  // namespace deltatour
