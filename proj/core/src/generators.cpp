#include "deltatour/generators.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <stdexcept>

namespace deltatour {

Graph path_graph(int n) {
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return Graph(n, std::move(edges));
}

Graph cycle_graph(int n) {
  if (n < 3) throw std::invalid_argument("cycle_graph: needs n >= 3");
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  return Graph(n, std::move(edges));
}

Graph star_graph(int n) {
  if (n < 2) throw std::invalid_argument("star_graph: needs n >= 2");
  std::vector<Edge> edges;
  for (int i = 1; i < n; ++i) edges.emplace_back(0, i);
  return Graph(n, std::move(edges));
}

Graph random_tree(int n, std::uint64_t seed) {
  if (n == 1) return Graph(1, {});
  std::mt19937_64 rng(seed);
  std::vector<Edge> edges;
  for (int v = 1; v < n; ++v) {
    std::uniform_int_distribution<int> pick(0, v - 1);
    edges.emplace_back(pick(rng), v);
  }
  return Graph(n, std::move(edges));
}

Graph random_connected_gnp(int n, const Rational& p, std::uint64_t seed) {
  if (p <= Rational(0) || p > Rational(1))
    throw std::invalid_argument("gnp: p must lie in (0, 1]");
  std::mt19937_64 rng(seed);
  long den = p.denominator().get_si();
  long num = p.numerator().get_si();
  std::uniform_int_distribution<long> coin(0, den - 1);
  for (int attempt = 0; attempt < 100000; ++attempt) {
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (coin(rng) < num) edges.emplace_back(u, v);
    try {
      return Graph(n, std::move(edges));
    } catch (const std::invalid_argument&) {
      // disconnected sample; retry
    }
  }
  throw std::invalid_argument("gnp: failed to sample a connected graph");
}

namespace {

using Mask = std::uint64_t;

std::vector<std::vector<int>> pair_index_table(int n) {
  std::vector<std::vector<int>> t(n, std::vector<int>(n, -1));
  int idx = 0;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b, ++idx) t[a][b] = t[b][a] = idx;
  return t;
}

bool mask_connected(int n, Mask mask) {
  std::vector<std::vector<int>> adj(n);
  int idx = 0;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b, ++idx)
      if (mask & (Mask(1) << idx)) {
        adj[a].push_back(b);
        adj[b].push_back(a);
      }
  std::vector<bool> seen(n, false);
  std::vector<int> stack{0};
  seen[0] = true;
  int count = 1;
  while (!stack.empty()) {
    int u = stack.back();
    stack.pop_back();
    for (int v : adj[u])
      if (!seen[v]) {
        seen[v] = true;
        ++count;
        stack.push_back(v);
      }
  }
  return count == n;
}

Mask canonical_mask(int n, Mask mask, const std::vector<std::vector<int>>& table,
                    const std::vector<std::pair<int, int>>& bit_pairs) {
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  Mask best = ~Mask(0);
  do {
    Mask relabeled = 0;
    for (std::size_t idx = 0; idx < bit_pairs.size(); ++idx)
      if (mask & (Mask(1) << idx))
        relabeled |= Mask(1) << table[perm[bit_pairs[idx].first]][perm[bit_pairs[idx].second]];
    best = std::min(best, relabeled);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

}  // namespace

std::vector<Graph> all_connected_graphs(int n) {
  if (n < 1 || n > 6) throw std::invalid_argument("all_connected_graphs: supported for 1 <= n <= 6");
  if (n == 1) return {Graph(1, {})};

  int pairs = n * (n - 1) / 2;
  auto table = pair_index_table(n);
  std::vector<std::pair<int, int>> bit_pairs;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) bit_pairs.emplace_back(a, b);

  std::set<Mask> canon;
  std::vector<Graph> out;
  for (Mask mask = 0; mask < (Mask(1) << pairs); ++mask) {
    if (!mask_connected(n, mask)) continue;
    Mask c = canonical_mask(n, mask, table, bit_pairs);
    if (!canon.insert(c).second) continue;
    std::vector<Edge> edges;
    int idx = 0;
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b, ++idx)
        if (c & (Mask(1) << idx)) edges.emplace_back(a, b);
    out.push_back(Graph(n, std::move(edges)));
  }
  return out;
}

}  // namespace deltatour
