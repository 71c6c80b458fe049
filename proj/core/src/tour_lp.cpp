#include "deltatour/tour_lp.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <stdexcept>

#include "deltatour/simplex.hpp"
#include "deltatour/tour_builders.hpp"

namespace deltatour {

namespace {

// Edmonds-Karp with rational capacities on an undirected network.
class FlowNetwork {
 public:
  explicit FlowNetwork(int n) : head_(n, -1) {}

  void add_undirected(int u, int v, const Rational& cap) {
    add_arc(u, v, cap);
    add_arc(v, u, cap);
  }

  // Stops once `limit` is reached: callers only need to know whether the cut
  // is below it.
  Rational max_flow(int s, int t, const Rational& limit) {
    Rational total(0);
    while (total < limit) {
      std::vector<int> pred_arc(head_.size(), -1);
      std::vector<bool> seen(head_.size(), false);
      std::deque<int> queue{s};
      seen[s] = true;
      while (!queue.empty() && !seen[t]) {
        int u = queue.front();
        queue.pop_front();
        for (int a = head_[u]; a != -1; a = next_[a]) {
          int v = to_[a];
          if (seen[v] || cap_[a].is_zero()) continue;
          seen[v] = true;
          pred_arc[v] = a;
          queue.push_back(v);
        }
      }
      if (!seen[t]) break;
      Rational aug = cap_[pred_arc[t]];
      for (int v = t; v != s;) {
        int a = pred_arc[v];
        aug = min(aug, cap_[a]);
        v = from_[a];
      }
      for (int v = t; v != s;) {
        int a = pred_arc[v];
        cap_[a] -= aug;
        cap_[a ^ 1] += aug;
        v = from_[a];
      }
      total += aug;
    }
    return total;
  }

  // After max_flow: residual-reachable side of the cut.
  std::vector<bool> source_side(int s) const {
    std::vector<bool> seen(head_.size(), false);
    std::deque<int> queue{s};
    seen[s] = true;
    while (!queue.empty()) {
      int u = queue.front();
      queue.pop_front();
      for (int a = head_[u]; a != -1; a = next_[a]) {
        if (seen[to_[a]] || cap_[a].is_zero()) continue;
        seen[to_[a]] = true;
        queue.push_back(to_[a]);
      }
    }
    return seen;
  }

 private:
  void add_arc(int u, int v, const Rational& cap) {
    from_.push_back(u);
    to_.push_back(v);
    cap_.push_back(cap);
    next_.push_back(head_[u]);
    head_[u] = static_cast<int>(to_.size()) - 1;
  }

  std::vector<int> head_, next_, to_, from_;
  std::vector<Rational> cap_;
};

bool induces_edge(const Graph& g, const CutSet& f, bool inside) {
  for (auto [u, v] : g.edges())
    if (f[u] == inside && f[v] == inside) return true;
  return false;
}

}  // namespace

Rational cut_value(const Graph& g, const std::map<Edge, Rational>& z, const CutSet& f) {
  Rational total(0);
  for (auto [u, v] : g.edges())
    if (f[u] != f[v]) total += z.at({u, v});
  return total;
}

std::vector<CutSet> enumerate_cut_family(const Graph& g) {
  int n = g.vertex_count();
  if (n > 20) throw std::invalid_argument("enumerate_cut_family: graph too large");
  std::vector<CutSet> family;
  for (long mask = 1; mask < (1L << n) - 1; ++mask) {
    CutSet f(n, false);
    for (int v = 0; v < n; ++v)
      if (mask & (1L << v)) f[v] = true;
    if (induces_edge(g, f, true) && induces_edge(g, f, false)) family.push_back(f);
  }
  return family;
}

std::optional<CutSet> separation_oracle(const Graph& g, const std::map<Edge, Rational>& z) {
  for (auto [u, v] : g.edges()) {
    const Rational& x = z.at({u, v});
    if (x < Rational(0) || x > Rational(2)) throw std::invalid_argument("separation: z outside [0,2]");
  }
  int n = g.vertex_count();
  std::optional<CutSet> best;
  Rational best_value(0);

  const auto& edges = g.edges();
  for (std::size_t i = 0; i < edges.size(); ++i)
    for (std::size_t j = i + 1; j < edges.size(); ++j) {
      auto [a, b] = edges[i];
      auto [c, d] = edges[j];
      if (a == c || a == d || b == c || b == d) continue;

      // Contract the anchor edges into terminals s and t.
      std::vector<int> node(n);
      int next = 2;
      for (int v = 0; v < n; ++v) {
        if (v == a || v == b)
          node[v] = 0;
        else if (v == c || v == d)
          node[v] = 1;
        else
          node[v] = next++;
      }
      FlowNetwork net(next);
      for (auto [u, v] : edges) {
        if (node[u] == node[v]) continue;
        net.add_undirected(node[u], node[v], z.at({u, v}));
      }
      Rational flow = net.max_flow(0, 1, Rational(2));
      if (flow >= Rational(2)) continue;
      if (!best || flow < best_value) {
        auto side = net.source_side(0);
        CutSet f(n, false);
        for (int v = 0; v < n; ++v) f[v] = side[node[v]];
        best = f;
        best_value = flow;
      }
    }
  return best;
}

TourLpResult solve_tour_lp(const Graph& g) {
  TourLpResult result;
  const auto& edges = g.edges();
  int m = static_cast<int>(edges.size());
  for (auto e : edges) result.z[e] = Rational(0);
  result.optimum = Rational(0);

  std::vector<CutSet> cuts;
  while (true) {
    auto violated = separation_oracle(g, result.z);
    if (!violated) break;
    cuts.push_back(*violated);
    ++result.constraints_generated;

    LpProblem lp;
    lp.num_vars = m;
    lp.objective.assign(m, Rational(1));
    for (const auto& f : cuts) {
      LpGeConstraint row;
      for (int e = 0; e < m; ++e) {
        auto [u, v] = edges[e];
        if (f[u] != f[v]) row.coeffs.emplace_back(e, Rational(1));
      }
      row.rhs = Rational(2);
      lp.rows.push_back(std::move(row));
    }
    LpOptimum opt = solve_lp_min(lp);
    // Minimality keeps every coordinate at most 2 automatically (clamping a
    // larger value stays feasible and is cheaper), so the box is implicit.
    for (int e = 0; e < m; ++e) {
      if (opt.x[e] > Rational(2)) throw std::logic_error("tour LP: coordinate above 2");
      result.z[edges[e]] = opt.x[e];
    }
    result.optimum = opt.value;
  }
  return result;
}

Rational one_tour_lower_bound(const Graph& g) { return solve_tour_lp(g).optimum; }

std::vector<VertexId> heuristic_vertex_cover(const Graph& g) {
  int n = g.vertex_count();
  std::vector<bool> matched(n, false), cover(n, false);
  for (auto [u, v] : g.edges())
    if (!matched[u] && !matched[v]) {
      matched[u] = matched[v] = true;
      cover[u] = cover[v] = true;
    }

  // Drop vertices whose edges are all covered from the other side,
  // low-degree vertices first.
  std::vector<VertexId> order(n);
  for (int v = 0; v < n; ++v) order[v] = v;
  std::sort(order.begin(), order.end(), [&](VertexId a, VertexId b) {
    return g.degree(a) != g.degree(b) ? g.degree(a) < g.degree(b) : a < b;
  });
  for (VertexId v : order) {
    if (!cover[v]) continue;
    bool redundant = true;
    for (VertexId w : g.neighbors(v))
      if (!cover[w]) {
        redundant = false;
        break;
      }
    if (redundant) cover[v] = false;
  }

  std::vector<VertexId> out;
  for (int v = 0; v < n; ++v)
    if (cover[v]) out.push_back(v);
  return out;
}

Tour vertex_cover_tour(const Graph& g) {
  auto cover = heuristic_vertex_cover(g);
  if (cover.empty()) {
    // Edgeless graph: a single-vertex graph.
    return Tour::single(Point::vertex(0));
  }
  std::vector<Point> pts;
  pts.reserve(cover.size());
  for (VertexId v : cover) pts.push_back(Point::vertex(v));
  return connect_points_tour(g, pts);
}

}  // namespace deltatour
