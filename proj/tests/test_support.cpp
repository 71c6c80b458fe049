#include "test_support.hpp"

#include <deque>
#include <numeric>
#include <stdexcept>

#include "deltatour/candidates.hpp"

namespace deltatour::testing {

DoubleTriangleFixture double_triangle_fixture() {
  // ids: corners a1..a3 = 0..2, side chains v/x/y/z per side = 3..14,
  // inner triangle c1..c3 = 15..17
  auto a = [](int i) { return i; };
  auto side = [](int s, int k) { return 3 + 4 * s + k; };  // k = 0..3
  auto c = [](int i) { return 15 + i; };

  std::vector<Edge> edges;
  for (int s = 0; s < 3; ++s) {
    edges.emplace_back(a(s), side(s, 0));
    for (int k = 0; k + 1 < 4; ++k) edges.emplace_back(side(s, k), side(s, k + 1));
    edges.emplace_back(side(s, 3), a((s + 1) % 3));
  }
  for (int i = 0; i < 3; ++i) edges.emplace_back(a(i), c(i));
  for (int i = 0; i < 3; ++i) edges.emplace_back(c(i), c((i + 1) % 3));
  Graph g(18, std::move(edges));

  std::vector<Point> stops;
  for (int s = 0; s < 3; ++s) {
    stops.push_back(Point::vertex(a(s)));
    stops.push_back(Point::on_edge(g, a(s), c(s), Rational(1, 2)));
    stops.push_back(Point::vertex(a(s)));
    for (int k = 0; k < 4; ++k) stops.push_back(Point::vertex(side(s, k)));
  }
  Tour tour = Tour::close_and_validate(g, std::move(stops));
  return {std::move(g), std::move(tour)};
}

EdgeShuttleFixture edge_shuttle_fixture() {
  // u=0, v=1, x=2, y=3, z=4; edges: uv, vx, xy, yz, zx
  Graph g(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 2}});
  return {std::move(g), 0, 1, 2, 3, 4};
}

Graph triangle() { return Graph(3, {{0, 1}, {1, 2}, {0, 2}}); }

Graph single_edge() { return Graph(2, {{0, 1}}); }

Rational random_unit_rational(std::mt19937_64& rng, int max_den) {
  std::uniform_int_distribution<int> den_pick(1, max_den);
  int den = den_pick(rng);
  std::uniform_int_distribution<int> num_pick(0, den);
  return Rational(num_pick(rng), den);
}

Graph random_connected_graph(std::mt19937_64& rng, int n) {
  std::vector<Edge> edges;
  for (int v = 1; v < n; ++v) {
    std::uniform_int_distribution<int> pick(0, v - 1);
    edges.emplace_back(pick(rng), v);
  }
  std::uniform_int_distribution<int> extra_pick(0, n * (n - 1) / 2);
  int extras = n >= 2 ? extra_pick(rng) / 2 : 0;
  for (int i = 0; i < extras; ++i) {
    std::uniform_int_distribution<int> vp(0, n - 1);
    int u = vp(rng), v = vp(rng);
    if (u == v) continue;
    Edge e{std::min(u, v), std::max(u, v)};
    bool dup = false;
    for (auto& f : edges)
      if (f == e) dup = true;
    if (!dup) edges.emplace_back(e);
  }
  return Graph(n, std::move(edges));
}

namespace {

Point random_point_on(const Graph& g, std::mt19937_64& rng, VertexId u, VertexId v,
                      const std::vector<Rational>* positions) {
  if (positions) {
    std::uniform_int_distribution<std::size_t> pick(0, positions->size() - 1);
    return Point::on_edge(g, u, v, (*positions)[pick(rng)]);
  }
  return Point::on_edge(g, u, v, random_unit_rational(rng));
}

Tour random_walk_tour(const Graph& g, std::mt19937_64& rng, int forward_steps,
                      const std::vector<Rational>* positions) {
  std::uniform_int_distribution<int> vertex_pick(0, g.vertex_count() - 1);
  std::vector<Point> forward{Point::vertex(vertex_pick(rng))};
  for (int step = 0; step < forward_steps; ++step) {
    const Point& cur = forward.back();
    VertexId eu, ev;
    if (cur.is_vertex()) {
      const auto& nb = g.neighbors(cur.as_vertex());
      if (nb.empty()) break;
      std::uniform_int_distribution<std::size_t> pick(0, nb.size() - 1);
      eu = cur.as_vertex();
      ev = nb[pick(rng)];
    } else {
      eu = cur.edge_u();
      ev = cur.edge_v();
    }
    Point next = random_point_on(g, rng, eu, ev, positions);
    if (next == cur) continue;
    forward.push_back(next);
  }
  if (forward.size() == 1) return Tour::single(forward[0]);
  std::vector<Point> stops = forward;
  for (auto it = forward.rbegin() + 1; it != forward.rend(); ++it) stops.push_back(*it);
  return Tour::closed(g, std::move(stops));
}

}  // namespace

Tour random_tour(const Graph& g, std::mt19937_64& rng, int forward_steps) {
  return random_walk_tour(g, rng, forward_steps, nullptr);
}

Tour random_candidate_tour(const Graph& g, const Rational& delta, std::mt19937_64& rng,
                           int forward_steps) {
  auto positions = stop_position_set(delta);
  return random_walk_tour(g, rng, forward_steps, &positions);
}

SubdividedMetricOracle::SubdividedMetricOracle(const Graph& g, int pieces) : g_(g), k_(pieces) {
  // Nodes: vertices 0..n-1, then per edge k-1 interior nodes.
  int n = g.vertex_count();
  int total = n + g.edge_count() * (k_ - 1);
  std::vector<std::vector<int>> adj(total);
  auto interior = [&](int edge_idx, int step) { return n + edge_idx * (k_ - 1) + (step - 1); };
  for (int e = 0; e < g.edge_count(); ++e) {
    auto [u, v] = g.edges()[e];
    int prev = u;
    for (int s = 1; s < k_; ++s) {
      int node = interior(e, s);
      adj[prev].push_back(node);
      adj[node].push_back(prev);
      prev = node;
    }
    adj[prev].push_back(v);
    adj[v].push_back(prev);
  }
  dist_.assign(total, std::vector<int>(total, -1));
  for (int s = 0; s < total; ++s) {
    dist_[s][s] = 0;
    std::deque<int> queue{s};
    while (!queue.empty()) {
      int a = queue.front();
      queue.pop_front();
      for (int b : adj[a])
        if (dist_[s][b] < 0) {
          dist_[s][b] = dist_[s][a] + 1;
          queue.push_back(b);
        }
    }
  }
}

int SubdividedMetricOracle::node_of(const Point& p) const {
  if (p.is_vertex()) return p.as_vertex();
  Rational scaled = p.lambda() * Rational(k_);
  if (!scaled.is_integer()) throw std::invalid_argument("oracle: position not on the grid");
  int step = static_cast<int>(*scaled.as_long());
  int e = g_.edge_index(p.edge_u(), p.edge_v());
  return g_.vertex_count() + e * (k_ - 1) + (step - 1);
}

Rational SubdividedMetricOracle::distance(const Point& p, const Point& q) const {
  return Rational(dist_[node_of(p)][node_of(q)], k_);
}

}  // namespace deltatour::testing
