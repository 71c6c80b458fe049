#include "deltatour/regimes.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "deltatour/coverage.hpp"
#include "deltatour/exact.hpp"
#include "deltatour/niceness.hpp"
#include "deltatour/postman.hpp"
#include "deltatour/tour_builders.hpp"
#include "deltatour/tour_lp.hpp"
#include "deltatour/tsp.hpp"

namespace deltatour {

namespace {

const Rational kHalf(1, 2);
const Rational kSixth(1, 6);
const Rational kThirtyThreeForty(33, 40);
const Rational kThreeHalves(3, 2);

std::vector<VertexId> leaves_of(const Graph& g) {
  std::vector<VertexId> out;
  for (int v = 0; v < g.vertex_count(); ++v)
    if (g.degree(v) == 1) out.push_back(v);
  return out;
}

// All-pairs shortest paths over a sparse weighted graph with path
// reconstruction, used to close the auxiliary TSP instances metrically.
struct Closure {
  std::vector<std::vector<Rational>> dist;
  std::vector<std::vector<int>> mid;  // intermediate vertex or -1

  Closure(int n, const std::vector<std::pair<int, int>>& edges, const std::vector<Rational>& w) {
    const Rational inf(1000000000L);
    dist.assign(n, std::vector<Rational>(n, inf));
    mid.assign(n, std::vector<int>(n, -1));
    for (int i = 0; i < n; ++i) dist[i][i] = Rational(0);
    for (std::size_t e = 0; e < edges.size(); ++e) {
      auto [a, b] = edges[e];
      if (w[e] < dist[a][b]) dist[a][b] = dist[b][a] = w[e];
    }
    for (int k = 0; k < n; ++k)
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          if (dist[i][k] + dist[k][j] < dist[i][j]) {
            dist[i][j] = dist[i][k] + dist[k][j];
            mid[i][j] = k;
          }
  }

  void expand(int i, int j, std::vector<int>& out) const {
    int k = mid[i][j];
    if (k < 0) {
      out.push_back(j);
      return;
    }
    expand(i, k, out);
    expand(k, j, out);
  }

  // Vertex sequence i .. j realizing dist[i][j].
  std::vector<int> path(int i, int j) const {
    std::vector<int> out{i};
    if (i != j) expand(i, j, out);
    return out;
  }
};

// Certified floor for every 1/2-tour: its core TSP part dominates a spanning
// tree of the non-leaf metric closure, and each leaf costs a unit detour.
Rational half_tour_lower_bound(const Graph& g) {
  std::vector<VertexId> core;
  int n1 = 0;
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (g.degree(v) >= 2)
      core.push_back(v);
    else
      ++n1;
  }
  Rational mst(0);
  if (core.size() >= 2) {
    int k = static_cast<int>(core.size());
    std::vector<std::vector<Rational>> w(k, std::vector<Rational>(k, Rational(0)));
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j)
        if (i != j) w[i][j] = g.vertex_distance(core[i], core[j]);
    for (auto [a, b] : minimum_spanning_tree(w)) mst += w[a][b];
  }
  return mst + Rational(n1);
}

Tour cycle_to_tour(const Graph& g, const AuxTsp& aux, const Closure& closure,
                   const std::vector<int>& cycle) {
  std::vector<Point> stops;
  for (std::size_t i = 0; i + 1 < cycle.size(); ++i) {
    auto hop = closure.path(cycle[i], cycle[i + 1]);
    for (std::size_t s = 0; s + 1 < hop.size(); ++s) stops.push_back(aux.vertices[hop[s]]);
  }
  stops.push_back(aux.vertices[cycle.back()]);
  std::vector<Point> cleaned;
  for (const auto& p : stops)
    if (cleaned.empty() || cleaned.back() != p) cleaned.push_back(p);
  if (cleaned.size() == 1) return Tour::single(cleaned[0]);
  return Tour::close_and_validate(g, std::move(cleaned));
}

}  // namespace

Rational AuxTsp::mst_weight() const {
  // Kruskal over the sparse instance; it is connected by construction.
  std::vector<std::size_t> order(edges.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return weights[a] != weights[b] ? weights[a] < weights[b] : edges[a] < edges[b];
  });
  std::vector<int> comp(vertices.size());
  for (std::size_t i = 0; i < comp.size(); ++i) comp[i] = static_cast<int>(i);
  std::function<int(int)> find = [&](int x) { return comp[x] == x ? x : comp[x] = find(comp[x]); };
  Rational total(0);
  for (std::size_t e : order) {
    int a = find(edges[e].first), b = find(edges[e].second);
    if (a == b) continue;
    comp[a] = b;
    total += weights[e];
  }
  return total;
}

Tour approx_small_delta(const Graph& g, const Rational& delta) {
  if (delta <= Rational(0) || delta > kSixth)
    throw std::invalid_argument("approx_small_delta: delta outside (0, 1/6]");
  return chinese_postman_tour(g);
}

AuxTsp build_aux_tsp(const Graph& g, const Rational& delta) {
  if (delta <= kSixth || delta >= kHalf)
    throw std::invalid_argument("build_aux_tsp: delta outside (1/6, 1/2)");
  if (g.vertex_count() < 3) throw std::invalid_argument("build_aux_tsp: needs at least 3 vertices");

  AuxTsp aux;
  auto vertex_id = [&](const Point& p) {
    for (std::size_t i = 0; i < aux.vertices.size(); ++i)
      if (aux.vertices[i] == p) return static_cast<int>(i);
    aux.vertices.push_back(p);
    return static_cast<int>(aux.vertices.size() - 1);
  };
  auto add_edge = [&](const Point& a, const Point& b) {
    int ia = vertex_id(a), ib = vertex_id(b);
    aux.edges.emplace_back(std::min(ia, ib), std::max(ia, ib));
    aux.weights.push_back(point_distance(g, a, b));
  };

  for (int v = 0; v < g.vertex_count(); ++v)
    if (g.degree(v) >= 2) vertex_id(Point::vertex(v));

  const Rational two_delta = Rational(2) * delta;
  for (auto [u, v] : g.edges()) {
    bool u_leaf = g.degree(u) == 1, v_leaf = g.degree(v) == 1;
    if (u_leaf || v_leaf) {
      VertexId hub = u_leaf ? v : u;
      VertexId leaf = u_leaf ? u : v;
      add_edge(Point::vertex(hub), Point::on_edge(g, hub, leaf, Rational(1) - delta));
    } else if (delta < Rational(1, 4)) {
      Point pu = Point::on_edge(g, u, v, two_delta);
      Point pv = Point::on_edge(g, v, u, two_delta);
      add_edge(Point::vertex(u), pu);
      add_edge(pu, pv);
      add_edge(pv, Point::vertex(v));
    } else {
      Point p = Point::on_edge(g, u, v, two_delta);
      add_edge(Point::vertex(u), p);
      add_edge(p, Point::vertex(v));
    }
  }
  return aux;
}

Tour approx_mid_delta(const Graph& g, const Rational& delta) {
  AuxTsp aux = build_aux_tsp(g, delta);
  int h = static_cast<int>(aux.vertices.size());
  Closure closure(h, aux.edges, aux.weights);
  std::vector<std::vector<Rational>> w(h, std::vector<Rational>(h, Rational(0)));
  for (int i = 0; i < h; ++i)
    for (int j = 0; j < h; ++j)
      if (i != j) w[i][j] = closure.dist[i][j];
  auto cycle = christofides_tsp(WeightedGraph::complete(w));
  return cycle_to_tour(g, aux, closure, cycle);
}

Tour approx_half(const Graph& g) {
  if (g.vertex_count() < 3) throw std::invalid_argument("approx_half: needs at least 3 vertices");
  std::vector<VertexId> core;
  for (int v = 0; v < g.vertex_count(); ++v)
    if (g.degree(v) >= 2) core.push_back(v);
  std::vector<VertexId> leaves = leaves_of(g);

  std::vector<Point> stops;
  if (core.size() == 1) {
    stops.push_back(Point::vertex(core[0]));
  } else {
    int k = static_cast<int>(core.size());
    std::vector<std::vector<Rational>> w(k, std::vector<Rational>(k, Rational(0)));
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j)
        if (i != j) w[i][j] = g.vertex_distance(core[i], core[j]);
    auto cycle = christofides_tsp(WeightedGraph::complete(w));
    // Hops in the metric closure expand to vertex paths; shortest paths
    // between non-leaf vertices never route through a leaf.
    for (std::size_t i = 0; i + 1 < cycle.size(); ++i) {
      auto path = g.shortest_vertex_path(core[cycle[i]], core[cycle[i + 1]]);
      for (std::size_t s = 0; s + 1 < path.size(); ++s) stops.push_back(Point::vertex(path[s]));
    }
    stops.push_back(Point::vertex(core[cycle.back()]));
  }

  for (VertexId leaf : leaves) {
    VertexId hub = g.neighbors(leaf)[0];
    Point peek = Point::on_edge(g, hub, leaf, kHalf);
    bool inserted = false;
    for (std::size_t i = 0; i < stops.size(); ++i)
      if (stops[i] == Point::vertex(hub)) {
        stops.insert(stops.begin() + static_cast<long>(i) + 1, {peek, Point::vertex(hub)});
        inserted = true;
        break;
      }
    if (!inserted) throw std::logic_error("approx_half: leaf hub missing from tour");
  }
  if (stops.size() == 1) return Tour::single(stops[0]);
  return Tour::close_and_validate(g, std::move(stops));
}

Tour lift_half_to_delta(const Graph& g, const Tour& t_half, const Rational& delta) {
  if (!(delta > kHalf && delta < kThirtyThreeForty))
    throw std::invalid_argument("lift_half_to_delta: delta outside (1/2, 33/40)");
  if (!is_delta_tour(g, t_half, kHalf))
    throw std::logic_error("lift_half_to_delta: input is not a 1/2-tour");
  return t_half;
}

Tour one_tour(const Graph& g) {
  if (g.vertex_count() < 3) throw std::invalid_argument("one_tour: needs at least 3 vertices");
  return make_nice(g, vertex_cover_tour(g));
}

Tour augment_below_one(const Graph& g, const Tour& t_one, const Rational& delta) {
  if (!(delta >= kThirtyThreeForty && delta < Rational(1)))
    throw std::invalid_argument("augment_below_one: delta outside [33/40, 1)");

  std::vector<bool> stopped(g.vertex_count(), false);
  for (VertexId v : t_one.stopped_vertices()) stopped[v] = true;

  std::vector<Point> stops(t_one.stops().begin(), t_one.stops().end());
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (stopped[v]) continue;
    VertexId hub = -1;
    for (VertexId w : g.neighbors(v))
      if (stopped[w]) {
        hub = w;
        break;
      }
    if (hub < 0) throw std::logic_error("augment_below_one: vertex stops are not a vertex cover");
    Rational depth = g.degree(v) == 1 ? Rational(1) - delta : Rational(2) * (Rational(1) - delta);
    Point peek = Point::on_edge(g, hub, v, depth);
    bool inserted = false;
    for (std::size_t i = 0; i < stops.size(); ++i)
      if (stops[i] == Point::vertex(hub)) {
        stops.insert(stops.begin() + static_cast<long>(i) + 1, {peek, Point::vertex(hub)});
        inserted = true;
        break;
      }
    if (!inserted) throw std::logic_error("augment_below_one: hub missing from stop sequence");
  }
  if (stops.size() == 1) return Tour::single(stops[0]);
  return Tour::close_and_validate(g, std::move(stops));
}

Tour downshift_to_one_tour(const Graph& g, const Tour& t_delta, const Rational& delta) {
  if (!(delta > Rational(1) && delta < kThreeHalves))
    throw std::invalid_argument("downshift_to_one_tour: delta outside (1, 3/2)");
  if (t_delta.alpha() < 3 || !is_nice(g, t_delta))
    throw std::invalid_argument("downshift_to_one_tour: tour must be nice with alpha >= 3");

  const Rational mid_pos = kThreeHalves - delta;            // becomes 1/2
  const Rational full_a = Rational(3) - Rational(2) * delta;  // becomes a traversal
  const Rational full_b = Rational(2) - delta;

  const auto& s = t_delta.stops();
  int z = t_delta.alpha();
  auto at = [&](int i) -> const Point& { return s[((i % z) + z) % z]; };
  std::vector<Point> out;
  for (int i = 0; i < z; ++i) {
    const Point& cur = at(i);
    if (cur.is_vertex()) {
      out.push_back(cur);
      continue;
    }
    const Point& anchor = at(i - 1);
    if (!anchor.is_vertex() || anchor != at(i + 1))
      throw std::invalid_argument("downshift_to_one_tour: interior stop is not a U-turn");
    VertexId a = anchor.as_vertex();
    VertexId far = a == cur.edge_u() ? cur.edge_v() : cur.edge_u();
    Rational depth = cur.offset_from(a, far);
    if (depth == mid_pos)
      out.push_back(Point::on_edge(g, a, far, kHalf));
    else if (depth == full_a || depth == full_b)
      out.push_back(Point::vertex(far));
    else
      throw std::invalid_argument("downshift_to_one_tour: stop position outside the discretized form");
  }
  out.push_back(out.front());
  std::vector<Point> cleaned;
  for (const auto& p : out)
    if (cleaned.empty() || cleaned.back() != p) cleaned.push_back(p);
  if (cleaned.size() >= 2 && cleaned.front() == cleaned.back() && cleaned.size() == 2) cleaned.pop_back();
  if (cleaned.size() == 1) return Tour::single(cleaned[0]);
  return Tour::close_and_validate(g, std::move(cleaned));
}

Rational SolveReport::best_lower_bound() const {
  Rational best(0);
  for (const auto& [src, value] : lower_bounds) best = max(best, value);
  return best;
}

std::string regime_label(const Rational& delta) {
  if (delta.is_zero()) return "zero";
  if (delta <= kSixth) return "(0,1/6]";
  if (delta < kHalf) return "(1/6,1/2)";
  if (delta == kHalf) return "1/2";
  if (delta < kThirtyThreeForty) return "(1/2,33/40)";
  if (delta < Rational(1)) return "[33/40,1)";
  if (delta < kThreeHalves) return "[1,3/2)";
  return "[3/2,inf)";
}

SolveReport solve(const Graph& g, const Rational& delta, SolveMode mode) {
  if (delta < Rational(0)) throw std::invalid_argument("solve: negative delta");
  int n = g.vertex_count();

  SolveReport r;
  r.delta = delta;
  r.regime = regime_label(delta);
  r.s_delta = position_min_gap(delta);
  std::optional<Tour> tour;

  if (n <= 2) {
    ExactResult ex = exact_shortest_tour(g, delta);
    tour = ex.tour;
    r.method = "exact-small";
    r.solved_exactly = true;
    r.lower_bounds.emplace_back("exact", ex.length);
    r.theoretical_ratio = Rational(1);
    r.ratio_basis = "exact";
  } else if (delta.is_zero()) {
    tour = chinese_postman_tour(g);
    r.method = "chinese-postman";
    r.solved_exactly = true;
    r.lower_bounds.emplace_back("exact", tour_length(g, *tour));
    r.theoretical_ratio = Rational(1);
    r.ratio_basis = "exact";
  } else if (delta <= kSixth) {
    tour = approx_small_delta(g, delta);
    r.method = "chinese-postman";
    r.theoretical_ratio = Rational(1) / (Rational(1) - Rational(2) * delta);
    r.ratio_basis = "paper";
    Rational cpp_len = tour_length(g, *tour);
    r.lower_bounds.emplace_back("postman-scaled", (Rational(1) - Rational(2) * delta) * cpp_len);
  } else if (delta < kHalf) {
    tour = approx_mid_delta(g, delta);
    r.method = "aux-tsp-christofides";
    r.theoretical_ratio = Rational(3, 2);
    r.ratio_basis = "paper";
    r.lower_bounds.emplace_back("aux-tsp-mst", build_aux_tsp(g, delta).mst_weight());
  } else if (delta == kHalf) {
    tour = approx_half(g);
    r.method = "core-tsp-plus-leaf-detours";
    r.theoretical_ratio = Rational(3, 2);
    r.ratio_basis = "shipped-bound";
    r.lower_bounds.emplace_back("core-tsp-mst-plus-leaves", half_tour_lower_bound(g));
  } else if (delta < kThirtyThreeForty) {
    tour = lift_half_to_delta(g, approx_half(g), delta);
    r.method = "half-tour-reused";
    r.theoretical_ratio = Rational(3, 2) / (Rational(2) - Rational(2) * delta);
    r.ratio_basis = "shipped-bound";
    Rational scale = Rational(2) - Rational(2) * delta;
    r.lower_bounds.emplace_back("half-tour-scaled", scale * half_tour_lower_bound(g));
  } else if (delta < Rational(1)) {
    TourLpResult lp = solve_tour_lp(g);
    r.opt_lp = lp.optimum;
    r.constraints_generated = lp.constraints_generated;
    tour = augment_below_one(g, one_tour(g), delta);
    r.method = "vertex-cover-tour-augmented";
    r.theoretical_ratio = Rational(4);
    r.ratio_basis = "paper";
    r.lower_bounds.emplace_back("opt-lp", lp.optimum);
    int n1 = static_cast<int>(leaves_of(g).size());
    Rational one_minus = Rational(1) - delta;
    r.degree_bound =
        Rational(2) * one_minus * Rational(n1) + Rational(4) * one_minus * Rational(n - n1);
  } else if (delta < kThreeHalves) {
    TourLpResult lp = solve_tour_lp(g);
    r.opt_lp = lp.optimum;
    r.constraints_generated = lp.constraints_generated;
    Tour t1 = one_tour(g);
    std::optional<Tour> small = best_small_tour(g, delta);
    if (small && tour_length(g, *small) < tour_length(g, t1)) {
      tour = *small;
      r.method = "two-stop-scan";
    } else {
      tour = t1;
      r.method = "vertex-cover-tour";
    }
    r.theoretical_ratio = Rational(3) / (Rational(3) - Rational(2) * delta);
    r.ratio_basis = "paper";
    // The LP bound scales only when the optimum has three or more stops; the
    // scan value covers the rest, so the minimum is always certified.
    Rational scaled = (Rational(3) - Rational(2) * delta) * lp.optimum;
    Rational bound = small ? min(scaled, tour_length(g, *small)) : scaled;
    r.lower_bounds.emplace_back("opt-lp-scaled-or-scan", bound);
  } else {
    LargeDeltaResult res = mode == SolveMode::input_delta ? input_delta_tour(g, delta)
                                                          : fixed_delta_tour(g, delta);
    tour = res.tour;
    r.method = mode == SolveMode::input_delta ? "dominating-tree" : "greedy-dominating-set";
    r.gamma_vertices = res.gamma_vertices;
    r.domset_size = res.domset_size;
    r.tree_weight = res.tree_weight;
    std::optional<Tour> small = best_small_tour(g, delta);
    if (small && tour_length(g, *small) < tour_length(g, *tour)) {
      tour = *small;
      r.method = "two-stop-scan";
    }
    r.ratio_basis = "measured-only";
  }

  r.tour = *tour;
  r.length = tour_length(g, r.tour);
  if (!is_delta_tour(g, r.tour, delta))
    throw std::logic_error("solve: produced tour failed validation (internal bug)");
  for (auto& [src, value] : r.lower_bounds)
    if (value > r.length) throw std::logic_error("solve: lower bound exceeds tour length");
  Rational lb = r.best_lower_bound();
  if (lb > Rational(0)) r.certified_ratio = r.length / lb;
  return r;
}

}  // namespace deltatour
