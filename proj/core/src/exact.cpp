#include "deltatour/exact.hpp"

#include <algorithm>
#include <stdexcept>

#include "deltatour/postman.hpp"

namespace deltatour {

int default_max_stops(const Graph& g, const Rational& delta) {
  Rational s = position_min_gap(delta);
  Rational cap = (Rational(2 * g.vertex_count()) / s).ceil();
  long capl = cap.as_long().value_or(12);
  return static_cast<int>(std::min<long>(12, capl));
}

namespace {

struct Searcher {
  const Graph& g;
  const Rational& delta;
  int max_stops;
  bool small_delta;  // delta <= 1/2: leaf peeks at 1-delta, others at 1-2delta,
                     // tour must stop at every vertex of degree >= 2

  std::vector<Rational> peek_depths;        // delta > 1/2 depths
  Rational leaf_depth{0}, nonleaf_depth{0};  // delta <= 1/2 depths

  std::optional<Tour> best;
  Rational best_len{0};
  bool have_best = false;
  bool cap_binding = false;
  long nodes = 0;

  int start = 0;
  std::vector<int> trav;          // per edge traversal count
  std::vector<bool> peeked;       // per edge
  std::vector<int> visits;        // per vertex stop count
  std::vector<Point> seq;
  Rational len{0};
  int stops_needed = 0;           // remaining unvisited degree>=2 vertices (small delta)
  Rational coverage_need{0};      // admissible bound: cost still owed to uncovered edges
  std::vector<Rational> edge_need;

  Searcher(const Graph& g_, const Rational& d_, int cap)
      : g(g_), delta(d_), max_stops(cap), small_delta(d_ <= Rational(1, 2)) {
    if (small_delta) {
      leaf_depth = Rational(1) - delta;
      nonleaf_depth = Rational(1) - Rational(2) * delta;
    } else {
      for (const auto& lam : half_integral_positions(delta))
        if (Rational(0) < lam && lam < Rational(1)) peek_depths.push_back(lam);
      std::sort(peek_depths.begin(), peek_depths.end());
      peek_depths.erase(std::unique(peek_depths.begin(), peek_depths.end()), peek_depths.end());
    }
  }

  bool is_leaf_edge(Edge e) const { return g.degree(e.first) == 1 || g.degree(e.second) == 1; }

  Rational need_of(Edge e) const {
    if (!small_delta) return Rational(0);
    if (is_leaf_edge(e)) return Rational(2) * leaf_depth;  // peek only (traversal at delta=0 costs the same)
    if (delta.is_zero()) return Rational(1);
    return min(Rational(1), Rational(2) * nonleaf_depth);
  }

  void offer(const Tour& t) {
    Rational l = tour_length(g, t);
    if (have_best && l >= best_len) return;
    if (!is_delta_tour(g, t, delta)) return;
    best = t;
    best_len = l;
    have_best = true;
  }

  bool stopping_allowed(VertexId v) const {
    if (!small_delta || delta.is_zero()) return true;
    return g.degree(v) >= 2;
  }

  void run() {
    // Degenerate single-vertex graphs have an empty edge set.
    if (g.edge_count() == 0) {
      offer(Tour::single(Point::vertex(0)));
      return;
    }

    trav.assign(g.edge_count(), 0);
    peeked.assign(g.edge_count(), false);
    visits.assign(g.vertex_count(), 0);
    edge_need.resize(g.edge_count());
    for (int e = 0; e < g.edge_count(); ++e) edge_need[e] = need_of(g.edges()[e]);

    for (start = 0; start < g.vertex_count(); ++start) {
      if (!stopping_allowed(start)) continue;
      coverage_need = Rational(0);
      for (int e = 0; e < g.edge_count(); ++e) coverage_need += edge_need[e];
      stops_needed = 0;
      if (small_delta && !delta.is_zero())
        for (int v = 0; v < g.vertex_count(); ++v)
          if (g.degree(v) >= 2) ++stops_needed;
      if (small_delta && delta.is_zero()) stops_needed = 0;  // closure implied by edge needs

      seq = {Point::vertex(start)};
      len = Rational(0);
      visits[start] = 1;
      if (small_delta && !delta.is_zero()) --stops_needed;
      dfs(start, /*last_peek_edge=*/-1);
      visits[start] = 0;
    }
  }

  void dfs(VertexId u, int last_peek_edge) {
    ++nodes;
    // Close the walk?
    if (u == start && static_cast<int>(seq.size()) > 1) {
      bool coverage_ok = !small_delta || coverage_need.is_zero();
      bool spanning_ok = !small_delta || stops_needed == 0;
      if (coverage_ok && spanning_ok && (!have_best || len < best_len))
        offer(Tour::closed(g, seq));
    }

    int alpha = static_cast<int>(seq.size()) - 1;

    // Traversal moves.
    for (VertexId v : g.neighbors(u)) {
      if (v < start) continue;
      if (!stopping_allowed(v)) continue;
      int e = g.edge_index(u, v);
      if (peeked[e] || trav[e] >= 2) continue;
      if (small_delta && !delta.is_zero() && is_leaf_edge(g.edges()[e])) continue;
      Rational nlen = len + Rational(1);
      Rational after_need = trav[e] == 0 ? coverage_need - edge_need[e] : coverage_need;
      if (have_best && nlen + max(g.vertex_distance(v, start), after_need) >= best_len) continue;
      if (alpha + 1 > max_stops) {
        cap_binding = true;
        continue;
      }
      trav[e]++;
      Rational saved_need = edge_need[e];
      if (trav[e] == 1) {
        coverage_need -= saved_need;
        edge_need[e] = Rational(0);
      }
      bool counted = visits[v] == 0 && small_delta && !delta.is_zero() && g.degree(v) >= 2;
      if (counted) --stops_needed;
      visits[v]++;
      seq.push_back(Point::vertex(v));
      len = nlen;

      dfs(v, -1);

      len -= Rational(1);
      seq.pop_back();
      visits[v]--;
      if (counted) ++stops_needed;
      if (trav[e] == 1) {
        edge_need[e] = saved_need;
        coverage_need += saved_need;
      }
      trav[e]--;
    }

    // Peek moves.
    for (VertexId v : g.neighbors(u)) {
      int e = g.edge_index(u, v);
      if (e <= last_peek_edge) continue;  // peeks at one anchor commute; fix their order
      if (peeked[e] || trav[e] > 0) continue;

      std::vector<Rational> depths;
      if (small_delta) {
        if (delta.is_zero()) continue;
        Edge edge = g.edges()[e];
        if (is_leaf_edge(edge)) {
          if (g.degree(v) != 1) continue;  // anchor must be the non-leaf side
          depths.push_back(leaf_depth);
        } else {
          if (nonleaf_depth <= Rational(0)) continue;
          depths.push_back(nonleaf_depth);
        }
      } else {
        depths = peek_depths;
      }

      for (const auto& d : depths) {
        Rational cost = Rational(2) * d;
        Rational nlen = len + cost;
        if (have_best && nlen + max(g.vertex_distance(u, start), coverage_need - edge_need[e]) >= best_len)
          continue;
        if (alpha + 2 > max_stops) {
          cap_binding = true;
          continue;
        }
        Point p = Point::on_edge(g, u, v, d);
        peeked[e] = true;
        Rational saved_need = edge_need[e];
        coverage_need -= saved_need;
        edge_need[e] = Rational(0);
        seq.push_back(p);
        seq.push_back(Point::vertex(u));
        len = nlen;

        dfs(u, e);

        len -= cost;
        seq.pop_back();
        seq.pop_back();
        edge_need[e] = saved_need;
        coverage_need += saved_need;
        peeked[e] = false;
      }
    }
  }
};

}  // namespace

std::optional<Tour> best_small_tour(const Graph& g, const Rational& delta) {
  if (g.edge_count() == 0) return Tour::single(Point::vertex(0));
  CandidateSet cs = candidate_points(g, delta);
  std::optional<Tour> best;
  Rational best_len(0);
  auto consider = [&](Tour t) {
    Rational l = tour_length(g, t);
    if (best && l >= best_len) return;
    if (!is_delta_tour(g, t, delta)) return;
    best = std::move(t);
    best_len = l;
  };
  for (const auto& p : cs.points) consider(Tour::single(p));
  if (best && best_len.is_zero()) return best;
  for (auto [u, v] : g.edges())
    for (std::size_t i = 0; i < cs.positions.size(); ++i)
      for (std::size_t j = i + 1; j < cs.positions.size(); ++j) {
        Point a = Point::on_edge(g, u, v, cs.positions[i]);
        Point b = Point::on_edge(g, u, v, cs.positions[j]);
        if (a == b) continue;
        consider(Tour::closed(g, {a, b, a}));
      }
  return best;
}

ExactResult exact_shortest_tour(const Graph& g, const Rational& delta, int max_stops,
                                const std::optional<Tour>& hint) {
  if (delta < Rational(0)) throw std::invalid_argument("exact: negative delta");
  if (max_stops <= 0) max_stops = default_max_stops(g, delta);

  Searcher s(g, delta, max_stops);

  if (g.edge_count() > 0) {
    // Baselines: the postman tour is a delta-tour for every delta.
    s.offer(chinese_postman_tour(g));
    if (hint) {
      if (!is_delta_tour(g, *hint, delta)) throw std::logic_error("exact: hint is not a delta-tour");
      s.offer(*hint);
    }

    // Every optimal tour with at most two stops lives in the scan; the DFS
    // covers the rest.
    if (auto small = best_small_tour(g, delta)) s.offer(*small);
    if (!s.have_best || !s.best_len.is_zero()) s.run();
  } else {
    s.offer(Tour::single(Point::vertex(0)));
  }

  if (!s.have_best) throw std::logic_error("exact: no tour found");
  return ExactResult{*s.best, s.best_len, max_stops, s.cap_binding, s.nodes};
}

}  // namespace deltatour
