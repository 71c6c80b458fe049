#include "deltatour/gamma.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "deltatour/coverage.hpp"
#include "deltatour/euler.hpp"
#include "deltatour/tsp.hpp"

namespace deltatour {

int GammaGraph::candidate_index(const Point& p) const {
  auto it = std::lower_bound(candidates.begin(), candidates.end(), p);
  if (it != candidates.end() && *it == p) return static_cast<int>(it - candidates.begin());
  return -1;
}

Rational GammaGraph::clique_weight(const Graph& g, int ci, int cj) const {
  return point_distance(g, candidates[ci], candidates[cj]);
}

Rational GammaGraph::segment_edge_weight() const {
  long n = host_vertex_count;
  return Rational(n * n * n);
}

std::vector<Point> exact_distance_points(const Graph& g, const Rational& delta) {
  if (delta <= Rational(1)) throw std::invalid_argument("exact_distance_points: needs delta > 1");
  CandidateSet cs = candidate_points(g, delta);

  std::set<Point> q;
  for (int v = 0; v < g.vertex_count(); ++v) q.insert(Point::vertex(v));
  for (const auto& p : cs.points)
    for (auto [u, v] : g.edges()) {
      // A point on uv at distance exactly delta from p must realize it
      // through an endpoint; try both anchorings and verify exactly.
      for (int side = 0; side < 2; ++side) {
        VertexId a = side == 0 ? u : v;
        Rational offset = delta - point_distance(g, p, Point::vertex(a));
        if (offset < Rational(0) || offset > Rational(1)) continue;
        Point cand = side == 0 ? Point::on_edge(g, u, v, offset)
                               : Point::on_edge(g, u, v, Rational(1) - offset);
        if (point_distance(g, p, cand) == delta) q.insert(cand);
      }
    }
  return {q.begin(), q.end()};
}

GammaGraph build_gamma(const Graph& g, const Rational& delta) {
  if (delta <= Rational(1)) throw std::invalid_argument("build_gamma: needs delta > 1");
  GammaGraph gamma;
  gamma.delta = delta;
  gamma.host_vertex_count = g.vertex_count();
  gamma.candidates = candidate_points(g, delta).points;

  std::map<Edge, std::set<Rational>> breakpoints;
  for (auto [u, v] : g.edges()) breakpoints[{u, v}] = {Rational(0), Rational(1)};
  for (const auto& p : exact_distance_points(g, delta)) {
    if (p.is_vertex()) continue;
    breakpoints[{p.edge_u(), p.edge_v()}].insert(p.lambda());
  }
  for (auto [u, v] : g.edges()) {
    const auto& cuts = breakpoints[{u, v}];
    auto it = cuts.begin();
    Rational prev = *it;
    for (++it; it != cuts.end(); ++it) {
      gamma.segments.push_back({Edge{u, v}, prev, *it});
      prev = *it;
    }
  }

  gamma.candidate_segments.assign(gamma.candidates.size(), {});
  gamma.segment_candidates.assign(gamma.segments.size(), {});
  for (std::size_t ci = 0; ci < gamma.candidates.size(); ++ci) {
    const Point& p = gamma.candidates[ci];
    for (std::size_t si = 0; si < gamma.segments.size(); ++si) {
      const auto& seg = gamma.segments[si];
      Point a = Point::on_edge(g, seg.edge.first, seg.edge.second, seg.lo);
      Point b = Point::on_edge(g, seg.edge.first, seg.edge.second, seg.hi);
      if (point_distance(g, p, a) < delta || point_distance(g, p, b) < delta) {
        gamma.candidate_segments[ci].push_back(static_cast<int>(si));
        gamma.segment_candidates[si].push_back(static_cast<int>(ci));
      }
    }
  }
  return gamma;
}

bool domination_equivalence_check(const Graph& g, const Tour& t, const GammaGraph& gamma) {
  (void)g;
  std::vector<int> picked;
  for (const auto& p : t.stop_set()) {
    int idx = gamma.candidate_index(p);
    if (idx < 0) throw std::invalid_argument("domination check: stop is not a candidate point");
    picked.push_back(idx);
  }
  if (picked.empty()) return false;
  // Candidates form a clique, so any pick dominates all of them; segment
  // vertices need a covering pick.
  std::vector<bool> seg_done(gamma.segments.size(), false);
  for (int ci : picked)
    for (int si : gamma.candidate_segments[ci]) seg_done[si] = true;
  return std::all_of(seg_done.begin(), seg_done.end(), [](bool b) { return b; });
}

std::vector<Point> greedy_dominating_set(const GammaGraph& gamma) {
  int nc = static_cast<int>(gamma.candidates.size());
  int ns = static_cast<int>(gamma.segments.size());
  int total = nc + ns;
  std::vector<bool> covered(total, false);
  std::vector<int> chosen;  // gamma vertex ids: candidates then segments
  int remaining = total;

  while (remaining > 0) {
    int best = -1, best_gain = -1;
    for (int v = 0; v < total; ++v) {
      int gain = covered[v] ? 0 : 1;
      if (v < nc) {
        for (int c = 0; c < nc; ++c)
          if (c != v && !covered[c]) ++gain;
        for (int si : gamma.candidate_segments[v])
          if (!covered[nc + si]) ++gain;
      } else {
        for (int ci : gamma.segment_candidates[v - nc])
          if (!covered[ci]) ++gain;
      }
      if (gain > best_gain) {
        best_gain = gain;
        best = v;
      }
    }
    if (best_gain == 0) throw std::logic_error("greedy dominating set: isolated vertex");
    chosen.push_back(best);
    covered[best] = true;
    if (best < nc) {
      for (int c = 0; c < nc; ++c) covered[c] = true;
      for (int si : gamma.candidate_segments[best]) covered[nc + si] = true;
    } else {
      for (int ci : gamma.segment_candidates[best - nc]) covered[ci] = true;
    }
    remaining = 0;
    for (int v = 0; v < total; ++v)
      if (!covered[v]) ++remaining;
  }

  // Segment picks move to a covering candidate; the clique keeps domination.
  std::set<int> result;
  for (int v : chosen) {
    if (v < nc) {
      result.insert(v);
    } else {
      const auto& cands = gamma.segment_candidates[v - nc];
      if (cands.empty()) throw std::logic_error("greedy dominating set: uncoverable segment");
      result.insert(cands.front());
    }
  }
  std::vector<Point> out;
  for (int ci : result) out.push_back(gamma.candidates[ci]);
  return out;
}

namespace {

// Doubled spanning tree over the picked points, expanded to walks. When
// max_hop is set, every tree edge must fit under it (the minimum spanning
// tree also minimizes the longest edge, so this certifies that the
// bounded-hop connection graph was connected).
std::pair<Tour, Rational> tree_tour(const Graph& g, const std::vector<Point>& pts,
                                    const std::optional<Rational>& max_hop = std::nullopt) {
  if (pts.size() == 1) return {Tour::single(pts[0]), Rational(0)};
  int k = static_cast<int>(pts.size());
  std::vector<std::vector<Rational>> w(k, std::vector<Rational>(k, Rational(0)));
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j) w[i][j] = w[j][i] = point_distance(g, pts[i], pts[j]);
  auto tree = minimum_spanning_tree(w);
  Rational weight(0);
  Multigraph mg;
  mg.vertex_count = k;
  for (auto [a, b] : tree) {
    if (max_hop && w[a][b] > *max_hop)
      throw std::logic_error("tree_tour: connection graph is not connected within the hop bound");
    weight += w[a][b];
    mg.edges.emplace_back(a, b);
    mg.edges.emplace_back(a, b);
  }
  auto walk = euler_tour(mg);
  std::vector<Point> stops;
  for (std::size_t i = 0; i + 1 < walk.size(); ++i) {
    auto hop = shortest_point_walk(g, pts[walk[i]], pts[walk[i + 1]]);
    for (std::size_t s = 0; s + 1 < hop.size(); ++s) stops.push_back(hop[s]);
  }
  stops.push_back(pts[walk.back()]);
  std::vector<Point> cleaned;
  for (const auto& p : stops)
    if (cleaned.empty() || cleaned.back() != p) cleaned.push_back(p);
  if (cleaned.size() == 1) return {Tour::single(cleaned[0]), weight};
  return {Tour::close_and_validate(g, std::move(cleaned)), weight};
}

}  // namespace

LargeDeltaResult fixed_delta_tour(const Graph& g, const Rational& delta) {
  if (delta < Rational(3, 2)) throw std::invalid_argument("fixed_delta_tour: needs delta >= 3/2");
  if (g.edge_count() == 0) return {Tour::single(Point::vertex(0)), 0, 0, Rational(0)};
  GammaGraph gamma = build_gamma(g, delta);
  std::vector<Point> dom = greedy_dominating_set(gamma);
  auto [tour, weight] = tree_tour(g, dom, Rational(2) * delta);
  LargeDeltaResult out{tour, gamma.vertex_count(), static_cast<int>(dom.size()), weight};
  return out;
}

LargeDeltaResult input_delta_tour(const Graph& g, const Rational& delta) {
  if (delta <= Rational(1)) throw std::invalid_argument("input_delta_tour: needs delta > 1");
  if (g.edge_count() == 0) return {Tour::single(Point::vertex(0)), 0, 0, Rational(0)};
  GammaGraph gamma = build_gamma(g, delta);

  // Distance-aware greedy: maximize new coverage, break ties toward picks
  // close to the already-chosen set (they connect cheaply in the tree).
  int nc = static_cast<int>(gamma.candidates.size());
  int ns = static_cast<int>(gamma.segments.size());
  std::vector<bool> seg_done(ns, false);
  std::vector<int> chosen;
  int remaining = ns;
  bool any_pick = false;

  while (remaining > 0 || !any_pick) {
    int best = -1, best_gain = -1;
    Rational best_dist(0);
    for (int ci = 0; ci < nc; ++ci) {
      int gain = 0;
      for (int si : gamma.candidate_segments[ci])
        if (!seg_done[si]) ++gain;
      Rational dist(0);
      if (any_pick) {
        bool first = true;
        for (int prev : chosen) {
          Rational d = point_distance(g, gamma.candidates[ci], gamma.candidates[prev]);
          if (first || d < dist) dist = d;
          first = false;
        }
      }
      if (gain > best_gain || (gain == best_gain && any_pick && dist < best_dist)) {
        best_gain = gain;
        best = ci;
        best_dist = dist;
      }
    }
    if (best < 0 || (any_pick && best_gain == 0 && remaining > 0))
      throw std::logic_error("input_delta_tour: cannot dominate remaining segments");
    chosen.push_back(best);
    any_pick = true;
    for (int si : gamma.candidate_segments[best]) seg_done[si] = true;
    remaining = 0;
    for (int si = 0; si < ns; ++si)
      if (!seg_done[si]) ++remaining;
    if (remaining == 0) break;
  }

  std::vector<Point> pts;
  for (int ci : chosen) pts.push_back(gamma.candidates[ci]);
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  auto [tour, weight] = tree_tour(g, pts);
  return LargeDeltaResult{tour, gamma.vertex_count(), static_cast<int>(pts.size()), weight};
}

}  // namespace deltatour
