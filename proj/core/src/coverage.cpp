#include "deltatour/coverage.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "deltatour/niceness.hpp"

namespace deltatour {

std::string to_string(CoverageMode m) {
  switch (m) {
    case CoverageMode::traversed: return "traversed";
    case CoverageMode::peeked: return "peeked";
    case CoverageMode::endpoint_covered: return "endpoint-covered";
    case CoverageMode::uncovered_at_delta: return "uncovered-at-delta";
  }
  return "?";
}

CoverageVerdict max_edge_distance(const Graph& g, Edge edge, const Tour& t) {
  auto [x1, x2] = edge;
  if (x1 > x2) std::swap(x1, x2);
  if (!g.has_edge(x1, x2)) throw std::invalid_argument("max_edge_distance: not an edge");

  const auto& stops = t.stops();

  // Cut positions: endpoints plus every on-edge stop position.
  std::set<Rational> cuts{Rational(0), Rational(1)};
  bool interior_stop = false;
  for (const auto& p : stops)
    if (p.lies_on(x1, x2)) {
      cuts.insert(p.position_on(x1, x2));
      if (!p.is_vertex()) interior_stop = true;
    }

  // Intervals of positions fully passed by tour segments on this edge.
  std::vector<std::pair<Rational, Rational>> passed;
  for (std::size_t i = 1; i < stops.size(); ++i) {
    Edge seg = segment_edge(g, stops[i - 1], stops[i]);
    if (seg != Edge{x1, x2}) continue;
    Rational a = stops[i - 1].position_on(x1, x2), b = stops[i].position_on(x1, x2);
    if (a > b) std::swap(a, b);
    passed.emplace_back(a, b);
  }
  auto is_passed = [&](const Rational& lo, const Rational& hi) {
    for (auto& [a, b] : passed)
      if (a <= lo && hi <= b) return true;
    return false;
  };

  auto dist_at = [&](const Rational& pos) {
    return distance_to_tour(g, Point::on_edge(g, x1, x2, pos), t);
  };

  std::vector<Rational> cut_list(cuts.begin(), cuts.end());
  std::vector<Rational> cut_dist;
  cut_dist.reserve(cut_list.size());
  for (const auto& pos : cut_list) cut_dist.push_back(dist_at(pos));

  Rational best(-1);
  Rational best_pos(0);
  bool any_unpassed = false;
  for (std::size_t i = 0; i + 1 < cut_list.size(); ++i) {
    const Rational &l = cut_list[i], &r = cut_list[i + 1];
    if (is_passed(l, r)) continue;
    any_unpassed = true;
    // d is 1-Lipschitz with slopes exactly +-1 and concave on [l, r], so the
    // peak sits where the two boundary cones cross.
    Rational value = (cut_dist[i] + cut_dist[i + 1] + (r - l)) / Rational(2);
    Rational pos = (l + r + cut_dist[i + 1] - cut_dist[i]) / Rational(2);
    if (value > best) {
      best = value;
      best_pos = pos;
    }
  }
  // Endpoints can carry positive distance even when every piece is passed is
  // impossible (a passed piece has distance zero along it), but an edge fully
  // covered by passed pieces still needs a witness.
  for (std::size_t i = 0; i < cut_list.size(); ++i)
    if (cut_dist[i] > best) {
      best = cut_dist[i];
      best_pos = cut_list[i];
    }

  CoverageVerdict v{Edge{x1, x2}, best, Point::on_edge(g, x1, x2, best_pos),
                    CoverageMode::endpoint_covered};
  if (!any_unpassed && best.is_zero())
    v.mode = CoverageMode::traversed;
  else if (interior_stop)
    v.mode = CoverageMode::peeked;
  return v;
}

namespace {

// Distance from a vertex to the nearest stopping point.
Rational stop_distance(const Graph& g, VertexId x, const Tour& t) {
  Rational best = point_distance(g, Point::vertex(x), t.stops()[0]);
  for (const auto& q : t.stops()) best = min(best, point_distance(g, Point::vertex(x), q));
  return best;
}

bool stops_at(const Tour& t, VertexId x) {
  for (const auto& p : t.stops())
    if (p.is_vertex() && p.as_vertex() == x) return true;
  return false;
}

bool traverses(const Graph& g, const Tour& t, Edge e) {
  const auto& s = t.stops();
  for (std::size_t i = 1; i < s.size(); ++i) {
    if (!s[i - 1].is_vertex() || !s[i].is_vertex()) continue;
    VertexId a = s[i - 1].as_vertex(), b = s[i].as_vertex();
    if (Edge{std::min(a, b), std::max(a, b)} == e) return true;
  }
  return false;
}

// Case: the tour stops at neither endpoint.
bool covers_no_endpoint_stop(const Graph& g, Edge e, const Tour& t, const Rational& delta) {
  auto [x1, x2] = e;
  // (i) nearby stops on both sides
  if (stop_distance(g, x1, t) + stop_distance(g, x2, t) <= Rational(2) * delta - Rational(1))
    return true;
  // (ii) the tour's own stops on the edge span [<= delta, >= 1-delta]
  bool on_edge = false;
  Rational lo(2), hi(-1);
  for (const auto& p : t.stops())
    if (p.lies_on(x1, x2)) {
      on_edge = true;
      lo = min(lo, p.position_on(x1, x2));
      hi = max(hi, p.position_on(x1, x2));
    }
  return on_edge && lo <= delta && hi >= Rational(1) - delta;
}

// Case: the tour stops at x1 but not at x2.
bool covers_one_endpoint_stop(const Graph& g, Edge e, VertexId x1, VertexId x2, const Tour& t,
                              const Rational& delta) {
  // lambda_1: deepest on-edge stop measured from x1 (x1 itself gives 0)
  Rational lam1(-1);
  for (const auto& p : t.stops())
    if (p.lies_on(e.first, e.second)) lam1 = max(lam1, p.offset_from(x1, x2));
  if (lam1 < Rational(0)) return false;  // unreachable: x1 is a stop
  // (ii)
  if (lam1 >= Rational(1) - delta) return true;
  // (i): deepest stop toward x2 on any incident edge
  Rational lam2(-1);
  for (const auto& p : t.stops()) {
    if (p.is_vertex()) {
      if (p.as_vertex() != x2 && g.has_edge(p.as_vertex(), x2)) lam2 = max(lam2, Rational(0));
    } else if (p.edge_u() == x2 || p.edge_v() == x2) {
      VertexId other = p.edge_u() == x2 ? p.edge_v() : p.edge_u();
      lam2 = max(lam2, p.offset_from(other, x2));
    }
  }
  return lam2 >= Rational(0) && lam1 + lam2 >= Rational(2) - Rational(2) * delta;
}

// Case: the tour stops at both endpoints; requires niceness for z >= 3.
bool covers_two_endpoint_stops(const Graph& g, Edge e, const Tour& t, const Rational& delta) {
  if (traverses(g, t, e)) return true;
  if (delta >= Rational(1, 2)) return true;
  // (iii): a U-turn peek into this edge of depth >= 1 - 2*delta
  const auto& s = t.stops();
  int z = t.alpha();
  auto at = [&](int i) -> const Point& { return s[((i % z) + z) % z]; };
  for (int i = 0; i < z; ++i) {
    const Point& p = at(i);
    if (p.is_vertex() || !p.lies_on(e.first, e.second)) continue;
    if (at(i - 1) != at(i + 1) || !at(i - 1).is_vertex()) continue;
    VertexId anchor = at(i - 1).as_vertex();
    VertexId other = anchor == e.first ? e.second : e.first;
    if (p.offset_from(anchor, other) >= Rational(1) - Rational(2) * delta) return true;
  }
  return false;
}

}  // namespace

bool covers_edge(const Graph& g, Edge edge, const Tour& t, const Rational& delta) {
  auto [x1, x2] = edge;
  if (x1 > x2) std::swap(x1, x2);
  if (!g.has_edge(x1, x2)) throw std::invalid_argument("covers_edge: not an edge");
  Edge e{x1, x2};

  if (t.alpha() >= 3 && !is_nice(g, t))
    throw std::invalid_argument("covers_edge: tour is neither nice nor a <=2-stop tour");

  bool s1 = stops_at(t, x1), s2 = stops_at(t, x2);
  if (s1 && s2) {
    if (t.alpha() <= 2) return true;  // both stopped with <=2 stops means (x1,x2,x1)
    return covers_two_endpoint_stops(g, e, t, delta);
  }
  if (s1) return covers_one_endpoint_stop(g, e, x1, x2, t, delta);
  if (s2) return covers_one_endpoint_stop(g, e, x2, x1, t, delta);
  return covers_no_endpoint_stop(g, e, t, delta);
}

bool is_delta_tour(const Graph& g, const Tour& t, const Rational& delta) {
  for (Edge e : g.edges())
    if (max_edge_distance(g, e, t).max_distance > delta) return false;
  return true;
}

Rational coverage_radius(const Graph& g, const Tour& t) {
  Rational r(0);
  for (Edge e : g.edges()) r = max(r, max_edge_distance(g, e, t).max_distance);
  return r;
}

}  // namespace deltatour
