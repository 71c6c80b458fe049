#include "deltatour/tour.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace deltatour {

Tour Tour::closed(const Graph& g, std::vector<Point> stops) {
  if (stops.empty()) throw std::invalid_argument("tour: needs at least one stop");
  if (stops.size() == 2) throw std::invalid_argument("tour: two-element sequence cannot close");
  if (stops.size() >= 2 && stops.front() != stops.back())
    throw std::invalid_argument("tour: sequence is not closed");
  for (std::size_t i = 1; i < stops.size(); ++i) {
    if (stops[i - 1] == stops[i]) throw std::invalid_argument("tour: consecutive stops equal");
    segment_edge(g, stops[i - 1], stops[i]);  // throws when no common edge
  }
  return Tour(std::move(stops));
}

Tour Tour::close_and_validate(const Graph& g, std::vector<Point> stops) {
  if (stops.size() >= 2 && stops.front() != stops.back()) stops.push_back(stops.front());
  return closed(g, std::move(stops));
}

std::vector<Point> Tour::stop_set() const {
  std::set<Point> s(stops_.begin(), stops_.end());
  return {s.begin(), s.end()};
}

std::vector<VertexId> Tour::stopped_vertices() const {
  std::set<VertexId> s;
  for (const auto& p : stops_)
    if (p.is_vertex()) s.insert(p.as_vertex());
  return {s.begin(), s.end()};
}

Edge segment_edge(const Graph& g, const Point& a, const Point& b) {
  if (!a.is_vertex()) {
    Edge e{a.edge_u(), a.edge_v()};
    if (b.lies_on(e.first, e.second)) return e;
    throw std::invalid_argument("tour: consecutive stops " + a.str() + ", " + b.str() + " share no edge");
  }
  if (!b.is_vertex()) return segment_edge(g, b, a);
  VertexId u = a.as_vertex(), v = b.as_vertex();
  if (!g.has_edge(u, v))
    throw std::invalid_argument("tour: consecutive stops " + a.str() + ", " + b.str() + " share no edge");
  return u < v ? Edge{u, v} : Edge{v, u};
}

Rational tour_length(const Graph& g, const Tour& t) {
  Rational total(0);
  const auto& s = t.stops();
  for (std::size_t i = 1; i < s.size(); ++i) {
    auto [u, v] = segment_edge(g, s[i - 1], s[i]);
    total += (s[i - 1].position_on(u, v) - s[i].position_on(u, v)).abs();
  }
  return total;
}

bool passes(const Graph& g, const Tour& t, const Point& p) {
  const auto& s = t.stops();
  if (s.size() == 1) return s[0] == p;
  for (std::size_t i = 1; i < s.size(); ++i) {
    auto [u, v] = segment_edge(g, s[i - 1], s[i]);
    if (!p.lies_on(u, v)) continue;
    Rational lo = s[i - 1].position_on(u, v), hi = s[i].position_on(u, v);
    if (lo > hi) std::swap(lo, hi);
    Rational pos = p.position_on(u, v);
    if (lo <= pos && pos <= hi) return true;
  }
  return false;
}

Rational distance_to_tour(const Graph& g, const Point& p, const Tour& t) {
  if (passes(g, t, p)) return Rational(0);
  // Not passed, so the infimum over the tour's point set is attained at a
  // stopping point.
  Rational best = point_distance(g, p, t.stops()[0]);
  for (const auto& q : t.stops()) best = min(best, point_distance(g, p, q));
  return best;
}

Tour extension(const Graph& g, const Tour& t) {
  const auto& s = t.stops();
  if (s.size() == 1) return t;

  int z = t.alpha();
  auto at = [&](int i) -> const Point& { return s[((i % z) + z) % z]; };

  std::vector<Point> stops;
  for (int i = 0; i < z; ++i) {
    const Point& cur = at(i);
    if (cur.is_vertex()) {
      stops.push_back(cur);
      continue;
    }
    const Point& prev = at(i - 1);
    const Point& next = at(i + 1);
    if (!prev.is_vertex() || !next.is_vertex())
      throw std::invalid_argument("extension: tour has consecutive interior stops");
    if (prev == next) {
      // U-turn: widen to the full edge.
      VertexId far = prev.as_vertex() == cur.edge_u() ? cur.edge_v() : cur.edge_u();
      stops.push_back(Point::vertex(far));
    }
    // Pass-through interior stop: dropping it keeps the passed set.
  }
  if (stops.empty()) throw std::invalid_argument("extension: tour has no vertex stop");
  stops.push_back(stops.front());
  // Collapse any equal consecutive stops introduced by dropped pass-throughs.
  std::vector<Point> cleaned;
  for (const auto& p : stops)
    if (cleaned.empty() || cleaned.back() != p) cleaned.push_back(p);
  if (cleaned.size() >= 2 && cleaned.front() == cleaned.back() && cleaned.size() == 2) cleaned.pop_back();
  return Tour::close_and_validate(g, std::move(cleaned));
}

}  // namespace deltatour
