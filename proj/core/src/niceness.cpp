#include "deltatour/niceness.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>

#include "deltatour/euler.hpp"

namespace deltatour {

namespace {

// Stops as an open cyclic sequence q_0 ... q_{z-1} (the closing duplicate
// dropped), which makes rotation and index arithmetic uniform.
struct Cycle {
  std::vector<Point> q;

  int size() const { return static_cast<int>(q.size()); }
  const Point& at(int i) const {
    int z = size();
    return q[((i % z) + z) % z];
  }
  void rotate_to(int i) { std::rotate(q.begin(), q.begin() + i, q.end()); }

  static Cycle of(const Tour& t) {
    Cycle c;
    c.q.assign(t.stops().begin(), t.stops().end() - (t.alpha() >= 1 ? 1 : 0));
    return c;
  }
  Tour to_tour(const Graph& g) const {
    std::vector<Point> s = q;
    if (s.size() > 1) s.push_back(s.front());
    return Tour::closed(g, std::move(s));
  }
};

std::map<Edge, int> traversal_counts(const Graph& g, const Cycle& c) {
  std::map<Edge, int> counts;
  int z = c.size();
  if (z < 2) return counts;
  for (int i = 0; i < z; ++i) {
    const Point& a = c.at(i);
    const Point& b = c.at(i + 1);
    if (a.is_vertex() && b.is_vertex()) {
      VertexId u = a.as_vertex(), v = b.as_vertex();
      counts[{std::min(u, v), std::max(u, v)}]++;
    }
  }
  return counts;
}

std::map<Edge, std::vector<int>> interior_stops_per_edge(const Cycle& c) {
  std::map<Edge, std::vector<int>> per_edge;
  for (int i = 0; i < c.size(); ++i) {
    const Point& p = c.at(i);
    if (!p.is_vertex()) per_edge[{p.edge_u(), p.edge_v()}].push_back(i);
  }
  return per_edge;
}

// Rule 1: a maximal run of consecutive interior stops collapses to either a
// single deepest stop (run anchored at one vertex) or a direct traversal
// (run crossing the edge).
std::optional<Cycle> apply_consecutive_interior(const Graph& g, Cycle c) {
  int z = c.size();
  int start = -1;
  for (int i = 0; i < z; ++i)
    if (!c.at(i).is_vertex() && !c.at(i + 1).is_vertex()) {
      start = i;
      break;
    }
  if (start < 0) return std::nullopt;

  bool all_interior = true;
  for (int i = 0; i < z; ++i)
    if (c.at(i).is_vertex()) {
      all_interior = false;
      break;
    }
  if (all_interior) {
    // Whole tour inside one edge: keep only the two extreme positions.
    VertexId u = c.at(0).edge_u(), v = c.at(0).edge_v();
    Point lo = c.at(0), hi = c.at(0);
    for (int i = 1; i < z; ++i) {
      if (c.at(i).position_on(u, v) < lo.position_on(u, v)) lo = c.at(i);
      if (c.at(i).position_on(u, v) > hi.position_on(u, v)) hi = c.at(i);
    }
    Cycle out;
    out.q = {lo, hi};
    return out;
  }

  // Rotate so a maximal-length interior run sits at the front. Runs are
  // delimited by vertex stops; pick the longest, lowest starting index first.
  int best_start = -1, best_len = 0;
  for (int i = 0; i < z; ++i) {
    if (c.at(i - 1).is_vertex() && !c.at(i).is_vertex()) {
      int len = 0;
      while (!c.at(i + len).is_vertex()) ++len;
      if (len > best_len) {
        best_len = len;
        best_start = i;
      }
    }
  }
  if (best_len < 2) return std::nullopt;  // only isolated interior stops left
  c.rotate_to(((best_start % z) + z) % z);
  int k = best_len - 1;  // run occupies q_0 .. q_k

  const Point& before = c.at(z - 1);
  const Point& after = c.at(k + 1);
  VertexId u = c.at(0).edge_u(), v = c.at(0).edge_v();
  Cycle out;
  if (before == after) {
    VertexId anchor = before.as_vertex();
    VertexId far = anchor == u ? v : u;
    int deepest = 0;
    for (int i = 1; i <= k; ++i)
      if (c.at(i).offset_from(anchor, far) > c.at(deepest).offset_from(anchor, far)) deepest = i;
    out.q.push_back(c.at(deepest));
    for (int i = k + 1; i <= z - 1; ++i) out.q.push_back(c.at(i));
  } else {
    // Run connects u to v; dropping it leaves the direct traversal.
    for (int i = k + 1; i <= z - 1; ++i) out.q.push_back(c.at(i));
  }
  return out;
}

// Rule 2: an interior stop whose neighbors differ gets dropped; the
// neighbors are vertices of its edge, so the direct traversal replaces it.
std::optional<Cycle> apply_pass_through(const Graph&, Cycle c) {
  int z = c.size();
  for (int i = 0; i < z; ++i) {
    if (c.at(i).is_vertex()) continue;
    if (c.at(i - 1) != c.at(i + 1)) {
      c.rotate_to(i);
      Cycle out;
      for (int j = 1; j < z; ++j) out.q.push_back(c.at(j));
      return out;
    }
  }
  return std::nullopt;
}

// Rule 3: two interior stops on one edge merge into at most one.
std::optional<Cycle> apply_one_stop_per_edge(const Graph& g, Cycle c) {
  auto per_edge = interior_stops_per_edge(c);
  for (auto& [edge, indices] : per_edge) {
    if (indices.size() < 2) continue;
    int i = indices[0], j = indices[1];
    auto [u, v] = edge;
    VertexId anchor_i = c.at(i - 1).as_vertex();
    VertexId anchor_j = c.at(j - 1).as_vertex();

    auto drop_uturn = [&](int idx) {
      // <a, p, a> becomes <a>.
      int z = c.size();
      Cycle out;
      for (int t = 0; t < z; ++t) {
        int m = ((t % z) + z) % z;
        if (m == ((idx % z) + z) % z || m == ((idx + 1) % z + z) % z) continue;
        out.q.push_back(c.at(t));
      }
      return out;
    };

    if (anchor_i == anchor_j) {
      VertexId far = anchor_i == u ? v : u;
      bool keep_i = c.at(i).offset_from(anchor_i, far) >= c.at(j).offset_from(anchor_i, far);
      return drop_uturn(keep_i ? j : i);
    }

    // Anchored at opposite endpoints; measure both positions from anchor_i.
    VertexId a = anchor_i, b = anchor_j;
    Rational pos_i = c.at(i).offset_from(a, b);
    Rational pos_j = Rational(1) - c.at(j).offset_from(b, a);
    if (pos_i > pos_j) {
      // Peeks overlap: replace <a, p_i, a> by <a, b, a> and drop <b, p_j, b>.
      Cycle out = drop_uturn(j);
      for (int t = 0; t < out.size(); ++t)
        if (!out.at(t).is_vertex() && out.at(t) == c.at(i)) {
          out.q[t] = Point::vertex(b);
          break;
        }
      return out;
    }
    // Disjoint peeks: deepen a's peek to position 1-(pos_j-pos_i) and drop b's.
    Cycle out = drop_uturn(j);
    Point replacement = Point::on_edge(g, a, b, Rational(1) - (pos_j - pos_i));
    for (int t = 0; t < out.size(); ++t)
      if (!out.at(t).is_vertex() && out.at(t) == c.at(i)) {
        out.q[t] = replacement;
        break;
      }
    return out;
  }
  return std::nullopt;
}

// Rule 4: an interior stop on a traversed edge is redundant.
std::optional<Cycle> apply_no_stop_on_traversed(const Graph& g, Cycle c) {
  auto traversed = traversal_counts(g, c);
  auto per_edge = interior_stops_per_edge(c);
  for (auto& [edge, indices] : per_edge) {
    auto it = traversed.find(edge);
    if (it == traversed.end() || it->second == 0) continue;
    int idx = indices[0];
    int z = c.size();
    Cycle out;
    for (int t = 0; t < z; ++t) {
      int m = ((t % z) + z) % z;
      if (m == idx || m == (idx + 1) % z) continue;
      out.q.push_back(c.at(t));
    }
    return out;
  }
  return std::nullopt;
}

// Rule 5: an edge traversed three or more times loses two copies; the stop
// multiset is rebuilt into a closed walk by an Euler tour.
std::optional<Cycle> apply_traversal_cap(const Graph& g, Cycle c) {
  auto traversed = traversal_counts(g, c);
  for (auto& [edge, count] : traversed) {
    if (count < 3) continue;
    int z = c.size();
    std::vector<Point> points;
    auto point_id = [&](const Point& p) {
      for (std::size_t i = 0; i < points.size(); ++i)
        if (points[i] == p) return static_cast<int>(i);
      points.push_back(p);
      return static_cast<int>(points.size() - 1);
    };
    Multigraph h;
    std::vector<std::pair<int, int>> arcs;
    for (int i = 0; i < z; ++i) arcs.emplace_back(point_id(c.at(i)), point_id(c.at(i + 1)));
    h.vertex_count = static_cast<int>(points.size());
    h.edges = arcs;

    int dropped = 0;
    int eu = point_id(Point::vertex(edge.first)), ev = point_id(Point::vertex(edge.second));
    std::vector<std::pair<int, int>> kept;
    for (auto& [a, b] : h.edges) {
      if (dropped < 2 && ((a == eu && b == ev) || (a == ev && b == eu))) {
        ++dropped;
        continue;
      }
      kept.emplace_back(a, b);
    }
    h.edges = std::move(kept);
    std::vector<int> walk = euler_tour(h);
    Cycle out;
    for (std::size_t i = 0; i + 1 < walk.size(); ++i) out.q.push_back(points[walk[i]]);
    return out;
  }
  return std::nullopt;
}

}  // namespace

bool is_nice(const Graph& g, const Tour& t) {
  if (t.alpha() < 3) throw std::invalid_argument("is_nice: undefined for tours with fewer than 3 stops");
  Cycle c = Cycle::of(t);
  int z = c.size();

  for (int i = 0; i < z; ++i)
    if (!c.at(i).is_vertex() && !c.at(i + 1).is_vertex()) return false;
  for (int i = 0; i < z; ++i)
    if (!c.at(i).is_vertex() && c.at(i - 1) != c.at(i + 1)) return false;
  auto per_edge = interior_stops_per_edge(c);
  for (auto& [edge, indices] : per_edge)
    if (indices.size() > 1) return false;
  auto traversed = traversal_counts(g, c);
  for (auto& [edge, indices] : per_edge) {
    auto it = traversed.find(edge);
    if (it != traversed.end() && it->second > 0) return false;
  }
  for (auto& [edge, count] : traversed)
    if (count > 2) return false;
  return true;
}

Tour make_nice(const Graph& g, const Tour& t) {
  Cycle c = Cycle::of(t);
  while (c.size() >= 3) {
    std::optional<Cycle> next;
    if ((next = apply_consecutive_interior(g, c))) {
    } else if ((next = apply_pass_through(g, c))) {
    } else if ((next = apply_one_stop_per_edge(g, c))) {
    } else if ((next = apply_no_stop_on_traversed(g, c))) {
    } else if ((next = apply_traversal_cap(g, c))) {
    } else {
      break;
    }
    c = std::move(*next);
  }
  return c.to_tour(g);
}

}  // namespace deltatour
