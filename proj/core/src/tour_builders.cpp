#include "deltatour/tour_builders.hpp"

#include <set>
#include <stdexcept>

#include "deltatour/euler.hpp"
#include "deltatour/tsp.hpp"

namespace deltatour {

Tour spanning_double_tour(const Graph& g) {
  int n = g.vertex_count();
  if (n == 1) return Tour::single(Point::vertex(0));

  std::vector<std::vector<Rational>> w(n, std::vector<Rational>(n, Rational(0)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j) w[i][j] = g.vertex_distance(i, j);
  // Unit-distance ties make this a BFS-tree-flavored spanning tree with
  // deterministic lexicographic breaks; only tree edges that are real graph
  // edges are usable, which holds because adjacent pairs have distance 1.
  Multigraph mg;
  mg.vertex_count = n;
  for (auto [u, v] : minimum_spanning_tree(w)) {
    mg.edges.emplace_back(u, v);
    mg.edges.emplace_back(u, v);
  }
  std::vector<Point> stops;
  for (int v : euler_tour(mg)) stops.push_back(Point::vertex(v));
  return Tour::close_and_validate(g, std::move(stops));
}

Tour connect_points_tour(const Graph& g, const std::vector<Point>& points) {
  if (points.empty()) throw std::invalid_argument("connect_points_tour: no points");
  std::set<Point> dedup(points.begin(), points.end());
  std::vector<Point> pts(dedup.begin(), dedup.end());
  if (pts.size() == 1) return Tour::single(pts[0]);

  int k = static_cast<int>(pts.size());
  std::vector<std::vector<Rational>> w(k, std::vector<Rational>(k, Rational(0)));
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j) w[i][j] = w[j][i] = point_distance(g, pts[i], pts[j]);

  Multigraph mg;
  mg.vertex_count = k;
  for (auto [u, v] : minimum_spanning_tree(w)) {
    mg.edges.emplace_back(u, v);
    mg.edges.emplace_back(u, v);
  }

  std::vector<int> walk = euler_tour(mg);
  std::vector<Point> stops;
  for (std::size_t i = 0; i + 1 < walk.size(); ++i) {
    auto hop = shortest_point_walk(g, pts[walk[i]], pts[walk[i + 1]]);
    for (std::size_t s = 0; s + 1 < hop.size(); ++s) stops.push_back(hop[s]);
  }
  stops.push_back(pts[walk.back()]);
  // Hops can revisit the junction point back to back; collapse repeats.
  std::vector<Point> cleaned;
  for (const auto& p : stops)
    if (cleaned.empty() || cleaned.back() != p) cleaned.push_back(p);
  if (cleaned.size() == 1) return Tour::single(cleaned[0]);
  return Tour::close_and_validate(g, std::move(cleaned));
}

}  // namespace deltatour
