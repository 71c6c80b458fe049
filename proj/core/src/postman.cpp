#include "deltatour/postman.hpp"

#include "deltatour/euler.hpp"
#include "deltatour/matching.hpp"

namespace deltatour {

Tour chinese_postman_tour(const Graph& g) {
  int n = g.vertex_count();
  if (g.edge_count() == 0) return Tour::single(Point::vertex(0));

  std::vector<int> odd;
  for (int v = 0; v < n; ++v)
    if (g.degree(v) % 2 == 1) odd.push_back(v);

  Multigraph mg;
  mg.vertex_count = n;
  for (auto [u, v] : g.edges()) mg.edges.emplace_back(u, v);

  if (!odd.empty()) {
    std::vector<std::vector<Rational>> w(odd.size(), std::vector<Rational>(odd.size(), Rational(0)));
    for (std::size_t i = 0; i < odd.size(); ++i)
      for (std::size_t j = 0; j < odd.size(); ++j)
        if (i != j) w[i][j] = g.vertex_distance(odd[i], odd[j]);
    std::vector<Edge> matching =
        odd.size() < 12 ? matching_by_subset_dp(w) : matching_by_blossom(w);
    for (auto [i, j] : matching) {
      auto path = g.shortest_vertex_path(odd[i], odd[j]);
      for (std::size_t s = 1; s < path.size(); ++s) mg.edges.emplace_back(path[s - 1], path[s]);
    }
  }

  std::vector<int> walk = euler_tour(mg);
  std::vector<Point> stops;
  stops.reserve(walk.size());
  for (int v : walk) stops.push_back(Point::vertex(v));
  return Tour::close_and_validate(g, std::move(stops));
}

}  // namespace deltatour
