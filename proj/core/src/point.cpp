#include "deltatour/point.hpp"

#include <stdexcept>

namespace deltatour {

Point Point::on_edge(const Graph& g, VertexId u, VertexId v, const Rational& lambda) {
  if (!g.has_edge(u, v)) throw std::invalid_argument("point: {" + std::to_string(u) + "," + std::to_string(v) + "} is not an edge");
  if (lambda < Rational(0) || lambda > Rational(1))
    throw std::invalid_argument("point: lambda outside [0,1]");
  if (lambda.is_zero()) return vertex(u);
  if (lambda == Rational(1)) return vertex(v);
  if (u < v) return Point(u, v, lambda);
  return Point(v, u, Rational(1) - lambda);
}

Point canonicalize_point(const Graph& g, VertexId u, VertexId v, const Rational& lambda) {
  return Point::on_edge(g, u, v, lambda);
}

bool Point::lies_on(VertexId a, VertexId b) const {
  if (a > b) std::swap(a, b);
  if (is_vertex()) return u_ == a || u_ == b;
  return u_ == a && v_ == b;
}

Rational Point::position_on(VertexId a, VertexId b) const {
  if (a > b) std::swap(a, b);
  if (is_vertex()) {
    if (u_ == a) return Rational(0);
    if (u_ == b) return Rational(1);
    throw std::invalid_argument("point: not on requested edge");
  }
  if (u_ != a || v_ != b) throw std::invalid_argument("point: not on requested edge");
  return lam_;
}

Rational Point::offset_from(VertexId endpoint, VertexId other) const {
  Rational pos = position_on(endpoint, other);
  return endpoint < other ? pos : Rational(1) - pos;
}

std::string Point::str() const {
  if (is_vertex()) return "v" + std::to_string(u_);
  return "p(" + std::to_string(u_) + "," + std::to_string(v_) + "," + lam_.str() + ")";
}

std::size_t Point::hash() const {
  std::size_t h = std::hash<int>()(u_) * 0x9e3779b9u;
  h ^= std::hash<int>()(v_) + 0x9e3779b9u + (h << 6) + (h >> 2);
  h ^= lam_.hash() + 0x9e3779b9u + (h << 6) + (h >> 2);
  return h;
}

Rational point_distance(const Graph& g, const Point& p, const Point& q) {
  if (p.is_vertex() && q.is_vertex()) return g.vertex_distance(p.as_vertex(), q.as_vertex());

  auto to_vertex = [&](const Point& a, VertexId x) -> Rational {
    // distance from point a to vertex x
    if (a.is_vertex()) return g.vertex_distance(a.as_vertex(), x);
    Rational via_u = a.lambda() + g.vertex_distance(a.edge_u(), x);
    Rational via_v = Rational(1) - a.lambda() + g.vertex_distance(a.edge_v(), x);
    return min(via_u, via_v);
  };

  if (p.is_vertex()) return to_vertex(q, p.as_vertex());
  if (q.is_vertex()) return to_vertex(p, q.as_vertex());

  Rational best = min(p.lambda() + to_vertex(q, p.edge_u()),
                      Rational(1) - p.lambda() + to_vertex(q, p.edge_v()));
  if (p.edge_u() == q.edge_u() && p.edge_v() == q.edge_v())
    best = min(best, (p.lambda() - q.lambda()).abs());
  return best;
}

std::vector<Point> shortest_point_walk(const Graph& g, const Point& p, const Point& q) {
  std::vector<Point> walk{p};
  auto append = [&](const Point& next) {
    if (walk.back() != next) walk.push_back(next);
  };

  if (p == q) return walk;

  // Same-edge direct route?
  if (!p.is_vertex() && !q.is_vertex() && p.edge_u() == q.edge_u() && p.edge_v() == q.edge_v() &&
      (p.lambda() - q.lambda()).abs() == point_distance(g, p, q)) {
    append(q);
    return walk;
  }

  // Otherwise route through a best pair of host-edge endpoints.
  auto endpoints = [](const Point& a) -> std::vector<VertexId> {
    if (a.is_vertex()) return {a.as_vertex()};
    return {a.edge_u(), a.edge_v()};
  };
  Rational target = point_distance(g, p, q);
  for (VertexId x : endpoints(p))
    for (VertexId y : endpoints(q)) {
      Rational via = point_distance(g, p, Point::vertex(x)) + g.vertex_distance(x, y) +
                     point_distance(g, Point::vertex(y), q);
      if (via == target) {
        for (VertexId w : g.shortest_vertex_path(x, y)) append(Point::vertex(w));
        append(q);
        return walk;
      }
    }
  throw std::logic_error("shortest_point_walk: no endpoint routing matched the metric");
}

}  // namespace deltatour
