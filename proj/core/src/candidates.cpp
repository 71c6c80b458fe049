#include "deltatour/candidates.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace deltatour {

namespace {
Rational frac(const Rational& x) { return x - x.floor(); }
}  // namespace

std::vector<Rational> base_positions(const Rational& delta) {
  return {Rational(0), frac(delta), frac(Rational(1, 2) + delta), frac(Rational(2) * delta)};
}

std::vector<Rational> half_integral_positions(const Rational& delta) {
  Rational k = (Rational(2) * delta).floor();
  std::vector<Rational> raw{Rational(0), (k + Rational(1) - Rational(2) * delta) / Rational(2),
                            k + Rational(1) - Rational(2) * delta,
                            (k + Rational(2) - Rational(2) * delta) / Rational(2)};
  std::vector<Rational> out;
  for (auto& x : raw)
    if (Rational(0) <= x && x <= Rational(1)) out.push_back(x);
  return out;
}

std::vector<Rational> stop_position_set(const Rational& delta) {
  if (delta < Rational(0)) throw std::invalid_argument("stop_position_set: negative delta");
  std::set<Rational> s;
  for (auto& x : base_positions(delta)) s.insert(x);
  if (delta >= Rational(1, 2))
    for (auto& x : half_integral_positions(delta)) s.insert(x);
  std::set<Rational> closed;
  for (auto& x : s) {
    closed.insert(x);
    closed.insert(Rational(1) - x);
  }
  return {closed.begin(), closed.end()};
}

Rational position_min_gap(const Rational& delta) {
  auto pos = stop_position_set(delta);
  Rational best(1);
  bool found = false;
  for (std::size_t i = 0; i < pos.size(); ++i)
    for (std::size_t j = i + 1; j < pos.size(); ++j) {
      if (pos[i] == pos[j] || pos[i] == Rational(1) - pos[j]) continue;
      Rational gap = (pos[i] - pos[j]).abs();
      if (!found || gap < best) best = gap;
      found = true;
    }
  return found ? best : Rational(1);
}

CandidateSet candidate_points(const Graph& g, const Rational& delta) {
  CandidateSet cs;
  cs.positions = stop_position_set(delta);
  cs.min_gap = position_min_gap(delta);

  std::set<Point> pts;
  for (auto [u, v] : g.edges())
    for (const auto& lam : cs.positions) pts.insert(Point::on_edge(g, u, v, lam));
  cs.points.assign(pts.begin(), pts.end());
  return cs;
}

}  // namespace deltatour
