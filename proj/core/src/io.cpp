#include "deltatour/io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace deltatour {

using nlohmann::json;

namespace {

json point_to_json(const Point& p) {
  if (p.is_vertex()) return json{{"vertex", p.as_vertex() + 1}};
  return json{{"edge", {p.edge_u() + 1, p.edge_v() + 1}}, {"lambda", p.lambda().str()}};
}

Point point_from_json(const Graph& g, const json& j) {
  if (j.contains("vertex")) {
    long v = j.at("vertex").get<long>();
    if (v < 1 || v > g.vertex_count()) throw std::invalid_argument("tour json: vertex id out of range");
    return Point::vertex(static_cast<int>(v - 1));
  }
  if (!j.contains("edge") || !j.contains("lambda"))
    throw std::invalid_argument("tour json: stop needs 'vertex' or 'edge'+'lambda'");
  auto e = j.at("edge");
  if (!e.is_array() || e.size() != 2) throw std::invalid_argument("tour json: bad edge pair");
  long u = e[0].get<long>(), v = e[1].get<long>();
  if (u < 1 || v < 1 || u > g.vertex_count() || v > g.vertex_count())
    throw std::invalid_argument("tour json: edge endpoint out of range");
  auto lam = Rational::parse(j.at("lambda").get<std::string>());
  if (!lam) throw std::invalid_argument("tour json: bad lambda");
  return Point::on_edge(g, static_cast<int>(u - 1), static_cast<int>(v - 1), *lam);
}

}  // namespace

std::string tour_to_json(const Tour& t) {
  json arr = json::array();
  for (const auto& p : t.stops()) arr.push_back(point_to_json(p));
  return arr.dump(2);
}

Tour tour_from_json(const Graph& g, const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("tour json: ") + e.what());
  }
  if (!j.is_array() || j.empty()) throw std::invalid_argument("tour json: expected a non-empty array");
  std::vector<Point> stops;
  for (const auto& rec : j) stops.push_back(point_from_json(g, rec));
  if (stops.size() == 1) return Tour::single(stops[0]);
  return Tour::close_and_validate(g, std::move(stops));
}

std::string report_to_json(const SolveReport& r) {
  json j;
  j["delta"] = r.delta.str();
  j["regime"] = r.regime;
  j["method"] = r.method;
  j["tour"] = json::parse(tour_to_json(r.tour));
  j["length"] = r.length.str();
  j["length_approx"] = r.length.approx_str();
  j["s_delta"] = r.s_delta.str();
  json lbs = json::array();
  for (const auto& [src, value] : r.lower_bounds)
    lbs.push_back(json{{"source", src}, {"value", value.str()}});
  j["lower_bounds"] = lbs;
  j["theoretical_ratio"] = r.theoretical_ratio ? json(r.theoretical_ratio->str()) : json("measured-only");
  j["ratio_basis"] = r.ratio_basis;
  if (r.certified_ratio) {
    j["certified_ratio"] = r.certified_ratio->str();
    j["certified_ratio_approx"] = r.certified_ratio->approx_str();
  }
  if (r.opt_lp) j["opt_lp"] = r.opt_lp->str();
  if (r.degree_bound) j["degree_bound"] = r.degree_bound->str();
  if (r.constraints_generated) j["constraints_generated"] = *r.constraints_generated;
  if (r.gamma_vertices) j["gamma_vertices"] = *r.gamma_vertices;
  if (r.domset_size) j["domset_size"] = *r.domset_size;
  if (r.tree_weight) j["tree_weight"] = r.tree_weight->str();
  j["solved_exactly"] = r.solved_exactly;
  return j.dump(2);
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path);
  if (!out) throw std::invalid_argument("cannot write " + path);
  out << content;
}

}  // namespace deltatour
