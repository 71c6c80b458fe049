#pragma once

#include <string>

#include "deltatour/regimes.hpp"

namespace deltatour {

// Tours serialize to a single top-level JSON array; each stop is either
// {"vertex": id} or {"edge": [u, v], "lambda": "p/q"}. Vertex ids are
// 1-based on the wire, matching the graph file format.
std::string tour_to_json(const Tour& t);
Tour tour_from_json(const Graph& g, const std::string& text);

// Structured solve record with exact fraction strings plus convenience
// decimal fields.
std::string report_to_json(const SolveReport& r);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

}  // namespace deltatour
