#pragma once

#include <optional>
#include <string>

#include "deltatour/gamma.hpp"
#include "deltatour/matching.hpp"
#include "deltatour/tour.hpp"

namespace deltatour {

enum class SolveMode { fixed, input_delta };

struct SolveReport {
  Rational delta;
  std::string regime;  // covering-range interval label
  std::string method;  // algorithm that produced the tour
  Tour tour = Tour::single(Point::vertex(0));
  Rational length;
  std::vector<std::pair<std::string, Rational>> lower_bounds;
  std::optional<Rational> theoretical_ratio;  // empty: measured-only
  std::string ratio_basis;                    // "paper" | "shipped-bound" | "exact" | "measured-only"
  std::optional<Rational> certified_ratio;    // length / best positive lower bound
  Rational s_delta;

  std::optional<Rational> opt_lp;
  // Value of the paper-style degree bound 2(1-d)|V1| + 4(1-d)(n-|V1|).
  // Reported for reference only: peek-only tours can undercut it, so it is
  // not a certified lower bound.
  std::optional<Rational> degree_bound;
  std::optional<int> constraints_generated;
  std::optional<int> gamma_vertices;
  std::optional<int> domset_size;
  std::optional<Rational> tree_weight;
  bool solved_exactly = false;

  Rational best_lower_bound() const;
};

// Regime dispatcher. Picks the per-range algorithm, post-validates the tour
// (a failure aborts: it is an internal bug), and assembles the certified
// bounds. The mode flag selects the weighted auxiliary-graph path for
// delta >= 3/2.
SolveReport solve(const Graph& g, const Rational& delta, SolveMode mode = SolveMode::fixed);

std::string regime_label(const Rational& delta);

// (0, 1/6]: the postman tour, within 1/(1-2delta) of optimal.
Tour approx_small_delta(const Graph& g, const Rational& delta);

// Auxiliary TSP instance for (1/6, 1/2): leaf edges contribute a point at
// 1-delta, other edges one or two points at depth 2*delta depending on
// whether they fit side by side.
struct AuxTsp {
  std::vector<Point> vertices;
  std::vector<std::pair<int, int>> edges;
  std::vector<Rational> weights;

  Rational mst_weight() const;
};
AuxTsp build_aux_tsp(const Graph& g, const Rational& delta);

// (1/6, 1/2): Christofides on the auxiliary instance, mapped back.
Tour approx_mid_delta(const Graph& g, const Rational& delta);

// delta = 1/2: TSP over the non-leaf vertices plus a half-edge detour per
// leaf.
Tour approx_half(const Graph& g);

// (1/2, 33/40): a 1/2-tour is already a delta-tour; this validates and
// passes it through (the ratio bookkeeping scales by 1/(2-2delta)).
Tour lift_half_to_delta(const Graph& g, const Tour& t_half, const Rational& delta);

// Vertex cover tour, normalized; a valid 1-tour.
Tour one_tour(const Graph& g);

// [33/40, 1): peeks of depth 1-delta (leaf) or 2(1-delta) (non-leaf) from a
// stopped neighbor toward every unstopped vertex.
Tour augment_below_one(const Graph& g, const Tour& t_one, const Rational& delta);

// (1, 3/2): rewrites discretized peeks (3/2-delta to the midpoint; 3-2delta
// and 2-delta to full traversals), turning a delta-tour into a 1-tour of
// length at most 1/(3-2delta) times the input.
Tour downshift_to_one_tour(const Graph& g, const Tour& t_delta, const Rational& delta);

}  // namespace deltatour
