#pragma once

#include <optional>
#include <string>
#include <vector>

#include "vq/linespace.hpp"
#include "vq/quotient.hpp"
#include "vq/veldkamp.hpp"

namespace vq {

/// The incidence graph of a thick non-degenerate polar space with L != 0,
/// endowed with the local opposition relations: trivial at lines, and at a
/// point a two lines are opposite iff their union spans a non-singular
/// subspace (evaluated via the pairwise-collinearity criterion; the span
/// route is cross-checked in the test suite).
VeldkampGraph polar_to_veldkamp(const LineSpace& S);

/// Inverse construction: points of g, lines {Gamma_x | x in L}. Requires g
/// flat and green; the result is checked thick, BS, non-degenerate.
LineSpace veldkamp_to_polar(const VeldkampGraph& g);

/// S == S_{Gamma_S} after canonical ordering, and Gamma_{S_Gamma} == Gamma_S
/// as labeled graphs. Throws theorem_violation on mismatch.
bool roundtrip_check(const LineSpace& S);

struct Cone {
  VeldkampGraph graph;
  std::vector<int> point_ids;  // original point ids of P1 (sorted)
  std::vector<int> line_ids;   // original line ids of L1 (sorted)
  int apex = -1;
};

/// The cone construction: induced subgraph of Gamma_S on
/// P1 = perp(d) \ {d} and the lines inside it, with restricted oppositions.
/// Requires rank(S) >= 3; asserts green and not flat.
Cone cone(const LineSpace& S, int d);

/// hau14(ii): op-sets of two cone points agree iff the points are collinear
/// with the apex on one line.
std::optional<std::string> prop_cone_op_classes(const LineSpace& S, const Cone& c);

/// Vertex bijection preserving bipartition class, adjacency and local
/// opposition.
using IsoWitness = std::vector<int>;

std::optional<IsoWitness> graph_isomorphic(const VeldkampGraph& g1, const VeldkampGraph& g2);

/// Checks that `m` (vertex map g1 -> g2) is an isomorphism of Veldkamp graphs.
bool is_graph_isomorphism(const VeldkampGraph& g1, const VeldkampGraph& g2, const IsoWitness& m);

struct Hau14Report {
  bool ok = false;
  bool used_canonical_psi = false;  // the explicit class map worked as-is
  int p2_size = 0;
  std::string detail;
  IsoWitness witness;  // quotient -> Gamma_{S2}
};

/// Builds S2 on perp(e) cap P1, computes the flat quotient of the cone, and
/// finds an isomorphism onto Gamma_{S2}, trying the canonical class map
/// first. Throws theorem_violation if no isomorphism exists.
Hau14Report verify_hau14_iii(const LineSpace& S, int d, int e);

}  // namespace vq
