#pragma once

#include <optional>
#include <string>
#include <vector>

#include "vq/veldkamp.hpp"

namespace vq {

/// A weed: a non-straight 4-path (a,x,b,y,c) of points a,b,c with
/// dist(a,c) = 4.
struct Weed {
  int a, x, b, y, c;
};

/// Exhaustive weed list (pre: g green). Empty iff g is flat.
std::vector<Weed> find_weeds(const VeldkampGraph& g);

struct Partition {
  std::vector<int> cls;  // class id per element, ids ordered by smallest member
  int count = 0;
};

/// Classes of the reflexive closure of weed-connectedness on P, verified
/// against the equal-op-set partition (throws theorem_violation if the two
/// partitions differ).
Partition point_classes(const VeldkampGraph& g, const std::vector<Bitset>& ops,
                        const std::vector<Weed>& weeds);

/// Classes of the transitive-reflexive closure of the line relation ~
/// (two lines on a common weed), verified against equal op-sets.
Partition line_classes(const VeldkampGraph& g, const std::vector<Bitset>& ops,
                       const std::vector<Weed>& weeds);

/// The map phi_xy for lines x ~ y (or x == y): fixes b = x ^ y and sends each
/// a in Gamma_x \ {b} to the unique c making (a,x,b,y,c) a weed. Returned as
/// pairs (vertex of Gamma_x, image in Gamma_y).
std::vector<std::pair<int, int>> phi_map(const VeldkampGraph& g, int x, int y);

struct QuotientResult {
  VeldkampGraph graph;
  std::vector<int> point_class;  // per point id
  std::vector<int> line_class;   // per line vertex id - n_points
  std::vector<int> pi;           // vertex map into the quotient
  AxiomReport quotient_axioms;
  bool input_was_plump2 = false;
};

/// Canonical flat quotient with projection pi. Postconditions checked here:
/// the quotient is green and flat, satisfies VP1-VP3, the projection maps
/// edges to edges, lifts single steps, preserves straightness in both
/// directions, and is bijective on line neighborhoods. 2-plumpness of the
/// quotient is enforced only when the input graph is itself 2-plump (the
/// hypothesis of the quotient theorem). Violations throw theorem_violation.
QuotientResult flat_quotient(const VeldkampGraph& g);

// --- quotient-related property checkers ---------------------------------------

/// fla11: x opposite y at a and y ~ z imply x opposite z at a.
std::optional<std::string> prop_fla11(const VeldkampGraph& g, const std::vector<Weed>& weeds);
/// fla5x(ii): weed-equivalent points have equal distance-2 shells.
std::optional<std::string> prop_fla5x_gamma2(const VeldkampGraph& g, const Partition& pcls);
/// fla7/fla8: on each point neighborhood, the full line equivalence restricts
/// to the reflexive closure of ~.
std::optional<std::string> prop_fla7(const VeldkampGraph& g, const std::vector<Weed>& weeds,
                                     const Partition& lcls);
/// fla4x: phi_xy and phi_yx are mutually inverse bijections.
std::optional<std::string> prop_fla4x(const VeldkampGraph& g, const std::vector<Weed>& weeds);
/// fla32: flat iff no weeds.
std::optional<std::string> prop_fla32(const VeldkampGraph& g, const std::vector<Bitset>& ops);

}  // namespace vq
