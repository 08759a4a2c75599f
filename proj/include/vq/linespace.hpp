#pragma once

#include <optional>
#include <string>
#include <vector>

#include "vq/bitset.hpp"
#include "vq/catalog.hpp"

namespace vq {

/// A line space (P, L): dense integer point ids, lines as sorted point-id
/// sets. Perps are cached as bitsets; they dominate every downstream check.
class LineSpace {
 public:
  LineSpace() = default;
  LineSpace(int n_points, std::vector<std::vector<int>> lines);

  int n() const { return n_; }
  const std::vector<std::vector<int>>& lines() const { return lines_; }
  const std::vector<int>& lines_at(int p) const { return lines_at_[p]; }
  const Bitset& perp(int a) const { return perp_[a]; }
  bool collinear(int a, int b) const { return perp_[a].test(b); }

  bool is_thick() const;

  friend bool operator==(const LineSpace&, const LineSpace&);

 private:
  int n_ = 0;
  std::vector<std::vector<int>> lines_;
  std::vector<std::vector<int>> lines_at_;
  std::vector<Bitset> perp_;
};

LineSpace line_space_from_catalog(const SingularCatalog& cat);

/// BS axiom: every point sees one or all points of every line. Returns a
/// violating (point, line-id) pair, or nullopt if the axiom holds.
std::optional<std::pair<int, int>> check_BS(const LineSpace& S);

/// No point is collinear with everything (requires BS to be meaningful).
bool is_nondegenerate(const LineSpace& S);

/// Least subspace containing X: iterated closure, adding any line that meets
/// the current set twice.
std::vector<int> span(const LineSpace& S, const std::vector<int>& X);

bool is_singular(const LineSpace& S, const std::vector<int>& X);

/// 1 + max projective dimension of a singular subspace, by level-wise chain
/// extension (chains capped at length 5; consistency-checked against the
/// rank-1/rank-2 characterizations).
int rank(const LineSpace& S);

/// A point collinear with neither a nor b; throws theorem_violation if none
/// exists (which would falsify the underlying proposition).
int witness_hau21(const LineSpace& S, int a, int b);

/// Induced space on perp(a) & perp(b) for non-collinear a, b, with the lines
/// lying fully inside. Returns the space and the selected point ids.
std::pair<LineSpace, std::vector<int>> perp_polar(const LineSpace& S, int a, int b);

/// Induced space on an arbitrary point subset (lines fully inside).
std::pair<LineSpace, std::vector<int>> induced_subspace(const LineSpace& S,
                                                        const std::vector<int>& pts);

/// hau22x: some line y with x cap y^perp empty and x^perp cap y^perp a thick
/// non-degenerate polar space. Returns such a y or nullopt.
std::optional<int> find_hau22x_partner(const LineSpace& S, int x);

/// All singular planes (as sorted point sets) containing the given line.
std::vector<std::vector<int>> singular_planes_through(const LineSpace& S, int line_id);

}  // namespace vq
