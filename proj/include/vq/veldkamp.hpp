#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "vq/bitset.hpp"

namespace vq {

/// Bipartite graph with a local opposition relation on every neighborhood.
/// Vertices 0..n_points-1 are points (class P), the rest are lines (class L).
/// Opposition at a vertex is stored either as a "trivial" flag (all distinct
/// neighbors opposite) or as a bitset over neighbor-index pairs.
class VeldkampGraph {
 public:
  VeldkampGraph() = default;

  /// Adjacency from lines-as-point-sets; all relations start trivial.
  static VeldkampGraph build(int n_points, const std::vector<std::vector<int>>& line_members,
                             int gonality = 4);

  int points() const { return n_points_; }
  int line_count() const { return n_lines_; }
  int V() const { return n_points_ + n_lines_; }
  int gonality() const { return gon_; }
  bool is_point(int v) const { return v < n_points_; }

  int deg(int v) const { return off_[v + 1] - off_[v]; }
  int nb(int v, int i) const { return nbr_[off_[v] + i]; }
  /// Index of v within the adjacency list of nb(v, i).
  int rev(int v, int i) const { return rev_[off_[v] + i]; }
  const int* nbr_begin(int v) const { return nbr_.data() + off_[v]; }
  /// Index of u in the (sorted) adjacency of v; -1 if not adjacent.
  int nbr_index(int v, int u) const;

  bool trivial_at(int v) const { return trivial_[v] != 0; }
  /// Neighbor-index form of the local relation.
  bool opp(int v, int i, int j) const {
    if (i == j) return false;
    if (trivial_[v]) return true;
    size_t bit = size_t(i) * deg(v) + j;
    return (oppbits_[v][bit >> 6] >> (bit & 63)) & 1;
  }
  /// Vertex-id form (u, w neighbors of v).
  bool opp_v(int v, int u, int w) const { return opp(v, nbr_index(v, u), nbr_index(v, w)); }

  /// Installs an explicit relation at v from a predicate on neighbor ids.
  /// Symmetry and anti-reflexivity are enforced; an all-pairs relation is
  /// collapsed back to the trivial flag.
  void set_opposition(int v, const std::function<bool(int, int)>& opposite);
  void set_opposition_pairs(int v, const std::vector<std::pair<int, int>>& neighbor_index_pairs);

  /// True opposition relation is all-pairs (stored flag or saturated bitset).
  bool relation_trivial(int v) const;

  friend bool operator==(const VeldkampGraph&, const VeldkampGraph&) = default;

  // internal arrays exposed for serialization
  const std::vector<int>& adj_offsets() const { return off_; }
  const std::vector<int>& adj_neighbors() const { return nbr_; }

 private:
  int n_points_ = 0, n_lines_ = 0, gon_ = 4;
  std::vector<int> off_, nbr_, rev_;
  std::vector<uint8_t> trivial_;
  std::vector<std::vector<uint64_t>> oppbits_;
};

/// Validates the path shape (consecutive adjacency, no x_{i-2} == x_i) and
/// then tests straightness; paths of length <= 1 are straight.
bool is_straight(const VeldkampGraph& g, const std::vector<int>& path);

/// Enumerates straight paths of length exactly `len` (1..5) from src.
/// The callback receives vertex ids path[0..len].
void for_each_straight_path(const VeldkampGraph& g, int src, int len,
                            const std::function<void(const int*)>& f);

struct AxiomReport {
  bool vp1 = false, vp2 = false, vp3 = false, plump2 = false;
  std::string witness;  // first failure, if any
  bool all() const { return vp1 && vp2 && vp3 && plump2; }
};

/// VP1 (connected + bipartite), VP2 (straight <=(n-1)-path uniqueness),
/// VP3 (straight (n+1)-paths close into straight 2n-circuits), 2-plumpness.
AxiomReport check_axioms(const VeldkampGraph& g);

/// k-plumpness of every local relation (k <= 3 supported).
bool check_plump(const VeldkampGraph& g, int k, std::string* witness = nullptr);

/// Straight-n-path reachability (x^op) for every vertex.
std::vector<Bitset> opposite_sets(const VeldkampGraph& g);
Bitset opposite_set(const VeldkampGraph& g, int v);

/// Op-sets separate vertices within each class.
bool is_flat(const VeldkampGraph& g, const std::vector<Bitset>& ops,
             std::pair<int, int>* witness = nullptr);

/// All local relations at line vertices trivial.
bool is_green(const VeldkampGraph& g);

/// Dual-route test: all local relations trivial, cross-checked against the
/// diameter/girth/degree characterization of generalized n-gons. Disagreement
/// between the two routes throws theorem_violation.
bool is_generalized_polygon(const VeldkampGraph& g);

std::vector<int> bfs_dist(const VeldkampGraph& g, int src);
int diameter(const VeldkampGraph& g);
int girth(const VeldkampGraph& g);

/// Distance-2 shells for point vertices (used by weed enumeration and props).
std::vector<Bitset> point_dist2_sets(const VeldkampGraph& g);

// --- proposition checkers (return nullopt when the property holds) ---------

/// toy8: for opposite x,y and each z adjacent to y, exactly one root
/// (x,...,z,y).
std::optional<std::string> prop_toy8(const VeldkampGraph& g, const std::vector<Bitset>& ops);
/// toy9: vertices at even distance have a common opposite.
std::optional<std::string> prop_toy9(const VeldkampGraph& g, const std::vector<Bitset>& ops);
/// toy35: for roots with equal endpoints, opposition at the start matches
/// opposition at the end.
std::optional<std::string> prop_toy35(const VeldkampGraph& g);
/// fla3: no 4-circuits.
std::optional<std::string> prop_fla3(const VeldkampGraph& g);
/// fla40: no straight point-centered 2-path lies in a 6-circuit.
std::optional<std::string> prop_fla40(const VeldkampGraph& g);
/// toy20: opposite points are at distance 4.
std::optional<std::string> prop_toy20(const VeldkampGraph& g, const std::vector<Bitset>& ops);
/// toy21: diameter 4.
std::optional<std::string> prop_toy21(const VeldkampGraph& g);
/// toy22: distance-4 non-opposite points share op-sets and distance-2 shells.
std::optional<std::string> prop_toy22(const VeldkampGraph& g, const std::vector<Bitset>& ops);
/// toy25 (flat, points): opposite iff distance 4.
std::optional<std::string> prop_toy25_points(const VeldkampGraph& g,
                                             const std::vector<Bitset>& ops);
/// toy5x: straight s-paths extend to straight (s+1)-paths (s < max_len).
std::optional<std::string> prop_toy5x(const VeldkampGraph& g, int max_len);
/// toy36 consequence: triviality of the stored relations is constant on each
/// bipartition class.
std::optional<std::string> prop_toy36_classes(const VeldkampGraph& g);

}  // namespace vq
