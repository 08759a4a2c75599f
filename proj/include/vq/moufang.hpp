#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "vq/catalog.hpp"
#include "vq/lambda.hpp"
#include "vq/veldkamp.hpp"

namespace vq {

/// The explicit isometries of the ambient construction: rho, tau and the four
/// parametrized families (alpha_v, beta_w indexed by T; gamma_t, delta_s
/// indexed by K). Construction verifies that every matrix is an isometry and
/// that the family maps are group homomorphisms.
struct GeneratorSet {
  const Ambient* amb = nullptr;
  const GroupT* T = nullptr;
  Mat rho, tau;
  std::vector<Mat> alpha, beta;   // by T element index
  std::vector<Mat> gamma, delta;  // by field element code
  uint8_t eps = 1;                // +1 in Case I, -1 in Case II
};

GeneratorSet build_generators(const Ambient& amb, const GroupT& T);

/// Vertex permutation of Gamma_S induced by an isometry: W1 by normalized
/// image vectors, W2 by image point sets. Throws theorem_violation if an
/// image falls outside the catalog.
std::vector<int> induce(const Ambient& amb, const SingularCatalog& cat,
                        const VeldkampGraph& g, const Mat& M);

/// Permutation preserves bipartition class, adjacency and local opposition.
bool is_automorphism(const VeldkampGraph& g, const std::vector<int>& perm);

/// Each permutation fixes Gamma_{x1} u Gamma_{x2} u Gamma_{x3} of the root
/// pointwise (the root-group membership condition).
bool fixes_root_middle(const VeldkampGraph& g, const std::array<int, 5>& root,
                       const std::vector<int>& perm);

/// Orbit of `start` under the permutations.
std::vector<int> orbit_of(int start, const std::vector<std::vector<int>>& perms);

struct TransitivityCheck {
  bool transitive = false;
  bool simply = false;
  int orbit_size = 0;
  int target_size = 0;
};

/// Orbit computation on an explicit target set.
TransitivityCheck verify_root_transitivity(const VeldkampGraph& g,
                                           const std::vector<std::vector<int>>& family,
                                           const std::vector<int>& target);

struct MoufangCertificate {
  bool ok = false;
  std::string instance;
  FormCase form_case;
  int t_order = 0, k_order = 0;
  long long edges_total = 0, edge_orbit = 0;
  long long roots_at_point_edge = 0, alpha_root_orbit = 0;
  long long roots_at_line_edge = 0, gamma_root_orbit = 0;
  // foo3(iv)-(vii): per family, two target sets with orbit sizes
  struct FamilyAction {
    std::string family;
    int target1 = 0, orbit1 = 0;
    int target2 = 0, orbit2 = 0;
    bool simply_transitive = false;
  };
  std::vector<FamilyAction> actions;
  bool generators_are_isometries = false;
  bool generators_induce_automorphisms = false;
  bool families_fix_root_middles = false;
  bool sigma_circuit_facts = false;      // rho/tau stabilize the base circuit etc.
  bool a_tau_transitive_on_x2p = false;  // <A,tau> on Gamma_{x2'}
  bool c_rho_transitive_on_x1x2p = false;
  long long checks = 0;
  std::string failure;
};

/// Full Moufang certification along the explicit-orbit argument:
/// foo0/foo3 facts, edge transitivity of M = <rho,tau,A,B,C,D>, and single
/// <A,B,C,D>-orbits on the roots through the base edge in both directions.
MoufangCertificate certify_moufang(const LambdaSpace& lam, long long cap = 10'000'000);

struct RelationReport {
  bool ok = false;
  std::string instance;
  long long identities_checked = 0;
  std::string failure;
  std::vector<std::pair<std::string, long long>> families;  // name -> count
};

/// The commutator relations of the orthogonal/pseudo-quadratic quadrangle,
/// as exact matrix identities over every parameter tuple.
RelationReport verify_chin4(const LambdaSpace& lam);

/// The D3 quadrangle over GF(p) (odd p): the full relation set including the
/// x0/x5 parametrizations, the mu-conjugation tables, and the failure witness
/// for razor-sharpness ({x4(u,0)} is H4-invariant and misses U4#).
RelationReport verify_d3(int p);

}  // namespace vq
