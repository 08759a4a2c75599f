#include "vq/correspond.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <unordered_map>

#include "vq/errors.hpp"
#include "vq/parallel.hpp"

namespace vq {

VeldkampGraph polar_to_veldkamp(const LineSpace& S) {
  if (S.lines().empty()) throw input_error("polar_to_veldkamp: L is empty");
  if (!S.is_thick()) throw input_error("polar_to_veldkamp: S is not thick");
  if (check_BS(S)) throw input_error("polar_to_veldkamp: S violates the BS axiom");
  if (!is_nondegenerate(S)) throw input_error("polar_to_veldkamp: S is degenerate");

  VeldkampGraph g = VeldkampGraph::build(S.n(), S.lines(), 4);
  // at a point, lines are opposite iff their union spans a non-singular
  // subspace, i.e. some point of one is non-collinear with some point of the
  // other
  auto opposite_lines = [&S](int lx, int ly) {
    for (int p : S.lines()[lx]) {
      const Bitset& pp = S.perp(p);
      for (int r : S.lines()[ly])
        if (!pp.test(r)) return true;
    }
    return false;
  };
  for (int a = 0; a < S.n(); ++a)
    g.set_opposition(
        a, [&](int u, int w) { return opposite_lines(u - S.n(), w - S.n()); });
  return g;
}

LineSpace veldkamp_to_polar(const VeldkampGraph& g) {
  if (!is_green(g)) throw input_error("veldkamp_to_polar: graph is not green");
  auto ops = opposite_sets(g);
  if (!is_flat(g, ops)) throw input_error("veldkamp_to_polar: graph is not flat");
  std::vector<std::vector<int>> lines;
  lines.reserve(g.line_count());
  for (int x = g.points(); x < g.V(); ++x) {
    std::vector<int> l(g.nbr_begin(x), g.nbr_begin(x) + g.deg(x));
    lines.push_back(std::move(l));
  }
  std::sort(lines.begin(), lines.end());
  if (std::adjacent_find(lines.begin(), lines.end()) != lines.end())
    throw theorem_violation("veldkamp_to_polar: two lines with one point set");
  LineSpace S(g.points(), std::move(lines));
  if (S.lines().empty()) throw theorem_violation("veldkamp_to_polar: L_1 is empty");
  if (!S.is_thick()) throw theorem_violation("veldkamp_to_polar: S_Gamma not thick");
  if (auto w = check_BS(S))
    throw theorem_violation("veldkamp_to_polar: BS fails at point " + std::to_string(w->first));
  if (!is_nondegenerate(S)) throw theorem_violation("veldkamp_to_polar: S_Gamma degenerate");
  return S;
}

bool roundtrip_check(const LineSpace& S) {
  VeldkampGraph g = polar_to_veldkamp(S);
  LineSpace S2 = veldkamp_to_polar(g);
  if (!(S2 == S)) throw theorem_violation("roundtrip: S_{Gamma_S} differs from S");
  VeldkampGraph g2 = polar_to_veldkamp(S2);
  if (!(g2 == g)) throw theorem_violation("roundtrip: Gamma_{S_Gamma} differs from Gamma");
  return true;
}

Cone cone(const LineSpace& S, int d) {
  if (d < 0 || d >= S.n()) throw input_error("cone: bad apex id");
  if (rank(S) < 3) throw input_error("cone: rank(S) < 3");
  Cone c;
  c.apex = d;
  S.perp(d).for_each([&](int p) {
    if (p != d) c.point_ids.push_back(p);
  });
  std::vector<int> inv(S.n(), -1);
  for (int i = 0; i < int(c.point_ids.size()); ++i) inv[c.point_ids[i]] = i;
  std::vector<std::vector<int>> lines;
  for (int li = 0; li < int(S.lines().size()); ++li) {
    bool inside = true;
    for (int p : S.lines()[li])
      if (inv[p] < 0) { inside = false; break; }
    if (!inside) continue;
    std::vector<int> m;
    for (int p : S.lines()[li]) m.push_back(inv[p]);
    std::sort(m.begin(), m.end());
    c.line_ids.push_back(li);
    lines.push_back(std::move(m));
  }
  int np = int(c.point_ids.size());
  c.graph = VeldkampGraph::build(np, lines, 4);
  // restriction of the ambient opposition: collinearity is taken in S
  auto opposite_lines = [&](int lx, int ly) {
    for (int p : S.lines()[c.line_ids[lx]]) {
      const Bitset& pp = S.perp(p);
      for (int r : S.lines()[c.line_ids[ly]])
        if (!pp.test(r)) return true;
    }
    return false;
  };
  for (int a = 0; a < np; ++a)
    c.graph.set_opposition(
        a, [&](int u, int w) { return opposite_lines(u - np, w - np); });
  if (!is_green(c.graph)) throw theorem_violation("cone: restriction is not green");
  auto ops = opposite_sets(c.graph);
  if (is_flat(c.graph, ops)) throw theorem_violation("cone: cone is flat");
  return c;
}

std::optional<std::string> prop_cone_op_classes(const LineSpace& S, const Cone& c) {
  auto ops = opposite_sets(c.graph);
  int np = int(c.point_ids.size());
  for (int i = 0; i < np; ++i) {
    int pi = c.point_ids[i];
    // the line through d and pi
    int uline = -1;
    for (int li : S.lines_at(c.apex))
      if (std::binary_search(S.lines()[li].begin(), S.lines()[li].end(), pi)) {
        uline = li;
        break;
      }
    if (uline < 0) return "cone point not on a line through the apex";
    for (int j = i + 1; j < np; ++j) {
      int pj = c.point_ids[j];
      bool same_ops = ops[i] == ops[j];
      bool on_apex_line =
          std::binary_search(S.lines()[uline].begin(), S.lines()[uline].end(), pj);
      if (same_ops != on_apex_line)
        return "hau14(ii) fails for cone points " + std::to_string(pi) + "," +
               std::to_string(pj) + ": equal-ops=" + std::to_string(same_ops) +
               " apex-collinear=" + std::to_string(on_apex_line);
    }
  }
  return std::nullopt;
}

// --- graph isomorphism -----------------------------------------------------------

namespace {

// Stable refinement labels: class, degree, triviality, opposition-degree
// multiset, then iterated neighbor-label multisets.
std::vector<uint64_t> refine_labels(const VeldkampGraph& g) {
  auto mix = [](uint64_t h, uint64_t x) {
    h ^= x + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    return h;
  };
  std::vector<uint64_t> lab(g.V());
  for (int v = 0; v < g.V(); ++v) {
    uint64_t h = g.is_point(v) ? 11 : 13;
    h = mix(h, uint64_t(g.deg(v)));
    h = mix(h, g.relation_trivial(v) ? 7 : 3);
    std::vector<int> od;
    for (int i = 0; i < g.deg(v); ++i) {
      int c = 0;
      for (int j = 0; j < g.deg(v); ++j)
        if (g.opp(v, i, j)) ++c;
      od.push_back(c);
    }
    std::sort(od.begin(), od.end());
    for (int x : od) h = mix(h, uint64_t(x));
    lab[v] = h;
  }
  for (int it = 0; it < 8; ++it) {
    std::vector<uint64_t> nxt(g.V());
    for (int v = 0; v < g.V(); ++v) {
      std::vector<uint64_t> nl;
      for (int i = 0; i < g.deg(v); ++i) nl.push_back(lab[g.nb(v, i)]);
      std::sort(nl.begin(), nl.end());
      uint64_t h = mix(lab[v], 0x85ebca6b);
      for (uint64_t x : nl) h = mix(h, x);
      nxt[v] = h;
    }
    if (nxt == lab) break;
    lab = std::move(nxt);
  }
  return lab;
}

bool opposition_consistent(const VeldkampGraph& g1, const VeldkampGraph& g2,
                           const std::vector<int>& m, int v) {
  // all pairs of mapped neighbors of v must agree
  for (int i = 0; i < g1.deg(v); ++i) {
    int u = g1.nb(v, i);
    if (m[u] < 0) continue;
    for (int j = i + 1; j < g1.deg(v); ++j) {
      int w = g1.nb(v, j);
      if (m[w] < 0) continue;
      if (g1.opp(v, i, j) != g2.opp_v(m[v], m[u], m[w])) return false;
    }
  }
  return true;
}

struct IsoSearch {
  const VeldkampGraph &g1, &g2;
  std::vector<uint64_t> lab1, lab2;
  std::vector<int> order;  // g1 vertices, BFS from the rarest label
  std::vector<int> map12, map21;

  bool run() {
    int V = g1.V();
    // BFS order starting at a vertex with the rarest label
    std::map<uint64_t, int> freq;
    for (auto l : lab1) ++freq[l];
    int start = 0;
    for (int v = 0; v < V; ++v)
      if (freq[lab1[v]] < freq[lab1[start]]) start = v;
    std::vector<uint8_t> seen(V, 0);
    order.push_back(start);
    seen[start] = 1;
    for (size_t i = 0; i < order.size(); ++i) {
      int u = order[i];
      for (int j = 0; j < g1.deg(u); ++j) {
        int w = g1.nb(u, j);
        if (!seen[w]) {
          seen[w] = 1;
          order.push_back(w);
        }
      }
    }
    if (int(order.size()) != V) return false;  // g1 disconnected: not handled
    map12.assign(V, -1);
    map21.assign(V, -1);
    return place(0);
  }

  bool place(int k) {
    if (k == int(order.size())) return true;
    int v = order[k];
    for (int w = 0; w < g2.V(); ++w) {
      if (map21[w] >= 0 || lab2[w] != lab1[v]) continue;
      if (g2.is_point(w) != g1.is_point(v) || g2.deg(w) != g1.deg(v)) continue;
      bool ok = true;
      // adjacency consistency both ways
      for (int i = 0; i < g1.deg(v) && ok; ++i) {
        int u = g1.nb(v, i);
        if (map12[u] >= 0 && g2.nbr_index(w, map12[u]) < 0) ok = false;
      }
      for (int i = 0; i < g2.deg(w) && ok; ++i) {
        int u = g2.nb(w, i);
        if (map21[u] >= 0 && g1.nbr_index(v, map21[u]) < 0) ok = false;
      }
      if (!ok) continue;
      map12[v] = w;
      map21[w] = v;
      // local opposition consistency around all mapped neighbors of v and v itself
      ok = opposition_consistent(g1, g2, map12, v);
      for (int i = 0; i < g1.deg(v) && ok; ++i) {
        int u = g1.nb(v, i);
        if (map12[u] >= 0) ok = opposition_consistent(g1, g2, map12, u);
      }
      if (ok && place(k + 1)) return true;
      map12[v] = -1;
      map21[w] = -1;
    }
    return false;
  }
};

}  // namespace

bool is_graph_isomorphism(const VeldkampGraph& g1, const VeldkampGraph& g2, const IsoWitness& m) {
  if (g1.V() != g2.V() || g1.points() != g2.points() || int(m.size()) != g1.V()) return false;
  std::vector<uint8_t> hit(g2.V(), 0);
  for (int v = 0; v < g1.V(); ++v) {
    int w = m[v];
    if (w < 0 || w >= g2.V() || hit[w]) return false;
    hit[w] = 1;
    if (g1.is_point(v) != g2.is_point(w)) return false;
    if (g1.deg(v) != g2.deg(w)) return false;
  }
  for (int v = 0; v < g1.V(); ++v) {
    for (int i = 0; i < g1.deg(v); ++i)
      if (g2.nbr_index(m[v], m[g1.nb(v, i)]) < 0) return false;
    for (int i = 0; i < g1.deg(v); ++i)
      for (int j = i + 1; j < g1.deg(v); ++j)
        if (g1.opp(v, i, j) != g2.opp_v(m[v], m[g1.nb(v, i)], m[g1.nb(v, j)])) return false;
  }
  return true;
}

std::optional<IsoWitness> graph_isomorphic(const VeldkampGraph& g1, const VeldkampGraph& g2) {
  if (g1.V() != g2.V() || g1.points() != g2.points() || g1.line_count() != g2.line_count())
    return std::nullopt;
  IsoSearch s{g1, g2, refine_labels(g1), refine_labels(g2), {}, {}, {}};
  {
    auto a = s.lab1, b = s.lab2;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b) return std::nullopt;
  }
  if (!s.run()) return std::nullopt;
  if (!is_graph_isomorphism(g1, g2, s.map12))
    throw theorem_violation("graph_isomorphic: search returned a non-isomorphism");
  return s.map12;
}

// --- hau14(iii) -----------------------------------------------------------------

Hau14Report verify_hau14_iii(const LineSpace& S, int d, int e) {
  if (S.collinear(d, e)) throw input_error("hau14(iii): e must be opposite d (non-collinear)");
  Cone c = cone(S, d);
  QuotientResult qr = flat_quotient(c.graph);

  // S2: induced on perp(e) cap P1
  std::vector<int> p2;
  for (int p : c.point_ids)
    if (S.perp(e).test(p)) p2.push_back(p);
  auto [S2, sel] = induced_subspace(S, p2);
  if (S2.lines().empty()) throw theorem_violation("hau14(iii): L_2 empty");
  if (!S2.is_thick()) throw theorem_violation("hau14(iii): S_2 not thick");
  if (check_BS(S2)) throw theorem_violation("hau14(iii): S_2 violates BS");
  if (!is_nondegenerate(S2)) throw theorem_violation("hau14(iii): S_2 degenerate");
  VeldkampGraph gs2 = polar_to_veldkamp(S2);

  Hau14Report rep;
  rep.p2_size = S2.n();

  // canonical psi: a point class [a] of the cone maps to the unique point of
  // the line (a d) lying in P2
  int qpoints = qr.graph.points();
  bool psi_ok = (qpoints == S2.n()) && (qr.graph.line_count() == int(S2.lines().size()));
  IsoWitness m(qr.graph.V(), -1);
  std::vector<int> sel_index(S.n(), -1);
  for (int i = 0; i < int(sel.size()); ++i) sel_index[sel[i]] = i;
  if (psi_ok) {
    std::vector<int> seen(S2.n(), 0);
    for (int cls = 0; cls < qpoints && psi_ok; ++cls) {
      int member = -1;
      for (int i = 0; i < int(c.point_ids.size()); ++i)
        if (qr.point_class[i] == cls) { member = i; break; }
      int a = c.point_ids[member];
      int uline = -1;
      for (int li : S.lines_at(d))
        if (std::binary_search(S.lines()[li].begin(), S.lines()[li].end(), a)) {
          uline = li;
          break;
        }
      int img = -1;
      for (int p : S.lines()[uline])
        if (sel_index[p] >= 0) {
          if (img >= 0) { psi_ok = false; break; }
          img = sel_index[p];
        }
      if (img < 0) psi_ok = false;
      if (!psi_ok) break;
      if (seen[img]++) psi_ok = false;
      m[cls] = img;
    }
    // induced line map: the S2 line containing the images of a quotient
    // line's neighbor classes
    for (int ql = qpoints; ql < qr.graph.V() && psi_ok; ++ql) {
      std::vector<int> imgs;
      for (int i = 0; i < qr.graph.deg(ql); ++i) imgs.push_back(m[qr.graph.nb(ql, i)]);
      std::sort(imgs.begin(), imgs.end());
      int found = -1;
      for (int li = 0; li < int(S2.lines().size()); ++li)
        if (S2.lines()[li] == imgs) { found = li; break; }
      if (found < 0) psi_ok = false;
      else m[ql] = S2.n() + found;
    }
    if (psi_ok) psi_ok = is_graph_isomorphism(qr.graph, gs2, m);
  }
  if (psi_ok) {
    rep.ok = true;
    rep.used_canonical_psi = true;
    rep.witness = m;
    return rep;
  }
  rep.detail = "canonical psi failed; general search used";
  auto w = graph_isomorphic(qr.graph, gs2);
  if (!w)
    throw theorem_violation("hau14(iii): flat quotient of the cone is not isomorphic to Gamma_{S2}");
  rep.ok = true;
  rep.used_canonical_psi = false;
  rep.witness = *w;
  return rep;
}

}  // namespace vq
