#include "vq/quotient.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <unordered_map>

#include "vq/errors.hpp"
#include "vq/parallel.hpp"

namespace vq {

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) {
    for (int i = 0; i < n; ++i) parent[i] = i;
  }
  int find(int x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

Partition partition_from_uf(UnionFind& uf, int n) {
  Partition p;
  p.cls.assign(n, -1);
  std::map<int, int> remap;
  for (int i = 0; i < n; ++i) {
    int r = uf.find(i);
    auto it = remap.find(r);
    if (it == remap.end()) it = remap.emplace(r, int(remap.size())).first;
    p.cls[i] = it->second;
  }
  p.count = int(remap.size());
  return p;
}

Partition partition_by_opsets(const VeldkampGraph& g, const std::vector<Bitset>& ops, int base,
                              int n) {
  UnionFind uf(n);
  std::unordered_map<uint64_t, std::vector<int>> buckets;
  for (int i = 0; i < n; ++i) buckets[ops[base + i].hash()].push_back(i);
  for (auto& [h, vs] : buckets)
    for (size_t i = 0; i < vs.size(); ++i)
      for (size_t j = i + 1; j < vs.size(); ++j)
        if (ops[base + vs[i]] == ops[base + vs[j]]) uf.unite(vs[i], vs[j]);
  return partition_from_uf(uf, n);
}

}  // namespace

std::vector<Weed> find_weeds(const VeldkampGraph& g) {
  if (!is_green(g)) throw input_error("find_weeds: graph is not green");
  auto d2 = point_dist2_sets(g);
  std::vector<std::vector<Weed>> per(g.points());
  parallel_for(g.points(), [&](int a) {
    for (int i = 0; i < g.deg(a); ++i) {
      int x = g.nb(a, i);
      for (int bi = 0; bi < g.deg(x); ++bi) {
        int b = g.nb(x, bi);
        if (b == a) continue;
        int xi = g.rev(x, bi);  // index of x in adj(b)
        for (int yi = 0; yi < g.deg(b); ++yi) {
          int y = g.nb(b, yi);
          if (y == x) continue;
          if (g.opp(b, xi, yi)) continue;  // straight at b => not a weed (green)
          for (int ci = 0; ci < g.deg(y); ++ci) {
            int c = g.nb(y, ci);
            if (c == b || c == a) continue;
            if (!d2[a].test(c)) per[a].push_back({a, x, b, y, c});
          }
        }
      }
    }
  });
  std::vector<Weed> out;
  for (auto& v : per) out.insert(out.end(), v.begin(), v.end());
  return out;
}

Partition point_classes(const VeldkampGraph& g, const std::vector<Bitset>& ops,
                        const std::vector<Weed>& weeds) {
  UnionFind uf(g.points());
  for (const Weed& w : weeds) uf.unite(w.a, w.c);
  Partition p = partition_from_uf(uf, g.points());
  Partition q = partition_by_opsets(g, ops, 0, g.points());
  if (p.cls != q.cls)
    throw theorem_violation("fla5x: weed partition and op-set partition of P differ");
  return p;
}

Partition line_classes(const VeldkampGraph& g, const std::vector<Bitset>& ops,
                       const std::vector<Weed>& weeds) {
  UnionFind uf(g.line_count());
  for (const Weed& w : weeds) uf.unite(w.x - g.points(), w.y - g.points());
  Partition p = partition_from_uf(uf, g.line_count());
  Partition q = partition_by_opsets(g, ops, g.points(), g.line_count());
  if (p.cls != q.cls)
    throw theorem_violation("fla43: ~ closure and op-set partition of L differ");
  return p;
}

std::vector<std::pair<int, int>> phi_map(const VeldkampGraph& g, int x, int y) {
  std::vector<std::pair<int, int>> out;
  if (x == y) {
    for (int i = 0; i < g.deg(x); ++i) out.emplace_back(g.nb(x, i), g.nb(x, i));
    return out;
  }
  // b = x ^ y, the unique common neighbor
  int b = -1;
  for (int i = 0; i < g.deg(x); ++i)
    if (g.nbr_index(y, g.nb(x, i)) >= 0) {
      if (b >= 0) throw input_error("phi: x and y have two common neighbors");
      b = g.nb(x, i);
    }
  if (b < 0) throw input_error("phi: x and y are not at distance 2");
  int xb = g.nbr_index(b, x), yb = g.nbr_index(b, y);
  if (g.opp(b, xb, yb)) throw input_error("phi: x and y are not ~-related (straight at x^y)");
  auto d2 = point_dist2_sets(g);
  for (int i = 0; i < g.deg(x); ++i) {
    int a = g.nb(x, i);
    if (a == b) {
      out.emplace_back(b, b);
      continue;
    }
    int image = -1;
    for (int j = 0; j < g.deg(y); ++j) {
      int c = g.nb(y, j);
      if (c == b || c == a) continue;
      if (!d2[a].test(c)) {
        if (image >= 0) throw theorem_violation("fla4: two weed completions for one point");
        image = c;
      }
    }
    if (image < 0) throw theorem_violation("fla4: no weed completion for a point");
    out.emplace_back(a, image);
  }
  return out;
}

QuotientResult flat_quotient(const VeldkampGraph& g) {
  if (!is_green(g)) throw input_error("flat_quotient: graph is not green");
  auto ops = opposite_sets(g);
  auto weeds = find_weeds(g);
  QuotientResult res;
  Partition pcls = point_classes(g, ops, weeds);
  Partition lcls = line_classes(g, ops, weeds);
  res.point_class = pcls.cls;
  res.line_class = lcls.cls;
  res.input_was_plump2 = check_plump(const_cast<VeldkampGraph&>(g), 2);

  // members per class
  std::vector<std::vector<int>> pmem(pcls.count), lmem(lcls.count);
  for (int a = 0; a < g.points(); ++a) pmem[pcls.cls[a]].push_back(a);
  for (int x = 0; x < g.line_count(); ++x) lmem[lcls.cls[x]].push_back(x);

  // quotient adjacency: line class -> set of adjacent point classes
  std::vector<std::set<int>> qlines(lcls.count);
  for (int x = 0; x < g.line_count(); ++x) {
    int v = g.points() + x;
    for (int i = 0; i < g.deg(v); ++i) qlines[lcls.cls[x]].insert(pcls.cls[g.nb(v, i)]);
  }
  std::vector<std::vector<int>> qline_members;
  qline_members.reserve(lcls.count);
  for (auto& s : qlines) qline_members.emplace_back(s.begin(), s.end());
  res.graph = VeldkampGraph::build(pcls.count, qline_members, g.gonality());

  // opposition at quotient points per the class rule: [x] opposite [y] at [a]
  // iff some member b of [a] has every line of Gamma_b in [x] opposite every
  // line of Gamma_b in [y].
  for (int qa = 0; qa < pcls.count; ++qa) {
    res.graph.set_opposition(qa, [&](int qx, int qy) {
      int cx = qx - pcls.count, cy = qy - pcls.count;
      for (int b : pmem[qa]) {
        std::vector<int> inx, iny;
        for (int i = 0; i < g.deg(b); ++i) {
          int lx = g.nb(b, i) - g.points();
          if (lcls.cls[lx] == cx) inx.push_back(i);
          if (lcls.cls[lx] == cy) iny.push_back(i);
        }
        if (inx.empty() || iny.empty())
          throw theorem_violation("fla15: class member misses an incident line class");
        bool all = true;
        for (int i : inx)
          for (int j : iny)
            if (!g.opp(b, i, j)) { all = false; break; }
        if (all) return true;
      }
      return false;
    });
  }

  res.pi.assign(g.V(), -1);
  for (int a = 0; a < g.points(); ++a) res.pi[a] = pcls.cls[a];
  for (int x = 0; x < g.line_count(); ++x) res.pi[g.points() + x] = pcls.count + lcls.cls[x];

  // --- postconditions ---------------------------------------------------------
  const VeldkampGraph& q = res.graph;
  // pi maps edges to edges (fla20(i)) and single steps lift (fla20(ii)/fla31(ii))
  for (int v = 0; v < g.V(); ++v) {
    for (int i = 0; i < g.deg(v); ++i)
      if (q.nbr_index(res.pi[v], res.pi[g.nb(v, i)]) < 0)
        throw theorem_violation("fla20(i): pi does not map an edge to an edge");
    int pv = res.pi[v];
    for (int i = 0; i < q.deg(pv); ++i) {
      int target = q.nb(pv, i);
      bool lifted = false;
      for (int j = 0; j < g.deg(v) && !lifted; ++j)
        if (res.pi[g.nb(v, j)] == target) lifted = true;
      if (!lifted) throw theorem_violation("fla20(ii): a quotient step does not lift");
    }
  }
  // straightness preserved in both directions (fla20(iii))
  for (int v = 0; v < g.V(); ++v) {
    for (int i = 0; i < g.deg(v); ++i)
      for (int j = 0; j < g.deg(v); ++j) {
        if (i == j) continue;
        int u = g.nb(v, i), w = g.nb(v, j);
        if (res.pi[u] == res.pi[w]) continue;  // not a path downstairs
        bool up = g.opp(v, i, j);
        bool down = q.opp_v(res.pi[v], res.pi[u], res.pi[w]);
        if (up != down)
          throw theorem_violation("fla20(iii): straightness not preserved by pi");
      }
  }
  // pi restricted to line neighborhoods is a bijection (fla31(i))
  for (int x = g.points(); x < g.V(); ++x) {
    std::set<int> im;
    for (int i = 0; i < g.deg(x); ++i) im.insert(res.pi[g.nb(x, i)]);
    if (int(im.size()) != g.deg(x) || int(im.size()) != q.deg(res.pi[x]))
      throw theorem_violation("fla31(i): pi not bijective on a line neighborhood");
  }
  if (!is_green(q)) throw theorem_violation("fla14: quotient is not green");
  auto qops = opposite_sets(q);
  if (!is_flat(q, qops)) throw theorem_violation("fla14: quotient is not flat");
  res.quotient_axioms = check_axioms(q);
  if (!res.quotient_axioms.vp1 || !res.quotient_axioms.vp2 || !res.quotient_axioms.vp3)
    throw theorem_violation("fla14: quotient fails VP axioms: " + res.quotient_axioms.witness);
  if (res.input_was_plump2 && !res.quotient_axioms.plump2)
    throw theorem_violation("fla14: quotient of a 2-plump graph is not 2-plump");
  // fla32x: flat input reproduces itself
  if (weeds.empty() && !(q == g))
    throw theorem_violation("fla32x: flat graph does not equal its quotient");
  return res;
}

// --- property checkers ----------------------------------------------------------

namespace {

std::set<std::pair<int, int>> sim_pairs(const std::vector<Weed>& weeds) {
  std::set<std::pair<int, int>> s;
  for (const Weed& w : weeds) {
    s.emplace(std::min(w.x, w.y), std::max(w.x, w.y));
  }
  return s;
}

}  // namespace

std::optional<std::string> prop_fla11(const VeldkampGraph& g, const std::vector<Weed>& weeds) {
  auto sims = sim_pairs(weeds);
  for (auto [y, z] : sims) {
    // the common point of y and z
    int a = -1;
    for (int i = 0; i < g.deg(y); ++i)
      if (g.nbr_index(z, g.nb(y, i)) >= 0) { a = g.nb(y, i); break; }
    if (a < 0) return "fla11: ~-pair without common point";
    int iy = g.nbr_index(a, y), iz = g.nbr_index(a, z);
    for (int ix = 0; ix < g.deg(a); ++ix) {
      if (g.opp(a, ix, iy) != g.opp(a, ix, iz))
        return "fla11: line " + std::to_string(g.nb(a, ix)) + " separates ~-pair (" +
               std::to_string(y) + "," + std::to_string(z) + ") at point " + std::to_string(a);
    }
  }
  return std::nullopt;
}

std::optional<std::string> prop_fla5x_gamma2(const VeldkampGraph& g, const Partition& pcls) {
  auto d2 = point_dist2_sets(g);
  std::vector<std::vector<int>> mem(pcls.count);
  for (int a = 0; a < g.points(); ++a) mem[pcls.cls[a]].push_back(a);
  for (auto& m : mem)
    for (size_t i = 1; i < m.size(); ++i)
      if (!(d2[m[0]] == d2[m[i]]))
        return "fla5x(ii): Gamma_2 differs inside point class of " + std::to_string(m[0]);
  return std::nullopt;
}

std::optional<std::string> prop_fla7(const VeldkampGraph& g, const std::vector<Weed>& weeds,
                                     const Partition& lcls) {
  auto sims = sim_pairs(weeds);
  for (int a = 0; a < g.points(); ++a) {
    for (int i = 0; i < g.deg(a); ++i)
      for (int j = i + 1; j < g.deg(a); ++j) {
        int x = g.nb(a, i), y = g.nb(a, j);
        bool same = lcls.cls[x - g.points()] == lcls.cls[y - g.points()];
        bool sim = sims.count({std::min(x, y), std::max(x, y)}) > 0;
        if (same != sim)
          return "fla7: lines " + std::to_string(x) + "," + std::to_string(y) +
                 " at point " + std::to_string(a) + ": approx=" + std::to_string(same) +
                 " sim=" + std::to_string(sim);
      }
  }
  return std::nullopt;
}

std::optional<std::string> prop_fla4x(const VeldkampGraph& g, const std::vector<Weed>& weeds) {
  auto sims = sim_pairs(weeds);
  auto d2 = point_dist2_sets(g);
  for (auto [x, y] : sims) {
    auto fxy = phi_map(g, x, y);
    auto fyx = phi_map(g, y, x);
    std::map<int, int> back(fyx.begin(), fyx.end());
    std::set<int> images;
    for (auto [a, c] : fxy) {
      if (back.at(c) != a)
        return "fla4x: phi_yx(phi_xy(" + std::to_string(a) + ")) != identity";
      images.insert(c);
      if (a != c && d2[a].test(c)) return "fla4x: image not at distance 4";
    }
    if (int(images.size()) != g.deg(y)) return "fla4x: phi_xy not a bijection";
  }
  return std::nullopt;
}

std::optional<std::string> prop_fla32(const VeldkampGraph& g, const std::vector<Bitset>& ops) {
  bool flat = is_flat(g, ops);
  bool noweeds = find_weeds(g).empty();
  if (flat != noweeds)
    return "fla32: flat=" + std::to_string(flat) + " but weeds " +
           (noweeds ? "absent" : "present");
  return std::nullopt;
}

}  // namespace vq
