#include "vq/veldkamp.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <unordered_map>

#include "vq/errors.hpp"
#include "vq/parallel.hpp"

namespace vq {

namespace {
int g_workers = 0;
}
int worker_count() {
  if (g_workers > 0) return g_workers;
  unsigned hc = std::thread::hardware_concurrency();
  return hc ? int(hc) : 1;
}
void set_worker_count(int n) { g_workers = n; }

// --- VeldkampGraph ----------------------------------------------------------

VeldkampGraph VeldkampGraph::build(int n_points,
                                   const std::vector<std::vector<int>>& line_members,
                                   int gonality) {
  VeldkampGraph g;
  g.n_points_ = n_points;
  g.n_lines_ = int(line_members.size());
  g.gon_ = gonality;
  int V = g.V();
  std::vector<std::vector<int>> adj(V);
  for (int li = 0; li < g.n_lines_; ++li) {
    for (int p : line_members[li]) {
      if (p < 0 || p >= n_points) throw input_error("graph: point id out of range");
      adj[p].push_back(n_points + li);
      adj[n_points + li].push_back(p);
    }
  }
  g.off_.assign(V + 1, 0);
  for (int v = 0; v < V; ++v) {
    std::sort(adj[v].begin(), adj[v].end());
    if (std::adjacent_find(adj[v].begin(), adj[v].end()) != adj[v].end())
      throw input_error("graph: duplicate incidence");
    g.off_[v + 1] = g.off_[v] + int(adj[v].size());
  }
  g.nbr_.resize(g.off_[V]);
  for (int v = 0; v < V; ++v)
    std::copy(adj[v].begin(), adj[v].end(), g.nbr_.begin() + g.off_[v]);
  g.rev_.resize(g.off_[V]);
  for (int v = 0; v < V; ++v)
    for (int i = 0; i < g.deg(v); ++i) g.rev_[g.off_[v] + i] = g.nbr_index(g.nb(v, i), v);
  g.trivial_.assign(V, 1);
  g.oppbits_.assign(V, {});
  return g;
}

int VeldkampGraph::nbr_index(int v, int u) const {
  auto b = nbr_.begin() + off_[v], e = nbr_.begin() + off_[v + 1];
  auto it = std::lower_bound(b, e, u);
  if (it == e || *it != u) return -1;
  return int(it - b);
}

void VeldkampGraph::set_opposition(int v, const std::function<bool(int, int)>& opposite) {
  int d = deg(v);
  std::vector<uint64_t> bits((size_t(d) * d + 63) / 64, 0);
  bool all = true;
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      if (i == j) continue;
      if (opposite(nb(v, i), nb(v, j))) {
        size_t bit = size_t(i) * d + j;
        bits[bit >> 6] |= uint64_t(1) << (bit & 63);
      } else {
        all = false;
      }
    }
  for (int i = 0; i < d; ++i)
    for (int j = i + 1; j < d; ++j) {
      size_t ij = size_t(i) * d + j, ji = size_t(j) * d + i;
      bool bij = (bits[ij >> 6] >> (ij & 63)) & 1, bji = (bits[ji >> 6] >> (ji & 63)) & 1;
      if (bij != bji) throw input_error("graph: opposition relation not symmetric");
    }
  if (all) {
    trivial_[v] = 1;
    oppbits_[v].clear();
  } else {
    trivial_[v] = 0;
    oppbits_[v] = std::move(bits);
  }
}

void VeldkampGraph::set_opposition_pairs(int v,
                                         const std::vector<std::pair<int, int>>& pairs) {
  int d = deg(v);
  std::vector<uint8_t> m(size_t(d) * d, 0);
  for (auto [i, j] : pairs) {
    if (i < 0 || i >= d || j < 0 || j >= d || i == j)
      throw input_error("graph: bad opposition pair");
    m[size_t(i) * d + j] = 1;
    m[size_t(j) * d + i] = 1;
  }
  set_opposition(v, [&](int u, int w) {
    return m[size_t(nbr_index(v, u)) * d + nbr_index(v, w)] != 0;
  });
}

bool VeldkampGraph::relation_trivial(int v) const {
  if (trivial_[v]) return true;
  int d = deg(v);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      if (i != j && !opp(v, i, j)) return false;
  return true;
}

// --- straight path enumeration ----------------------------------------------

namespace {

// Straight paths of length exactly `len` from src. The callback receives
// verts[0..len], pidx (pidx[k] = index of verts[k-1] in adj(verts[k])) and
// fidx (fidx[k] = index of verts[k+1] in adj(verts[k])). Monomorphized; this
// loop is the hot core of every axiom and proposition check.
template <class F>
inline void straight_paths(const VeldkampGraph& g, int src, int len, F&& f) {
  int verts[8], pidx[8], fidx[8], iter[8];
  verts[0] = src;
  int k = 0;
  iter[0] = 0;
  while (k >= 0) {
    if (k == len) {
      f(verts, pidx, fidx);
      --k;
      continue;
    }
    int v = verts[k];
    int d = g.deg(v);
    bool advanced = false;
    for (int j = iter[k]; j < d; ++j) {
      if (k > 0 && !g.opp(v, pidx[k], j)) continue;
      iter[k] = j + 1;
      fidx[k] = j;
      verts[k + 1] = g.nb(v, j);
      pidx[k + 1] = g.rev(v, j);
      iter[k + 1] = 0;
      ++k;
      advanced = true;
      break;
    }
    if (!advanced) {
      iter[k] = 0;
      --k;
    }
  }
}

struct TriEntry {
  int target;
  int32_t i_first;  // index of path[1] in adj(src)
  int32_t i_last;   // index of path[len-1] in adj(target)
};

}  // namespace

bool is_straight(const VeldkampGraph& g, const std::vector<int>& path) {
  for (size_t i = 1; i < path.size(); ++i) {
    if (g.nbr_index(path[i], path[i - 1]) < 0) throw input_error("path: not a path (non-edge)");
    if (i >= 2 && path[i] == path[i - 2])
      throw input_error("path: not a path (x[i-2] == x[i])");
  }
  for (size_t i = 1; i + 1 < path.size(); ++i)
    if (!g.opp_v(path[i], path[i - 1], path[i + 1])) return false;
  return true;
}

void for_each_straight_path(const VeldkampGraph& g, int src, int len,
                            const std::function<void(const int*)>& f) {
  if (len < 0 || len > 6) throw input_error("for_each_straight_path: length out of range");
  straight_paths(g, src, len, [&](const int* verts, const int*, const int*) { f(verts); });
}

// --- BFS utilities ------------------------------------------------------------

std::vector<int> bfs_dist(const VeldkampGraph& g, int src) {
  std::vector<int> dist(g.V(), -1);
  std::deque<int> q{src};
  dist[src] = 0;
  while (!q.empty()) {
    int u = q.front();
    q.pop_front();
    for (int i = 0; i < g.deg(u); ++i) {
      int v = g.nb(u, i);
      if (dist[v] < 0) {
        dist[v] = dist[u] + 1;
        q.push_back(v);
      }
    }
  }
  return dist;
}

int diameter(const VeldkampGraph& g) {
  std::vector<int> best(g.V(), 0);
  parallel_for(g.V(), [&](int s) {
    auto d = bfs_dist(g, s);
    int m = 0;
    for (int x : d) {
      if (x < 0) { m = -1; break; }
      m = std::max(m, x);
    }
    best[s] = m;
  });
  int m = 0;
  for (int x : best) {
    if (x < 0) return -1;  // disconnected
    m = std::max(m, x);
  }
  return m;
}

int girth(const VeldkampGraph& g) {
  int best = -1;
  for (int s = 0; s < g.V(); ++s) {
    std::vector<int> dist(g.V(), -1), par(g.V(), -1);
    std::deque<int> q{s};
    dist[s] = 0;
    while (!q.empty()) {
      int u = q.front();
      q.pop_front();
      for (int i = 0; i < g.deg(u); ++i) {
        int v = g.nb(u, i);
        if (dist[v] < 0) {
          dist[v] = dist[u] + 1;
          par[v] = u;
          q.push_back(v);
        } else if (par[u] != v) {
          int c = dist[u] + dist[v] + 1;
          if (best < 0 || c < best) best = c;
        }
      }
    }
  }
  return best;
}

namespace {

// Any circuit shorter than `bound`? A cycle of length l is seen from its own
// vertices within BFS depth l/2, so a truncated sweep is exhaustive.
bool has_short_circuit(const VeldkampGraph& g, int bound) {
  int depth_cap = bound / 2;
  std::vector<uint8_t> found(g.V(), 0);
  parallel_for(g.V(), [&](int s) {
    std::vector<int> dist(g.V(), -1), par(g.V(), -1);
    std::deque<int> q{s};
    dist[s] = 0;
    while (!q.empty()) {
      int u = q.front();
      q.pop_front();
      if (dist[u] >= depth_cap) continue;
      for (int i = 0; i < g.deg(u); ++i) {
        int v = g.nb(u, i);
        if (dist[v] < 0) {
          dist[v] = dist[u] + 1;
          par[v] = u;
          q.push_back(v);
        } else if (par[u] != v && dist[u] + dist[v] + 1 < bound) {
          found[s] = 1;
        }
      }
    }
  });
  for (uint8_t f : found)
    if (f) return true;
  return false;
}

}  // namespace

std::vector<Bitset> point_dist2_sets(const VeldkampGraph& g) {
  std::vector<Bitset> d2(g.points(), Bitset(g.points()));
  parallel_for(g.points(), [&](int a) {
    for (int i = 0; i < g.deg(a); ++i) {
      int x = g.nb(a, i);
      for (int j = 0; j < g.deg(x); ++j) {
        int b = g.nb(x, j);
        if (b != a) d2[a].set(b);
      }
    }
  });
  return d2;
}

// --- axioms -------------------------------------------------------------------

bool check_plump(const VeldkampGraph& g, int k, std::string* witness) {
  if (k < 1 || k > 3) throw input_error("check_plump: k must be in [1,3]");
  std::vector<uint8_t> bad(g.V(), 0);
  parallel_for(g.V(), [&](int v) {
    int d = g.deg(v);
    if (g.trivial_at(v)) {
      if (d < k + 1) bad[v] = 1;
      return;
    }
    auto has_common = [&](std::initializer_list<int> subset) {
      for (int z = 0; z < d; ++z) {
        bool ok = true;
        for (int s : subset)
          if (!g.opp(v, z, s)) { ok = false; break; }
        if (ok) return true;
      }
      return false;
    };
    for (int i = 0; i < d && !bad[v]; ++i) {
      if (!has_common({i})) bad[v] = 1;
      if (k < 2) continue;
      for (int j = i; j < d && !bad[v]; ++j) {
        if (!has_common({i, j})) bad[v] = 1;
        if (k < 3) continue;
        for (int l = j; l < d && !bad[v]; ++l)
          if (!has_common({i, j, l})) bad[v] = 1;
      }
    }
  });
  for (int v = 0; v < g.V(); ++v)
    if (bad[v]) {
      if (witness) *witness = "plump" + std::to_string(k) + " fails at vertex " + std::to_string(v);
      return false;
    }
  return true;
}

AxiomReport check_axioms(const VeldkampGraph& g) {
  AxiomReport rep;
  int n = g.gonality();
  if (n < 2 || n > 4) throw input_error("check_axioms: gonality must be in [2,4]");
  int V = g.V();

  // VP1: connected and bipartite w.r.t. the stored partition.
  {
    auto dist = bfs_dist(g, 0);
    bool conn = V > 0;
    for (int v = 0; v < V; ++v)
      if (dist[v] < 0) conn = false;
    bool bip = true;
    for (int v = 0; v < V && bip; ++v)
      for (int i = 0; i < g.deg(v); ++i)
        if (g.is_point(v) == g.is_point(g.nb(v, i))) { bip = false; break; }
    rep.vp1 = conn && bip;
    if (!rep.vp1) rep.witness = conn ? "VP1: edge inside one bipartition class" : "VP1: graph disconnected";
  }

  // VP2: straight (<= n-1)-path uniqueness between endpoint pairs. A second
  // straight path of the same length, or one of length k-2, violates the
  // axiom. The unique straight (n-1)-path per endpoint pair is recorded for
  // the VP3 closure lookups.
  std::vector<std::vector<TriEntry>> tri(V);
  std::vector<std::string> vp2bad(V);
  bool store_all_sources = (n < 4);  // for n=4 only line-class sources are looked up
  parallel_for(V, [&](int s) {
    std::vector<uint8_t> cnt_short(V, 0), cnt_mid(V, 0), cnt_long(V, 0);
    std::string bad;
    int klong = n - 1, kshort = n - 3;
    if (kshort >= 1) {
      straight_paths(g, s, kshort, [&](const int* verts, const int*, const int*) {
        if (cnt_short[verts[kshort]] < 255) ++cnt_short[verts[kshort]];
      });
    }
    if (n - 2 >= 1) {
      straight_paths(g, s, n - 2, [&](const int* verts, const int*, const int*) {
        int w = verts[n - 2];
        if (++cnt_mid[w] == 2 && bad.empty())
          bad = "two straight " + std::to_string(n - 2) + "-paths from " + std::to_string(s) +
                " to " + std::to_string(w);
      });
    }
    bool keep = store_all_sources || !g.is_point(s);
    straight_paths(g, s, klong, [&](const int* verts, const int* pidx, const int* fidx) {
      int w = verts[klong];
      if (++cnt_long[w] == 2 && bad.empty())
        bad = "two straight " + std::to_string(klong) + "-paths from " + std::to_string(s) +
              " to " + std::to_string(w);
      if (kshort >= 1 && cnt_short[w] && bad.empty())
        bad = "straight " + std::to_string(klong) + "-path and straight " +
              std::to_string(kshort) + "-path from " + std::to_string(s) + " to " +
              std::to_string(w);
      if (keep) tri[s].push_back({w, fidx[0], pidx[klong]});
    });
    if (keep)
      std::sort(tri[s].begin(), tri[s].end(),
                [](const TriEntry& a, const TriEntry& b) { return a.target < b.target; });
    vp2bad[s] = bad;
  });
  rep.vp2 = true;
  for (int s = 0; s < V && rep.vp2; ++s)
    if (!vp2bad[s].empty()) {
      rep.vp2 = false;
      if (rep.witness.empty()) rep.witness = "VP2: " + vp2bad[s];
    }

  // VP3: every straight (n+1)-path closes into a straight 2n-circuit. Under
  // VP2 the closing (n-1)-path back from the last vertex to the first is
  // unique, so each candidate needs two joint checks only.
  if (rep.vp2) {
    std::vector<std::string> vp3bad(V);
    parallel_for(V, [&](int s) {
      if (n == 4 && !g.is_point(s)) return;  // every straight 5-path has one point end
      std::string bad;
      straight_paths(g, s, n + 1, [&](const int* verts, const int* pidx, const int* fidx) {
        if (!bad.empty()) return;
        int last = verts[n + 1];
        auto& list = tri[last];
        auto it = std::lower_bound(list.begin(), list.end(), s,
                                   [](const TriEntry& e, int t) { return e.target < t; });
        bool ok = false;
        if (it != list.end() && it->target == s) {
          if (g.opp(last, pidx[n + 1], it->i_first) && g.opp(s, it->i_last, fidx[0])) ok = true;
        }
        if (!ok) {
          bad = "VP3: straight " + std::to_string(n + 1) + "-path (";
          for (int i = 0; i <= n + 1; ++i) bad += std::to_string(verts[i]) + (i <= n ? "," : ")");
          bad += " lies in no straight " + std::to_string(2 * n) + "-circuit";
        }
      });
      vp3bad[s] = bad;
    });
    rep.vp3 = true;
    for (int s = 0; s < V && rep.vp3; ++s)
      if (!vp3bad[s].empty()) {
        rep.vp3 = false;
        if (rep.witness.empty()) rep.witness = vp3bad[s];
      }
  } else {
    rep.vp3 = false;
  }

  std::string pw;
  rep.plump2 = check_plump(g, 2, &pw);
  if (!rep.plump2 && rep.witness.empty()) rep.witness = pw;
  return rep;
}

// --- op-sets, flatness, greenness ---------------------------------------------

std::vector<Bitset> opposite_sets(const VeldkampGraph& g) {
  int n = g.gonality();
  std::vector<Bitset> ops(g.V());
  parallel_for(g.V(), [&](int s) {
    Bitset b(g.V());
    straight_paths(g, s, n, [&](const int* verts, const int*, const int*) { b.set(verts[n]); });
    ops[s] = std::move(b);
  });
  return ops;
}

Bitset opposite_set(const VeldkampGraph& g, int v) {
  Bitset b(g.V());
  straight_paths(g, v, g.gonality(),
                 [&](const int* verts, const int*, const int*) { b.set(verts[g.gonality()]); });
  return b;
}

bool is_flat(const VeldkampGraph& g, const std::vector<Bitset>& ops,
             std::pair<int, int>* witness) {
  std::unordered_map<uint64_t, std::vector<int>> buckets;
  for (int v = 0; v < g.V(); ++v) buckets[ops[v].hash()].push_back(v);
  for (auto& [h, vs] : buckets) {
    for (size_t i = 0; i < vs.size(); ++i)
      for (size_t j = i + 1; j < vs.size(); ++j) {
        if (g.is_point(vs[i]) != g.is_point(vs[j])) continue;
        if (ops[vs[i]] == ops[vs[j]]) {
          if (witness) *witness = {vs[i], vs[j]};
          return false;
        }
      }
  }
  return true;
}

bool is_green(const VeldkampGraph& g) {
  for (int v = g.points(); v < g.V(); ++v)
    if (!g.relation_trivial(v)) return false;
  return true;
}

bool is_generalized_polygon(const VeldkampGraph& g) {
  bool trivial = true;
  for (int v = 0; v < g.V() && trivial; ++v)
    if (!g.relation_trivial(v)) trivial = false;

  int n = g.gonality();
  bool structural = true;
  for (int v = 0; v < g.V(); ++v)
    if (g.deg(v) < 2) structural = false;
  if (structural) structural = diameter(g) == n;
  if (structural) structural = !has_short_circuit(g, 2 * n);

  if (trivial != structural)
    throw theorem_violation(
        "generalized polygon tests disagree: trivial-relations=" + std::to_string(trivial) +
        " structural=" + std::to_string(structural));
  return trivial;
}

// --- propositions ---------------------------------------------------------------

std::optional<std::string> prop_toy8(const VeldkampGraph& g, const std::vector<Bitset>& ops) {
  int n = g.gonality();
  std::vector<std::string> bad(g.V());
  parallel_for(g.V(), [&](int x) {
    // roots from x grouped by endpoint; each endpoint y must receive exactly
    // deg(y) roots with pairwise distinct penultimate vertices.
    std::vector<std::pair<int, int>> ends;  // (y, index of penultimate vertex in adj(y))
    straight_paths(g, x, n, [&](const int* verts, const int* pidx, const int*) {
      ends.emplace_back(verts[n], pidx[n]);
    });
    std::sort(ends.begin(), ends.end());
    if (std::adjacent_find(ends.begin(), ends.end()) != ends.end()) {
      bad[x] = "toy8: two roots from " + std::to_string(x) +
               " with the same endpoint and penultimate vertex";
      return;
    }
    size_t i = 0;
    int covered = 0;
    while (i < ends.size()) {
      size_t j = i;
      while (j < ends.size() && ends[j].first == ends[i].first) ++j;
      int y = ends[i].first;
      if (int(j - i) != g.deg(y)) {
        bad[x] = "toy8: " + std::to_string(j - i) + " roots from " + std::to_string(x) + " to " +
                 std::to_string(y) + ", expected deg(y) = " + std::to_string(g.deg(y));
        return;
      }
      ++covered;
      i = j;
    }
    if (covered != ops[x].count()) bad[x] = "toy8: op-set and root endpoints disagree";
  });
  for (auto& b : bad)
    if (!b.empty()) return b;
  return std::nullopt;
}

std::optional<std::string> prop_toy9(const VeldkampGraph& g, const std::vector<Bitset>& ops) {
  // in a connected bipartite graph, even-distance pairs = same-class pairs
  std::vector<std::string> bad(g.V());
  parallel_for(g.V(), [&](int u) {
    for (int v = u + 1; v < g.V(); ++v) {
      if (g.is_point(u) != g.is_point(v)) continue;
      if (!ops[u].intersects(ops[v])) {
        bad[u] = "toy9: op-sets of " + std::to_string(u) + " and " + std::to_string(v) +
                 " are disjoint";
        return;
      }
    }
  });
  for (auto& b : bad)
    if (!b.empty()) return b;
  return std::nullopt;
}

std::optional<std::string> prop_toy35(const VeldkampGraph& g) {
  std::vector<std::string> bad(g.V());
  parallel_for(g.V(), [&](int x) {
    struct Root {
      int y, first, last;
    };
    std::vector<Root> roots;
    straight_paths(g, x, g.gonality(), [&](const int* verts, const int* pidx, const int* fidx) {
      roots.push_back({verts[g.gonality()], fidx[0], pidx[g.gonality()]});
    });
    std::sort(roots.begin(), roots.end(), [](const Root& a, const Root& b) { return a.y < b.y; });
    for (size_t i = 0; i < roots.size() && bad[x].empty();) {
      size_t j = i;
      while (j < roots.size() && roots[j].y == roots[i].y) ++j;
      for (size_t a = i; a < j && bad[x].empty(); ++a)
        for (size_t b = a + 1; b < j; ++b) {
          bool at_start = g.opp(x, roots[a].first, roots[b].first);
          bool at_end = g.opp(roots[i].y, roots[a].last, roots[b].last);
          if (at_start != at_end) {
            bad[x] = "toy35: roots from " + std::to_string(x) + " to " +
                     std::to_string(roots[i].y) + " disagree at the two ends";
            break;
          }
        }
      i = j;
    }
  });
  for (auto& b : bad)
    if (!b.empty()) return b;
  return std::nullopt;
}

std::optional<std::string> prop_fla3(const VeldkampGraph& g) {
  // a 4-circuit is a pair of vertices with two common neighbors
  for (int cls = 0; cls < 2; ++cls) {
    std::vector<std::pair<int, int>> pairs;
    for (int v = 0; v < g.V(); ++v) {
      if ((cls == 0) != g.is_point(v)) continue;
      for (int i = 0; i < g.deg(v); ++i)
        for (int j = i + 1; j < g.deg(v); ++j) pairs.emplace_back(g.nb(v, i), g.nb(v, j));
    }
    std::sort(pairs.begin(), pairs.end());
    auto it = std::adjacent_find(pairs.begin(), pairs.end());
    if (it != pairs.end())
      return "fla3: 4-circuit through " + std::to_string(it->first) + " and " +
             std::to_string(it->second);
  }
  return std::nullopt;
}

std::optional<std::string> prop_fla40(const VeldkampGraph& g) {
  auto d2 = point_dist2_sets(g);
  std::vector<std::string> bad(g.points());
  parallel_for(g.points(), [&](int a) {
    for (int i = 0; i < g.deg(a) && bad[a].empty(); ++i)
      for (int j = i + 1; j < g.deg(a) && bad[a].empty(); ++j) {
        if (!g.opp(a, i, j)) continue;
        int x = g.nb(a, i), y = g.nb(a, j);
        for (int bi = 0; bi < g.deg(x) && bad[a].empty(); ++bi) {
          int b = g.nb(x, bi);
          if (b == a) continue;
          for (int ci = 0; ci < g.deg(y); ++ci) {
            int c = g.nb(y, ci);
            if (c == a || c == b || !d2[b].test(c)) continue;
            // some common neighbor of b, c other than x and y closes a 6-circuit
            for (int k = 0; k < g.deg(b); ++k) {
              int z = g.nb(b, k);
              if (z == x || z == y) continue;
              if (g.nbr_index(c, z) >= 0) {
                bad[a] = "fla40: straight 2-path (" + std::to_string(x) + "," +
                         std::to_string(a) + "," + std::to_string(y) + ") lies in a 6-circuit";
                break;
              }
            }
            if (!bad[a].empty()) break;
          }
        }
      }
  });
  for (auto& b : bad)
    if (!b.empty()) return b;
  return std::nullopt;
}

std::optional<std::string> prop_toy20(const VeldkampGraph& g, const std::vector<Bitset>& ops) {
  std::vector<std::string> bad(g.points());
  parallel_for(g.points(), [&](int a) {
    auto dist = bfs_dist(g, a);
    ops[a].for_each([&](int b) {
      if (dist[b] != 4 && bad[a].empty())
        bad[a] = "toy20: opposite points " + std::to_string(a) + "," + std::to_string(b) +
                 " at distance " + std::to_string(dist[b]);
    });
  });
  for (auto& b : bad)
    if (!b.empty()) return b;
  return std::nullopt;
}

std::optional<std::string> prop_toy21(const VeldkampGraph& g) {
  int d = diameter(g);
  if (d != 4) return "toy21: diameter is " + std::to_string(d);
  return std::nullopt;
}

std::optional<std::string> prop_toy22(const VeldkampGraph& g, const std::vector<Bitset>& ops) {
  auto d2 = point_dist2_sets(g);
  std::vector<std::string> bad(g.points());
  parallel_for(g.points(), [&](int a) {
    auto dist = bfs_dist(g, a);
    for (int b = a + 1; b < g.points(); ++b) {
      if (dist[b] != 4 || ops[a].test(b)) continue;
      if (!(ops[a] == ops[b]))
        bad[a] = "toy22: op-sets differ for points " + std::to_string(a) + "," + std::to_string(b);
      else if (!(d2[a] == d2[b]))
        bad[a] = "toy22: Gamma_2 differs for points " + std::to_string(a) + "," + std::to_string(b);
      if (!bad[a].empty()) return;
    }
  });
  for (auto& b : bad)
    if (!b.empty()) return b;
  return std::nullopt;
}

std::optional<std::string> prop_toy25_points(const VeldkampGraph& g,
                                             const std::vector<Bitset>& ops) {
  std::vector<std::string> bad(g.points());
  parallel_for(g.points(), [&](int a) {
    auto dist = bfs_dist(g, a);
    for (int b = 0; b < g.points(); ++b) {
      bool o = ops[a].test(b), d4 = dist[b] == 4;
      if (o != d4) {
        bad[a] = "toy25: points " + std::to_string(a) + "," + std::to_string(b) +
                 " opposite=" + std::to_string(o) + " dist=" + std::to_string(dist[b]);
        return;
      }
    }
  });
  for (auto& b : bad)
    if (!b.empty()) return b;
  return std::nullopt;
}

std::optional<std::string> prop_toy5x(const VeldkampGraph& g, int max_len) {
  for (int s = 0; s < g.V(); ++s) {
    std::optional<std::string> w;
    for (int len = 0; len < max_len; ++len) {
      straight_paths(g, s, len, [&](const int* verts, const int* pidx, const int*) {
        if (w) return;
        int v = verts[len];
        for (int j = 0; j < g.deg(v); ++j)
          if (len == 0 || g.opp(v, pidx[len], j)) return;  // extension found
        w = "toy5x: straight " + std::to_string(len) + "-path from " + std::to_string(s) +
            " has no straight extension";
      });
      if (w) return w;
    }
  }
  return std::nullopt;
}

std::optional<std::string> prop_toy36_classes(const VeldkampGraph& g) {
  for (int cls = 0; cls < 2; ++cls) {
    int trivial = -1;
    for (int v = 0; v < g.V(); ++v) {
      if (g.is_point(v) != (cls == 0)) continue;
      int t = g.relation_trivial(v) ? 1 : 0;
      if (trivial < 0) trivial = t;
      if (t != trivial)
        return "toy36: mixed triviality inside one bipartition class (vertex " +
               std::to_string(v) + ")";
    }
  }
  return std::nullopt;
}

}  // namespace vq
