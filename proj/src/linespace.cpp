#include "vq/linespace.hpp"

#include <algorithm>
#include <set>

#include "vq/errors.hpp"

namespace vq {

LineSpace::LineSpace(int n_points, std::vector<std::vector<int>> lines)
    : n_(n_points), lines_(std::move(lines)) {
  for (auto& l : lines_) {
    if (l.size() < 2) throw input_error("line space: line with fewer than 2 points");
    if (!std::is_sorted(l.begin(), l.end()) ||
        std::adjacent_find(l.begin(), l.end()) != l.end())
      throw input_error("line space: line point set not sorted/unique");
    for (int p : l)
      if (p < 0 || p >= n_) throw input_error("line space: point id out of range");
  }
  std::sort(lines_.begin(), lines_.end());
  if (std::adjacent_find(lines_.begin(), lines_.end()) != lines_.end())
    throw input_error("line space: duplicate line");
  lines_at_.assign(n_, {});
  perp_.assign(n_, Bitset(n_));
  for (int a = 0; a < n_; ++a) perp_[a].set(a);
  for (int li = 0; li < int(lines_.size()); ++li) {
    for (int p : lines_[li]) {
      lines_at_[p].push_back(li);
      for (int r : lines_[li]) perp_[p].set(r);
    }
  }
}

bool LineSpace::is_thick() const {
  for (auto& l : lines_)
    if (l.size() < 3) return false;
  return true;
}

bool operator==(const LineSpace& a, const LineSpace& b) {
  return a.n_ == b.n_ && a.lines_ == b.lines_;
}

LineSpace line_space_from_catalog(const SingularCatalog& cat) {
  return LineSpace(int(cat.points().size()), cat.lines());
}

std::optional<std::pair<int, int>> check_BS(const LineSpace& S) {
  for (int a = 0; a < S.n(); ++a) {
    const Bitset& pa = S.perp(a);
    for (int li = 0; li < int(S.lines().size()); ++li) {
      int cnt = 0;
      for (int p : S.lines()[li])
        if (pa.test(p)) ++cnt;
      if (cnt != 1 && cnt != int(S.lines()[li].size())) return std::make_pair(a, li);
    }
  }
  return std::nullopt;
}

bool is_nondegenerate(const LineSpace& S) {
  for (int a = 0; a < S.n(); ++a)
    if (S.perp(a).count() == S.n()) return false;
  return true;
}

std::vector<int> span(const LineSpace& S, const std::vector<int>& X) {
  Bitset in(S.n());
  for (int p : X) in.set(p);
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& l : S.lines()) {
      int cnt = 0, out = 0;
      for (int p : l) {
        if (in.test(p)) ++cnt;
        else ++out;
      }
      if (cnt >= 2 && out > 0) {
        for (int p : l) in.set(p);
        changed = true;
      }
    }
  }
  std::vector<int> r;
  in.for_each([&](int p) { r.push_back(p); });
  return r;
}

bool is_singular(const LineSpace& S, const std::vector<int>& X) {
  for (size_t i = 0; i < X.size(); ++i)
    for (size_t j = i + 1; j < X.size(); ++j)
      if (!S.collinear(X[i], X[j])) return false;
  return true;
}

namespace {

// Singular subspaces of the next projective dimension, each found by closing
// a current subspace with a point of its common perp.
std::set<std::vector<int>> extend_singular(const LineSpace& S,
                                           const std::set<std::vector<int>>& level) {
  std::set<std::vector<int>> next;
  for (const auto& X : level) {
    Bitset common = S.perp(X[0]);
    for (size_t i = 1; i < X.size(); ++i) common &= S.perp(X[i]);
    Bitset inX(S.n());
    for (int p : X) inX.set(p);
    common.for_each([&](int c) {
      if (inX.test(c)) return;
      std::vector<int> Y = X;
      Y.push_back(c);
      std::vector<int> sp = span(S, Y);
      if (!is_singular(S, sp)) return;
      next.insert(std::move(sp));
    });
  }
  return next;
}

}  // namespace

int rank(const LineSpace& S) {
  if (S.lines().empty()) {
    if (S.n() == 0) throw input_error("rank: empty space");
    return 1;
  }
  std::set<std::vector<int>> level(S.lines().begin(), S.lines().end());
  int rk = 2;
  while (rk < 5) {
    auto next = extend_singular(S, level);
    if (next.empty()) break;
    level = std::move(next);
    ++rk;
  }
  // hau9x consistency clauses
  if (rk == 1 && !S.lines().empty()) throw theorem_violation("rank: rk=1 with lines present");
  if (rk == 2) {
    // lines must be maximal singular subspaces
    for (const auto& l : S.lines()) {
      Bitset common = S.perp(l[0]);
      for (size_t i = 1; i < l.size(); ++i) common &= S.perp(l[i]);
      if (common.count() > int(l.size()))
        throw theorem_violation("rank: rk=2 but a line extends to a larger singular set");
    }
  }
  return rk;
}

int witness_hau21(const LineSpace& S, int a, int b) {
  for (int c = 0; c < S.n(); ++c)
    if (!S.perp(a).test(c) && !S.perp(b).test(c)) return c;
  throw theorem_violation("hau21: no point avoiding perp(" + std::to_string(a) + ") and perp(" +
                          std::to_string(b) + ")");
}

std::pair<LineSpace, std::vector<int>> induced_subspace(const LineSpace& S,
                                                        const std::vector<int>& pts) {
  std::vector<int> sel = pts;
  std::sort(sel.begin(), sel.end());
  std::vector<int> inv(S.n(), -1);
  for (int i = 0; i < int(sel.size()); ++i) inv[sel[i]] = i;
  std::vector<std::vector<int>> ls;
  for (const auto& l : S.lines()) {
    bool inside = true;
    for (int p : l)
      if (inv[p] < 0) { inside = false; break; }
    if (!inside) continue;
    std::vector<int> m;
    m.reserve(l.size());
    for (int p : l) m.push_back(inv[p]);
    std::sort(m.begin(), m.end());
    ls.push_back(std::move(m));
  }
  return {LineSpace(int(sel.size()), std::move(ls)), sel};
}

std::pair<LineSpace, std::vector<int>> perp_polar(const LineSpace& S, int a, int b) {
  if (S.collinear(a, b)) throw input_error("perp_polar: points are collinear");
  std::vector<int> pts;
  Bitset common = S.perp(a);
  common &= S.perp(b);
  common.for_each([&](int p) { pts.push_back(p); });
  auto sub = induced_subspace(S, pts);
  if (!sub.first.is_thick()) throw theorem_violation("perp_polar: induced space not thick");
  if (check_BS(sub.first)) throw theorem_violation("perp_polar: induced space violates BS");
  if (!is_nondegenerate(sub.first)) throw theorem_violation("perp_polar: induced space degenerate");
  return sub;
}

std::optional<int> find_hau22x_partner(const LineSpace& S, int x) {
  const auto& lx = S.lines()[x];
  Bitset xperp = S.perp(lx[0]);
  for (size_t i = 1; i < lx.size(); ++i) xperp &= S.perp(lx[i]);
  for (int y = 0; y < int(S.lines().size()); ++y) {
    const auto& ly = S.lines()[y];
    Bitset yperp = S.perp(ly[0]);
    for (size_t i = 1; i < ly.size(); ++i) yperp &= S.perp(ly[i]);
    bool meets = false;
    for (int p : lx)
      if (yperp.test(p)) { meets = true; break; }
    if (meets) continue;
    Bitset common = xperp;
    common &= yperp;
    std::vector<int> pts;
    common.for_each([&](int p) { pts.push_back(p); });
    if (pts.empty()) continue;
    auto sub = induced_subspace(S, pts).first;
    if (sub.is_thick() && !check_BS(sub) && is_nondegenerate(sub)) return y;
  }
  return std::nullopt;
}

std::vector<std::vector<int>> singular_planes_through(const LineSpace& S, int line_id) {
  const auto& l = S.lines()[line_id];
  Bitset common = S.perp(l[0]);
  for (size_t i = 1; i < l.size(); ++i) common &= S.perp(l[i]);
  std::set<std::vector<int>> planes;
  common.for_each([&](int c) {
    if (std::binary_search(l.begin(), l.end(), c)) return;
    std::vector<int> Y = l;
    Y.push_back(c);
    std::vector<int> sp = span(S, Y);
    if (is_singular(S, sp)) planes.insert(std::move(sp));
  });
  return {planes.begin(), planes.end()};
}

}  // namespace vq
