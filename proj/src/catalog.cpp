#include "vq/catalog.hpp"

#include <algorithm>

#include "vq/errors.hpp"

namespace vq {

int SingularCatalog::point_index(const Field& f, const Vec& v) const {
  auto it = pt_index_.find(vec_encode(f, normalize_point(f, v)));
  return it == pt_index_.end() ? -1 : it->second;
}

int SingularCatalog::line_index(const std::vector<int>& sorted_ids) const {
  auto it = line_index_.find(sorted_ids);
  return it == line_index_.end() ? -1 : it->second;
}

SingularCatalog enumerate_singular(const Ambient& amb, long long cap) {
  if (amb.vsize() > cap)
    throw cap_exceeded("enumerate_singular: |V| = " + std::to_string(amb.vsize()) +
                       " exceeds cap " + std::to_string(cap));
  const Field& f = amb.K();
  SingularCatalog cat;
  // W1: the lexicographic sweep visits normalized representatives (first
  // nonzero coordinate 1) in lexicographic order.
  amb.for_each_vector([&](const Vec& v) {
    uint8_t lead = 0;
    for (uint8_t x : v)
      if (x) { lead = x; break; }
    if (lead != 1) return;
    if (!amb.q_vanishes(amb.eval_Q(v))) return;
    if (amb.eval_F(v, v) != 0) return;
    cat.pt_index_[vec_encode(f, v)] = int(cat.pts_.size());
    cat.pts_.push_back(v);
  });

  // W2 via collinear W1 pairs; a span is totally singular iff both spanning
  // points are singular and F-orthogonal (K0 is closed under sigma(l)*K0*l,
  // validated in LambdaSpace::make).
  int n = int(cat.pts_.size());
  std::map<std::vector<int>, int> seen;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (amb.eval_F(cat.pts_[i], cat.pts_[j]) != 0) continue;
      std::vector<int> ids;
      ids.reserve(f.q() + 1);
      ids.push_back(i);
      ids.push_back(j);
      for (int c = 1; c < f.q(); ++c) {
        Vec w = vec_add(f, cat.pts_[i], vec_scale(f, cat.pts_[j], uint8_t(c)));
        int k = cat.point_index(f, w);
        if (k < 0) throw theorem_violation("enumerate_singular: span point not in W1");
        ids.push_back(k);
      }
      std::sort(ids.begin(), ids.end());
      seen.emplace(std::move(ids), 0);
    }
  }
  cat.lines_.reserve(seen.size());
  for (auto& [ids, _] : seen) {
    cat.line_index_[ids] = int(cat.lines_.size());
    cat.lines_.push_back(ids);
  }
  return cat;
}

}  // namespace vq
