#pragma once

#include <map>
#include <unordered_map>
#include <vector>

#include "vq/lambda.hpp"

namespace vq {

/// W1 (singular projective points, normalized so the first nonzero coordinate
/// is 1) and W2 (totally singular 2-dim subspaces, stored as the sorted set of
/// W1 indices they contain). Both lists are in lexicographic order, so every
/// downstream id assignment is deterministic.
class SingularCatalog {
 public:
  const std::vector<Vec>& points() const { return pts_; }
  const std::vector<std::vector<int>>& lines() const { return lines_; }

  /// Index of the W1 member spanning the same 1-space; -1 if absent.
  int point_index(const Field& f, const Vec& v) const;
  /// Index of a W2 member given its sorted point-index set; -1 if absent.
  int line_index(const std::vector<int>& sorted_ids) const;

  friend SingularCatalog enumerate_singular(const Ambient& amb, long long cap);

 private:
  std::vector<Vec> pts_;
  std::vector<std::vector<int>> lines_;
  std::unordered_map<uint64_t, int> pt_index_;
  std::map<std::vector<int>, int> line_index_;
};

/// Enumerates W1 and W2 by full sweep over V resp. collinear W1 pairs.
/// Throws cap_exceeded when |V| > cap.
SingularCatalog enumerate_singular(const Ambient& amb, long long cap = 10'000'000);

}  // namespace vq
