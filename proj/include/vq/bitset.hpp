#pragma once

#include <cstdint>
#include <vector>

namespace vq {

/// Fixed-size bitset sized at runtime. Used for perps, distance shells and
/// opposite-sets, where the AND/OR word loops dominate every downstream check.
class Bitset {
 public:
  Bitset() = default;
  explicit Bitset(int n) : n_(n), w_((n + 63) / 64, 0) {}

  int size() const { return n_; }
  void set(int i) { w_[i >> 6] |= uint64_t(1) << (i & 63); }
  void reset(int i) { w_[i >> 6] &= ~(uint64_t(1) << (i & 63)); }
  bool test(int i) const { return (w_[i >> 6] >> (i & 63)) & 1; }

  int count() const {
    int c = 0;
    for (uint64_t x : w_) c += __builtin_popcountll(x);
    return c;
  }

  bool intersects(const Bitset& o) const {
    for (size_t i = 0; i < w_.size(); ++i)
      if (w_[i] & o.w_[i]) return true;
    return false;
  }

  bool contains(const Bitset& o) const {
    for (size_t i = 0; i < w_.size(); ++i)
      if (o.w_[i] & ~w_[i]) return false;
    return true;
  }

  Bitset& operator&=(const Bitset& o) {
    for (size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
    return *this;
  }
  Bitset& operator|=(const Bitset& o) {
    for (size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
    return *this;
  }

  friend bool operator==(const Bitset& a, const Bitset& b) {
    return a.n_ == b.n_ && a.w_ == b.w_;
  }

  /// -1 if empty.
  int first() const {
    for (size_t i = 0; i < w_.size(); ++i)
      if (w_[i]) return int(i * 64 + __builtin_ctzll(w_[i]));
    return -1;
  }

  template <class F>
  void for_each(F&& f) const {
    for (size_t i = 0; i < w_.size(); ++i) {
      uint64_t x = w_[i];
      while (x) {
        f(int(i * 64 + __builtin_ctzll(x)));
        x &= x - 1;
      }
    }
  }

  uint64_t hash() const {
    uint64_t h = 1469598103934665603ull;
    for (uint64_t x : w_) {
      h ^= x;
      h *= 1099511628211ull;
    }
    return h;
  }

  const std::vector<uint64_t>& words() const { return w_; }

 private:
  int n_ = 0;
  std::vector<uint64_t> w_;
};

}  // namespace vq
