#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "vq/errors.hpp"

namespace vq {

/// GF(p) or GF(p^2) with an optional involution, all arithmetic exact via
/// lookup tables. Elements are encoded as c0 + p*c1 for the residue classes
/// of c0 + c1*w, where w is a root of the pinned irreducible quadratic.
///
/// The quadratic is pinned per characteristic so that serialized scalars are
/// stable: x^2+x+1 (p=2), x^2+1 (p=3), x^2+2 (p=5), x^2+1 (p=7).
class Field {
 public:
  /// Interned access; p in {2,3,5,7}, d in {1,2}. A non-identity involution
  /// (the Frobenius x -> x^p) requires d = 2.
  static const Field& get(int p, int d, bool frobenius);

  int p() const { return p_; }
  int degree() const { return d_; }
  int q() const { return q_; }  // number of elements
  bool has_involution() const { return frob_; }

  uint8_t add(uint8_t a, uint8_t b) const { return add_[a * q_ + b]; }
  uint8_t sub(uint8_t a, uint8_t b) const { return add_[a * q_ + neg_[b]]; }
  uint8_t mul(uint8_t a, uint8_t b) const { return mul_[a * q_ + b]; }
  uint8_t neg(uint8_t a) const { return neg_[a]; }
  uint8_t inv(uint8_t a) const {
    if (a == 0) throw input_error("field: inverse of zero");
    return inv_[a];
  }
  /// sigma: identity, or the Frobenius when the field was built with one.
  uint8_t sigma(uint8_t a) const { return sig_[a]; }

  uint8_t c0(uint8_t a) const { return uint8_t(a % p_); }
  uint8_t c1(uint8_t a) const { return uint8_t(a / p_); }
  uint8_t from_coeffs(int c0, int c1) const {
    return uint8_t((c0 % p_ + p_) % p_ + p_ * ((c1 % p_ + p_) % p_));
  }
  /// Embedding of the integers (prime subfield).
  uint8_t from_int(long long n) const {
    return uint8_t(int((n % p_ + p_) % p_));
  }

  /// {t + sigma(t) | t in K} as a bitmask over element codes.
  uint64_t trace_image_mask() const { return trace_mask_; }

  std::string to_string(uint8_t a) const;

 private:
  Field(int p, int d, bool frob);
  int p_, d_, q_;
  bool frob_;
  std::vector<uint8_t> add_, mul_, sig_;
  std::array<uint8_t, 64> neg_{}, inv_{};
  uint64_t trace_mask_ = 0;
};

/// Value-type element carrying its field; convenience layer over the raw
/// uint8 codes used in hot loops.
struct Scalar {
  const Field* f = nullptr;
  uint8_t v = 0;

  Scalar() = default;
  Scalar(const Field& fld, uint8_t code) : f(&fld), v(code) {}

  friend Scalar operator+(Scalar a, Scalar b) { return {*a.f, a.f->add(a.v, b.v)}; }
  friend Scalar operator-(Scalar a, Scalar b) { return {*a.f, a.f->sub(a.v, b.v)}; }
  friend Scalar operator*(Scalar a, Scalar b) { return {*a.f, a.f->mul(a.v, b.v)}; }
  friend Scalar operator-(Scalar a) { return {*a.f, a.f->neg(a.v)}; }
  friend bool operator==(Scalar a, Scalar b) { return a.f == b.f && a.v == b.v; }
  Scalar inverse() const { return {*f, f->inv(v)}; }
  Scalar conj() const { return {*f, f->sigma(v)}; }
};

}  // namespace vq
