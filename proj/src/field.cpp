#include "vq/field.hpp"

#include <map>
#include <memory>
#include <mutex>

namespace vq {

namespace {

bool is_supported_prime(int p) { return p == 2 || p == 3 || p == 5 || p == 7; }

// x^2 + c1*x + c0, irreducible over GF(p); pinned per p.
void modulus_for(int p, int& c1, int& c0) {
  switch (p) {
    case 2: c1 = 1; c0 = 1; break;
    case 3: c1 = 0; c0 = 1; break;
    case 5: c1 = 0; c0 = 2; break;
    case 7: c1 = 0; c0 = 1; break;
    default: throw input_error("field: unsupported characteristic");
  }
}

}  // namespace

Field::Field(int p, int d, bool frob) : p_(p), d_(d), frob_(frob) {
  if (!is_supported_prime(p)) throw input_error("field: p must be in {2,3,5,7}");
  if (d != 1 && d != 2) throw input_error("field: degree must be 1 or 2");
  if (frob && d != 2) throw input_error("field: non-identity involution requires degree 2");
  q_ = (d == 1) ? p : p * p;

  int m1 = 0, m0 = 0;
  if (d == 2) modulus_for(p, m1, m0);

  add_.assign(q_ * q_, 0);
  mul_.assign(q_ * q_, 0);
  sig_.assign(q_, 0);
  for (int a = 0; a < q_; ++a) {
    int a0 = a % p, a1 = a / p;
    neg_[a] = uint8_t((p - a0) % p + p * ((p - a1) % p));
    for (int b = 0; b < q_; ++b) {
      int b0 = b % p, b1 = b / p;
      add_[a * q_ + b] = uint8_t((a0 + b0) % p + p * ((a1 + b1) % p));
      // (a0 + a1 w)(b0 + b1 w) with w^2 = -m1 w - m0
      int e0 = a0 * b0, e1 = a0 * b1 + a1 * b0, e2 = a1 * b1;
      int r0 = (e0 - e2 * m0) % p, r1 = (e1 - e2 * m1) % p;
      mul_[a * q_ + b] = uint8_t((r0 % p + p) % p + p * ((r1 % p + p) % p));
    }
  }
  for (int a = 1; a < q_; ++a)
    for (int b = 1; b < q_; ++b)
      if (mul_[a * q_ + b] == 1) inv_[a] = uint8_t(b);
  for (int a = 0; a < q_; ++a) {
    if (!frob) {
      sig_[a] = uint8_t(a);
    } else {
      uint8_t r = uint8_t(a);
      for (int i = 1; i < p; ++i) r = mul_[r * q_ + a];  // a^p
      sig_[a] = r;
    }
  }
  for (int t = 0; t < q_; ++t) trace_mask_ |= uint64_t(1) << add_[t * q_ + sig_[t]];
}

const Field& Field::get(int p, int d, bool frobenius) {
  static std::mutex mu;
  static std::map<std::tuple<int, int, bool>, std::unique_ptr<Field>> cache;
  std::lock_guard<std::mutex> lk(mu);
  auto key = std::make_tuple(p, d, frobenius);
  auto it = cache.find(key);
  if (it == cache.end())
    it = cache.emplace(key, std::unique_ptr<Field>(new Field(p, d, frobenius))).first;
  return *it->second;
}

std::string Field::to_string(uint8_t a) const {
  if (d_ == 1) return std::to_string(int(a));
  return std::to_string(int(c0(a))) + "+" + std::to_string(int(c1(a))) + "w";
}

}  // namespace vq
