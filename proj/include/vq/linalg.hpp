#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "vq/field.hpp"

namespace vq {

/// Coordinate vector over a Field, coordinates in element codes.
using Vec = std::vector<uint8_t>;

/// Square matrix, row-major. Acts on row vectors from the right (v -> v*M),
/// so composing maps left-to-right is the plain matrix product M1*M2.
struct Mat {
  int n = 0;
  std::vector<uint8_t> a;

  Mat() = default;
  explicit Mat(int dim) : n(dim), a(dim * dim, 0) {}

  uint8_t& at(int i, int j) { return a[i * n + j]; }
  uint8_t at(int i, int j) const { return a[i * n + j]; }

  static Mat identity(const Field& f, int dim);

  friend bool operator==(const Mat&, const Mat&) = default;
};

Mat mat_mul(const Field& f, const Mat& A, const Mat& B);
/// Throws input_error if singular.
Mat mat_inverse(const Field& f, const Mat& A);
bool mat_invertible(const Field& f, const Mat& A);
Vec apply(const Field& f, const Vec& v, const Mat& M);

/// [A,B] = A^-1 B^-1 A B.
Mat commutator(const Field& f, const Mat& A, const Mat& B);
/// g^-1 M g.
Mat conjugate(const Field& f, const Mat& M, const Mat& g);

Vec vec_add(const Field& f, const Vec& u, const Vec& v);
/// v * c (scalar on the right; fields here are commutative, the order only
/// matters for matching the Case II right-module convention).
Vec vec_scale(const Field& f, const Vec& v, uint8_t c);
bool vec_is_zero(const Vec& v);

/// Scales so the first nonzero coordinate becomes 1 (projective representative).
Vec normalize_point(const Field& f, const Vec& v);

/// Mixed-radix encoding of a coordinate vector, for hashing and table indexing.
uint64_t vec_encode(const Field& f, const Vec& v);

}  // namespace vq
