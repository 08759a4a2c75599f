#include "vq/linalg.hpp"

namespace vq {

Mat Mat::identity(const Field&, int dim) {
  Mat m(dim);
  for (int i = 0; i < dim; ++i) m.at(i, i) = 1;
  return m;
}

Mat mat_mul(const Field& f, const Mat& A, const Mat& B) {
  Mat C(A.n);
  for (int i = 0; i < A.n; ++i)
    for (int k = 0; k < A.n; ++k) {
      uint8_t a = A.at(i, k);
      if (!a) continue;
      for (int j = 0; j < A.n; ++j)
        C.at(i, j) = f.add(C.at(i, j), f.mul(a, B.at(k, j)));
    }
  return C;
}

namespace {

std::optional<Mat> inverse_impl(const Field& f, const Mat& A) {
  int n = A.n;
  // [A | I] row reduction
  std::vector<uint8_t> m(n * 2 * n, 0);
  auto at = [&](int i, int j) -> uint8_t& { return m[i * 2 * n + j]; };
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) at(i, j) = A.at(i, j);
    at(i, n + i) = 1;
  }
  int r = 0;
  for (int c = 0; c < n; ++c) {
    int piv = -1;
    for (int i = r; i < n; ++i)
      if (at(i, c)) { piv = i; break; }
    if (piv < 0) return std::nullopt;
    if (piv != r)
      for (int j = 0; j < 2 * n; ++j) std::swap(at(piv, j), at(r, j));
    uint8_t iv = f.inv(at(r, c));
    for (int j = 0; j < 2 * n; ++j) at(r, j) = f.mul(at(r, j), iv);
    for (int i = 0; i < n; ++i) {
      if (i == r || !at(i, c)) continue;
      uint8_t fac = at(i, c);
      for (int j = 0; j < 2 * n; ++j)
        at(i, j) = f.sub(at(i, j), f.mul(fac, at(r, j)));
    }
    ++r;
  }
  Mat R(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) R.at(i, j) = at(i, n + j);
  return R;
}

}  // namespace

Mat mat_inverse(const Field& f, const Mat& A) {
  auto r = inverse_impl(f, A);
  if (!r) throw input_error("matrix not invertible");
  return *r;
}

bool mat_invertible(const Field& f, const Mat& A) { return inverse_impl(f, A).has_value(); }

Vec apply(const Field& f, const Vec& v, const Mat& M) {
  Vec r(M.n, 0);
  for (int i = 0; i < M.n; ++i) {
    uint8_t c = v[i];
    if (!c) continue;
    for (int j = 0; j < M.n; ++j) r[j] = f.add(r[j], f.mul(c, M.at(i, j)));
  }
  return r;
}

Mat commutator(const Field& f, const Mat& A, const Mat& B) {
  return mat_mul(f, mat_mul(f, mat_inverse(f, A), mat_inverse(f, B)), mat_mul(f, A, B));
}

Mat conjugate(const Field& f, const Mat& M, const Mat& g) {
  return mat_mul(f, mat_mul(f, mat_inverse(f, g), M), g);
}

Vec vec_add(const Field& f, const Vec& u, const Vec& v) {
  Vec r(u.size());
  for (size_t i = 0; i < u.size(); ++i) r[i] = f.add(u[i], v[i]);
  return r;
}

Vec vec_scale(const Field& f, const Vec& v, uint8_t c) {
  Vec r(v.size());
  for (size_t i = 0; i < v.size(); ++i) r[i] = f.mul(v[i], c);
  return r;
}

bool vec_is_zero(const Vec& v) {
  for (uint8_t x : v)
    if (x) return false;
  return true;
}

Vec normalize_point(const Field& f, const Vec& v) {
  for (uint8_t x : v)
    if (x) return vec_scale(f, v, f.inv(x));
  throw input_error("normalize_point: zero vector");
}

uint64_t vec_encode(const Field& f, const Vec& v) {
  uint64_t code = 0;
  for (size_t i = 0; i < v.size(); ++i) code = code * f.q() + v[i];
  return code;
}

}  // namespace vq
