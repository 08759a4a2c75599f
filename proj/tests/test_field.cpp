#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "vq/field.hpp"
#include "vq/linalg.hpp"

using namespace vq;

TEST_CASE("prime field arithmetic") {
  for (int p : {2, 3, 5, 7}) {
    const Field& f = Field::get(p, 1, false);
    CHECK(f.q() == p);
    for (int a = 0; a < p; ++a) {
      CHECK(f.add(uint8_t(a), f.neg(uint8_t(a))) == 0);
      if (a) CHECK(f.mul(uint8_t(a), f.inv(uint8_t(a))) == 1);
      CHECK(f.sigma(uint8_t(a)) == a);
    }
  }
}

TEST_CASE("quadratic extensions are fields") {
  for (int p : {2, 3, 5, 7}) {
    const Field& f = Field::get(p, 2, true);
    int q = p * p;
    CHECK(f.q() == q);
    // every nonzero element invertible (the pinned modulus is irreducible)
    for (int a = 1; a < q; ++a) CHECK(f.mul(uint8_t(a), f.inv(uint8_t(a))) == 1);
    // associativity and distributivity spot structure, exhaustive
    for (int a = 0; a < q; ++a)
      for (int b = 0; b < q; ++b) {
        CHECK(f.add(uint8_t(a), uint8_t(b)) == f.add(uint8_t(b), uint8_t(a)));
        CHECK(f.mul(uint8_t(a), uint8_t(b)) == f.mul(uint8_t(b), uint8_t(a)));
        for (int c = 0; c < q; ++c) {
          CHECK(f.mul(f.mul(uint8_t(a), uint8_t(b)), uint8_t(c)) ==
                f.mul(uint8_t(a), f.mul(uint8_t(b), uint8_t(c))));
          CHECK(f.mul(uint8_t(a), f.add(uint8_t(b), uint8_t(c))) ==
                f.add(f.mul(uint8_t(a), uint8_t(b)), f.mul(uint8_t(a), uint8_t(c))));
        }
      }
  }
}

TEST_CASE("frobenius involution: automorphism of order 2 fixing GF(p)") {
  for (int p : {2, 3, 5, 7}) {
    const Field& f = Field::get(p, 2, true);
    int q = p * p;
    int fixed = 0;
    for (int a = 0; a < q; ++a) {
      CHECK(f.sigma(f.sigma(uint8_t(a))) == a);
      if (f.sigma(uint8_t(a)) == a) ++fixed;
      for (int b = 0; b < q; ++b) {
        CHECK(f.sigma(f.mul(uint8_t(a), uint8_t(b))) ==
              f.mul(f.sigma(uint8_t(a)), f.sigma(uint8_t(b))));
        CHECK(f.sigma(f.add(uint8_t(a), uint8_t(b))) ==
              f.add(f.sigma(uint8_t(a)), f.sigma(uint8_t(b))));
      }
    }
    CHECK(fixed == p);  // fixed field is the prime field
  }
}

TEST_CASE("trace image") {
  const Field& f = Field::get(2, 2, true);
  // {t + t^2 | t in GF(4)} = GF(2)
  CHECK(f.trace_image_mask() == 0b11);
  const Field& g = Field::get(3, 1, false);
  // sigma = id: t + t = 2t covers everything
  CHECK(g.trace_image_mask() == 0b111);
}

TEST_CASE("involution requires degree 2") {
  CHECK_THROWS_AS(Field::get(3, 1, true), input_error);
  CHECK_THROWS_AS(Field::get(4, 1, false), input_error);
}

TEST_CASE("matrix inverse and row-vector action") {
  const Field& f = Field::get(3, 1, false);
  Mat m(2);
  m.at(0, 0) = 1;
  m.at(0, 1) = 2;
  m.at(1, 0) = 1;
  m.at(1, 1) = 1;
  Mat mi = mat_inverse(f, m);
  CHECK(mat_mul(f, m, mi) == Mat::identity(f, 2));
  // composition of maps is left-to-right product: (v M1) M2 = v (M1 M2)
  Vec v{1, 2};
  CHECK(apply(f, apply(f, v, m), mi) == v);
  Mat s(2);  // singular
  s.at(0, 0) = 1;
  s.at(1, 0) = 2;
  CHECK(!mat_invertible(f, s));
  CHECK_THROWS_AS(mat_inverse(f, s), input_error);
}

TEST_CASE("scalar wrapper") {
  const Field& f = Field::get(5, 2, true);
  Scalar a(f, f.from_coeffs(2, 3)), b(f, f.from_coeffs(1, 4));
  CHECK((a * b) == (b * a));
  CHECK((a + (-a)).v == 0);
  CHECK(a.inverse() * a == Scalar(f, 1));
  CHECK(a.conj().conj() == a);
}
