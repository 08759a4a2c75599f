#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "vq/field.hpp"
#include "vq/linalg.hpp"

namespace vq {

enum class FormCase { I, II, IISymplectic };

std::string to_string(FormCase c);

/// The input space Lambda: a quadratic space (K,L,q) in Case I, a
/// pseudo-quadratic space (K,K0,sigma,L,q) in Case II, with the symplectic
/// sub-case (K0=K, sigma=1, char != 2) tagged separately.
///
/// f is stored as a Gram matrix over the L-basis:
///   Case I:  f(x,y) = sum_ij x_i g_ij y_j          (bilinear)
///   Case II: f(x,y) = sum_ij sigma(x_i) g_ij y_j   (sesquilinear)
/// q is normalized to a value table over all of L.
class LambdaSpace {
 public:
  /// Validates every structural invariant (skew-hermitian f, K0 closure
  /// properties, q/f compatibility, case constraints) and throws input_error
  /// with a witness on failure.
  static LambdaSpace make(FormCase c, const Field& K, int ldim, Mat gram_f,
                          std::vector<uint8_t> q_table, uint64_t k0_mask);

  /// Hyperbolic/diagonal block description, normalized internally to a table.
  /// q(a) = sum_h sigma(a_{2i}) a_{2i+1} + sum_j sigma(a_k) diag_j a_k.
  static LambdaSpace make_blocks(FormCase c, const Field& K, int hyperbolic_pairs,
                                 const std::vector<uint8_t>& diagonal, uint64_t k0_mask);

  FormCase form_case() const { return case_; }
  const Field& K() const { return *K_; }
  int ldim() const { return ldim_; }
  long long lsize() const { return lsize_; }
  const Mat& gram_f() const { return gram_; }
  const std::vector<uint8_t>& q_table() const { return qtab_; }
  uint64_t k0_mask() const { return k0_; }
  bool in_k0(uint8_t x) const { return (k0_ >> x) & 1; }

  uint8_t q_of(const Vec& a) const { return qtab_[vec_encode(*K_, a)]; }
  uint8_t f_of(const Vec& a, const Vec& b) const;

  /// Adopted non-degeneracy reading: no nonzero a in the radical of f with
  /// q(a) = 0 (Case I) resp. q(a) in K0 (Case II).
  bool nondegenerate() const;

 private:
  LambdaSpace() = default;
  FormCase case_;
  const Field* K_;
  int ldim_;
  long long lsize_;
  Mat gram_;
  std::vector<uint8_t> qtab_;
  uint64_t k0_;
};

/// The parameter group T: the additive group of L in Case I, and
/// {(a,t) in L x K | q(a) - t in K0} with (a,t)(b,u) = (a+b, t+u+f(b,a))
/// in Case II. Group axioms are verified exhaustively on construction.
class GroupT {
 public:
  struct Elem {
    Vec a;
    uint8_t t = 0;
  };

  static GroupT build(const LambdaSpace& lam);

  int size() const { return int(elems_.size()); }
  const Elem& elem(int i) const { return elems_[i]; }
  int identity() const { return id_; }
  int mul(int i, int j) const { return mul_[i * size() + j]; }
  int inverse(int i) const { return inv_[i]; }
  int index_of(const Vec& a, uint8_t t) const;

 private:
  const LambdaSpace* lam_;
  std::vector<Elem> elems_;
  std::vector<int> mul_, inv_;
  int id_ = 0;
};

/// V = K^4 (+) L with the forms Q and F of the ambient construction; the
/// basis order is (x1, x1', x2, x2', L-basis). This is the FormTables object:
/// in Case II, Q values are representatives and equality is tested mod K0.
class Ambient {
 public:
  explicit Ambient(const LambdaSpace& lam);

  const LambdaSpace& lambda() const { return *lam_; }
  const Field& K() const { return lam_->K(); }
  FormCase form_case() const { return lam_->form_case(); }
  int dim() const { return 4 + lam_->ldim(); }
  long long vsize() const { return vsize_; }

  uint8_t eval_Q(const Vec& v) const;
  uint8_t eval_F(const Vec& u, const Vec& v) const;
  /// Q-values equal mod K0 (plain equality in Case I).
  bool q_congruent(uint8_t x, uint8_t y) const;
  bool q_vanishes(uint8_t x) const;

  /// Exhaustive isometry test per the desk-scale contract: F on all basis
  /// pairs, Q(vM) == Q(v) (mod K0) on a sweep of V (full V when |V| <= 1e6,
  /// else basis vectors plus all pairwise sums). Throws on non-invertible M.
  bool is_isometry(const Mat& M) const;

  /// Enumerates V in lexicographic order.
  template <class Fn>
  void for_each_vector(Fn&& fn) const {
    Vec v(dim(), 0);
    for (;;) {
      fn(const_cast<const Vec&>(v));
      int i = dim() - 1;
      while (i >= 0 && v[i] == K().q() - 1) v[i--] = 0;
      if (i < 0) return;
      ++v[i];
    }
  }

 private:
  const LambdaSpace* lam_;
  long long vsize_;
};

}  // namespace vq
