#include "vq/lambda.hpp"

#include <algorithm>
#include <map>

#include "vq/errors.hpp"

namespace vq {

std::string to_string(FormCase c) {
  switch (c) {
    case FormCase::I: return "I";
    case FormCase::II: return "II";
    case FormCase::IISymplectic: return "II-symplectic";
  }
  return "?";
}

uint8_t LambdaSpace::f_of(const Vec& x, const Vec& y) const {
  const Field& f = *K_;
  uint8_t r = 0;
  for (int i = 0; i < ldim_; ++i) {
    uint8_t xi = (case_ == FormCase::I) ? x[i] : f.sigma(x[i]);
    if (!xi) continue;
    for (int j = 0; j < ldim_; ++j)
      r = f.add(r, f.mul(f.mul(xi, gram_.at(i, j)), y[j]));
  }
  return r;
}

namespace {

template <class Fn>
void for_each_lvec(const Field& K, int ldim, Fn&& fn) {
  Vec a(ldim, 0);
  if (ldim == 0) {
    fn(const_cast<const Vec&>(a));
    return;
  }
  for (;;) {
    fn(const_cast<const Vec&>(a));
    int i = ldim - 1;
    while (i >= 0 && a[i] == K.q() - 1) a[i--] = 0;
    if (i < 0) return;
    ++a[i];
  }
}

}  // namespace

LambdaSpace LambdaSpace::make(FormCase c, const Field& K, int ldim, Mat gram_f,
                              std::vector<uint8_t> q_table, uint64_t k0_mask) {
  LambdaSpace L;
  L.case_ = c;
  L.K_ = &K;
  L.ldim_ = ldim;
  if (ldim < 0 || ldim > 6) throw input_error("lambda: L dimension out of range [0,6]");
  L.lsize_ = 1;
  for (int i = 0; i < ldim; ++i) L.lsize_ *= K.q();
  if (L.lsize_ > (1 << 20)) throw input_error("lambda: |L| exceeds table cap");
  if (gram_f.n != ldim) throw input_error("lambda: gram_f dimension mismatch");
  if ((long long)q_table.size() != L.lsize_) throw input_error("lambda: q table size mismatch");
  for (uint8_t x : q_table)
    if (x >= K.q()) throw input_error("lambda: q table entry out of field range");
  L.gram_ = std::move(gram_f);
  L.qtab_ = std::move(q_table);

  const Field& f = K;
  switch (c) {
    case FormCase::I: {
      if (K.has_involution()) throw input_error("lambda: Case I requires sigma = identity");
      if (ldim == 0) throw input_error("lambda: Case I requires L != 0");
      L.k0_ = 1;  // {0}: Q-values compare by plain equality
      break;
    }
    case FormCase::II: {
      L.k0_ = k0_mask;
      break;
    }
    case FormCase::IISymplectic: {
      if (K.p() == 2) throw input_error("lambda: symplectic case requires char != 2");
      if (K.has_involution()) throw input_error("lambda: symplectic case requires sigma = 1");
      L.k0_ = (K.q() >= 64) ? ~uint64_t(0) : ((uint64_t(1) << K.q()) - 1);  // K0 = K
      if (k0_mask && k0_mask != L.k0_)
        throw input_error("lambda: symplectic case forces K0 = K");
      break;
    }
  }

  if (c != FormCase::I) {
    // K0 must be an additive subgroup containing all traces t + sigma(t),
    // sigma-invariant, and closed under a -> sigma(l) a l.
    if (!(L.k0_ & 1)) throw input_error("lambda: 0 not in K0");
    for (int a = 0; a < K.q(); ++a) {
      if (!L.in_k0(uint8_t(a))) continue;
      if (!L.in_k0(f.neg(uint8_t(a)))) throw input_error("lambda: K0 not closed under negation");
      if (!L.in_k0(f.sigma(uint8_t(a)))) throw input_error("lambda: K0 not sigma-invariant");
      for (int b = 0; b < K.q(); ++b) {
        if (L.in_k0(uint8_t(b)) && !L.in_k0(f.add(uint8_t(a), uint8_t(b))))
          throw input_error("lambda: K0 not closed under addition");
        uint8_t s = f.mul(f.mul(f.sigma(uint8_t(b)), uint8_t(a)), uint8_t(b));
        if (!L.in_k0(s)) throw input_error("lambda: K0 not closed under sigma(l)*a*l");
      }
    }
    if ((L.k0_ & K.trace_image_mask()) != K.trace_image_mask())
      throw input_error("lambda: K0 does not contain all traces t + sigma(t)");
    // f skew-hermitian: g_ji = -sigma(g_ij)
    for (int i = 0; i < ldim; ++i)
      for (int j = 0; j < ldim; ++j)
        if (L.gram_.at(j, i) != f.neg(f.sigma(L.gram_.at(i, j))))
          throw input_error("lambda: f is not skew-hermitian");
  }

  if (c == FormCase::IISymplectic) {
    for_each_lvec(K, ldim, [&](const Vec& a) {
      if (L.f_of(a, a) != 0) throw input_error("lambda: symplectic f must be alternating");
      if (L.q_of(a) != 0) throw input_error("lambda: symplectic q table must be zero (Q == 0 mod K0)");
    });
  }

  if (c == FormCase::I) {
    // q(l a) = l^2 q(a), f symmetric, and f(a,b) = q(a+b) - q(a) - q(b).
    for (int i = 0; i < ldim; ++i)
      for (int j = 0; j < ldim; ++j)
        if (L.gram_.at(j, i) != L.gram_.at(i, j))
          throw input_error("lambda: Case I f must be symmetric");
    for_each_lvec(K, ldim, [&](const Vec& a) {
      for (int lam = 0; lam < K.q(); ++lam) {
        Vec la = vec_scale(f, a, uint8_t(lam));
        uint8_t want = f.mul(f.mul(uint8_t(lam), uint8_t(lam)), L.q_of(a));
        if (L.q_of(la) != want) throw input_error("lambda: q(l*a) != l^2 q(a)");
      }
    });
    for_each_lvec(K, ldim, [&](const Vec& a) {
      for_each_lvec(K, ldim, [&](const Vec& b) {
        uint8_t lhs = L.f_of(a, b);
        uint8_t rhs = f.sub(f.sub(L.q_of(vec_add(f, a, b)), L.q_of(a)), L.q_of(b));
        if (lhs != rhs) throw input_error("lambda: f != polarization of q");
      });
    });
  } else {
    // q(a+b) - q(a) - q(b) - f(b,a) in K0 and q(a l) - sigma(l) q(a) l in K0.
    for_each_lvec(K, ldim, [&](const Vec& a) {
      for (int lam = 0; lam < K.q(); ++lam) {
        Vec al = vec_scale(f, a, uint8_t(lam));
        uint8_t want = f.mul(f.mul(f.sigma(uint8_t(lam)), L.q_of(a)), uint8_t(lam));
        if (!L.in_k0(f.sub(L.q_of(al), want)))
          throw input_error("lambda: q(a*l) != sigma(l) q(a) l mod K0");
      }
      for_each_lvec(K, ldim, [&](const Vec& b) {
        uint8_t d = f.sub(f.sub(f.sub(L.q_of(vec_add(f, a, b)), L.q_of(a)), L.q_of(b)),
                          L.f_of(b, a));
        if (!L.in_k0(d)) throw input_error("lambda: q not compatible with f mod K0");
      });
    });
  }
  return L;
}

LambdaSpace LambdaSpace::make_blocks(FormCase c, const Field& K, int hyp,
                                     const std::vector<uint8_t>& diag, uint64_t k0_mask) {
  int ldim = 2 * hyp + int(diag.size());
  const Field& f = K;
  Mat g(ldim);
  for (int h = 0; h < hyp; ++h) {
    if (c == FormCase::I) {
      g.at(2 * h, 2 * h + 1) = 1;
      g.at(2 * h + 1, 2 * h) = 1;
    } else {
      g.at(2 * h, 2 * h + 1) = 1;
      g.at(2 * h + 1, 2 * h) = f.neg(1);
    }
  }
  for (size_t j = 0; j < diag.size(); ++j) {
    int i = 2 * hyp + int(j);
    uint8_t lam = diag[j];
    if (c == FormCase::I) {
      g.at(i, i) = f.add(lam, lam);  // f(a,a) = 2*lambda*a^2
    } else {
      g.at(i, i) = f.sub(lam, f.sigma(lam));  // lambda - sigma(lambda), skew part
    }
  }
  long long lsize = 1;
  for (int i = 0; i < ldim; ++i) lsize *= K.q();
  std::vector<uint8_t> qt(lsize, 0);
  Vec a(ldim, 0);
  for (long long code = 0; code < lsize; ++code) {
    long long rem = code;
    for (int i = ldim - 1; i >= 0; --i) {
      a[i] = uint8_t(rem % K.q());
      rem /= K.q();
    }
    uint8_t qv = 0;
    for (int h = 0; h < hyp; ++h)
      qv = f.add(qv, f.mul(f.sigma(a[2 * h]), a[2 * h + 1]));
    for (size_t j = 0; j < diag.size(); ++j) {
      int i = 2 * hyp + int(j);
      qv = f.add(qv, f.mul(f.mul(f.sigma(a[i]), diag[j]), a[i]));
    }
    qt[code] = qv;
  }
  if (c == FormCase::IISymplectic) std::fill(qt.begin(), qt.end(), 0);
  return make(c, K, ldim, std::move(g), std::move(qt), k0_mask);
}

bool LambdaSpace::nondegenerate() const {
  const Field& f = *K_;
  bool ok = true;
  for_each_lvec(f, ldim_, [&](const Vec& a) {
    if (vec_is_zero(a)) return;
    bool radical = true;
    for (int j = 0; j < ldim_ && radical; ++j) {
      Vec e(ldim_, 0);
      e[j] = 1;
      if (f_of(a, e) != 0) radical = false;
    }
    if (!radical) return;
    bool singular = (case_ == FormCase::I) ? (q_of(a) == 0) : in_k0(q_of(a));
    if (singular) ok = false;
  });
  return ok;
}

// --- GroupT ---------------------------------------------------------------

GroupT GroupT::build(const LambdaSpace& lam) {
  const Field& f = lam.K();
  GroupT T;
  T.lam_ = &lam;
  if (lam.form_case() == FormCase::I) {
    for_each_lvec(f, lam.ldim(), [&](const Vec& a) { T.elems_.push_back({a, 0}); });
  } else {
    for_each_lvec(f, lam.ldim(), [&](const Vec& a) {
      for (int t = 0; t < f.q(); ++t)
        if (lam.in_k0(f.sub(lam.q_of(a), uint8_t(t)))) T.elems_.push_back({a, uint8_t(t)});
    });
  }
  int n = int(T.elems_.size());
  std::map<std::pair<uint64_t, uint8_t>, int> index;
  for (int i = 0; i < n; ++i)
    index[{vec_encode(f, T.elems_[i].a), T.elems_[i].t}] = i;
  T.id_ = index.at({0, 0});

  T.mul_.assign(n * n, -1);
  T.inv_.assign(n, -1);
  for (int i = 0; i < n; ++i) {
    const Elem& x = T.elems_[i];
    for (int j = 0; j < n; ++j) {
      const Elem& y = T.elems_[j];
      Vec a = vec_add(f, x.a, y.a);
      uint8_t t = (lam.form_case() == FormCase::I)
                      ? 0
                      : f.add(f.add(x.t, y.t), lam.f_of(y.a, x.a));
      auto it = index.find({vec_encode(f, a), t});
      if (it == index.end()) throw theorem_violation("T: not closed under multiplication");
      T.mul_[i * n + j] = it->second;
    }
    Vec na(x.a.size());
    for (size_t k = 0; k < x.a.size(); ++k) na[k] = f.neg(x.a[k]);
    uint8_t nt = (lam.form_case() == FormCase::I) ? 0 : f.neg(f.sigma(x.t));
    auto it = index.find({vec_encode(f, na), nt});
    if (it == index.end()) throw theorem_violation("T: inverse not in set");
    T.inv_[i] = it->second;
  }
  // identity and inverse laws
  for (int i = 0; i < n; ++i) {
    if (T.mul(T.id_, i) != i || T.mul(i, T.id_) != i)
      throw theorem_violation("T: identity law fails");
    if (T.mul(i, T.inv_[i]) != T.id_ || T.mul(T.inv_[i], i) != T.id_)
      throw theorem_violation("T: inverse law fails");
  }
  // associativity, exhaustive at desk scale
  if ((long long)n * n * n <= 20'000'000) {
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k)
          if (T.mul(T.mul(i, j), k) != T.mul(i, T.mul(j, k)))
            throw theorem_violation("T: associativity fails");
  }
  return T;
}

int GroupT::index_of(const Vec& a, uint8_t t) const {
  const Field& f = lam_->K();
  uint64_t code = vec_encode(f, a);
  for (int i = 0; i < size(); ++i)
    if (vec_encode(f, elems_[i].a) == code && elems_[i].t == t) return i;
  return -1;
}

// --- Ambient ---------------------------------------------------------------

Ambient::Ambient(const LambdaSpace& lam) : lam_(&lam) {
  if (!lam.nondegenerate()) throw input_error("ambient: Lambda is degenerate");
  vsize_ = 1;
  for (int i = 0; i < dim(); ++i) vsize_ *= K().q();
}

uint8_t Ambient::eval_Q(const Vec& v) const {
  const Field& f = K();
  if ((int)v.size() != dim()) throw input_error("eval_Q: dimension mismatch");
  uint8_t r = f.add(f.mul(f.sigma(v[0]), v[1]), f.mul(f.sigma(v[2]), v[3]));
  if (lam_->ldim() > 0) {
    Vec a(v.begin() + 4, v.end());
    r = f.add(r, lam_->q_of(a));
  }
  return r;
}

uint8_t Ambient::eval_F(const Vec& u, const Vec& v) const {
  const Field& f = K();
  if ((int)u.size() != dim() || (int)v.size() != dim())
    throw input_error("eval_F: dimension mismatch");
  uint8_t r;
  if (lam_->form_case() == FormCase::I) {
    r = f.add(f.add(f.mul(u[0], v[1]), f.mul(v[0], u[1])),
              f.add(f.mul(u[2], v[3]), f.mul(v[2], u[3])));
    if (lam_->ldim() > 0) {
      Vec a(v.begin() + 4, v.end()), b(u.begin() + 4, u.end());
      r = f.add(r, lam_->f_of(a, b));
    }
  } else {
    r = f.sub(f.mul(f.sigma(u[0]), v[1]), f.mul(f.sigma(u[1]), v[0]));
    r = f.add(r, f.sub(f.mul(f.sigma(u[2]), v[3]), f.mul(f.sigma(u[3]), v[2])));
    if (lam_->ldim() > 0) {
      Vec b(u.begin() + 4, u.end()), a(v.begin() + 4, v.end());
      r = f.add(r, lam_->f_of(b, a));
    }
  }
  return r;
}

bool Ambient::q_congruent(uint8_t x, uint8_t y) const { return lam_->in_k0(K().sub(x, y)); }
bool Ambient::q_vanishes(uint8_t x) const { return lam_->in_k0(x); }

bool Ambient::is_isometry(const Mat& M) const {
  const Field& f = K();
  if (M.n != dim()) throw input_error("is_isometry: dimension mismatch");
  if (!mat_invertible(f, M)) throw input_error("is_isometry: matrix not invertible");
  // F on all basis pairs (F is sesquilinear, so this determines it).
  for (int i = 0; i < dim(); ++i) {
    Vec ei(dim(), 0);
    ei[i] = 1;
    Vec eiM = apply(f, ei, M);
    for (int j = 0; j < dim(); ++j) {
      Vec ej(dim(), 0);
      ej[j] = 1;
      if (eval_F(eiM, apply(f, ej, M)) != eval_F(ei, ej)) return false;
    }
  }
  bool ok = true;
  if (vsize_ <= 1'000'000) {
    for_each_vector([&](const Vec& v) {
      if (!ok) return;
      if (!q_congruent(eval_Q(apply(f, v, M)), eval_Q(v))) ok = false;
    });
  } else {
    std::vector<Vec> probes;
    for (int i = 0; i < dim(); ++i) {
      Vec e(dim(), 0);
      e[i] = 1;
      probes.push_back(e);
    }
    int nb = int(probes.size());
    for (int i = 0; i < nb; ++i)
      for (int j = i + 1; j < nb; ++j) probes.push_back(vec_add(f, probes[i], probes[j]));
    for (const Vec& v : probes)
      if (!q_congruent(eval_Q(apply(f, v, M)), eval_Q(v))) ok = false;
  }
  return ok;
}

}  // namespace vq
