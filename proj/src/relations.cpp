#include <algorithm>

#include "vq/errors.hpp"
#include "vq/moufang.hpp"

namespace vq {

namespace {

std::string tuple_str(std::initializer_list<int> xs) {
  std::string s = "(";
  bool first = true;
  for (int x : xs) {
    if (!first) s += ",";
    s += std::to_string(x);
    first = false;
  }
  return s + ")";
}

}  // namespace

RelationReport verify_chin4(const LambdaSpace& lam) {
  RelationReport rep;
  rep.instance = to_string(lam.form_case()) + " over GF(" + std::to_string(lam.K().q()) +
                 "), dim L = " + std::to_string(lam.ldim());
  Ambient amb(lam);
  GroupT T = GroupT::build(lam);
  GeneratorSet gs = build_generators(amb, T);
  const Field& f = lam.K();
  Mat id = Mat::identity(f, amb.dim());

  auto comm = [&](const Mat& a, const Mat& b) { return commutator(f, a, b); };
  auto fail = [&](const std::string& what) {
    rep.ok = false;
    rep.failure = what;
    return rep;
  };

  long long n = 0;
  if (lam.form_case() == FormCase::I) {
    // chin5 Case I labels: x1 = delta, x2 = beta, x3 = gamma, x4 = alpha
    // [x2(a), x4(b)^-1] = x3(f(a,b))
    long long c0 = 0;
    for (int i = 0; i < T.size(); ++i)
      for (int j = 0; j < T.size(); ++j) {
        const Vec &a = T.elem(i).a, &b = T.elem(j).a;
        Mat lhs = comm(gs.beta[i], mat_inverse(f, gs.alpha[j]));
        if (!(lhs == gs.gamma[lam.f_of(a, b)]))
          return fail("[x2(a),x4(b)^-1] != x3(f(a,b)) at a,b indices " + tuple_str({i, j}));
        ++c0;
      }
    rep.families.push_back({"[x2,x4^-1]=x3(f(a,b))", c0});
    n += c0;
    // [x1(t), x4(a)^-1] = x2(ta) x3(t q(a))
    long long c1 = 0;
    for (int t = 0; t < f.q(); ++t)
      for (int j = 0; j < T.size(); ++j) {
        const Vec& a = T.elem(j).a;
        Vec ta = vec_scale(f, a, uint8_t(t));
        int ita = T.index_of(ta, 0);
        Mat lhs = comm(gs.delta[t], mat_inverse(f, gs.alpha[j]));
        Mat rhs = mat_mul(f, gs.beta[ita], gs.gamma[f.mul(uint8_t(t), lam.q_of(a))]);
        if (!(lhs == rhs))
          return fail("[x1(t),x4(a)^-1] != x2(ta)x3(tq(a)) at " + tuple_str({t, j}));
        ++c1;
      }
    rep.families.push_back({"[x1(t),x4(a)^-1]=x2(ta)x3(tq(a))", c1});
    n += c1;
    // [U1,U3] = 1
    long long c2 = 0;
    for (int t = 0; t < f.q(); ++t)
      for (int s = 0; s < f.q(); ++s) {
        if (!(comm(gs.delta[t], gs.gamma[s]) == id))
          return fail("[U1,U3] != 1 at " + tuple_str({t, s}));
        ++c2;
      }
    rep.families.push_back({"[U1,U3]=1", c2});
    n += c2;
    // [U_i, U_{i+1}] = 1
    long long c3 = 0;
    for (int t = 0; t < f.q(); ++t)
      for (int j = 0; j < T.size(); ++j) {
        if (!(comm(gs.delta[t], gs.beta[j]) == id))
          return fail("[U1,U2] != 1 at " + tuple_str({t, j}));
        if (!(comm(gs.beta[j], gs.gamma[t]) == id))
          return fail("[U2,U3] != 1 at " + tuple_str({j, t}));
        if (!(comm(gs.gamma[t], gs.alpha[j]) == id))
          return fail("[U3,U4] != 1 at " + tuple_str({t, j}));
        c3 += 3;
      }
    rep.families.push_back({"[U_i,U_{i+1}]=1", c3});
    n += c3;
  } else {
    // chin5 Case II labels: x1 = alpha, x2 = gamma, x3 = beta, x4 = delta
    // [x1(a,t), x3(b,s)^-1] = x2(f(a,b))
    long long c0 = 0;
    for (int i = 0; i < T.size(); ++i)
      for (int j = 0; j < T.size(); ++j) {
        const Vec &a = T.elem(i).a, &b = T.elem(j).a;
        Mat lhs = comm(gs.alpha[i], mat_inverse(f, gs.beta[j]));
        if (!(lhs == gs.gamma[lam.f_of(a, b)]))
          return fail("[x1,x3^-1] != x2(f(a,b)) at " + tuple_str({i, j}));
        ++c0;
      }
    rep.families.push_back({"[x1,x3^-1]=x2(f(a,b))", c0});
    n += c0;
    // [x2(v), x4(w)^-1] = x3(0, sigma(v) w + sigma(w) v)
    long long c1 = 0;
    Vec zero(lam.ldim(), 0);
    for (int v = 0; v < f.q(); ++v)
      for (int w = 0; w < f.q(); ++w) {
        uint8_t tr = f.add(f.mul(f.sigma(uint8_t(v)), uint8_t(w)),
                           f.mul(f.sigma(uint8_t(w)), uint8_t(v)));
        int it = T.index_of(zero, tr);
        if (it < 0) return fail("x3(0, tr) parameter not in T at " + tuple_str({v, w}));
        Mat lhs = comm(gs.gamma[v], mat_inverse(f, gs.delta[w]));
        if (!(lhs == gs.beta[it]))
          return fail("[x2(v),x4(w)^-1] != x3(0, v^s w + w^s v) at " + tuple_str({v, w}));
        ++c1;
      }
    rep.families.push_back({"[x2(v),x4(w)^-1]=x3(0,v^s w+w^s v)", c1});
    n += c1;
    // [x1(a,t), x4(v)^-1] = x2(tv) x3(av, sigma(v) t v)
    long long c2 = 0;
    for (int i = 0; i < T.size(); ++i)
      for (int v = 0; v < f.q(); ++v) {
        const auto& el = T.elem(i);
        Vec av = vec_scale(f, el.a, uint8_t(v));
        uint8_t vtv = f.mul(f.mul(f.sigma(uint8_t(v)), el.t), uint8_t(v));
        int it = T.index_of(av, vtv);
        if (it < 0) return fail("x3(av, v^s t v) parameter not in T at " + tuple_str({i, v}));
        Mat lhs = comm(gs.alpha[i], mat_inverse(f, gs.delta[v]));
        Mat rhs = mat_mul(f, gs.gamma[f.mul(el.t, uint8_t(v))], gs.beta[it]);
        if (!(lhs == rhs))
          return fail("[x1(a,t),x4(v)^-1] != x2(tv)x3(av,v^s t v) at " + tuple_str({i, v}));
        ++c2;
      }
    rep.families.push_back({"[x1(a,t),x4(v)^-1]=x2(tv)x3(av,v^s t v)", c2});
    n += c2;
    // [U_i, U_{i+1}] = 1
    long long c3 = 0;
    for (int v = 0; v < f.q(); ++v)
      for (int i = 0; i < T.size(); ++i) {
        if (!(comm(gs.alpha[i], gs.gamma[v]) == id))
          return fail("[U1,U2] != 1 at " + tuple_str({i, v}));
        if (!(comm(gs.gamma[v], gs.beta[i]) == id))
          return fail("[U2,U3] != 1 at " + tuple_str({v, i}));
        if (!(comm(gs.beta[i], gs.delta[v]) == id))
          return fail("[U3,U4] != 1 at " + tuple_str({i, v}));
        c3 += 3;
      }
    rep.families.push_back({"[U_i,U_{i+1}]=1", c3});
    n += c3;
  }
  rep.identities_checked = n;
  rep.ok = true;
  return rep;
}

RelationReport verify_d3(int p) {
  if (p != 3 && p != 5 && p != 7) throw input_error("verify_d3: p must be an odd prime <= 7");
  const Field& K = Field::get(p, 1, false);
  LambdaSpace lam = LambdaSpace::make_blocks(FormCase::I, K, 1, {}, 0);
  Ambient amb(lam);
  GroupT T = GroupT::build(lam);
  GeneratorSet gs = build_generators(amb, T);
  const Field& f = K;
  Mat id = Mat::identity(f, amb.dim());

  RelationReport rep;
  rep.instance = "D3 over GF(" + std::to_string(p) + ")";
  auto fail = [&](const std::string& what) {
    rep.ok = false;
    rep.failure = what;
    return rep;
  };

  // x1..x4 are the chin5 Case I assignments for the hyperbolic plane. x0 and
  // x5 are obtained by shifting the coordinate system four steps around the
  // base circuit: conjugation with g4 = tau rho tau rho, which swaps
  // x1 <-> x1' and x2 <-> x2'.
  auto idxT = [&](int s, int t) { return T.index_of({uint8_t(s), uint8_t(t)}, 0); };
  auto x1 = [&](int u) { return gs.delta[u]; };
  auto x2 = [&](int s, int t) { return gs.beta[idxT(s, t)]; };
  auto x3 = [&](int u) { return gs.gamma[u]; };
  auto x4 = [&](int s, int t) { return gs.alpha[idxT(s, t)]; };
  Mat g4 = mat_mul(f, mat_mul(f, gs.tau, gs.rho), mat_mul(f, gs.tau, gs.rho));
  auto x0 = [&](int s, int t) { return conjugate(f, x4(s, t), g4); };
  auto x5 = [&](int u) { return conjugate(f, x1(u), g4); };

  auto comm = [&](const Mat& a, const Mat& b) { return commutator(f, a, b); };
  int q = f.q();
  auto M = [&](int a, int b) { return f.mul(uint8_t(a), uint8_t(b)); };
  long long n = 0;

  // chin50: [x1(u), x4(s,t)^-1] = x2(su,ut) x3(sut)
  long long c = 0;
  for (int u = 0; u < q; ++u)
    for (int s = 0; s < q; ++s)
      for (int t = 0; t < q; ++t) {
        Mat lhs = comm(x1(u), mat_inverse(f, x4(s, t)));
        Mat rhs = mat_mul(f, x2(M(s, u), M(u, t)), x3(M(M(s, u), t)));
        if (!(lhs == rhs)) return fail("chin50: [x1,x4^-1] at " + tuple_str({u, s, t}));
        ++c;
      }
  rep.families.push_back({"chin50 [x1(u),x4(s,t)^-1]=x2(su,ut)x3(sut)", c});
  n += c;
  // chin50: [x2(s,t), x4(u,v)^-1] = x3(ut+sv)
  c = 0;
  for (int s = 0; s < q; ++s)
    for (int t = 0; t < q; ++t)
      for (int u = 0; u < q; ++u)
        for (int v = 0; v < q; ++v) {
          Mat lhs = comm(x2(s, t), mat_inverse(f, x4(u, v)));
          if (!(lhs == x3(f.add(M(u, t), M(s, v)))))
            return fail("chin50: [x2,x4^-1] at " + tuple_str({s, t, u, v}));
          ++c;
        }
  rep.families.push_back({"chin50 [x2(s,t),x4(u,v)^-1]=x3(ut+sv)", c});
  n += c;
  // chin50 trivial commutators: [U1,U3], [U1,U2], [U2,U3], [U3,U4]
  c = 0;
  for (int u = 0; u < q; ++u) {
    for (int v = 0; v < q; ++v)
      if (!(comm(x1(u), x3(v)) == id)) return fail("chin50: [U1,U3] at " + tuple_str({u, v}));
    for (int s = 0; s < q; ++s)
      for (int t = 0; t < q; ++t) {
        if (!(comm(x1(u), x2(s, t)) == id))
          return fail("chin50: [U1,U2] at " + tuple_str({u, s, t}));
        if (!(comm(x2(s, t), x3(u)) == id))
          return fail("chin50: [U2,U3] at " + tuple_str({u, s, t}));
        if (!(comm(x3(u), x4(s, t)) == id))
          return fail("chin50: [U3,U4] at " + tuple_str({u, s, t}));
        c += 3;
      }
    c += q;
  }
  rep.families.push_back({"chin50 [U1,U3]=[U1,U2]=[U2,U3]=[U3,U4]=1", c});
  n += c;

  // fin2: [x0(s,t), x3(u)^-1] = x1(tus) x2(us,tu)
  c = 0;
  for (int s = 0; s < q; ++s)
    for (int t = 0; t < q; ++t)
      for (int u = 0; u < q; ++u) {
        Mat lhs = comm(x0(s, t), mat_inverse(f, x3(u)));
        Mat rhs = mat_mul(f, x1(M(M(t, u), s)), x2(M(u, s), M(t, u)));
        if (!(lhs == rhs)) return fail("fin2: [x0,x3^-1] at " + tuple_str({s, t, u}));
        ++c;
      }
  rep.families.push_back({"fin2 [x0(s,t),x3(u)^-1]=x1(tus)x2(us,tu)", c});
  n += c;
  // fin2: [x0(s,t), x2(u,v)^-1] = x1(tu+vs)
  c = 0;
  for (int s = 0; s < q; ++s)
    for (int t = 0; t < q; ++t)
      for (int u = 0; u < q; ++u)
        for (int v = 0; v < q; ++v) {
          Mat lhs = comm(x0(s, t), mat_inverse(f, x2(u, v)));
          if (!(lhs == x1(f.add(M(t, u), M(v, s)))))
            return fail("fin2: [x0,x2^-1] at " + tuple_str({s, t, u, v}));
          ++c;
        }
  rep.families.push_back({"fin2 [x0(s,t),x2(u,v)^-1]=x1(tu+vs)", c});
  n += c;
  // fin2: [x2(s,t), x5(u)^-1] = x3(sut) x4(su,ut)
  c = 0;
  for (int s = 0; s < q; ++s)
    for (int t = 0; t < q; ++t)
      for (int u = 0; u < q; ++u) {
        Mat lhs = comm(x2(s, t), mat_inverse(f, x5(u)));
        Mat rhs = mat_mul(f, x3(M(M(s, u), t)), x4(M(s, u), M(u, t)));
        if (!(lhs == rhs)) return fail("fin2: [x2,x5^-1] at " + tuple_str({s, t, u}));
        ++c;
      }
  rep.families.push_back({"fin2 [x2(s,t),x5(u)^-1]=x3(sut)x4(su,ut)", c});
  n += c;

  // fin2 mu-map for U4: for st in K^x,
  // mu(x4(s,t)) = x0(t^-1,s^-1) x4(s,t) x0(t^-1,s^-1), with conjugation table
  c = 0;
  for (int s = 1; s < q; ++s)
    for (int t = 1; t < q; ++t) {
      int si = f.inv(uint8_t(s)), ti = f.inv(uint8_t(t));
      Mat mu = mat_mul(f, mat_mul(f, x0(ti, si), x4(s, t)), x0(ti, si));
      auto cm = [&](const Mat& m) { return conjugate(f, m, mu); };
      for (int u = 0; u < q; ++u) {
        if (!(cm(x1(u)) == x3(M(M(s, u), t))))
          return fail("fin2 mu: x1(u)->x3(sut) at " + tuple_str({s, t, u}));
        if (!(cm(x3(u)) == x1(M(M(si, u), ti))))
          return fail("fin2 mu: x3(u)->x1(s^-1 u t^-1) at " + tuple_str({s, t, u}));
        for (int v = 0; v < q; ++v) {
          if (!(cm(x0(u, v)) == x4(M(M(s, v), s), M(M(t, u), t))))
            return fail("fin2 mu: x0(u,v)->x4(svs,tut) at " + tuple_str({s, t, u, v}));
          if (!(cm(x2(u, v)) == x2(f.neg(M(M(s, v), ti)), f.neg(M(M(si, u), t)))))
            return fail("fin2 mu: x2(u,v)->x2(-svt^-1,-s^-1ut) at " + tuple_str({s, t, u, v}));
          if (!(cm(x4(u, v)) == x0(M(M(ti, v), ti), M(M(si, u), si))))
            return fail("fin2 mu: x4(u,v)->x0(t^-1vt^-1,s^-1us^-1) at " + tuple_str({s, t, u, v}));
          c += 3;
        }
        c += 2;
      }
    }
  rep.families.push_back({"fin2 mu(x4(s,t)) conjugation table", c});
  n += c;

  // razor-sharp failure witness: X = {x4(u,0)} is a nontrivial subgroup of
  // U4, invariant under H4 = <mu(a)mu(b) | a,b in U4#>, and disjoint from
  // U4# = {x4(s,t) | st != 0}.
  c = 0;
  {
    std::vector<Mat> mus;
    for (int s = 1; s < q; ++s)
      for (int t = 1; t < q; ++t) {
        int si = f.inv(uint8_t(s)), ti = f.inv(uint8_t(t));
        mus.push_back(mat_mul(f, mat_mul(f, x0(ti, si), x4(s, t)), x0(ti, si)));
      }
    std::vector<Mat> X;
    for (int u = 0; u < q; ++u) X.push_back(x4(u, 0));
    auto inX = [&](const Mat& m) {
      return std::find(X.begin(), X.end(), m) != X.end();
    };
    // subgroup (closure under product and inverse), nontrivial
    for (int u = 0; u < q; ++u)
      for (int v = 0; v < q; ++v)
        if (!inX(mat_mul(f, X[u], X[v]))) return fail("razor: {x4(u,0)} not closed");
    if (q < 2 || X[1] == id) return fail("razor: {x4(u,0)} trivial");
    // H4-invariance via the mu-pair generators
    for (auto& a : mus)
      for (auto& b : mus) {
        Mat h = mat_mul(f, a, b);
        for (int u = 0; u < q; ++u) {
          if (!inX(conjugate(f, X[u], h)))
            return fail("razor: {x4(u,0)} not H4-invariant");
          ++c;
        }
      }
    // disjoint from U4#
    for (int u = 0; u < q; ++u)
      for (int s = 1; s < q; ++s)
        for (int t = 1; t < q; ++t) {
          if (X[u] == x4(s, t)) return fail("razor: {x4(u,0)} meets U4#");
          ++c;
        }
  }
  rep.families.push_back({"fin2 razor-sharp witness {x4(u,0)}", c});
  n += c;

  // fin2 mu_gamma for U1: for u in K^x,
  // mu(x1(u)) = x5(u^-1) x1(u) x5(u^-1), with conjugation table
  c = 0;
  for (int u = 1; u < q; ++u) {
    int ui = f.inv(uint8_t(u));
    Mat mu = mat_mul(f, mat_mul(f, x5(ui), x1(u)), x5(ui));
    auto cm = [&](const Mat& m) { return conjugate(f, m, mu); };
    for (int s = 0; s < q; ++s) {
      if (!(cm(x1(s)) == x5(M(M(ui, s), ui))))
        return fail("fin2 mu_g: x1(s)->x5(u^-1su^-1) at " + tuple_str({u, s}));
      if (!(cm(x3(s)) == x3(s))) return fail("fin2 mu_g: x3 not fixed at " + tuple_str({u, s}));
      if (!(cm(x5(s)) == x1(M(M(u, s), u))))
        return fail("fin2 mu_g: x5(s)->x1(usu) at " + tuple_str({u, s}));
      for (int t = 0; t < q; ++t) {
        if (!(cm(x2(s, t)) == x4(f.neg(M(s, ui)), f.neg(M(ui, t)))))
          return fail("fin2 mu_g: x2(s,t)->x4(-su^-1,-u^-1t) at " + tuple_str({u, s, t}));
        if (!(cm(x4(s, t)) == x2(M(s, u), M(u, t))))
          return fail("fin2 mu_g: x4(s,t)->x2(su,ut) at " + tuple_str({u, s, t}));
        c += 2;
      }
      c += 3;
    }
  }
  rep.families.push_back({"fin2 mu_gamma(x1(u)) conjugation table", c});
  n += c;

  rep.identities_checked = n;
  rep.ok = true;
  return rep;
}

}  // namespace vq
