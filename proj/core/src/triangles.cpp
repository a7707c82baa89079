#include "coxcat/triangles.hpp"

#include "coxcat/catalan.hpp"

namespace coxcat {

BivarPoly m_triangle(const KDivisible& kd) {
  // over the delta-sequence poset NC_(k), dual to the multichain poset:
  // sum over a <= b there of mu(a,b) x^{n - rk(a)} y^{n - rk(b)}, which in
  // multichain coordinates is mu_kd(a,b) x^{rk(a)} y^{rk(b)} over a <=_kd b
  BivarPoly M;
  const FinitePoset& p = kd.poset();
  for (int a = 0; a < p.size(); ++a)
    for (int b = 0; b < p.size(); ++b) {
      if (!p.leq(a, b)) continue;
      M.add(kd.rank(a), kd.rank(b), p.mobius(a, b));
    }
  return M;
}

BivarPoly h_triangle(const ShiArrangement& shi) {
  int n = shi.rp->group().rank();
  BivarPoly H;
  for (const auto& c : shi.chambers) {
    int simple = 0;
    for (int r : c.floors[shi.k])
      if (r < n) ++simple;
    H.add(simple, static_cast<int>(c.floors[shi.k].size()), BigInt(1));
  }
  return H;
}

BivarPoly f_triangle(const ClusterComplex& cc) {
  BivarPoly F;
  for (const auto& face : cc.all_faces()) {
    int neg = 0;
    for (int v : face)
      if (cc.is_negative_vertex(v)) ++neg;
    F.add(static_cast<int>(face.size()) - neg, neg, BigInt(1));
  }
  return F;
}

namespace {
BivarPoly binom_expand(const BivarPoly& base, unsigned e) { return base.pow(e); }

BivarPoly c1() { return BivarPoly::constant(BigInt(1)); }
BivarPoly X() { return BivarPoly::var_x(); }
BivarPoly Y() { return BivarPoly::var_y(); }
}  // namespace

BivarPoly m_from_f(const BivarPoly& F, int n) {
  // (xy - 1)^n F((1-y)/(xy-1), 1/(xy-1))
  BivarPoly xym1 = X() * Y() - c1();
  BivarPoly onemy = c1() - Y();
  BivarPoly out;
  for (const auto& [key, c] : F.terms()) {
    auto [a, b] = key;
    BivarPoly term = BivarPoly::constant(c) * binom_expand(onemy, a) *
                     binom_expand(xym1, static_cast<unsigned>(n - a - b));
    out = out + term;
  }
  return out;
}

BivarPoly m_from_h(const BivarPoly& H, int n) {
  // (1-y)^n H(x/(x-1), y(x-1)/(1-y)); terms need b >= a
  BivarPoly xm1 = X() - c1();
  BivarPoly onemy = c1() - Y();
  BivarPoly out;
  for (const auto& [key, c] : H.terms()) {
    auto [a, b] = key;
    BivarPoly term = BivarPoly::constant(c) * binom_expand(X(), a) * binom_expand(Y(), b) *
                     binom_expand(xm1, static_cast<unsigned>(b - a)) *
                     binom_expand(onemy, static_cast<unsigned>(n - b));
    out = out + term;
  }
  return out;
}

BivarPoly h_from_m(const BivarPoly& M, int n) {
  // (1 + (s-1)t)^n M(s/(s-1), (s-1)t/(1+(s-1)t)); x-deg <= y-deg in M
  BivarPoly sm1 = X() - c1();
  BivarPoly core = c1() + sm1 * Y();
  BivarPoly out;
  for (const auto& [key, c] : M.terms()) {
    auto [a, b] = key;
    BivarPoly term = BivarPoly::constant(c) * binom_expand(X(), a) *
                     binom_expand(sm1, static_cast<unsigned>(b - a)) * binom_expand(Y(), b) *
                     binom_expand(core, static_cast<unsigned>(n - b));
    out = out + term;
  }
  return out;
}

BivarPoly h_from_f(const BivarPoly& F, int n) {
  // (t-1)^n F(1/(t-1), (1+(s-1)t)/(t-1))
  BivarPoly tm1 = Y() - c1();
  BivarPoly core = c1() + (X() - c1()) * Y();
  BivarPoly out;
  for (const auto& [key, c] : F.terms()) {
    auto [a, b] = key;
    BivarPoly term = BivarPoly::constant(c) * binom_expand(core, b) *
                     binom_expand(tm1, static_cast<unsigned>(n - a - b));
    out = out + term;
  }
  return out;
}

BivarPoly f_from_m(const BivarPoly& M, int n) {
  // q^n M((1+q)/(q-p), (q-p)/q)
  BivarPoly qmp = Y() - X();
  BivarPoly onepq = c1() + Y();
  BivarPoly out;
  for (const auto& [key, c] : M.terms()) {
    auto [a, b] = key;
    BivarPoly term = BivarPoly::constant(c) * binom_expand(onepq, a) *
                     binom_expand(qmp, static_cast<unsigned>(b - a)) *
                     binom_expand(Y(), static_cast<unsigned>(n - b));
    out = out + term;
  }
  return out;
}

BivarPoly f_from_h(const BivarPoly& H, int n) {
  // p^n H((1+q)/(1+p), (1+p)/p)
  BivarPoly onepp = c1() + X();
  BivarPoly onepq = c1() + Y();
  BivarPoly out;
  for (const auto& [key, c] : H.terms()) {
    auto [a, b] = key;
    BivarPoly term = BivarPoly::constant(c) * binom_expand(onepq, a) *
                     binom_expand(onepp, static_cast<unsigned>(b - a)) *
                     binom_expand(X(), static_cast<unsigned>(n - b));
    out = out + term;
  }
  return out;
}

TriangleChecks check_transforms(const BivarPoly& M, const BivarPoly& H, const BivarPoly& F,
                                int n) {
  TriangleChecks t;
  t.m_f = M == m_from_f(F, n);
  t.m_h = M == m_from_h(H, n);
  t.h_m = H == h_from_m(M, n);
  t.h_f = H == h_from_f(F, n);
  t.f_m = F == f_from_m(M, n);
  t.f_h = F == f_from_h(H, n);
  return t;
}

BivarPoly dual_m(const BivarPoly& M, int n) {
  BivarPoly out;
  for (const auto& [key, c] : M.terms()) out.add(n - key.second, n - key.first, c);
  return out;
}

BivarPoly dual_h(const BivarPoly& H, int n) {
  // t^n H(1 + (s-1)t, 1/t)
  BivarPoly core = c1() + (X() - c1()) * Y();
  BivarPoly out;
  for (const auto& [key, c] : H.terms()) {
    auto [a, b] = key;
    BivarPoly term = BivarPoly::constant(c) * binom_expand(core, a) *
                     binom_expand(Y(), static_cast<unsigned>(n - b));
    out = out + term;
  }
  return out;
}

BivarPoly dual_f(const BivarPoly& F, int n) {
  // (-1)^n F(-1-p, -1-q)
  BivarPoly out;
  BivarPoly onepp = c1() + X(), onepq = c1() + Y();
  for (const auto& [key, c] : F.terms()) {
    auto [a, b] = key;
    BigInt sign = ((n + a + b) % 2) ? BigInt(-1) : BigInt(1);
    out = out + BivarPoly::constant(c * sign) * binom_expand(onepp, a) * binom_expand(onepq, b);
  }
  return out;
}

std::map<std::pair<int, int>, Rational> dual_f_prediction(const ClusterComplex& cc) {
  const CoxeterGroup& G = cc.group();
  std::map<std::pair<int, int>, Rational> out;
  for (const auto& face : cc.all_faces()) {
    int neg = 0;
    for (int v : face)
      if (cc.is_negative_vertex(v)) ++neg;
    int sz = static_cast<int>(face.size());
    Rational ratio =
        Rational(fuss_narayana(G, cc.k(), sz)) / Rational(fuss_narayana(G, 1, sz));
    auto key = std::make_pair(sz - neg, neg);
    auto it = out.find(key);
    if (it == out.end()) out.emplace(key, ratio);
    else it->second += ratio;
  }
  return out;
}

}  // namespace coxcat
