#include "coxcat/sieving.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace coxcat {

QCatalan q_fuss_catalan(const CoxeterGroup& G, int k) {
  QCatalan out;
  IntPoly num(BigInt(1));
  for (int d : G.degrees()) num *= IntPoly::q_integer(k * G.coxeter_number() + d);
  for (int d : G.degrees()) {
    auto q = exact_divide(num, IntPoly::q_integer(d));
    if (!q) {
      out.exact_division = false;
      break;
    }
    num = *q;
  }
  if (out.exact_division) out.poly = num;
  for (const auto& c : out.poly.coeffs())
    if (c.sign() < 0) out.nonnegative_coeffs = false;
  return out;
}

namespace {
BigInt eval_power(const IntPoly& p, long long order, long long j) {
  long long g = std::gcd(j == 0 ? order : j, order);
  unsigned d = static_cast<unsigned>(order / g);
  unsigned long long e = static_cast<unsigned long long>(j / g);
  return eval_at_root_of_unity(p, d, e);
}
}  // namespace

SievingReport sieving_nc(const KDivisible& kd) {
  const CoxeterGroup& G = kd.nc().group();
  SievingReport rep;
  rep.order = static_cast<long long>(kd.k()) * G.coxeter_number();
  QCatalan qc = q_fuss_catalan(G, kd.k());
  // the C* orbit structure on delta sequences = on the multichain ids
  std::vector<int> cstar(kd.size());
  for (int id = 0; id < kd.size(); ++id) cstar[id] = kd.automorphism(KDivisible::Auto::Cstar, id);
  std::vector<int> power(kd.size());
  for (int id = 0; id < kd.size(); ++id) power[id] = id;
  rep.pass = true;
  for (long long j = 0; j < rep.order; ++j) {
    BigInt fixed(0);
    for (int id = 0; id < kd.size(); ++id)
      if (power[id] == id) fixed += BigInt(1);
    BigInt ev = eval_power(qc.poly, rep.order, j);
    rep.fixed.push_back(fixed);
    rep.evaluated.push_back(ev);
    if (!(fixed == ev)) rep.pass = false;
    for (int id = 0; id < kd.size(); ++id) power[id] = cstar[power[id]];
  }
  return rep;
}

SievingReport sieving_clusters(const ClusterComplex& cc) {
  const CoxeterGroup& G = cc.group();
  SievingReport rep;
  rep.order = cc.tau_star_order();
  QCatalan qc = q_fuss_catalan(G, cc.k());
  std::set<std::vector<int>> facet_set(cc.facets().begin(), cc.facets().end());
  std::vector<std::vector<int>> current = cc.facets();
  rep.pass = true;
  for (long long j = 0; j < rep.order; ++j) {
    BigInt fixed(0);
    for (size_t i = 0; i < current.size(); ++i)
      if (current[i] == cc.facets()[i]) fixed += BigInt(1);
    BigInt ev = eval_power(qc.poly, rep.order, j);
    rep.fixed.push_back(fixed);
    rep.evaluated.push_back(ev);
    if (!(fixed == ev)) rep.pass = false;
    for (auto& f : current) {
      for (int& v : f) v = cc.tau_star(v);
      std::sort(f.begin(), f.end());
      if (!facet_set.count(f)) throw std::logic_error("tau* does not permute the facets");
    }
  }
  return rep;
}

Rational overlap_statistic(const KDivisible& kd, int l, int i) {
  auto mins = kd.poset().minimal_elements();
  auto chains = multichains_of(kd.poset(), l);
  BigInt total(0), count(0);
  for (const auto& mc : chains) {
    if (kd.rank(mc[0]) != i) continue;
    count += BigInt(1);
    for (int m : mins)
      if (kd.poset().leq(m, mc[0])) total += BigInt(1);
  }
  if (count.is_zero()) throw std::invalid_argument("overlap_statistic: no multichains at that rank");
  return Rational(total, count);
}

}  // namespace coxcat
