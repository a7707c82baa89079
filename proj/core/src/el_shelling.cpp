#include "coxcat/el_shelling.hpp"

#include <algorithm>

namespace coxcat {

bool el_check_nc(const NCLattice& nc, const std::vector<int>& order) {
  std::vector<int> labels;
  labels.reserve(nc.cover_labels().size());
  for (int t : nc.cover_labels()) labels.push_back(order[t]);
  return nc.poset().verify_el_labelling(labels);
}

bool el_check_nck(const NCLattice& nc, const KDivisible& kd, const std::vector<int>& order) {
  const CoxeterGroup& G = nc.group();
  int N = G.num_positive_roots();
  int k = kd.k();
  // NC_(k) is the dual of the multichain poset on the same element ids;
  // adjoin the top and label its covers
  FinitePoset bounded = kd.poset().dual().with_top();
  int top = kd.size();
  auto enc = [&](int index, int rank) { return index * (N + 2) + rank; };
  int lambda = enc(1, N + 1);  // after the index-1 block, before index 2
  std::unordered_map<Element, int, ElementHash> refl_of;
  for (int t = 0; t < N; ++t) refl_of.emplace(G.reflection(t), t);
  std::vector<int> labels;
  for (auto [a, b] : bounded.covers()) {
    if (b == top) {
      labels.push_back(lambda);
      continue;
    }
    // cover a < b in NC_(k): the delta sequences differ in one slot, where
    // delta(b) = delta(a) with slot i multiplied up by a reflection
    const auto& da = kd.delta(a);
    const auto& db = kd.delta(b);
    int slot = -1;
    for (int i = 0; i < k; ++i)
      if (da[i] != db[i]) { slot = i; break; }
    Element t = G.multiply(G.invert(nc.element(da[slot])), nc.element(db[slot]));
    labels.push_back(enc(slot + 1, order[refl_of.at(t)] + 1));
  }
  return bounded.verify_el_labelling(labels);
}

namespace {
// candidate orders seeded from the rotation structure: conjugate the simple
// reflections by powers of c, in a few interleavings
std::vector<std::vector<int>> seed_orders(const NCLattice& nc) {
  const CoxeterGroup& G = nc.group();
  int N = G.num_positive_roots();
  std::unordered_map<Element, int, ElementHash> refl_of;
  for (int t = 0; t < N; ++t) refl_of.emplace(G.reflection(t), t);
  const auto& cox = nc.cox();
  std::vector<std::vector<int>> seeds;
  std::vector<std::vector<int>> generator_orders;
  std::vector<int> lr = cox.left_set, rl = cox.right_set;
  std::vector<int> a = rl, b = lr;
  std::vector<int> way1 = a, way2 = b, way3, way4;
  way1.insert(way1.end(), b.begin(), b.end());
  way2.insert(way2.end(), a.begin(), a.end());
  way3 = way1;
  std::reverse(way3.begin(), way3.end());
  way4 = way2;
  std::reverse(way4.begin(), way4.end());
  for (const auto& gens : {way1, way2, way3, way4}) {
    std::vector<int> seq;
    std::vector<char> seen(N, 0);
    Element power = G.identity();
    for (int j = 0; j < G.coxeter_number(); ++j) {
      for (int s : gens) {
        Element t = G.conjugate(power, G.simple_reflection(s));
        int idx = refl_of.at(t);
        if (!seen[idx]) {
          seen[idx] = 1;
          seq.push_back(idx);
        }
      }
      power = G.multiply(power, cox.c);
    }
    std::vector<int> order(N);
    for (int i = 0; i < N; ++i) order[seq[i]] = i;
    seeds.push_back(order);
  }
  return seeds;
}
}  // namespace

std::optional<std::vector<int>> find_el_reflection_order(const NCLattice& nc,
                                                         const std::vector<int>& ks) {
  const CoxeterGroup& G = nc.group();
  int N = G.num_positive_roots();
  std::vector<KDivisible> kds;
  for (int k : ks)
    if (k >= 2) kds.push_back(KDivisible::build(nc, k));
  auto passes = [&](const std::vector<int>& order) {
    if (!el_check_nc(nc, order)) return false;
    for (const auto& kd : kds)
      if (!el_check_nck(nc, kd, order)) return false;
    return true;
  };
  for (const auto& seed : seed_orders(nc))
    if (passes(seed)) return seed;
  // exhaustive fallback; only sensible for small N
  if (N <= 9) {
    std::vector<int> perm(N);
    for (int i = 0; i < N; ++i) perm[i] = i;
    do {
      std::vector<int> order(N);
      for (int i = 0; i < N; ++i) order[perm[i]] = i;
      if (passes(order)) return order;
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  return std::nullopt;
}

}  // namespace coxcat
