#include "coxcat/rootposet.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace coxcat {

RootPoset RootPoset::build(const CoxeterGroup& G) {
  bool crystallographic =
      G.spec().family == Family::A || G.spec().family == Family::B ||
      G.spec().family == Family::D || G.spec().family == Family::E ||
      G.spec().family == Family::F ||
      (G.spec().family == Family::I &&
       (G.spec().dihedral_m == 3 || G.spec().dihedral_m == 4 || G.spec().dihedral_m == 6));
  if (!crystallographic)
    throw std::invalid_argument("root poset requires a crystallographic type");
  RootPoset rp;
  rp.G_ = &G;
  rp.n_roots_ = G.num_positive_roots();
  rp.coords_.assign(rp.n_roots_, std::vector<long long>(G.rank(), 0));
  for (int r = 0; r < rp.n_roots_; ++r) {
    int h = 0;
    for (int i = 0; i < G.rank(); ++i) {
      const Rational& c = G.root(r)[i][0];
      if (!c.is_integer()) throw std::logic_error("root poset: non-integer coordinate");
      rp.coords_[r][i] = c.num().to_ll();
      h += static_cast<int>(rp.coords_[r][i]);
    }
    rp.heights_.push_back(h);
  }
  rp.poset_ = FinitePoset::from_leq(rp.n_roots_, [&](int a, int b) {
    for (int i = 0; i < G.rank(); ++i)
      if (rp.coords_[b][i] < rp.coords_[a][i]) return false;
    return true;
  });
  rp.sum_.assign(rp.n_roots_, std::vector<int>(rp.n_roots_, -1));
  for (int a = 0; a < rp.n_roots_; ++a)
    for (int b = 0; b < rp.n_roots_; ++b) {
      std::vector<FieldElem> s(G.rank());
      for (int i = 0; i < G.rank(); ++i)
        s[i] = G.field().scalar(Rational(rp.coords_[a][i] + rp.coords_[b][i]));
      int idx = G.root_index(s);
      rp.sum_[a][b] = (idx >= 0 && idx < rp.n_roots_) ? idx : -1;
    }
  return rp;
}

namespace {
std::vector<std::vector<int>> antichains_of(const FinitePoset& p, size_t cap) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  std::function<void(int)> rec = [&](int from) {
    out.push_back(cur);
    if (out.size() > cap) throw std::runtime_error("antichain enumeration cap exceeded");
    for (int x = from; x < p.size(); ++x) {
      bool ok = true;
      for (int y : cur)
        if (p.leq(x, y) || p.leq(y, x)) { ok = false; break; }
      if (!ok) continue;
      cur.push_back(x);
      rec(x + 1);
      cur.pop_back();
    }
  };
  rec(0);
  return out;
}
}  // namespace

std::vector<std::vector<int>> RootPoset::antichains(size_t cap) const {
  return antichains_of(poset_, cap);
}

std::vector<char> RootPoset::filter_of(const std::vector<int>& antichain) const {
  std::vector<char> f(n_roots_, 0);
  for (int a : antichain)
    for (int b = 0; b < n_roots_; ++b)
      if (poset_.leq(a, b)) f[b] = 1;
  return f;
}

std::vector<int> RootPoset::minimal_roots(const std::vector<char>& filter) const {
  std::vector<int> mins;
  for (int a = 0; a < n_roots_; ++a) {
    if (!filter[a]) continue;
    bool minimal = true;
    for (int b = 0; b < n_roots_ && minimal; ++b)
      if (b != a && filter[b] && poset_.leq(b, a)) minimal = false;
    if (minimal) mins.push_back(a);
  }
  return mins;
}

bool RootPoset::is_geometric(const std::vector<int>& level, int k) const {
  auto lv = [&](int r) { return level[r]; };
  // (V_i + V_j) cap Phi+ <= V_{i+j}, with V_0 = Phi+ and V_i = V_k above k;
  // indices >= 1 suffice since V_0 adds nothing new
  for (int a = 0; a < n_roots_; ++a)
    for (int b = 0; b < n_roots_; ++b) {
      int s = sum_[a][b];
      if (s < 0) continue;
      int i = lv(a), j = lv(b);
      if (i >= 1 && j >= 1) {
        int need = std::min(i + j, k);
        if (lv(s) < need) return false;
      }
      // Lambda condition: a not in V_i etc.
      // (Lambda_i + Lambda_j) cap Phi+ <= Lambda_{i+j} for i+j <= k
      // translates to: lv(a) < i and lv(b) < j imply lv(s) < i + j,
      // equivalently lv(s) >= i + j implies lv(a) >= i or lv(b) >= j;
      // the sharpest instance is i = lv(a)+1, j = lv(b)+1:
      if (lv(a) + lv(b) + 2 <= k && lv(s) >= lv(a) + lv(b) + 2) return false;
    }
  return true;
}

std::vector<std::vector<int>> RootPoset::nested_filter_multichains(int k) const {
  // level vectors whose threshold sets are filters
  auto anti = antichains();
  std::vector<std::vector<char>> filters;
  for (const auto& a : anti) filters.push_back(filter_of(a));
  auto contains = [&](const std::vector<char>& big, const std::vector<char>& small) {
    for (int r = 0; r < n_roots_; ++r)
      if (small[r] && !big[r]) return false;
    return true;
  };
  std::vector<std::vector<int>> out;
  std::vector<int> chain;  // filter ids, V_1 downwards to V_k
  std::function<void(int)> rec = [&](int depth) {
    if (depth == k) {
      // V_i = filter of chain[i-1]; level(r) = max i with r in V_i
      std::vector<int> lv(n_roots_, 0);
      for (int r = 0; r < n_roots_; ++r)
        for (int d = 0; d < k; ++d)
          if (filters[chain[d]][r]) lv[r] = d + 1;
      out.push_back(lv);
      return;
    }
    for (size_t f = 0; f < filters.size(); ++f) {
      if (depth > 0 && !contains(filters[chain[depth - 1]], filters[f])) continue;
      chain.push_back(static_cast<int>(f));
      rec(depth + 1);
      chain.pop_back();
    }
  };
  rec(0);
  return out;
}

std::vector<std::vector<int>> RootPoset::geometric_multichains(int k) const {
  std::vector<std::vector<int>> out;
  for (auto& lv : nested_filter_multichains(k))
    if (is_geometric(lv, k)) out.push_back(lv);
  return out;
}

BivarPoly antichain_h_triangle(const FinitePoset& poset, const std::vector<int>& simples) {
  std::vector<char> is_simple(poset.size(), 0);
  for (int s : simples) is_simple[s] = 1;
  BivarPoly h;
  for (const auto& a : antichains_of(poset, 1u << 26)) {
    int simple = 0;
    for (int x : a) simple += is_simple[x];
    h.add(simple, static_cast<int>(a.size()), BigInt(1));
  }
  return h;
}

CandidateRootPoset candidate_root_poset(const GroupSpec& spec) {
  CandidateRootPoset cp;
  cp.spec = spec;
  if (spec.family == Family::I) {
    int m = spec.dihedral_m;
    if (m < 3) throw std::invalid_argument("candidate poset needs m >= 3");
    // two minimal simples under a chain of m - 2 further roots
    std::vector<std::pair<int, int>> covers{{0, 2}, {1, 2}};
    for (int i = 2; i + 1 < m; ++i) covers.push_back({i, i + 1});
    cp.poset = FinitePoset::from_covers(m, covers);
    cp.simples = {0, 1};
    return cp;
  }
  if (spec.family == Family::H && spec.rank == 3) {
    // reconstructed by exhaustive search against the published statistics
    // (rank sizes, antichain counts by size and simple-content, full-support
    // count) plus the parabolic restrictions to I2(5) and A2; node 0 is the
    // middle simple, 1 the 5-edge end, 2 the 3-edge end
    std::vector<std::pair<int, int>> covers{
        {0, 3}, {0, 4}, {1, 3}, {2, 4},  {3, 5},  {3, 6},   {4, 5},   {5, 7},   {6, 7},
        {6, 8}, {7, 9}, {7, 10}, {8, 9}, {9, 11}, {10, 11}, {11, 12}, {12, 13}, {13, 14}};
    cp.poset = FinitePoset::from_covers(15, covers);
    cp.simples = {0, 1, 2};
    return cp;
  }
  throw std::invalid_argument("no candidate root poset for " + spec.str());
}

CandidateRootPoset::Report CandidateRootPoset::check() const {
  Report rep;
  CoxeterGroup G = CoxeterGroup::build(spec);
  auto expo = G.exponents();
  int n = G.rank(), h = G.coxeter_number(), N = G.num_positive_roots();
  // rank sizes = conjugate partition of the exponents
  auto ranks = poset.height_rank();
  std::vector<int> sizes(h, 0);
  for (int x = 0; x < poset.size(); ++x) ++sizes[ranks[x]];
  rep.rank_counts = poset.size() == N;
  for (int i = 0; i < h - 1; ++i) {
    int ki = 0;
    for (int m : expo)
      if (m >= i + 1) ++ki;
    if (sizes[i] != ki) rep.rank_counts = false;
  }
  // antichain statistics
  auto anti = antichains_of(poset, 1u << 26);
  Rational cat(1), catplus(1);
  for (int d : G.degrees()) {
    cat *= Rational(BigInt(h + d), BigInt(d));
    catplus *= Rational(BigInt(h + d - 2), BigInt(d));
  }
  rep.catalan_count = BigInt(static_cast<long long>(anti.size())) == cat.num();
  std::vector<long long> by_size(n + 1, 0);
  long long nonsimple = 0, fullsupp = 0;
  std::vector<char> is_simple(poset.size(), 0);
  for (int s : simples) is_simple[s] = 1;
  for (const auto& a : anti) {
    ++by_size[a.size()];
    if (std::none_of(a.begin(), a.end(), [&](int x) { return is_simple[x]; })) ++nonsimple;
  }
  // Nar(W, i) via the uniform boundary formula specialized at k = 1:
  // rank numbers of NC(W); for rank <= 3 these are 1, N, N, 1 / 1, N, 1
  std::vector<BigInt> nar;
  if (n == 2) nar = {BigInt(1), BigInt(h), BigInt(1)};
  else nar = {BigInt(1), BigInt(N), BigInt(N), BigInt(1)};
  rep.narayana_sizes = true;
  for (int i = 0; i <= n; ++i)
    if (BigInt(by_size[i]) != nar[i]) rep.narayana_sizes = false;
  rep.positive_count = BigInt(nonsimple) == catplus.num();
  // full support: above every simple
  for (int x = 0; x < poset.size(); ++x) {
    bool full = true;
    for (int s : simples)
      if (!poset.leq(s, x)) full = false;
    if (full) ++fullsupp;
  }
  // M(W) = nh/|W| * prod_{i >= 2} (m_i - 1)
  Rational mw(BigInt(static_cast<long long>(n) * h), G.order());
  for (size_t i = 1; i < expo.size(); ++i) mw *= Rational(expo[i] - 1);
  rep.full_support = Rational(BigInt(fullsupp)) == mw;
  rep.h_triangle = antichain_h_triangle(poset, simples);
  return rep;
}

}  // namespace coxcat
