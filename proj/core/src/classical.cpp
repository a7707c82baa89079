#include "coxcat/classical.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace coxcat {

std::vector<int> range_1_to(int n) {
  std::vector<int> v(n);
  for (int i = 0; i < n; ++i) v[i] = i + 1;
  return v;
}

SetPartition orbits_of(const std::vector<int>& images) {
  int n = static_cast<int>(images.size());
  std::vector<char> seen(n + 1, 0);
  SetPartition p;
  for (int s = 1; s <= n; ++s) {
    if (seen[s]) continue;
    std::vector<int> orbit;
    for (int x = s; !seen[x]; x = images[x - 1]) {
      seen[x] = 1;
      orbit.push_back(x);
    }
    p.blocks.push_back(orbit);
  }
  p.canonicalize();
  return p;
}

std::vector<int> trace_permutation(const SetPartition& p) {
  if (!is_noncrossing(p)) throw std::invalid_argument("trace map needs a noncrossing partition");
  std::vector<int> g = p.ground();
  int n = g.empty() ? 0 : g.back();
  std::vector<int> img(n);
  for (int i = 1; i <= n; ++i) img[i - 1] = i;
  for (const auto& b : p.blocks)
    for (size_t i = 0; i < b.size(); ++i) img[b[i] - 1] = b[(i + 1) % b.size()];
  return img;
}

SetPartition shuffle(const std::vector<SetPartition>& q) {
  int k = static_cast<int>(q.size());
  SetPartition out;
  for (int i = 1; i <= k; ++i) {
    SetPartition part = translate(dilate(q[i - 1], k), -(k - i));
    for (const auto& b : part.blocks) out.blocks.push_back(b);
  }
  out.canonicalize();
  return out;
}

bool is_delta_sequence(const std::vector<SetPartition>& q) {
  for (size_t i = 0; i < q.size(); ++i)
    for (size_t j = i + 1; j < q.size(); ++j)
      if (!refines(q[j], kreweras(q[i]))) return false;
  return true;
}

std::vector<SetPartition> classical_partial(const std::vector<SetPartition>& chain) {
  std::vector<SetPartition> deltas;
  for (size_t i = 0; i + 1 < chain.size(); ++i)
    deltas.push_back(kreweras_relative(chain[i], chain[i + 1]));
  deltas.push_back(kreweras(chain.back()));
  return deltas;
}

SetPartition nabla(const std::vector<SetPartition>& chain) {
  for (size_t i = 0; i + 1 < chain.size(); ++i)
    if (!refines(chain[i], chain[i + 1])) throw std::invalid_argument("nabla: not a multichain");
  return kreweras_inv(shuffle(classical_partial(chain)));
}

SetPartition antipodal(const SetPartition& p) {
  int m2 = p.size();
  if (m2 % 2) throw std::invalid_argument("antipodal: even ground set required");
  int m = m2 / 2;
  SetPartition r = p;
  for (auto& b : r.blocks)
    for (int& x : b) x = (x + m - 1) % m2 + 1;
  r.canonicalize();
  return r;
}

bool is_centrally_symmetric(const SetPartition& p) { return antipodal(p) == p; }

int count_nonzero_pairs(const SetPartition& p) {
  int m2 = p.size();
  int m = m2 / 2;
  int zero = 0;
  for (const auto& b : p.blocks) {
    bool z = false;
    for (int x : b) {
      int anti = (x + m - 1) % m2 + 1;
      if (std::binary_search(b.begin(), b.end(), anti)) z = true;
    }
    if (z) ++zero;
  }
  return (p.num_blocks() - zero) / 2;
}

std::vector<int> type_b_shape(const SetPartition& p, int k) {
  int m2 = p.size();
  int m = m2 / 2;
  std::map<std::vector<int>, int> seen;
  std::vector<int> shape;
  for (const auto& b : p.blocks) {
    bool zero = false;
    for (int x : b)
      if (std::binary_search(b.begin(), b.end(), (x + m - 1) % m2 + 1)) zero = true;
    if (zero) continue;
    std::vector<int> anti;
    for (int x : b) anti.push_back((x + m - 1) % m2 + 1);
    std::sort(anti.begin(), anti.end());
    if (seen.count(anti)) continue;  // partner already recorded
    seen[b] = 1;
    shape.push_back(static_cast<int>(b.size()) / k);
  }
  std::sort(shape.rbegin(), shape.rend());
  return shape;
}

int ClassicalKDiv::rank(int id) const {
  const SetPartition& p = elements[id];
  if (type_b) return n - count_nonzero_pairs(p);
  return n - p.num_blocks();
}

ClassicalKDiv enumerate_kdivisible(int n, int k, bool type_b, size_t cap) {
  ClassicalKDiv out;
  out.n = n;
  out.k = k;
  out.type_b = type_b;
  int m = type_b ? 2 * k * n : k * n;
  auto all = enumerate_noncrossing(range_1_to(m), k, cap);
  for (auto& p : all) {
    if (type_b && !is_centrally_symmetric(p)) continue;
    out.elements.push_back(std::move(p));
  }
  std::sort(out.elements.begin(), out.elements.end());
  out.poset = FinitePoset::from_leq(static_cast<int>(out.elements.size()), [&](int a, int b) {
    return refines(out.elements[a], out.elements[b]);
  });
  return out;
}

MysteryPoset mystery_poset(int n, int k) {
  MysteryPoset out;
  out.n = n;
  out.k = k;
  int m = k * n;
  if (m % 2 == 0) {
    auto all = enumerate_noncrossing(range_1_to(m), k);
    for (auto& p : all)
      if (is_centrally_symmetric(p)) out.elements.push_back(std::move(p));
  }
  std::sort(out.elements.begin(), out.elements.end());
  out.poset = FinitePoset::from_leq(static_cast<int>(out.elements.size()), [&](int a, int b) {
    return refines(out.elements[a], out.elements[b]);
  });
  return out;
}

std::vector<std::pair<BigInt, BigInt>> MysteryPoset::zeta_check(int max_l) const {
  std::vector<std::pair<BigInt, BigInt>> out;
  for (int l = 1; l <= max_l; ++l) {
    BigInt observed = poset.zeta_at(l);
    BigInt predicted = BigInt::binomial((static_cast<long long>(k) * l + 1) * n / 2, n / 2);
    out.push_back({observed, predicted});
  }
  return out;
}

BigInt count_rank_jump(int n, int k, const std::vector<int>& jumps, bool type_b) {
  int height = type_b ? n : n - 1;
  long long total = 0;
  for (int j : jumps) {
    if (j < 0) throw std::invalid_argument("count_rank_jump: negative jump");
    total += j;
  }
  if (total != height) throw std::invalid_argument("count_rank_jump: jumps must sum to the height");
  BigInt prod(1);
  prod *= BigInt::binomial(static_cast<long long>(n), jumps[0]);
  for (size_t i = 1; i < jumps.size(); ++i)
    prod *= BigInt::binomial(static_cast<long long>(k) * n, jumps[i]);
  if (!type_b) prod = prod / BigInt(n);
  return prod;
}

BigInt count_by_type(const std::vector<int>& lambda, int n, int k, int l, bool type_b) {
  long long i = static_cast<long long>(lambda.size());
  std::map<int, int> mult;
  for (int part : lambda) {
    if (part <= 0) throw std::invalid_argument("count_by_type: bad partition");
    ++mult[part];
  }
  BigInt m_lambda(1);
  for (auto [part, cnt] : mult) m_lambda *= BigInt::factorial(cnt);
  long long kln = static_cast<long long>(k) * l * n;
  BigInt num = BigInt::factorial(static_cast<unsigned>(kln));
  BigInt den = m_lambda * BigInt::factorial(static_cast<unsigned>(type_b ? kln - i : kln - i + 1));
  return num / den;
}

}  // namespace coxcat
