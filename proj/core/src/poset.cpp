#include "coxcat/poset.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <stdexcept>

namespace coxcat {

namespace {
inline size_t words(int n) { return (static_cast<size_t>(n) + 63) / 64; }
inline void set_bit(std::vector<uint64_t>& row, int i) { row[static_cast<size_t>(i) >> 6] |= 1ull << (i & 63); }
inline bool get_bit(const std::vector<uint64_t>& row, int i) { return row[static_cast<size_t>(i) >> 6] >> (i & 63) & 1; }
}  // namespace

FinitePoset FinitePoset::from_leq(int n, const std::function<bool(int, int)>& leq) {
  FinitePoset p;
  p.n_ = n;
  p.up_.assign(n, std::vector<uint64_t>(words(n), 0));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (x == y || leq(x, y)) set_bit(p.up_[x], y);
  // axioms
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      if (x != y && p.leq(x, y) && p.leq(y, x))
        throw std::invalid_argument("poset: antisymmetry violated");
      if (p.leq(x, y))
        for (size_t w = 0; w < words(n); ++w)
          if (p.up_[y][w] & ~p.up_[x][w])
            throw std::invalid_argument("poset: transitivity violated");
    }
  p.finish();
  return p;
}

FinitePoset FinitePoset::from_covers(int n, const std::vector<std::pair<int, int>>& covers) {
  FinitePoset p;
  p.n_ = n;
  p.up_.assign(n, std::vector<uint64_t>(words(n), 0));
  std::vector<std::vector<int>> adj(n);
  std::vector<int> indeg_out(n, 0);
  for (auto [a, b] : covers) adj[a].push_back(b);
  // reverse topological accumulation of upsets
  std::vector<int> order(n), state(n, 0);
  order.clear();
  std::vector<int> stack;
  for (int s = 0; s < n; ++s) {
    if (state[s]) continue;
    stack.push_back(s);
    while (!stack.empty()) {
      int v = stack.back();
      if (state[v] == 0) {
        state[v] = 1;
        for (int u : adj[v])
          if (state[u] == 0) stack.push_back(u);
      } else {
        stack.pop_back();
        if (state[v] == 1) {
          state[v] = 2;
          order.push_back(v);
        }
      }
    }
  }
  for (int v : order) {
    set_bit(p.up_[v], v);
    for (int u : adj[v])
      for (size_t w = 0; w < words(n); ++w) p.up_[v][w] |= p.up_[u][w];
  }
  for (int v = 0; v < n; ++v)
    if (!get_bit(p.up_[v], v)) throw std::invalid_argument("poset: cover relation has a cycle");
  p.finish();
  return p;
}

void FinitePoset::finish() {
  down_.assign(n_, std::vector<uint64_t>(words(n_), 0));
  for (int x = 0; x < n_; ++x)
    for (int y = 0; y < n_; ++y)
      if (leq(x, y)) set_bit(down_[y], x);
  covers_.clear();
  cover_up_.assign(n_, {});
  for (int x = 0; x < n_; ++x)
    for (int y = 0; y < n_; ++y) {
      if (!less(x, y)) continue;
      bool cover = true;
      for (int z = 0; z < n_ && cover; ++z)
        if (z != x && z != y && less(x, z) && less(z, y)) cover = false;
      if (cover) {
        covers_.push_back({x, y});
        cover_up_[x].push_back(y);
      }
    }
}

std::vector<int> FinitePoset::upset(int x) const {
  std::vector<int> r;
  for (int y = 0; y < n_; ++y)
    if (leq(x, y)) r.push_back(y);
  return r;
}

std::vector<int> FinitePoset::downset(int x) const {
  std::vector<int> r;
  for (int y = 0; y < n_; ++y)
    if (leq(y, x)) r.push_back(y);
  return r;
}

std::vector<int> FinitePoset::minimal_elements() const {
  std::vector<int> r;
  for (int x = 0; x < n_; ++x) {
    bool minimal = true;
    for (int y = 0; y < n_ && minimal; ++y)
      if (less(y, x)) minimal = false;
    if (minimal) r.push_back(x);
  }
  return r;
}

std::vector<int> FinitePoset::maximal_elements() const {
  std::vector<int> r;
  for (int x = 0; x < n_; ++x) {
    bool maximal = true;
    for (int y = 0; y < n_ && maximal; ++y)
      if (less(x, y)) maximal = false;
    if (maximal) r.push_back(x);
  }
  return r;
}

FinitePoset FinitePoset::restrict(const std::vector<int>& keep) const {
  FinitePoset p;
  p.n_ = static_cast<int>(keep.size());
  p.up_.assign(p.n_, std::vector<uint64_t>(words(p.n_), 0));
  for (int i = 0; i < p.n_; ++i)
    for (int j = 0; j < p.n_; ++j)
      if (leq(keep[i], keep[j])) set_bit(p.up_[i], j);
  p.finish();
  return p;
}

FinitePoset FinitePoset::dual() const {
  FinitePoset p;
  p.n_ = n_;
  p.up_ = down_;
  p.finish();
  return p;
}

FinitePoset FinitePoset::with_top() const {
  FinitePoset p;
  p.n_ = n_ + 1;
  p.up_.assign(p.n_, std::vector<uint64_t>(words(p.n_), 0));
  for (int x = 0; x < n_; ++x) {
    for (int y = 0; y < n_; ++y)
      if (leq(x, y)) set_bit(p.up_[x], y);
    set_bit(p.up_[x], n_);
  }
  set_bit(p.up_[n_], n_);
  p.finish();
  return p;
}

FinitePoset FinitePoset::with_bottom() const {
  FinitePoset p;
  p.n_ = n_ + 1;
  p.up_.assign(p.n_, std::vector<uint64_t>(words(p.n_), 0));
  for (int x = 0; x < n_; ++x)
    for (int y = 0; y < n_; ++y)
      if (leq(x, y)) set_bit(p.up_[x], y);
  for (int y = 0; y <= n_; ++y) set_bit(p.up_[n_], y);
  p.finish();
  return p;
}

std::vector<int> FinitePoset::height_rank() const {
  std::vector<int> rank(n_, 0);
  // process in a linear extension (by downset size)
  std::vector<int> order(n_);
  for (int i = 0; i < n_; ++i) order[i] = i;
  std::vector<int> dsz(n_, 0);
  for (int x = 0; x < n_; ++x)
    for (int y = 0; y < n_; ++y)
      if (less(y, x)) ++dsz[x];
  std::sort(order.begin(), order.end(), [&](int a, int b) { return dsz[a] < dsz[b]; });
  for (int x : order)
    for (int y : cover_up_[x]) rank[y] = std::max(rank[y], rank[x] + 1);
  return rank;
}

bool FinitePoset::is_graded() const {
  auto rank = height_rank();
  for (auto [a, b] : covers_)
    if (rank[b] != rank[a] + 1) return false;
  return true;
}

BigInt FinitePoset::mobius(int x, int y) const {
  if (!leq(x, y)) throw std::invalid_argument("mobius: x is not below y");
  // mu(x,x) = 1; mu(x,y) = -sum_{x <= z < y} mu(x,z)
  std::vector<int> zs;
  for (int z = 0; z < n_; ++z)
    if (leq(x, z) && leq(z, y)) zs.push_back(z);
  std::map<int, BigInt> mu;
  std::sort(zs.begin(), zs.end(), [&](int a, int b) {
    if (a == b) return false;
    if (less(a, b)) return true;
    if (less(b, a)) return false;
    return a < b;
  });
  for (int z : zs) {
    if (z == x) {
      mu[z] = BigInt(1);
      continue;
    }
    BigInt s(0);
    for (int w : zs)
      if (w != z && leq(w, z)) s += mu[w];
    mu[z] = -s;
  }
  return mu[y];
}

std::vector<BigInt> FinitePoset::chain_counts() const {
  // v_j[y] = number of j-chains ending at y
  std::vector<BigInt> b;
  std::vector<BigInt> v(n_, BigInt(1));
  while (true) {
    BigInt total(0);
    for (const auto& c : v) total += c;
    if (total.is_zero()) break;
    b.push_back(total);
    std::vector<BigInt> nv(n_, BigInt(0));
    for (int y = 0; y < n_; ++y)
      for (int x = 0; x < n_; ++x)
        if (less(x, y)) nv[y] += v[x];
    v = std::move(nv);
  }
  return b;
}

RatPoly FinitePoset::zeta_polynomial() const {
  auto b = chain_counts();
  // Z(P,k) = sum_i b_i * binom(k-1, i-1)
  RatPoly z;
  RatPoly k_var(std::vector<Rational>{Rational(0), Rational(1)});
  RatPoly falling(Rational(1));  // (k-1)(k-2)...(k-i+1)
  for (size_t i = 1; i <= b.size(); ++i) {
    RatPoly binom = falling * RatPoly(Rational(BigInt(1), BigInt::factorial(static_cast<unsigned>(i - 1))));
    z += RatPoly(Rational(b[i - 1])) * binom;
    falling = falling * (k_var - RatPoly(Rational(static_cast<long long>(i))));
  }
  return z;
}

BigInt FinitePoset::zeta_at(long long k) const {
  Rational v = zeta_polynomial().eval(Rational(k));
  if (!v.is_integer()) throw std::logic_error("zeta polynomial not integral at an integer");
  return v.num();
}

BigInt FinitePoset::count_maximal_chains() const {
  // chains from minimal to maximal elements along covers
  std::vector<BigInt> ways(n_, BigInt(0));
  std::vector<int> order(n_);
  for (int i = 0; i < n_; ++i) order[i] = i;
  std::vector<int> dsz(n_, 0);
  for (int x = 0; x < n_; ++x)
    for (int y = 0; y < n_; ++y)
      if (less(y, x)) ++dsz[x];
  std::sort(order.begin(), order.end(), [&](int a, int b) { return dsz[a] < dsz[b]; });
  for (int x = 0; x < n_; ++x) {
    bool minimal = true;
    for (int y = 0; y < n_; ++y)
      if (less(y, x)) minimal = false;
    if (minimal) ways[x] = BigInt(1);
  }
  // propagate along covers in linear-extension order
  for (int x : order)
    for (int y : cover_up_[x]) ways[y] += ways[x];
  BigInt total(0);
  for (int x : maximal_elements()) total += ways[x];
  return total;
}

BigInt FinitePoset::reduced_euler_char() const {
  auto b = chain_counts();
  BigInt chi(0);
  for (size_t i = 1; i <= b.size(); ++i) {
    if (i % 2)
      chi += b[i - 1];
    else
      chi -= b[i - 1];
  }
  return chi - BigInt(1);
}

FinitePoset::LatticeInfo FinitePoset::lattice_ops() const {
  LatticeInfo info;
  info.meet.assign(n_, std::vector<int>(n_, -1));
  info.join.assign(n_, std::vector<int>(n_, -1));
  info.has_meets = info.has_joins = true;
  size_t W = words(n_);
  std::vector<uint64_t> tmp(W);
  auto greatest = [&](const std::vector<uint64_t>& mask) {
    // element z in mask whose downset contains every element of mask
    int best = -1;
    for (int z = 0; z < n_; ++z) {
      if (!get_bit(mask, z)) continue;
      bool top = true;
      for (size_t w = 0; w < W && top; ++w)
        if (mask[w] & ~down_[z][w]) top = false;
      if (top) { best = z; break; }
    }
    return best;
  };
  auto least = [&](const std::vector<uint64_t>& mask) {
    int best = -1;
    for (int z = 0; z < n_; ++z) {
      if (!get_bit(mask, z)) continue;
      bool bot = true;
      for (size_t w = 0; w < W && bot; ++w)
        if (mask[w] & ~up_[z][w]) bot = false;
      if (bot) { best = z; break; }
    }
    return best;
  };
  for (int x = 0; x < n_; ++x)
    for (int y = x; y < n_; ++y) {
      for (size_t w = 0; w < W; ++w) tmp[w] = down_[x][w] & down_[y][w];
      int m = greatest(tmp);
      info.meet[x][y] = info.meet[y][x] = m;
      if (m < 0) info.has_meets = false;
      for (size_t w = 0; w < W; ++w) tmp[w] = up_[x][w] & up_[y][w];
      int j = least(tmp);
      info.join[x][y] = info.join[y][x] = j;
      if (j < 0) info.has_joins = false;
    }
  info.is_lattice = info.has_meets && info.has_joins;
  return info;
}

bool FinitePoset::verify_el_labelling(const std::vector<int>& cover_labels) const {
  if (cover_labels.size() != covers_.size())
    throw std::invalid_argument("EL check: one label per cover required");
  // label lookup per cover edge
  std::map<std::pair<int, int>, int> lbl;
  for (size_t i = 0; i < covers_.size(); ++i) lbl[covers_[i]] = cover_labels[i];

  for (int x = 0; x < n_; ++x)
    for (int y = 0; y < n_; ++y) {
      if (!less(x, y)) continue;
      // maximal chains of [x, y] by DFS over covers inside the interval
      std::vector<std::vector<int>> label_seqs;
      std::vector<int> cur;
      std::function<void(int)> dfs = [&](int v) {
        if (v == y) {
          label_seqs.push_back(cur);
          return;
        }
        for (int u : cover_up_[v]) {
          if (!leq(u, y)) continue;
          cur.push_back(lbl.at({v, u}));
          dfs(u);
          cur.pop_back();
        }
      };
      dfs(x);
      if (label_seqs.empty()) return false;
      int rising = 0;
      std::vector<int> rising_seq;
      for (const auto& seq : label_seqs) {
        bool r = true;
        for (size_t i = 1; i < seq.size(); ++i)
          if (seq[i - 1] > seq[i]) { r = false; break; }
        if (r) {
          ++rising;
          rising_seq = seq;
        }
      }
      if (rising != 1) return false;
      for (const auto& seq : label_seqs)
        if (seq != rising_seq && std::lexicographical_compare(seq.begin(), seq.end(),
                                                              rising_seq.begin(), rising_seq.end()))
          return false;
    }
  return true;
}

}  // namespace coxcat
