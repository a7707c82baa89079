#include "coxcat/cluster.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace coxcat {

int ClusterComplex::tau_apply(const Element& part, const std::vector<char>& fixed_negatives,
                              int x) const {
  // x encodes Phi_{>=-1}: 0..n-1 negative simples, n + r positive roots
  const CoxeterGroup& G = *G_;
  if (x < n_) {
    if (fixed_negatives[x]) return x;
    // part(-alpha_x); simple roots sit at indices 0..n-1 of the root list
    int img = part.perm[G.negate_root(x)];
    return img < N_ ? n_ + img : img - N_;  // negative images are negated simples
  }
  int r = x - n_;
  int img = part.perm[r];
  if (img < N_) return n_ + img;
  // positive root sent negative: must be a simple of the moving side
  return img - N_;
}

int ClusterComplex::tau_left(int x) const {
  std::vector<char> fixed(n_, 0);
  for (int s = 0; s < n_; ++s)
    if (!in_left_[s]) fixed[s] = 1;  // tau_l fixes -Pi_r
  return tau_apply(cox_.left, fixed, x);
}

int ClusterComplex::tau_right(int x) const {
  std::vector<char> fixed(n_, 0);
  for (int s = 0; s < n_; ++s)
    if (in_left_[s]) fixed[s] = 1;  // tau_r fixes -Pi_l
  return tau_apply(cox_.right, fixed, x);
}

ClusterComplex ClusterComplex::build(const CoxeterGroup& G, int k, size_t vertex_cap) {
  ClusterComplex cc;
  cc.G_ = &G;
  cc.k_ = k;
  cc.n_ = G.rank();
  cc.N_ = G.num_positive_roots();
  if (static_cast<size_t>(cc.num_vertices()) > vertex_cap)
    throw std::runtime_error("cluster complex vertex cap exceeded");
  cc.cox_ = G.coxeter_element_bipartite();
  cc.in_left_.assign(cc.n_, 0);
  for (int s : cc.cox_.left_set) cc.in_left_[s] = 1;

  int V = cc.num_vertices();
  // colored rotation: positive roots climb one color, otherwise apply tau
  // and land in color 1
  cc.tau_star_.assign(V, -1);
  for (int v = 0; v < V; ++v) {
    if (!cc.is_negative_vertex(v) && cc.vertex_color(v) < k) {
      cc.tau_star_[v] = cc.vertex_of(cc.vertex_root(v), cc.vertex_color(v) + 1);
    } else {
      int x = cc.is_negative_vertex(v) ? v : cc.n_ + cc.vertex_root(v);
      int tx = cc.tau(x);
      cc.tau_star_[v] = tx < cc.n_ ? tx : cc.vertex_of(tx - cc.n_, 1);
    }
  }

  // crossing: iterate the rotation until one coordinate is a negative simple
  long long order = cc.tau_star_order();
  cc.cross_.assign(V, std::vector<char>(V, 0));
  auto base_case = [&](int a, int b, bool& out) {
    // a is a negative simple
    if (cc.is_negative_vertex(b)) {
      out = false;
      return true;
    }
    out = !G.field().is_zero(G.root(cc.vertex_root(b))[a]);
    return true;
  };
  for (int u = 0; u < V; ++u)
    for (int v = u; v < V; ++v) {
      if (u == v) { cc.cross_[u][v] = 0; continue; }
      int a = u, b = v;
      bool found = false, value = false;
      for (long long step = 0; step <= order && !found; ++step) {
        if (cc.is_negative_vertex(a)) found = base_case(a, b, value);
        else if (cc.is_negative_vertex(b)) found = base_case(b, a, value);
        if (!found) {
          a = cc.tau_star_[a];
          b = cc.tau_star_[b];
        }
      }
      if (!found) throw std::logic_error("crossing: no negative simple in the orbit");
      cc.cross_[u][v] = cc.cross_[v][u] = value ? 1 : 0;
    }

  // faces = independent sets of the crossing graph
  cc.f_.assign(cc.n_ + 2, BigInt(0));
  std::vector<int> cur;
  std::function<void(int)> rec = [&](int from) {
    cc.f_[cur.size()] += BigInt(1);
    if (static_cast<int>(cur.size()) == cc.n_) {
      cc.facets_.push_back(cur);
      return;  // purity: no independent set exceeds n (checked below)
    }
    for (int x = from; x < V; ++x) {
      bool ok = true;
      for (int y : cur)
        if (cc.cross_[x][y]) { ok = false; break; }
      if (ok) {
        cur.push_back(x);
        rec(x + 1);
        cur.pop_back();
      }
    }
  };
  rec(0);
  if (!(cc.f_[cc.n_ + 1] == BigInt(0)))
    throw std::logic_error("cluster complex: independent set larger than the rank");
  cc.f_.resize(cc.n_ + 1);
  return cc;
}

long long ClusterComplex::tau_star_order() const {
  long long ord = 1;
  int V = num_vertices();
  std::vector<char> seen(V, 0);
  for (int i = 0; i < V; ++i) {
    if (seen[i]) continue;
    long long len = 0;
    for (int j = i; !seen[j]; j = tau_star_[j]) {
      seen[j] = 1;
      ++len;
    }
    ord = std::lcm(ord, len);
  }
  return ord;
}

long long ClusterComplex::num_positive_facets() const {
  long long c = 0;
  for (const auto& f : facets_)
    if (std::all_of(f.begin(), f.end(), [&](int v) { return !is_negative_vertex(v); })) ++c;
  return c;
}

std::vector<BigInt> ClusterComplex::h_vector() const {
  // sum_i f_i (x-1)^{n-i} = sum_i h_i x^{n-i}
  int n = n_;
  std::vector<BigInt> h(n + 1, BigInt(0));
  for (int i = 0; i <= n; ++i) {
    // f_[i] * (x-1)^{n-i}: contributes to x^{n-j} for j >= i
    for (int j = i; j <= n; ++j) {
      BigInt c = BigInt::binomial(n - i, j - i);
      if ((j - i) % 2) c = -c;
      h[j] += f_[i] * c;
    }
  }
  return h;
}

std::vector<std::vector<int>> ClusterComplex::all_faces() const {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  int V = num_vertices();
  std::function<void(int)> rec = [&](int from) {
    out.push_back(cur);
    if (static_cast<int>(cur.size()) == n_) return;
    for (int x = from; x < V; ++x) {
      bool ok = true;
      for (int y : cur)
        if (cross_[x][y]) { ok = false; break; }
      if (ok) {
        cur.push_back(x);
        rec(x + 1);
        cur.pop_back();
      }
    }
  };
  rec(0);
  return out;
}

BigInt kirkman_cayley(int n, int k, int i) {
  if (i < 0 || i > n - 1) throw std::invalid_argument("kirkman_cayley: index range");
  return BigInt::binomial(n - 1, i) *
         BigInt::binomial(static_cast<long long>(k) * n + i + 1, i) / BigInt(i + 1);
}

}  // namespace coxcat
