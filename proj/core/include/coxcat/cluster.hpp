#pragma once

// Generalized cluster complexes: colored almost-positive roots, the tropical
// Coxeter element and its colored extension, the crossing relation, and
// facet/face enumeration with f- and h-vectors.

#include "coxcat/coxeter.hpp"
#include "coxcat/polynomial.hpp"

namespace coxcat {

// vertex encoding: 0..n-1 are the negative simples -alpha_s (color 1);
// n + (c-1)*N + r is the positive root r with color c+1... colors 1..k
class ClusterComplex {
public:
  static ClusterComplex build(const CoxeterGroup& G, int k, size_t vertex_cap = 200);

  const CoxeterGroup& group() const { return *G_; }
  int k() const { return k_; }
  int num_vertices() const { return n_ + k_ * N_; }
  bool is_negative_vertex(int v) const { return v < n_; }
  int vertex_root(int v) const { return v < n_ ? v : (v - n_) % N_; }
  int vertex_color(int v) const { return v < n_ ? 1 : (v - n_) / N_ + 1; }
  int vertex_of(int root, int color) const { return n_ + (color - 1) * N_ + root; }

  bool crossing(int u, int v) const { return cross_[u][v]; }
  int tau_star(int v) const { return tau_star_[v]; }
  long long tau_star_order() const;

  // uncolored tau maps on Phi_{>=-1} (ids: 0..n-1 negatives, n+r positives)
  int tau_left(int x) const;
  int tau_right(int x) const;
  int tau(int x) const { return tau_left(tau_right(x)); }

  const std::vector<std::vector<int>>& facets() const { return facets_; }
  long long num_positive_facets() const;
  const std::vector<BigInt>& f_vector() const { return f_; }  // f_[i] = #faces of size i
  std::vector<BigInt> h_vector() const;

  // every face as a sorted vertex list (for the F-triangle and sieving)
  std::vector<std::vector<int>> all_faces() const;

private:
  const CoxeterGroup* G_ = nullptr;
  int k_ = 1, n_ = 0, N_ = 0;
  CoxeterElementData cox_;
  std::vector<char> in_left_;  // simple index -> bipartition side
  std::vector<std::vector<char>> cross_;
  std::vector<int> tau_star_;
  std::vector<std::vector<int>> facets_;
  std::vector<BigInt> f_;

  int tau_apply(const Element& part, const std::vector<char>& fixed_negatives, int x) const;
};

// number of faces of Delta^(k)(A_{n-1}) with i vertices
BigInt kirkman_cayley(int n, int k, int i);

}  // namespace coxcat
