#pragma once

// Root posets of crystallographic types, antichains and order filters,
// Athanasiadis' geometric multichains of filters, and the hard-coded
// candidate root posets for the noncrystallographic types.

#include "coxcat/coxeter.hpp"
#include "coxcat/poset.hpp"
#include "coxcat/polynomial.hpp"

namespace coxcat {

class RootPoset {
public:
  // requires a crystallographic realization: A, B, D, E, F4, I2(3/4/6)
  static RootPoset build(const CoxeterGroup& G);

  const CoxeterGroup& group() const { return *G_; }
  int size() const { return n_roots_; }
  const FinitePoset& poset() const { return poset_; }
  long long coord(int root, int i) const { return coords_[root][i]; }
  int height(int root) const { return heights_[root]; }
  // index of alpha + beta among the positive roots, or -1
  int root_sum(int a, int b) const { return sum_[a][b]; }

  std::vector<std::vector<int>> antichains(size_t cap = 2000000) const;
  // up-closure of a set of roots
  std::vector<char> filter_of(const std::vector<int>& antichain) const;
  std::vector<int> minimal_roots(const std::vector<char>& filter) const;

  // all k-multichains of filters V_k <= ... <= V_1 satisfying the geometric
  // conditions; returned as level vectors m with V_i = {a : m(a) >= i}
  std::vector<std::vector<int>> geometric_multichains(int k) const;
  // nested but not necessarily geometric (candidate set for the chambers)
  std::vector<std::vector<int>> nested_filter_multichains(int k) const;
  bool is_geometric(const std::vector<int>& level, int k) const;

private:
  const CoxeterGroup* G_ = nullptr;
  int n_roots_ = 0;
  std::vector<std::vector<long long>> coords_;
  std::vector<int> heights_;
  FinitePoset poset_;
  std::vector<std::vector<int>> sum_;
};

// candidate root posets for I2(m) and H3 with the published statistics
struct CandidateRootPoset {
  GroupSpec spec;
  FinitePoset poset;
  std::vector<int> simples;

  struct Report {
    bool rank_counts = false;      // rank sizes = conjugate exponent partition
    bool catalan_count = false;    // antichains = Cat(W)
    bool narayana_sizes = false;   // antichains by size = Nar(W, i)
    bool positive_count = false;   // nonsimple antichains = Cat_+(W)
    bool full_support = false;     // elements above all simples = M(W)
    BivarPoly h_triangle;          // sum s^{#simple} t^{|A|}
    bool ok() const {
      return rank_counts && catalan_count && narayana_sizes && positive_count && full_support;
    }
  };
  Report check() const;
};
CandidateRootPoset candidate_root_poset(const GroupSpec& spec);

// H-triangle of a root poset (crystallographic or candidate) at k = 1
BivarPoly antichain_h_triangle(const FinitePoset& poset, const std::vector<int>& simples);

}  // namespace coxcat
