#pragma once

// Finite posets: explicit element sets with bitset order relations, Hasse
// diagrams, Moebius function, zeta polynomial, lattice operations, order
// complex Euler characteristics and EL-labelling verification.

#include <functional>
#include <optional>

#include "coxcat/polynomial.hpp"

namespace coxcat {

class FinitePoset {
public:
  FinitePoset() = default;

  // verifies reflexivity, antisymmetry, transitivity; throws on violation
  static FinitePoset from_leq(int n, const std::function<bool(int, int)>& leq);
  // order = reflexive-transitive closure of the given cover relations
  static FinitePoset from_covers(int n, const std::vector<std::pair<int, int>>& covers);

  int size() const { return n_; }
  bool leq(int x, int y) const { return up_[x][static_cast<size_t>(y) >> 6] >> (y & 63) & 1; }
  bool less(int x, int y) const { return x != y && leq(x, y); }
  const std::vector<std::pair<int, int>>& covers() const { return covers_; }

  std::vector<int> upset(int x) const;
  std::vector<int> downset(int x) const;
  std::vector<int> minimal_elements() const;
  std::vector<int> maximal_elements() const;

  // induced subposet; returns the poset and keeps the element map ordering
  FinitePoset restrict(const std::vector<int>& keep) const;
  FinitePoset dual() const;
  // poset with a new maximum (index n) or minimum (index n) adjoined
  FinitePoset with_top() const;
  FinitePoset with_bottom() const;

  // longest-chain rank; graded means every cover steps rank by one
  std::vector<int> height_rank() const;
  bool is_graded() const;

  BigInt mobius(int x, int y) const;  // requires x <= y

  // chain counts b_i = #(i-element chains), i >= 1
  std::vector<BigInt> chain_counts() const;
  // zeta polynomial Z(P, k) = number of k-multichains, as a polynomial in k
  RatPoly zeta_polynomial() const;
  BigInt zeta_at(long long k) const;
  BigInt count_maximal_chains() const;
  // reduced Euler characteristic of the order complex
  BigInt reduced_euler_char() const;

  struct LatticeInfo {
    bool is_lattice = false;
    bool has_meets = false;
    bool has_joins = false;
    std::vector<std::vector<int>> meet, join;  // -1 when undefined
  };
  LatticeInfo lattice_ops() const;
  bool is_lattice() const { return lattice_ops().is_lattice; }

  // EL check: cover labels in an arbitrary totally ordered alphabet encoded
  // as ints; every interval must contain exactly one weakly rising maximal
  // chain, lexicographically first among its maximal chains
  bool verify_el_labelling(const std::vector<int>& cover_labels) const;

private:
  int n_ = 0;
  std::vector<std::vector<uint64_t>> up_;    // up_[x] = bitset of {y : x <= y}
  std::vector<std::vector<uint64_t>> down_;  // down_[x] = bitset of {y : y <= x}
  std::vector<std::pair<int, int>> covers_;
  std::vector<std::vector<int>> cover_up_;  // adjacency by covers

  void finish();  // computes covers_ and down_ from up_
};

}  // namespace coxcat
