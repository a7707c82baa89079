#pragma once

// Set partitions of finite integer sets in canonical block form, the
// crossing and nesting predicates, refinement order, and the classical
// Kreweras complement maps (plain, inverse, and relative).

#include <vector>

#include "coxcat/bigint.hpp"

namespace coxcat {

struct SetPartition {
  std::vector<std::vector<int>> blocks;  // each sorted; blocks sorted by minimum

  SetPartition() = default;
  explicit SetPartition(std::vector<std::vector<int>> b) : blocks(std::move(b)) { canonicalize(); }

  static SetPartition singletons(const std::vector<int>& ground);
  static SetPartition whole(const std::vector<int>& ground);

  void canonicalize();
  std::vector<int> ground() const;
  int size() const;  // ground set size
  int num_blocks() const { return static_cast<int>(blocks.size()); }
  int block_index_of(int x) const;

  // sorted block sizes, largest first
  std::vector<int> shape() const;

  bool operator==(const SetPartition& o) const { return blocks == o.blocks; }
  bool operator<(const SetPartition& o) const { return blocks < o.blocks; }
};

bool is_noncrossing(const SetPartition& p);
bool is_nonnesting(const SetPartition& p);

// refinement order: every block of a lies inside a block of b
bool refines(const SetPartition& a, const SetPartition& b);
// common refinement; noncrossing inputs give the NC-lattice meet
SetPartition meet(const SetPartition& a, const SetPartition& b);
// join inside the NC lattice: partition-lattice join, then merge crossing
// blocks until noncrossing
SetPartition join_nc(const SetPartition& a, const SetPartition& b);

SetPartition restrict_to(const SetPartition& p, const std::vector<int>& subset);
SetPartition translate(const SetPartition& p, int shift);
SetPartition dilate(const SetPartition& p, int factor);

// Kreweras complement on NC(X) for the linear order on the ground set X
SetPartition kreweras(const SetPartition& p);
SetPartition kreweras_inv(const SetPartition& p);
// K^N(P): complement within each block of N (requires P <= N)
SetPartition kreweras_relative(const SetPartition& p, const SetPartition& n);
// K_M^N(P) = M v K^N(P)
SetPartition kreweras_relative(const SetPartition& p, const SetPartition& m, const SetPartition& n);

// cyclic rotation x -> x+1 (with max wrapping to min) of the ground set
SetPartition rotate_up(const SetPartition& p);

// all noncrossing partitions of X whose block sizes are divisible by k
std::vector<SetPartition> enumerate_noncrossing(const std::vector<int>& ground, int k = 1,
                                                size_t cap = 2000000);

}  // namespace coxcat
