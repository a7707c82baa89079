#pragma once

// Classical models of the k-divisible noncrossing partitions for types A
// and B: shuffle partitions, the nabla bijection from multichains to
// k-divisible partitions, the Reiner-style centrally symmetric model, and
// the closed-form multichain counts.

#include "coxcat/poset.hpp"
#include "coxcat/setpartition.hpp"

namespace coxcat {

std::vector<int> range_1_to(int n);

// orbit partition of a permutation given as 1-based images
SetPartition orbits_of(const std::vector<int>& images);
// inverse of the trace map: a noncrossing partition of [n] to the
// permutation with each block a clockwise cycle (1-based images)
std::vector<int> trace_permutation(const SetPartition& p);

// interleaving of k partitions of [n] into a partition of [kn]
SetPartition shuffle(const std::vector<SetPartition>& q);
// classical delta sequence condition: Q_j <= K(Q_i) for i < j
bool is_delta_sequence(const std::vector<SetPartition>& q);

// delta sequence of a multichain, (K^{P_2}(P_1), ..., K(P_k))
std::vector<SetPartition> classical_partial(const std::vector<SetPartition>& chain);
// nabla: k-multichain in NC(n) -> k-divisible noncrossing partition of [kn]
SetPartition nabla(const std::vector<SetPartition>& chain);

// antipodal map on a partition of [2m]: x -> x + m (mod 2m)
SetPartition antipodal(const SetPartition& p);
bool is_centrally_symmetric(const SetPartition& p);
// number of pairs of nonzero blocks (type B rank data)
int count_nonzero_pairs(const SetPartition& p);
// type-B k-type: one part |B|/k per pair of nonzero blocks
std::vector<int> type_b_shape(const SetPartition& p, int k);

struct ClassicalKDiv {
  int n = 0, k = 0;
  bool type_b = false;
  std::vector<SetPartition> elements;
  FinitePoset poset;  // refinement order
  int rank(int id) const;
};

// k-divisible noncrossing partitions of [kn] (type A) or centrally
// symmetric ones of [2kn] (type B), under refinement
ClassicalKDiv enumerate_kdivisible(int n, int k, bool type_b, size_t cap = 2000000);

// the antipodally fixed subposet of NC^(k)(n), nonempty only for n even or
// k even; carries the conjectured zeta polynomial
struct MysteryPoset {
  int n = 0, k = 0;
  std::vector<SetPartition> elements;
  FinitePoset poset;
  // exhaustive l-multichain count vs binomial(floor((kl+1)n/2), floor(n/2))
  std::vector<std::pair<BigInt, BigInt>> zeta_check(int max_l) const;
};
MysteryPoset mystery_poset(int n, int k);

// closed-form multichain counts
BigInt count_rank_jump(int n, int k, const std::vector<int>& jumps, bool type_b);
BigInt count_by_type(const std::vector<int>& lambda, int n, int k, int l, bool type_b);

}  // namespace coxcat
