#pragma once

// The noncrossing partition lattice NC(W) = [1, c] in absolute order, the
// Kreweras complement maps, and the k-divisible generalization NC^(k)(W)
// of k-multichains ordered through their delta sequences.

#include "coxcat/coxeter.hpp"
#include "coxcat/poset.hpp"

namespace coxcat {

class NCLattice {
public:
  // BFS of the interval [1, c]; throws if c is not a Coxeter element
  static NCLattice build(const CoxeterGroup& G, const CoxeterElementData& cox);
  static NCLattice build_bipartite(const CoxeterGroup& G) {
    return build(G, G.coxeter_element_bipartite());
  }

  const CoxeterGroup& group() const { return *G_; }
  const CoxeterElementData& cox() const { return cox_; }
  bool bipartite() const { return !cox_.left_set.empty() || !cox_.right_set.empty(); }

  int size() const { return static_cast<int>(elements_.size()); }
  const Element& element(int id) const { return elements_[id]; }
  int length(int id) const { return abs_len_[id]; }
  int id_of(const Element& e) const;
  int identity_id() const { return 0; }
  int top_id() const { return top_; }

  const FinitePoset& poset() const { return poset_; }
  bool leq(int a, int b) const { return poset_.leq(a, b); }
  int meet(int a, int b) const { return lattice_.meet[a][b]; }
  int join(int a, int b) const { return lattice_.join[a][b]; }
  // positive-root index labelling each Hasse cover (aligned with poset().covers())
  const std::vector<int>& cover_labels() const { return cover_labels_; }

  // K_mu^nu(pi) = mu pi^{-1} nu; requires mu <= pi <= nu
  int kreweras(int mu, int nu, int pi) const;
  int complement(int pi) const { return kreweras(0, top_, pi); }
  int complement_inv(int pi) const;

  // delta sequences: partial() maps a k-multichain (ids) to
  // [delta_0; delta_1..delta_k]; integral() inverts it
  std::vector<int> partial(const std::vector<int>& multichain) const;
  std::vector<int> integral(const std::vector<int>& deltas) const;

  // R(pi) = r pi^{-1} r and L(pi) = l pi^{-1} l (bipartite c = l r)
  int map_R(int pi) const;
  int map_L(int pi) const;

  std::vector<int> group_element_ids(const std::vector<Element>& v) const;

private:
  const CoxeterGroup* G_ = nullptr;
  CoxeterElementData cox_;
  std::vector<Element> elements_;
  std::unordered_map<Element, int, ElementHash> index_;
  std::vector<int> abs_len_;
  FinitePoset poset_;
  FinitePoset::LatticeInfo lattice_;
  std::vector<int> cover_labels_;
  int top_ = -1;
};

struct KdnCover {
  std::vector<int> target;  // multichain (nc ids)
  int index;                // i with t <= delta_i
  int reflection;           // conjugated reflection t' (positive-root index)
};

class KDivisible {
public:
  static KDivisible build(const NCLattice& nc, int k, size_t cap = 50000);

  const NCLattice& nc() const { return *nc_; }
  int k() const { return k_; }
  int size() const { return static_cast<int>(elements_.size()); }
  const std::vector<int>& element(int id) const { return elements_[id]; }
  // delta parts delta_1..delta_k of the element (nc ids)
  const std::vector<int>& delta(int id) const { return deltas_[id]; }
  int rank(int id) const { return rank_[id]; }
  int id_of(const std::vector<int>& multichain) const;
  int top_id() const { return top_; }

  const FinitePoset& poset() const { return poset_; }
  std::vector<BigInt> rank_vector() const;

  // upward covers realized via joins (the cover-relation theorem); must
  // agree with the Hasse diagram of poset()
  std::vector<KdnCover> covers_from(int id) const;

  enum class Auto { Lstar, Rstar, Cstar };
  // poset automorphisms acting through the delta sequence; require a
  // bipartite Coxeter element
  int automorphism(Auto which, int id) const;

  struct TopologyStats {
    BigInt euler_no_top;
    BigInt euler_no_top_no_mins;
    BigInt max_chain_count;
  };
  TopologyStats topology_stats() const;

private:
  const NCLattice* nc_ = nullptr;
  int k_ = 1;
  std::vector<std::vector<int>> elements_;
  std::map<std::vector<int>, int> index_;
  std::vector<std::vector<int>> deltas_;
  std::vector<int> rank_;
  FinitePoset poset_;
  int top_ = -1;
};

// The iterated isomorphism (NC^(k))^(l) ~ NC^(kl): flattens an l-multichain
// of k-multichains into a kl-multichain, and back.
std::vector<int> iterate_flatten(const NCLattice& nc, const std::vector<std::vector<int>>& matrix);
std::vector<std::vector<int>> iterate_unflatten(const NCLattice& nc, int k, int l,
                                                const std::vector<int>& multichain);
// the same map computed with meets, as an independent route
std::vector<int> iterate_flatten_meet(const NCLattice& nc,
                                      const std::vector<std::vector<int>>& matrix);

// order on l-tuples of NC^(k) elements as in the iterated construction
bool iterated_leq(const KDivisible& kd, const std::vector<int>& a, const std::vector<int>& b);
// all l-multichains of NC^(k)(W), as vectors of KDivisible ids
std::vector<std::vector<int>> multichains_of(const FinitePoset& p, int l);

// order ideal of (pi)_k is isomorphic to NC^(k) of the parabolic below pi_1;
// returns the image multichains keyed by ideal element id
struct OrderIdealIso {
  std::vector<int> ideal_ids;                  // ids in the big poset
  std::vector<std::vector<int>> image;         // mapped multichains (nc ids, inside [1, pi_1])
  bool verified;                               // bijective + order-preserving both ways
};
OrderIdealIso order_ideal_iso(const KDivisible& kd, int id);

}  // namespace coxcat
