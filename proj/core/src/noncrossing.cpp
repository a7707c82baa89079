#include "coxcat/noncrossing.hpp"

#include <algorithm>
#include <stdexcept>

namespace coxcat {

NCLattice NCLattice::build(const CoxeterGroup& G, const CoxeterElementData& cox) {
  NCLattice nc;
  nc.G_ = &G;
  nc.cox_ = cox;
  int n = G.rank();
  if (G.abs_length(cox.c) != n)
    throw std::invalid_argument("build_nc: element is not a Coxeter element");

  std::unordered_map<Element, int, ElementHash> len_cache;
  auto length_of = [&](const Element& e) {
    auto it = len_cache.find(e);
    if (it != len_cache.end()) return it->second;
    int l = G.abs_length(e);
    len_cache.emplace(e, l);
    return l;
  };

  Element cinv = G.invert(cox.c);
  auto intern = [&](const Element& e, int len) {
    auto it = nc.index_.find(e);
    if (it != nc.index_.end()) return it->second;
    int id = static_cast<int>(nc.elements_.size());
    nc.elements_.push_back(e);
    nc.abs_len_.push_back(len);
    nc.index_.emplace(e, id);
    return id;
  };

  std::vector<std::pair<int, int>> covers;  // by element id
  intern(G.identity(), 0);
  std::vector<int> frontier{0};
  for (int level = 0; level < n; ++level) {
    std::vector<int> next;
    for (int id : frontier) {
      Element w = nc.elements_[id];
      for (int t = 0; t < G.num_positive_roots(); ++t) {
        Element u = G.multiply(w, G.reflection(t));
        if (length_of(u) != level + 1) continue;
        if (length_of(G.multiply(G.invert(u), cox.c)) != n - level - 1) continue;
        auto it = nc.index_.find(u);
        int uid;
        if (it == nc.index_.end()) {
          uid = intern(u, level + 1);
          next.push_back(uid);
        } else {
          uid = it->second;
        }
        covers.push_back({id, uid});
      }
    }
    frontier = std::move(next);
  }
  nc.top_ = nc.index_.at(cox.c);
  std::sort(covers.begin(), covers.end());
  covers.erase(std::unique(covers.begin(), covers.end()), covers.end());
  nc.poset_ = FinitePoset::from_covers(nc.size(), covers);
  nc.lattice_ = nc.poset_.lattice_ops();
  // recover the reflection labelling of the Hasse edges
  std::unordered_map<Element, int, ElementHash> refl_of;
  for (int t = 0; t < G.num_positive_roots(); ++t) refl_of.emplace(G.reflection(t), t);
  for (auto [a, b] : nc.poset_.covers()) {
    Element t = G.multiply(G.invert(nc.elements_[a]), nc.elements_[b]);
    nc.cover_labels_.push_back(refl_of.at(t));
  }
  return nc;
}

int NCLattice::id_of(const Element& e) const {
  auto it = index_.find(e);
  return it == index_.end() ? -1 : it->second;
}

int NCLattice::kreweras(int mu, int nu, int pi) const {
  if (!leq(mu, pi) || !leq(pi, nu))
    throw std::invalid_argument("kreweras: requires mu <= pi <= nu");
  Element out = G_->multiply(G_->multiply(elements_[mu], G_->invert(elements_[pi])), elements_[nu]);
  int id = id_of(out);
  if (id < 0) throw std::logic_error("kreweras: image left the lattice");
  return id;
}

int NCLattice::complement_inv(int pi) const {
  // K^{-1}(pi) = c pi^{-1}
  Element out = G_->multiply(elements_[top_], G_->invert(elements_[pi]));
  int id = id_of(out);
  if (id < 0) throw std::logic_error("complement_inv: image left the lattice");
  return id;
}

std::vector<int> NCLattice::partial(const std::vector<int>& chain) const {
  std::vector<int> deltas;
  deltas.reserve(chain.size() + 1);
  deltas.push_back(chain.empty() ? top_ : chain.front());
  for (size_t i = 0; i + 1 < chain.size(); ++i) deltas.push_back(kreweras(0, chain[i + 1], chain[i]));
  if (!chain.empty()) deltas.push_back(complement(chain.back()));
  return deltas;
}

std::vector<int> NCLattice::integral(const std::vector<int>& deltas) const {
  std::vector<int> chain;
  Element acc = elements_[deltas[0]];
  chain.push_back(deltas[0]);
  for (size_t i = 1; i + 1 < deltas.size(); ++i) {
    acc = G_->multiply(acc, elements_[deltas[i]]);
    int id = id_of(acc);
    if (id < 0) throw std::invalid_argument("integral: not a delta sequence");
    chain.push_back(id);
  }
  return chain;
}

int NCLattice::map_R(int pi) const {
  Element out = G_->multiply(G_->multiply(cox_.right, G_->invert(elements_[pi])), cox_.right);
  int id = id_of(out);
  if (id < 0) throw std::logic_error("map_R: image left the lattice");
  return id;
}

int NCLattice::map_L(int pi) const {
  Element out = G_->multiply(G_->multiply(cox_.left, G_->invert(elements_[pi])), cox_.left);
  int id = id_of(out);
  if (id < 0) throw std::logic_error("map_L: image left the lattice");
  return id;
}

std::vector<int> NCLattice::group_element_ids(const std::vector<Element>& v) const {
  std::vector<int> out;
  for (const auto& e : v) out.push_back(id_of(e));
  return out;
}

KDivisible KDivisible::build(const NCLattice& nc, int k, size_t cap) {
  KDivisible kd;
  kd.nc_ = &nc;
  kd.k_ = k;
  // enumerate k-multichains by DFS over upsets
  std::vector<std::vector<int>> ups(nc.size());
  for (int x = 0; x < nc.size(); ++x) ups[x] = nc.poset().upset(x);
  std::vector<int> cur;
  std::function<void(int)> rec = [&](int depth) {
    if (depth == k) {
      if (kd.elements_.size() >= cap)
        throw std::runtime_error("build_nck: size cap exceeded");
      kd.index_.emplace(cur, static_cast<int>(kd.elements_.size()));
      kd.elements_.push_back(cur);
      return;
    }
    const auto& choices = depth == 0 ? ups[0] : ups[cur.back()];
    for (int nxt : choices) {
      cur.push_back(nxt);
      rec(depth + 1);
      cur.pop_back();
    }
  };
  rec(0);

  // delta parts and rank
  for (const auto& ch : kd.elements_) {
    auto d = nc.partial(ch);
    kd.deltas_.push_back(std::vector<int>(d.begin() + 1, d.end()));
    kd.rank_.push_back(nc.length(ch[0]));
  }
  // order: (pi) <= (mu) iff delta_i(mu) <= delta_i(pi) in NC for all i
  kd.poset_ = FinitePoset::from_leq(static_cast<int>(kd.elements_.size()), [&](int a, int b) {
    for (int i = 0; i < k; ++i)
      if (!nc.leq(kd.deltas_[b][i], kd.deltas_[a][i])) return false;
    return true;
  });
  kd.top_ = kd.index_.at(std::vector<int>(k, nc.top_id()));
  return kd;
}

int KDivisible::id_of(const std::vector<int>& multichain) const {
  auto it = index_.find(multichain);
  return it == index_.end() ? -1 : it->second;
}

std::vector<BigInt> KDivisible::rank_vector() const {
  std::vector<BigInt> rv(nc_->group().rank() + 1, BigInt(0));
  for (int r : rank_) rv[r] += BigInt(1);
  return rv;
}

std::vector<KdnCover> KDivisible::covers_from(int id) const {
  const NCLattice& nc = *nc_;
  const auto& chain = elements_[id];
  std::vector<KdnCover> out;
  for (int i = 1; i <= k_; ++i) {
    int delta_i = deltas_[id][i - 1];
    // pi_1^{-1} pi_{i+1} as a group element (pi_{k+1} = c)
    const Element& pi1 = nc.element(chain[0]);
    const Element& pi_next = i < k_ ? nc.element(chain[i]) : nc.element(nc.top_id());
    Element conj = nc.group().multiply(nc.group().invert(pi1), pi_next);
    for (int t = 0; t < nc.group().num_positive_roots(); ++t) {
      if (!nc.leq(nc.id_of(nc.group().reflection(t)), delta_i)) continue;
      Element tp = nc.group().conjugate(conj, nc.group().reflection(t));
      int tp_id = nc.id_of(tp);
      KdnCover cv;
      cv.index = i;
      cv.reflection = -1;
      for (int r = 0; r < nc.group().num_positive_roots(); ++r)
        if (nc.group().reflection(r) == tp) { cv.reflection = r; break; }
      for (int j = 0; j < k_; ++j) cv.target.push_back(nc.join(chain[j], tp_id));
      out.push_back(std::move(cv));
    }
  }
  return out;
}

int KDivisible::automorphism(Auto which, int id) const {
  const NCLattice& nc = *nc_;
  if (!nc.bipartite())
    throw std::logic_error("automorphism: requires a bipartite Coxeter element");
  std::vector<int> d = deltas_[id];
  std::vector<int> nd(k_);
  switch (which) {
    case Auto::Rstar:
      for (int i = 0; i < k_; ++i) nd[i] = nc.map_R(d[k_ - 1 - i]);
      break;
    case Auto::Lstar:
      nd[0] = nc.map_L(d[0]);
      for (int i = 1; i < k_; ++i) nd[i] = nc.map_R(d[k_ - i]);
      break;
    case Auto::Cstar: {
      const Element& c = nc.element(nc.top_id());
      Element conj = nc.group().conjugate(c, nc.element(d[k_ - 1]));
      nd[0] = nc.id_of(conj);
      for (int i = 1; i < k_; ++i) nd[i] = d[i - 1];
      break;
    }
  }
  std::vector<int> full{-1};
  // delta_0 is implicit; integral() only needs delta_0..delta_{k-1}
  Element d0 = nc.element(nc.top_id());
  for (int i = 0; i < k_; ++i) d0 = nc.group().multiply(d0, nc.group().invert(nc.element(nd[k_ - 1 - i])));
  full[0] = nc.id_of(d0);
  if (full[0] < 0) throw std::logic_error("automorphism: image is not a delta sequence");
  for (int i = 0; i < k_; ++i) full.push_back(nd[i]);
  auto chain = nc.integral(full);
  int out = id_of(chain);
  if (out < 0) throw std::logic_error("automorphism: image multichain not found");
  return out;
}

KDivisible::TopologyStats KDivisible::topology_stats() const {
  TopologyStats st;
  std::vector<int> no_top;
  for (int i = 0; i < size(); ++i)
    if (i != top_) no_top.push_back(i);
  st.euler_no_top = poset_.restrict(no_top).reduced_euler_char();
  std::vector<int> keep;
  for (int i : no_top)
    if (rank_[i] > 0) keep.push_back(i);
  st.euler_no_top_no_mins = poset_.restrict(keep).reduced_euler_char();
  st.max_chain_count = poset_.count_maximal_chains();
  return st;
}

std::vector<int> iterate_flatten(const NCLattice& nc, const std::vector<std::vector<int>>& m) {
  const CoxeterGroup& G = nc.group();
  int l = static_cast<int>(m.size());     // columns (l-multichain)
  int k = static_cast<int>(m[0].size());  // rows (k-multichains)
  std::vector<int> out;
  out.reserve(static_cast<size_t>(k) * l);
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < l; ++j) {
      if (j == 0) {
        out.push_back(m[0][i]);
        continue;
      }
      // pi_{i+1}^1 (pi_{i+1}^j)^{-1} pi_i^j, with pi_{k+1}^* = c
      const Element& a = i + 1 < k ? nc.element(m[0][i + 1]) : nc.element(nc.top_id());
      const Element& b = i + 1 < k ? nc.element(m[j][i + 1]) : nc.element(nc.top_id());
      Element e = G.multiply(G.multiply(a, G.invert(b)), nc.element(m[j][i]));
      int id = nc.id_of(e);
      if (id < 0) throw std::logic_error("iterate_flatten: image left the lattice");
      out.push_back(id);
    }
  }
  return out;
}

std::vector<int> iterate_flatten_meet(const NCLattice& nc,
                                      const std::vector<std::vector<int>>& m) {
  int l = static_cast<int>(m.size());
  int k = static_cast<int>(m[0].size());
  std::vector<int> out;
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < l; ++j) {
      int upper = i + 1 < k ? m[0][i + 1] : nc.top_id();
      out.push_back(nc.meet(m[j][i], upper));
    }
  return out;
}

std::vector<std::vector<int>> iterate_unflatten(const NCLattice& nc, int k, int l,
                                                const std::vector<int>& mu) {
  const CoxeterGroup& G = nc.group();
  std::vector<std::vector<int>> m(l, std::vector<int>(k, -1));
  for (int j = 0; j < l; ++j) m[j][k - 1] = mu[static_cast<size_t>(k - 1) * l + j];
  for (int i = k - 2; i >= 0; --i) {
    m[0][i] = mu[static_cast<size_t>(i) * l];
    for (int j = 1; j < l; ++j) {
      // pi_i^j = pi_{i+1}^j (pi_{i+1}^1)^{-1} mu_{(i)l + j}
      Element e = G.multiply(G.multiply(nc.element(m[j][i + 1]), G.invert(nc.element(m[0][i + 1]))),
                             nc.element(mu[static_cast<size_t>(i) * l + j]));
      int id = nc.id_of(e);
      if (id < 0) throw std::logic_error("iterate_unflatten: image left the lattice");
      m[j][i] = id;
    }
  }
  return m;
}

bool iterated_leq(const KDivisible& kd, const std::vector<int>& a, const std::vector<int>& b) {
  // Columns are KDivisible ids forming l-multichains; embed each column into
  // NC(W^k) via Psi o partial with Psi = K^{-1} componentwise, then compare
  // delta sequences of the embedded l-multichains componentwise.
  const NCLattice& nc = kd.nc();
  int l = static_cast<int>(a.size());
  int k = kd.k();
  auto embed = [&](int id) {
    std::vector<int> e(k);
    for (int i = 0; i < k; ++i) e[i] = nc.complement_inv(kd.delta(id)[i]);
    return e;
  };
  std::vector<std::vector<int>> ea(l), eb(l);
  for (int j = 0; j < l; ++j) {
    ea[j] = embed(a[j]);
    eb[j] = embed(b[j]);
  }
  std::vector<int> top(k, nc.top_id());
  auto delta_cols = [&](const std::vector<std::vector<int>>& e, int j) {
    // componentwise (e_j)^{-1} e_{j+1} with e_{l+1} = (c,...,c)
    const std::vector<int>& cur = e[j];
    const std::vector<int>& nxt = j + 1 < l ? e[j + 1] : top;
    std::vector<int> d(k);
    for (int i = 0; i < k; ++i) d[i] = nc.kreweras(0, nxt[i], cur[i]);
    return d;
  };
  for (int j = 0; j < l; ++j) {
    auto da = delta_cols(ea, j), db = delta_cols(eb, j);
    for (int i = 0; i < k; ++i)
      if (!nc.leq(db[i], da[i])) return false;
  }
  return true;
}

std::vector<std::vector<int>> multichains_of(const FinitePoset& p, int l) {
  std::vector<std::vector<int>> ups(p.size());
  for (int x = 0; x < p.size(); ++x) ups[x] = p.upset(x);
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  std::function<void(int)> rec = [&](int depth) {
    if (depth == l) {
      out.push_back(cur);
      return;
    }
    if (depth == 0) {
      for (int x = 0; x < p.size(); ++x) {
        cur.push_back(x);
        rec(1);
        cur.pop_back();
      }
    } else {
      for (int nxt : ups[cur.back()]) {
        cur.push_back(nxt);
        rec(depth + 1);
        cur.pop_back();
      }
    }
  };
  rec(0);
  return out;
}

OrderIdealIso order_ideal_iso(const KDivisible& kd, int id) {
  const NCLattice& nc = kd.nc();
  const CoxeterGroup& G = nc.group();
  OrderIdealIso iso;
  iso.ideal_ids = kd.poset().downset(id);
  const auto& pi = kd.element(id);
  int k = kd.k();
  for (int mid : iso.ideal_ids) {
    const auto& mu = kd.element(mid);
    std::vector<int> img(k);
    img[0] = mu[0];
    for (int i = 1; i < k; ++i) {
      Element e = G.multiply(G.multiply(nc.element(mu[i]), G.invert(nc.element(pi[i]))),
                             nc.element(pi[0]));
      int eid = nc.id_of(e);
      if (eid < 0) throw std::logic_error("order_ideal_iso: image left the lattice");
      img[i] = eid;
    }
    iso.image.push_back(img);
  }
  // verify: the images are exactly the k-multichains of [1, pi_1] with the
  // NC^(k) order of the parabolic whose Coxeter element is pi_1
  auto par_delta = [&](const std::vector<int>& ch) {
    std::vector<int> d(k);
    for (int i = 0; i < k; ++i) {
      int nxt = i + 1 < k ? ch[i + 1] : pi[0];
      d[i] = nc.kreweras(0, nxt, ch[i]);
    }
    return d;
  };
  auto par_leq = [&](const std::vector<int>& a, const std::vector<int>& b) {
    auto da = par_delta(a), db = par_delta(b);
    for (int i = 0; i < k; ++i)
      if (!nc.leq(db[i], da[i])) return false;
    return true;
  };
  // enumerate the target poset
  std::vector<int> below = nc.poset().downset(pi[0]);
  std::vector<std::vector<int>> target;
  std::vector<int> cur;
  std::function<void(int)> rec = [&](int depth) {
    if (depth == k) {
      target.push_back(cur);
      return;
    }
    for (int x : below) {
      if (depth > 0 && !nc.leq(cur.back(), x)) continue;
      if (!nc.leq(x, pi[0])) continue;
      cur.push_back(x);
      rec(depth + 1);
      cur.pop_back();
    }
  };
  rec(0);
  std::sort(target.begin(), target.end());
  auto image_sorted = iso.image;
  std::sort(image_sorted.begin(), image_sorted.end());
  iso.verified = target == image_sorted &&
                 image_sorted.size() == iso.ideal_ids.size();
  if (iso.verified) {
    for (size_t a = 0; a < iso.ideal_ids.size() && iso.verified; ++a)
      for (size_t b = 0; b < iso.ideal_ids.size() && iso.verified; ++b) {
        bool big = kd.poset().leq(iso.ideal_ids[a], iso.ideal_ids[b]);
        bool small = par_leq(iso.image[a], iso.image[b]);
        if (big != small) iso.verified = false;
      }
  }
  return iso;
}

}  // namespace coxcat
