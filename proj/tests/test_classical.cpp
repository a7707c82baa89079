#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "coxcat/classical.hpp"
#include "coxcat/catalan.hpp"
#include "coxcat/noncrossing.hpp"

using namespace coxcat;

namespace {
SetPartition sp(std::vector<std::vector<int>> blocks) { return SetPartition(std::move(blocks)); }

// brute-force Kreweras oracle: the coarsest Q with <P, Q> noncrossing
SetPartition kreweras_oracle(const SetPartition& p) {
  auto g = p.ground();
  int n = static_cast<int>(g.size());
  auto all = enumerate_noncrossing(range_1_to(n));
  // interleave on 1,1',2,2',... realized as odd/even positions
  const SetPartition podd = translate(dilate(p, 2), -1 + 2 * 0);  // wrong shift fixed below
  SetPartition best;
  int best_blocks = n + 1;
  for (const auto& q : all) {
    SetPartition inter = shuffle({p, q});
    if (!is_noncrossing(inter)) continue;
    if (q.num_blocks() < best_blocks) {
      best_blocks = q.num_blocks();
      best = q;
    }
  }
  return best;
}
}  // namespace

TEST_CASE("crossing and nesting predicates") {
  CHECK(is_noncrossing(sp({{1, 2, 4}, {3}, {5, 6}})));
  CHECK(!is_noncrossing(sp({{1, 2, 4}, {3, 5}, {6}})));
  CHECK(is_nonnesting(sp({{1, 4}, {2, 5, 6}, {3}})));
  CHECK(!is_nonnesting(sp({{1, 4}, {2, 3}})));
  CHECK(is_nonnesting(sp({{1, 2}, {3, 4}})));
  CHECK(!is_noncrossing(sp({{1, 3}, {2, 4}})));
}

TEST_CASE("orbit partition and trace map") {
  // (124)(376)(58) has the crossing orbit partition {{1,2,4},{3,7,6},{5,8}}
  std::vector<int> img{2, 4, 7, 1, 8, 3, 6, 5};
  SetPartition p = orbits_of(img);
  CHECK(p == sp({{1, 2, 4}, {3, 6, 7}, {5, 8}}));
  CHECK(!is_noncrossing(p));
  // identity and full cycle
  CHECK(orbits_of({1, 2, 3}) == SetPartition::singletons(range_1_to(3)));
  CHECK(orbits_of({2, 3, 4, 1}) == SetPartition::whole(range_1_to(4)));
  // trace map round-trips over NC(6)
  for (const auto& q : enumerate_noncrossing(range_1_to(6))) {
    CHECK(orbits_of(trace_permutation(q)) == q);
  }
}

TEST_CASE("classical Kreweras complement") {
  // the worked 8-element example
  CHECK(kreweras(sp({{1, 5, 6}, {2, 3}, {4}, {7}, {8}})) == sp({{1, 3, 4}, {2}, {5}, {6, 7, 8}}));
  CHECK(kreweras(SetPartition::singletons(range_1_to(5))) == SetPartition::whole(range_1_to(5)));
  // block-count law and oracle agreement on NC(n), n <= 6
  for (int n = 1; n <= 6; ++n) {
    for (const auto& p : enumerate_noncrossing(range_1_to(n))) {
      SetPartition k = kreweras(p);
      CHECK(k.num_blocks() == n - p.num_blocks() + 1);
      CHECK(kreweras_oracle(p) == k);
      CHECK(kreweras_inv(k) == p);
      // K o K is the downward rotation
      SetPartition rot = kreweras(k);
      SetPartition expected = p;
      // rotate down = inverse of rotate_up
      CHECK(rotate_up(rot) == p);
    }
  }
  // K . K(P) multiplies to the full cycle through the trace map
  for (const auto& p : enumerate_noncrossing(range_1_to(6))) {
    auto a = trace_permutation(p);
    auto b = trace_permutation(kreweras(p));
    std::vector<int> prod(6);
    for (int i = 0; i < 6; ++i) prod[i] = a[b[i] - 1];
    CHECK(orbits_of(prod) == SetPartition::whole(range_1_to(6)));
  }
}

TEST_CASE("group Kreweras agrees with the pictorial one") {
  CoxeterGroup G = CoxeterGroup::build("A3");
  NCLattice nc = NCLattice::build(G, [&] {
    // use the standard Coxeter element, whose point action is the 4-cycle
    auto data = G.coxeter_element_standard();
    return data;
  }());
  auto c_img = G.point_permutation(nc.cox().c);
  CHECK(orbits_of(c_img) == SetPartition::whole(range_1_to(4)));
  for (int pi = 0; pi < nc.size(); ++pi) {
    SetPartition p = orbits_of(G.point_permutation(nc.element(pi)));
    SetPartition kg = orbits_of(G.point_permutation(nc.element(nc.complement(pi))));
    CHECK(kreweras(p) == kg);
  }
}

TEST_CASE("relative Kreweras block-count law") {
  for (const auto& n : enumerate_noncrossing(range_1_to(6))) {
    for (const auto& p : enumerate_noncrossing(range_1_to(6))) {
      if (!refines(p, n)) continue;
      SetPartition k = kreweras_relative(p, n);
      CHECK(k.num_blocks() == 6 - p.num_blocks() + n.num_blocks());
      CHECK(refines(k, n));
    }
  }
}

TEST_CASE("shuffle partitions") {
  CHECK(shuffle({sp({{1}, {2, 3, 4}}), sp({{1, 2}, {3, 4}})}) ==
        sp({{1}, {2, 4}, {3, 5, 7}, {6, 8}}));
  SetPartition q = sp({{1, 3}, {2}});
  CHECK(shuffle({q}) == q);
  CHECK(shuffle({SetPartition::singletons(range_1_to(2)),
                 SetPartition::singletons(range_1_to(2)),
                 SetPartition::singletons(range_1_to(2))}) ==
        SetPartition::singletons(range_1_to(6)));
  // shuffles are noncrossing exactly for delta sequences (n = 3, k = 2)
  auto all = enumerate_noncrossing(range_1_to(3));
  for (const auto& q1 : all)
    for (const auto& q2 : all)
      CHECK(is_noncrossing(shuffle({q1, q2})) == is_delta_sequence({q1, q2}));
}

TEST_CASE("nabla bijection and the main isomorphism") {
  // the worked example: (1, (12)(34), (1234)) -> {{1,5,12},{2,3,4},{6,7,11},{8,9,10}}
  SetPartition p1 = SetPartition::singletons(range_1_to(4));
  SetPartition p2 = sp({{1, 2}, {3, 4}});
  SetPartition p3 = SetPartition::whole(range_1_to(4));
  CHECK(nabla({p1, p2, p3}) == sp({{1, 5, 12}, {2, 3, 4}, {6, 7, 11}, {8, 9, 10}}));
  // the constant chains
  CHECK(nabla({p3, p3, p3}) == SetPartition::whole(range_1_to(12)));
  SetPartition bottom = nabla({p1, p1, p1});
  for (const auto& b : bottom.blocks) CHECK(b.size() == 3);

  // bijection multichains of NC(n) -> k-divisible partitions of [kn],
  // preserving block count and k-type, for a grid with kn <= 12
  for (auto [n, k] : std::initializer_list<std::pair<int, int>>{{3, 2}, {4, 2}, {3, 3}, {6, 2}, {4, 3}, {2, 5}}) {
    CAPTURE(n);
    CAPTURE(k);
    auto ncn = enumerate_noncrossing(range_1_to(n));
    auto kdiv = enumerate_kdivisible(n, k, false);
    std::set<SetPartition> image;
    // enumerate k-multichains
    std::vector<int> idx(k, 0);
    std::function<void(int, std::vector<SetPartition>&)> rec = [&](int depth,
                                                                   std::vector<SetPartition>& cur) {
      if (depth == k) {
        SetPartition img = nabla(cur);
        // k-divisible, block count = |P_1|, k-type = type of P_1
        for (const auto& b : img.blocks) CHECK(b.size() % k == 0);
        CHECK(img.num_blocks() == cur[0].num_blocks());
        std::vector<int> ktype;
        for (const auto& b : img.blocks) ktype.push_back(static_cast<int>(b.size()) / k);
        std::sort(ktype.rbegin(), ktype.rend());
        CHECK(ktype == cur[0].shape());
        image.insert(img);
        return;
      }
      for (const auto& q : ncn) {
        if (depth && !refines(cur.back(), q)) continue;
        cur.push_back(q);
        rec(depth + 1, cur);
        cur.pop_back();
      }
    };
    std::vector<SetPartition> cur;
    rec(0, cur);
    CHECK(image.size() == kdiv.elements.size());
  }
}

TEST_CASE("main isomorphism is order preserving (A2, k = 2)") {
  CoxeterGroup G = CoxeterGroup::build("A2");
  auto cox = G.coxeter_element_standard();
  NCLattice nc = NCLattice::build(G, cox);
  auto kd = KDivisible::build(nc, 2);
  auto cls = enumerate_kdivisible(3, 2, false);
  REQUIRE(kd.size() == static_cast<int>(cls.elements.size()));
  // map each algebraic multichain through nabla on its point partitions
  auto to_classical = [&](int id) {
    std::vector<SetPartition> chain;
    for (int x : kd.element(id)) chain.push_back(orbits_of(G.point_permutation(nc.element(x))));
    return nabla(chain);
  };
  std::map<SetPartition, int> cls_index;
  for (size_t i = 0; i < cls.elements.size(); ++i) cls_index[cls.elements[i]] = static_cast<int>(i);
  for (int a = 0; a < kd.size(); ++a)
    for (int b = 0; b < kd.size(); ++b) {
      bool alg = kd.poset().leq(a, b);
      bool classical = cls.poset.leq(cls_index.at(to_classical(a)), cls_index.at(to_classical(b)));
      CHECK(alg == classical);
    }
}

TEST_CASE("k-divisible and type B counts") {
  CHECK(enumerate_kdivisible(3, 2, false).elements.size() == 12);
  CHECK(enumerate_kdivisible(3, 1, false).elements.size() == 5);
  CHECK(enumerate_kdivisible(2, 2, true).elements.size() == 15);  // Cat^(2)(B2)
  CHECK(enumerate_kdivisible(3, 1, true).elements.size() == 20);  // Cat(B3)
}

TEST_CASE("type B main isomorphism (B2, k = 2)") {
  CoxeterGroup G = CoxeterGroup::build("B2");
  // Coxeter element acting as the signed 4-cycle (1, 2, -1, -2)
  auto cox = G.coxeter_element_standard();
  NCLattice nc = NCLattice::build(G, cox);
  auto kd = KDivisible::build(nc, 2);
  auto cls = enumerate_kdivisible(2, 2, true);
  REQUIRE(kd.size() == static_cast<int>(cls.elements.size()));
  // signed permutation -> partition of [2n] via i -> i, -i -> n+i, on [kn] scale
  // go through A_{2kn-1}: embed the multichain into partitions of [2n]=4 and nabla to [8]
  int n = 2;
  auto signed_to_partition = [&](const Element& w) {
    auto img = G.point_permutation(w);  // images of 1..n as signed points
    // build images of 1..2n under the A_{2n-1} embedding
    std::vector<int> big(2 * n);
    for (int i = 1; i <= n; ++i) {
      int v = img[i - 1];
      big[i - 1] = v > 0 ? v : n - v;
      // image of -i = -(image of i)
      int neg = v > 0 ? n + v : -v;
      big[n + i - 1] = neg;
    }
    return orbits_of(big);
  };
  std::map<SetPartition, int> cls_index;
  for (size_t i = 0; i < cls.elements.size(); ++i) cls_index[cls.elements[i]] = static_cast<int>(i);
  auto to_classical = [&](int id) {
    std::vector<SetPartition> chain;
    for (int x : kd.element(id)) chain.push_back(signed_to_partition(nc.element(x)));
    return nabla(chain);
  };
  std::set<int> hit;
  for (int a = 0; a < kd.size(); ++a) {
    SetPartition img = to_classical(a);
    CHECK(is_centrally_symmetric(img));
    auto it = cls_index.find(img);
    REQUIRE(it != cls_index.end());
    hit.insert(it->second);
  }
  CHECK(hit.size() == cls.elements.size());
  for (int a = 0; a < kd.size(); ++a)
    for (int b = 0; b < kd.size(); ++b)
      CHECK(kd.poset().leq(a, b) ==
            cls.poset.leq(cls_index.at(to_classical(a)), cls_index.at(to_classical(b))));
}

TEST_CASE("rank jump and type counting formulas") {
  // type A: exhaustive multichain counts match Edelman's formula (kn <= 8, l <= 2)
  for (auto [n, k] : std::initializer_list<std::pair<int, int>>{{3, 2}, {4, 2}, {2, 4}, {4, 1}}) {
    auto kdiv = enumerate_kdivisible(n, k, false);
    for (int l = 1; l <= 2; ++l) {
      CAPTURE(n);
      CAPTURE(k);
      CAPTURE(l);
      std::map<std::vector<int>, BigInt> observed;
      for (const auto& mc : multichains_of(kdiv.poset, l)) {
        std::vector<int> jumps;
        int prev = 0;
        for (int id : mc) {
          jumps.push_back(kdiv.rank(id) - prev);
          prev = kdiv.rank(id);
        }
        jumps.push_back(n - 1 - prev);
        observed[jumps] += BigInt(1);
      }
      for (const auto& [jumps, count] : observed)
        CHECK(count == count_rank_jump(n, k, jumps, false));
    }
  }
  // spec examples
  CHECK(count_rank_jump(3, 2, {1, 1}, false) == BigInt(6));
  CHECK(count_rank_jump(4, 1, {3, 0}, false) == BigInt(1));
  CHECK(count_rank_jump(2, 2, {2, 0}, true) == BigInt(1));
  // type B: kn <= 6
  for (auto [n, k] : std::initializer_list<std::pair<int, int>>{{2, 2}, {3, 1}, {2, 3}, {3, 2}}) {
    auto kdiv = enumerate_kdivisible(n, k, true);
    std::map<std::vector<int>, BigInt> observed;
    for (const auto& mc : multichains_of(kdiv.poset, 1)) {
      int r = kdiv.rank(mc[0]);
      observed[{r, n - r}] += BigInt(1);
    }
    for (const auto& [jumps, count] : observed) CHECK(count == count_rank_jump(n, k, jumps, true));
  }
  // type counts
  CHECK(count_by_type({2, 1, 1}, 4, 1, 1, false) == BigInt(6));
  CHECK(count_by_type({1, 1, 1}, 3, 2, 2, false) == BigInt(22));
  CHECK(count_by_type({1, 1}, 2, 2, 2, true) == BigInt(28));
  // exhaustive type checks, type A (n=3, k=2, l=2) and type B (n=2, k=2, l=2)
  {
    auto kdiv = enumerate_kdivisible(3, 2, false);
    std::map<std::vector<int>, BigInt> observed;
    for (const auto& mc : multichains_of(kdiv.poset, 2)) {
      std::vector<int> ktype;
      for (const auto& b : kdiv.elements[mc[0]].blocks)
        ktype.push_back(static_cast<int>(b.size()) / 2);
      std::sort(ktype.rbegin(), ktype.rend());
      observed[ktype] += BigInt(1);
    }
    for (const auto& [lam, count] : observed) CHECK(count == count_by_type(lam, 3, 2, 2, false));
  }
  {
    auto kdiv = enumerate_kdivisible(2, 2, true);
    std::map<std::vector<int>, BigInt> observed;
    for (const auto& mc : multichains_of(kdiv.poset, 2))
      observed[type_b_shape(kdiv.elements[mc[0]], 2)] += BigInt(1);
    for (const auto& [lam, count] : observed) {
      if (lam.empty()) continue;  // partitions with only a zero block
      CHECK(count == count_by_type(lam, 2, 2, 2, true));
    }
  }
}

TEST_CASE("mystery poset") {
  auto mp = mystery_poset(3, 2);
  CHECK(mp.elements.size() == 4);
  auto checks = mp.zeta_check(3);
  for (auto& [obs, pred] : checks) CHECK(obs == pred);  // conjectured, observed to hold
  CHECK(mystery_poset(3, 1).elements.size() == 0);  // k, n both odd: empty
  auto mp52 = mystery_poset(5, 2);
  auto checks2 = mp52.zeta_check(2);
  for (auto& [obs, pred] : checks2) CHECK(obs == pred);
}

TEST_CASE("dominance order along the refinement order") {
  auto dominates = [](const std::vector<int>& a, const std::vector<int>& b) {
    // does b dominate a?
    int pa = 0, pb = 0;
    size_t len = std::max(a.size(), b.size());
    for (size_t i = 0; i < len; ++i) {
      pa += i < a.size() ? a[i] : 0;
      pb += i < b.size() ? b[i] : 0;
      if (pa > pb) return false;
    }
    return true;
  };
  auto kdiv = enumerate_kdivisible(4, 2, false);
  for (int a = 0; a < static_cast<int>(kdiv.elements.size()); ++a)
    for (int b = 0; b < static_cast<int>(kdiv.elements.size()); ++b) {
      if (!kdiv.poset.leq(a, b)) continue;
      std::vector<int> ta, tb;
      for (const auto& blk : kdiv.elements[a].blocks) ta.push_back(static_cast<int>(blk.size()) / 2);
      for (const auto& blk : kdiv.elements[b].blocks) tb.push_back(static_cast<int>(blk.size()) / 2);
      std::sort(ta.rbegin(), ta.rend());
      std::sort(tb.rbegin(), tb.rend());
      CHECK(dominates(ta, tb));
    }
}

TEST_CASE("Kreweras maps k-divisible onto k-shuffle partitions") {
  for (auto [n, k] : std::initializer_list<std::pair<int, int>>{{3, 2}, {2, 3}, {4, 2}}) {
    auto kdiv = enumerate_noncrossing(range_1_to(k * n), k);
    std::set<SetPartition> images;
    for (const auto& p : kdiv) {
      SetPartition q = kreweras(p);
      // all blocks of K(P) stay inside one residue class mod k
      for (const auto& b : q.blocks)
        for (int x : b) CHECK((x - b[0]) % k == 0);
      images.insert(q);
    }
    CHECK(images.size() == kdiv.size());
    // and the images are exactly the shuffles of delta sequences
    auto ncn = enumerate_noncrossing(range_1_to(n));
    long long deltas = 0;
    std::function<void(int, std::vector<SetPartition>&)> rec = [&](int depth,
                                                                   std::vector<SetPartition>& cur) {
      if (depth == k) {
        if (is_delta_sequence(cur)) {
          ++deltas;
          CHECK(images.count(shuffle(cur)));
        }
        return;
      }
      for (const auto& q : ncn) {
        cur.push_back(q);
        rec(depth + 1, cur);
        cur.pop_back();
      }
    };
    std::vector<SetPartition> cur;
    rec(0, cur);
    CHECK(deltas == static_cast<long long>(kdiv.size()));
  }
}

TEST_CASE("nabla sends multichains of k-divisibles to kl-divisibles") {
  auto kdiv = enumerate_kdivisible(3, 2, false);  // NC^(2)(3), partitions of [6]
  int pairs = 0;
  for (size_t a = 0; a < kdiv.elements.size(); ++a)
    for (size_t b = 0; b < kdiv.elements.size(); ++b) {
      if (!kdiv.poset.leq(static_cast<int>(a), static_cast<int>(b))) continue;
      SetPartition img = nabla({kdiv.elements[a], kdiv.elements[b]});
      CHECK(img.size() == 12);
      for (const auto& blk : img.blocks) CHECK(blk.size() % 4 == 0);
      ++pairs;
    }
  CHECK(pairs > 12);
}

TEST_CASE("classical zeta values at l = 3") {
  // type A: (1/n) binom((kl+1) n, n-1)
  auto kdiv = enumerate_kdivisible(3, 2, false);
  CHECK(kdiv.poset.zeta_at(3) == BigInt::binomial(21, 2) / BigInt(3));  // 70
  // type B: binom((kl+1) n, n)
  auto bdiv = enumerate_kdivisible(2, 2, true);
  CHECK(bdiv.poset.zeta_at(3) == BigInt::binomial(14, 2));  // 91
}

TEST_CASE("type D rank vectors match the closed form") {
  for (const char* label : {"D3", "D4"}) {
    CoxeterGroup G = CoxeterGroup::build(label);
    NCLattice nc = NCLattice::build_bipartite(G);
    for (int k = 1; k <= 2; ++k) {
      auto kd = KDivisible::build(nc, k);
      auto rv = kd.rank_vector();
      CAPTURE(label);
      CAPTURE(k);
      for (int i = 0; i <= G.rank(); ++i) CHECK(rv[i] == fuss_narayana(G, k, i));
    }
  }
  // D3 = A3: the two closed forms agree
  CoxeterGroup D3 = CoxeterGroup::build("D3");
  CoxeterGroup A3 = CoxeterGroup::build("A3");
  for (int k = 1; k <= 3; ++k)
    for (int i = 0; i <= 3; ++i) CHECK(fuss_narayana(D3, k, i) == fuss_narayana(A3, k, i));
}
