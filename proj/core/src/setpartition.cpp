#include "coxcat/setpartition.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>

namespace coxcat {

SetPartition SetPartition::singletons(const std::vector<int>& ground) {
  SetPartition p;
  for (int x : ground) p.blocks.push_back({x});
  p.canonicalize();
  return p;
}

SetPartition SetPartition::whole(const std::vector<int>& ground) {
  SetPartition p;
  if (!ground.empty()) p.blocks.push_back(ground);
  p.canonicalize();
  return p;
}

void SetPartition::canonicalize() {
  for (auto& b : blocks) std::sort(b.begin(), b.end());
  blocks.erase(std::remove_if(blocks.begin(), blocks.end(),
                              [](const std::vector<int>& b) { return b.empty(); }),
               blocks.end());
  std::sort(blocks.begin(), blocks.end(),
            [](const std::vector<int>& a, const std::vector<int>& b) { return a[0] < b[0]; });
}

std::vector<int> SetPartition::ground() const {
  std::vector<int> g;
  for (const auto& b : blocks) g.insert(g.end(), b.begin(), b.end());
  std::sort(g.begin(), g.end());
  return g;
}

int SetPartition::size() const {
  int s = 0;
  for (const auto& b : blocks) s += static_cast<int>(b.size());
  return s;
}

int SetPartition::block_index_of(int x) const {
  for (size_t i = 0; i < blocks.size(); ++i)
    if (std::binary_search(blocks[i].begin(), blocks[i].end(), x)) return static_cast<int>(i);
  return -1;
}

std::vector<int> SetPartition::shape() const {
  std::vector<int> s;
  for (const auto& b : blocks) s.push_back(static_cast<int>(b.size()));
  std::sort(s.rbegin(), s.rend());
  return s;
}

bool is_noncrossing(const SetPartition& p) {
  // two blocks cross iff their merged sequence alternates at least 3 times
  for (size_t i = 0; i < p.blocks.size(); ++i)
    for (size_t j = i + 1; j < p.blocks.size(); ++j) {
      const auto& A = p.blocks[i];
      const auto& B = p.blocks[j];
      size_t a = 0, b = 0;
      int switches = -1, last = -1;
      while (a < A.size() || b < B.size()) {
        int tag;
        if (b == B.size() || (a < A.size() && A[a] < B[b])) { tag = 0; ++a; }
        else { tag = 1; ++b; }
        if (tag != last) { ++switches; last = tag; }
      }
      if (switches >= 3) return false;
    }
  return true;
}

bool is_nonnesting(const SetPartition& p) {
  // bumps are consecutive pairs within a block; nesting means one bump
  // strictly inside another
  std::vector<std::pair<int, int>> bumps;
  for (const auto& b : p.blocks)
    for (size_t i = 0; i + 1 < b.size(); ++i) bumps.push_back({b[i], b[i + 1]});
  for (size_t i = 0; i < bumps.size(); ++i)
    for (size_t j = 0; j < bumps.size(); ++j)
      if (i != j && bumps[i].first < bumps[j].first && bumps[j].second < bumps[i].second)
        return false;
  return true;
}

bool refines(const SetPartition& a, const SetPartition& b) {
  for (const auto& blk : a.blocks) {
    int bi = b.block_index_of(blk[0]);
    if (bi < 0) return false;
    for (int x : blk)
      if (!std::binary_search(b.blocks[bi].begin(), b.blocks[bi].end(), x)) return false;
  }
  return true;
}

SetPartition meet(const SetPartition& a, const SetPartition& b) {
  std::map<std::pair<int, int>, std::vector<int>> cells;
  for (int x : a.ground()) cells[{a.block_index_of(x), b.block_index_of(x)}].push_back(x);
  SetPartition p;
  for (auto& [k, v] : cells) p.blocks.push_back(std::move(v));
  p.canonicalize();
  return p;
}

namespace {
// union-find merge of overlapping groups
SetPartition merge_blocks(const std::vector<std::vector<int>>& groups) {
  std::map<int, int> parent;
  std::function<int(int)> find = [&](int x) {
    if (parent.find(x) == parent.end()) parent[x] = x;
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  };
  for (const auto& g : groups)
    for (size_t i = 1; i < g.size(); ++i) {
      int a = find(g[0]), b = find(g[i]);
      if (a != b) parent[a] = b;
    }
  std::map<int, std::vector<int>> cls;
  for (auto& [x, pp] : parent) cls[find(x)].push_back(x);
  SetPartition p;
  for (auto& [r, v] : cls) p.blocks.push_back(std::move(v));
  p.canonicalize();
  return p;
}
}  // namespace

SetPartition join_nc(const SetPartition& a, const SetPartition& b) {
  std::vector<std::vector<int>> groups = a.blocks;
  groups.insert(groups.end(), b.blocks.begin(), b.blocks.end());
  SetPartition p = merge_blocks(groups);
  // force the noncrossing property by merging crossing pairs
  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t i = 0; i < p.blocks.size() && !changed; ++i)
      for (size_t j = i + 1; j < p.blocks.size() && !changed; ++j) {
        SetPartition two{{p.blocks[i], p.blocks[j]}};
        if (!is_noncrossing(two)) {
          p.blocks[i].insert(p.blocks[i].end(), p.blocks[j].begin(), p.blocks[j].end());
          p.blocks.erase(p.blocks.begin() + j);
          p.canonicalize();
          changed = true;
        }
      }
  }
  return p;
}

SetPartition restrict_to(const SetPartition& p, const std::vector<int>& subset) {
  SetPartition r;
  for (const auto& b : p.blocks) {
    std::vector<int> nb;
    for (int x : b)
      if (std::binary_search(subset.begin(), subset.end(), x)) nb.push_back(x);
    if (!nb.empty()) r.blocks.push_back(nb);
  }
  r.canonicalize();
  return r;
}

SetPartition translate(const SetPartition& p, int shift) {
  SetPartition r = p;
  for (auto& b : r.blocks)
    for (int& x : b) x += shift;
  r.canonicalize();
  return r;
}

SetPartition dilate(const SetPartition& p, int factor) {
  SetPartition r = p;
  for (auto& b : r.blocks)
    for (int& x : b) x *= factor;
  r.canonicalize();
  return r;
}

SetPartition kreweras(const SetPartition& p) {
  if (!is_noncrossing(p)) throw std::invalid_argument("kreweras: partition is crossing");
  std::vector<int> g = p.ground();
  int m = static_cast<int>(g.size());
  if (m == 0) return p;
  // relabel to [m], complement by the face rule, relabel back
  std::map<int, int> to_idx;
  for (int i = 0; i < m; ++i) to_idx[g[i]] = i + 1;
  // arcs between consecutive elements of each block
  std::vector<std::pair<int, int>> arcs;
  for (const auto& b : p.blocks)
    for (size_t i = 0; i + 1 < b.size(); ++i) arcs.push_back({to_idx[b[i]], to_idx[b[i + 1]]});
  // gap after position q (q = 1..m) lies in the face of the innermost arc
  // (a, b) with a <= q < b; gaps with the same innermost arc form a block
  std::map<std::pair<int, int>, std::vector<int>> faces;
  for (int q = 1; q <= m; ++q) {
    std::pair<int, int> inner{0, m + 1};
    for (auto [a, b] : arcs)
      if (a <= q && q < b && b - a < inner.second - inner.first) inner = {a, b};
    faces[inner].push_back(g[q - 1]);
  }
  SetPartition out;
  for (auto& [arc, v] : faces) out.blocks.push_back(std::move(v));
  out.canonicalize();
  return out;
}

SetPartition rotate_up(const SetPartition& p) {
  std::vector<int> g = p.ground();
  if (g.empty()) return p;
  std::map<int, int> next;
  for (size_t i = 0; i + 1 < g.size(); ++i) next[g[i]] = g[i + 1];
  next[g.back()] = g.front();
  SetPartition r = p;
  for (auto& b : r.blocks)
    for (int& x : b) x = next[x];
  r.canonicalize();
  return r;
}

SetPartition kreweras_inv(const SetPartition& p) {
  // K^2 is the downward rotation, so K^{-1} = rotate_up o K
  return rotate_up(kreweras(p));
}

SetPartition kreweras_relative(const SetPartition& p, const SetPartition& n) {
  if (!refines(p, n)) throw std::invalid_argument("kreweras_relative: requires P <= N");
  SetPartition out;
  for (const auto& nb : n.blocks) {
    SetPartition part = kreweras(restrict_to(p, nb));
    for (auto& b : part.blocks) out.blocks.push_back(std::move(b));
  }
  out.canonicalize();
  return out;
}

SetPartition kreweras_relative(const SetPartition& p, const SetPartition& m,
                               const SetPartition& n) {
  return join_nc(m, kreweras_relative(p, n));
}

std::vector<SetPartition> enumerate_noncrossing(const std::vector<int>& ground, int k,
                                                size_t cap) {
  // recursive: the block of the first element splits the rest into
  // independent segments
  std::vector<SetPartition> out;
  std::function<std::vector<SetPartition>(const std::vector<int>&)> gen =
      [&](const std::vector<int>& X) -> std::vector<SetPartition> {
    std::vector<SetPartition> res;
    if (X.empty()) {
      res.push_back(SetPartition{});
      return res;
    }
    // choose the block B of X[0] as an increasing subsequence starting at
    // X[0]; elements strictly between consecutive B-members form segments
    std::vector<int> block{X[0]};
    std::function<void(size_t)> choose = [&](size_t from) {
      if (static_cast<int>(block.size()) % k == 0) {
        // partition the segments independently
        std::vector<std::vector<int>> segs;
        size_t bi = 1;
        std::vector<int> seg;
        for (size_t i = 1; i < X.size(); ++i) {
          if (bi < block.size() && X[i] == block[bi]) {
            segs.push_back(seg);
            seg.clear();
            ++bi;
          } else {
            seg.push_back(X[i]);
          }
        }
        segs.push_back(seg);
        std::vector<std::vector<SetPartition>> parts;
        for (auto& s : segs) parts.push_back(gen(s));
        std::vector<SetPartition> acc{SetPartition{}};
        for (auto& choicelist : parts) {
          std::vector<SetPartition> nxt;
          for (const auto& base : acc)
            for (const auto& choice : choicelist) {
              SetPartition merged = base;
              for (const auto& b : choice.blocks) merged.blocks.push_back(b);
              nxt.push_back(std::move(merged));
            }
          acc = std::move(nxt);
        }
        for (auto& tail : acc) {
          tail.blocks.push_back(block);
          tail.canonicalize();
          res.push_back(std::move(tail));
        }
      }
      for (size_t i = from; i < X.size(); ++i) {
        block.push_back(X[i]);
        choose(i + 1);
        block.pop_back();
      }
    };
    choose(1);
    return res;
  };
  out = gen(ground);
  if (out.size() > cap) throw std::runtime_error("enumerate_noncrossing: cap exceeded");
  return out;
}

}  // namespace coxcat
