#pragma once

// Extended Shi arrangement geometry over exact rationals: positive chamber
// enumeration by Fourier-Motzkin feasibility, wall detection, floors and
// ceilings with colors, and the nonnesting type statistic.

#include "coxcat/rootposet.hpp"

namespace coxcat {

// one linear constraint sum_i a[i] y_i  (<|<=)  b
struct LinCon {
  std::vector<Rational> a;
  Rational b;
  bool strict = true;
};
// feasibility of a conjunction over R^nvars, exact arithmetic
bool fm_feasible(std::vector<LinCon> cons, int nvars);

struct ShiChamber {
  std::vector<int> level;                         // m(alpha) in 0..k per positive root
  std::vector<std::pair<int, int>> walls;         // (root, level j), 0 <= j <= k
  std::vector<std::vector<int>> floors;           // floors[j] = roots with wall H^j below, j = 0..k
  std::vector<std::vector<int>> ceilings;         // ceilings[j], j = 0..k (level-0 entry empty)
  bool bounded = false;
};

struct ShiArrangement {
  const RootPoset* rp = nullptr;
  int k = 1;
  std::vector<ShiChamber> chambers;

  int count_bounded() const;
  // distribution of |FL_i| over chambers, j = 0..n
  std::vector<long long> floor_vector(int color) const;
  std::vector<long long> ceiling_vector(int color) const;
};

ShiArrangement shi_chambers(const RootPoset& rp, int k);

// chambers of the whole arrangement (not just the positive cone), counted
// by exact feasibility over all slab assignments; practical for rank <= 2
struct ChamberCount {
  long long total = 0;
  long long bounded = 0;
};
ChamberCount shi_all_chambers(const RootPoset& rp, int k);

// multiset of parabolic-type labels of the k-colored floors over all chambers
std::vector<std::vector<std::string>> nn_type_statistic(const ShiArrangement& shi);

}  // namespace coxcat
