#include "coxcat/shi.hpp"

#include <algorithm>
#include <stdexcept>

namespace coxcat {

bool fm_feasible(std::vector<LinCon> cons, int nvars) {
  for (int v = nvars - 1; v >= 0; --v) {
    std::vector<LinCon> lower, upper, rest;
    for (auto& c : cons) {
      int s = c.a[v].sign();
      if (s == 0) rest.push_back(std::move(c));
      else if (s > 0) upper.push_back(std::move(c));  // y_v < (b - ...) / a
      else lower.push_back(std::move(c));
    }
    for (const auto& lo : lower)
      for (const auto& up : upper) {
        // combine: eliminate y_v between a_lo . y (<) b_lo and a_up . y (<) b_up
        LinCon c;
        c.a.assign(nvars, Rational(0));
        Rational flo = -lo.a[v], fup = up.a[v];  // both positive
        for (int i = 0; i < nvars; ++i) c.a[i] = lo.a[i] * fup + up.a[i] * flo;
        c.b = lo.b * fup + up.b * flo;
        c.strict = lo.strict || up.strict;
        rest.push_back(std::move(c));
      }
    cons = std::move(rest);
  }
  for (const auto& c : cons) {
    int s = c.b.sign();
    if (s < 0) return false;
    if (s == 0 && c.strict) return false;
  }
  return true;
}

namespace {

// constraints of a chamber candidate given by its level vector
std::vector<LinCon> chamber_constraints(const RootPoset& rp, int k,
                                        const std::vector<int>& level) {
  int n = rp.group().rank();
  std::vector<LinCon> cons;
  for (int r = 0; r < rp.size(); ++r) {
    // lower: (x, alpha) > m  <=>  -(x, alpha) < -m
    LinCon lo;
    lo.a.assign(n, Rational(0));
    for (int i = 0; i < n; ++i) lo.a[i] = Rational(-rp.coord(r, i));
    lo.b = Rational(-level[r]);
    lo.strict = true;
    cons.push_back(std::move(lo));
    if (level[r] < k) {
      LinCon up;
      up.a.assign(n, Rational(0));
      for (int i = 0; i < n; ++i) up.a[i] = Rational(rp.coord(r, i));
      up.b = Rational(level[r] + 1);
      up.strict = true;
      cons.push_back(std::move(up));
    }
  }
  return cons;
}

// does the hyperplane (x, alpha_r) = j support a facet of the chamber?
bool is_wall(const RootPoset& rp, int k, const std::vector<int>& level, int r, int j) {
  int n = rp.group().rank();
  std::vector<LinCon> cons;
  for (int r2 = 0; r2 < rp.size(); ++r2) {
    if (r2 == r) continue;
    LinCon lo;
    lo.a.assign(n, Rational(0));
    for (int i = 0; i < n; ++i) lo.a[i] = Rational(-rp.coord(r2, i));
    lo.b = Rational(-level[r2]);
    lo.strict = true;
    cons.push_back(std::move(lo));
    if (level[r2] < k) {
      LinCon up;
      up.a.assign(n, Rational(0));
      for (int i = 0; i < n; ++i) up.a[i] = Rational(rp.coord(r2, i));
      up.b = Rational(level[r2] + 1);
      up.strict = true;
      cons.push_back(std::move(up));
    }
  }
  // the candidate wall as an equality, the other side of r's slab strict
  LinCon eq1, eq2;
  eq1.a.assign(n, Rational(0));
  eq2.a.assign(n, Rational(0));
  for (int i = 0; i < n; ++i) {
    eq1.a[i] = Rational(rp.coord(r, i));
    eq2.a[i] = Rational(-rp.coord(r, i));
  }
  eq1.b = Rational(j);
  eq1.strict = false;
  eq2.b = Rational(-j);
  eq2.strict = false;
  cons.push_back(std::move(eq1));
  cons.push_back(std::move(eq2));
  // stay inside the slab of r on the side away from the tested hyperplane
  if (j == level[r] && level[r] < k) {
    LinCon up;
    up.a.assign(n, Rational(0));
    for (int i = 0; i < n; ++i) up.a[i] = Rational(rp.coord(r, i));
    up.b = Rational(level[r] + 1);
    up.strict = true;
    cons.push_back(std::move(up));
  } else if (j == level[r] + 1) {
    LinCon lo;
    lo.a.assign(n, Rational(0));
    for (int i = 0; i < n; ++i) lo.a[i] = Rational(-rp.coord(r, i));
    lo.b = Rational(-level[r]);
    lo.strict = true;
    cons.push_back(std::move(lo));
  }
  return fm_feasible(std::move(cons), n);
}

bool is_bounded(const RootPoset& rp, int k, const std::vector<int>& level) {
  int n = rp.group().rank();
  // unbounded iff a nonzero recession direction d exists:
  // (d, alpha) = 0 for slab-constrained roots, (d, beta) >= 0 for the rest,
  // and sum over the rest >= 1 (scale invariance)
  std::vector<int> open;
  for (int r = 0; r < rp.size(); ++r)
    if (level[r] == k) open.push_back(r);
  if (open.empty()) return true;
  std::vector<LinCon> cons;
  for (int r = 0; r < rp.size(); ++r) {
    if (level[r] == k) {
      LinCon ge;
      ge.a.assign(n, Rational(0));
      for (int i = 0; i < n; ++i) ge.a[i] = Rational(-rp.coord(r, i));
      ge.b = Rational(0);
      ge.strict = false;
      cons.push_back(std::move(ge));
    } else {
      for (int sgn : {1, -1}) {
        LinCon eq;
        eq.a.assign(n, Rational(0));
        for (int i = 0; i < n; ++i) eq.a[i] = Rational(sgn * rp.coord(r, i));
        eq.b = Rational(0);
        eq.strict = false;
        cons.push_back(std::move(eq));
      }
    }
  }
  LinCon total;  // -(sum over open roots) <= -1
  total.a.assign(n, Rational(0));
  for (int r : open)
    for (int i = 0; i < n; ++i) total.a[i] -= Rational(rp.coord(r, i));
  total.b = Rational(-1);
  total.strict = false;
  cons.push_back(std::move(total));
  return !fm_feasible(std::move(cons), n);
}

}  // namespace

ShiArrangement shi_chambers(const RootPoset& rp, int k) {
  if (rp.group().rank() > 3)
    throw std::invalid_argument("shi_chambers: rank must be at most 3");
  ShiArrangement shi;
  shi.rp = &rp;
  shi.k = k;
  for (const auto& level : rp.nested_filter_multichains(k)) {
    if (!fm_feasible(chamber_constraints(rp, k, level), rp.group().rank())) continue;
    ShiChamber ch;
    ch.level = level;
    ch.floors.assign(k + 1, {});
    ch.ceilings.assign(k + 1, {});
    for (int r = 0; r < rp.size(); ++r) {
      // lower wall at level m: separates from (or contains) the origin
      if (is_wall(rp, k, level, r, level[r])) {
        ch.walls.push_back({r, level[r]});
        ch.floors[level[r]].push_back(r);
      }
      if (level[r] < k && is_wall(rp, k, level, r, level[r] + 1)) {
        ch.walls.push_back({r, level[r] + 1});
        ch.ceilings[level[r] + 1].push_back(r);
      }
    }
    ch.bounded = is_bounded(rp, k, level);
    shi.chambers.push_back(std::move(ch));
  }
  return shi;
}

ChamberCount shi_all_chambers(const RootPoset& rp, int k) {
  int n = rp.group().rank();
  int N = rp.size();
  // per positive root, the value (x, alpha) lies in one of 2k+1 open
  // intervals delimited by the levels -k+1 .. k
  long long combos = 1;
  for (int r = 0; r < N; ++r) {
    combos *= 2 * k + 1;
    if (combos > 2000000)
      throw std::runtime_error("shi_all_chambers: assignment space too large");
  }
  ChamberCount out;
  std::vector<int> slot(N, 0);  // 0 .. 2k: interval (lo, lo+1) with lo = slot - k, ends open
  std::function<void(int)> rec = [&](int r) {
    if (r == N) {
      std::vector<LinCon> cons;
      std::vector<int> lower_open, upper_open;  // roots unbounded below/above
      for (int j = 0; j < N; ++j) {
        long long lo = slot[j] - k;
        if (slot[j] > 0) {
          LinCon c;
          c.a.assign(n, Rational(0));
          for (int i = 0; i < n; ++i) c.a[i] = Rational(-rp.coord(j, i));
          c.b = Rational(-lo);
          cons.push_back(std::move(c));
        } else {
          lower_open.push_back(j);
        }
        if (slot[j] < 2 * k) {
          LinCon c;
          c.a.assign(n, Rational(0));
          for (int i = 0; i < n; ++i) c.a[i] = Rational(rp.coord(j, i));
          c.b = Rational(lo + 1);
          cons.push_back(std::move(c));
        } else {
          upper_open.push_back(j);
        }
      }
      if (fm_feasible(cons, n)) {
        ++out.total;
        // bounded iff no nonzero recession direction
        bool bounded;
        if (lower_open.empty() && upper_open.empty()) {
          bounded = true;
        } else {
          std::vector<LinCon> rec_cons;
          for (int j = 0; j < N; ++j) {
            bool lo_open = slot[j] == 0, hi_open = slot[j] == 2 * k;
            if (!lo_open) {  // (d, alpha_j) >= 0 as -(d,a) <= 0
              LinCon c;
              c.a.assign(n, Rational(0));
              for (int i = 0; i < n; ++i) c.a[i] = Rational(-rp.coord(j, i));
              c.b = Rational(0);
              c.strict = false;
              rec_cons.push_back(std::move(c));
            }
            if (!hi_open) {
              LinCon c;
              c.a.assign(n, Rational(0));
              for (int i = 0; i < n; ++i) c.a[i] = Rational(rp.coord(j, i));
              c.b = Rational(0);
              c.strict = false;
              rec_cons.push_back(std::move(c));
            }
          }
          // some open direction must move: sum of the open-side slacks >= 1
          LinCon drive;
          drive.a.assign(n, Rational(0));
          for (int j : upper_open)
            for (int i = 0; i < n; ++i) drive.a[i] -= Rational(rp.coord(j, i));
          for (int j : lower_open)
            for (int i = 0; i < n; ++i) drive.a[i] += Rational(rp.coord(j, i));
          drive.b = Rational(-1);
          drive.strict = false;
          rec_cons.push_back(std::move(drive));
          bounded = !fm_feasible(std::move(rec_cons), n);
        }
        if (bounded) ++out.bounded;
      }
      return;
    }
    for (int s = 0; s <= 2 * k; ++s) {
      slot[r] = s;
      rec(r + 1);
    }
  };
  rec(0);
  return out;
}

int ShiArrangement::count_bounded() const {
  int b = 0;
  for (const auto& c : chambers) b += c.bounded ? 1 : 0;
  return b;
}

std::vector<long long> ShiArrangement::floor_vector(int color) const {
  std::vector<long long> v(rp->group().rank() + 1, 0);
  for (const auto& c : chambers) ++v[c.floors[color].size()];
  return v;
}

std::vector<long long> ShiArrangement::ceiling_vector(int color) const {
  std::vector<long long> v(rp->group().rank() + 1, 0);
  for (const auto& c : chambers) ++v[c.ceilings[color].size()];
  return v;
}

std::vector<std::vector<std::string>> nn_type_statistic(const ShiArrangement& shi) {
  std::vector<std::vector<std::string>> out;
  for (const auto& c : shi.chambers)
    out.push_back(shi.rp->group().parabolic_type_of_reflections(c.floors[shi.k]));
  return out;
}

}  // namespace coxcat
