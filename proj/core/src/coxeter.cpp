#include "coxcat/coxeter.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <sstream>

namespace coxcat {

namespace {

std::vector<int> degrees_for(const GroupSpec& s) {
  std::vector<int> d;
  switch (s.family) {
    case Family::A:
      for (int i = 2; i <= s.rank + 1; ++i) d.push_back(i);
      break;
    case Family::B:
      for (int i = 1; i <= s.rank; ++i) d.push_back(2 * i);
      break;
    case Family::D:
      for (int i = 1; i < s.rank; ++i) d.push_back(2 * i);
      d.push_back(s.rank);
      std::sort(d.begin(), d.end());
      break;
    case Family::E:
      if (s.rank == 6) d = {2, 5, 6, 8, 9, 12};
      else if (s.rank == 7) d = {2, 6, 8, 10, 12, 14, 18};
      else d = {2, 8, 12, 14, 18, 20, 24, 30};
      break;
    case Family::F: d = {2, 6, 8, 12}; break;
    case Family::H: d = s.rank == 3 ? std::vector<int>{2, 6, 10} : std::vector<int>{2, 12, 20, 30}; break;
    case Family::I: d = {2, s.dihedral_m}; break;
  }
  return d;
}

}  // namespace

GroupSpec GroupSpec::parse(const std::string& label) {
  GroupSpec s;
  if (label.empty()) throw std::invalid_argument("empty group label");
  char f = label[0];
  if (f == 'I') {
    // I2(m)
    size_t open = label.find('(');
    size_t close = label.find(')');
    if (label.substr(0, 2) != "I2" || open == std::string::npos || close == std::string::npos)
      throw std::invalid_argument("bad dihedral label, expected I2(m): " + label);
    s.family = Family::I;
    s.rank = 2;
    s.dihedral_m = std::stoi(label.substr(open + 1, close - open - 1));
    return s;
  }
  if (std::string("ABDEFH").find(f) == std::string::npos)
    throw std::invalid_argument("unknown type family: " + label);
  s.family = static_cast<Family>(f);
  s.rank = std::stoi(label.substr(1));
  return s;
}

std::string GroupSpec::str() const {
  if (family == Family::I) return "I2(" + std::to_string(dihedral_m) + ")";
  return std::string(1, static_cast<char>(family)) + std::to_string(rank);
}

std::string CoxeterGroup::coord_key(const std::vector<FieldElem>& coords) const {
  std::string k;
  for (const auto& c : coords)
    for (const auto& r : c) {
      k += r.str();
      k += ',';
    }
  return k;
}

int CoxeterGroup::root_index(const std::vector<FieldElem>& coords) const {
  auto it = root_lookup_.find(coord_key(coords));
  return it == root_lookup_.end() ? -1 : it->second;
}

FieldElem CoxeterGroup::inner(const std::vector<FieldElem>& a,
                              const std::vector<FieldElem>& b) const {
  FieldElem s = field_.zero();
  for (int i = 0; i < rank_; ++i)
    for (int j = 0; j < rank_; ++j)
      s = field_.add(s, field_.mul(field_.mul(a[i], b[j]), gram_[i][j]));
  return s;
}

void CoxeterGroup::generate_roots() {
  const NumberField& F = field_;
  // simple basis coordinate vectors
  std::vector<std::vector<FieldElem>> pending;
  auto push_root = [&](const std::vector<FieldElem>& c) {
    std::string k = coord_key(c);
    if (root_lookup_.count(k)) return false;
    root_lookup_.emplace(std::move(k), static_cast<int>(roots_.size()));
    roots_.push_back(c);
    pending.push_back(c);
    return true;
  };
  for (int i = 0; i < rank_; ++i) {
    std::vector<FieldElem> c(rank_, F.zero());
    c[i] = F.one();
    push_root(c);
  }
  auto apply_simple = [&](int i, const std::vector<FieldElem>& beta) {
    // s_i(b) = b - <2 B(a_i, b) / B(a_i, a_i)> a_i
    FieldElem coef = F.zero();
    for (int j = 0; j < rank_; ++j)
      coef = F.add(coef, F.mul(gram_[i][j], beta[j]));
    coef = F.mul(coef, two_over_norm_[i]);
    std::vector<FieldElem> out = beta;
    out[i] = F.sub(out[i], coef);
    return out;
  };
  size_t head = 0;
  std::vector<std::vector<FieldElem>> all = roots_;
  while (head < all.size()) {
    auto beta = all[head++];
    for (int i = 0; i < rank_; ++i) {
      auto img = apply_simple(i, beta);
      if (push_root(img)) all.push_back(img);
    }
  }
  // split into positives and negatives; reindex so positives come first and
  // the i-th negative is the negation of the i-th positive
  std::vector<std::vector<FieldElem>> pos, neg;
  for (const auto& r : roots_) {
    int sgn = 0;
    for (const auto& c : r) {
      int s = F.real_sign(c);
      if (s != 0) { sgn = s; break; }
    }
    if (sgn > 0) pos.push_back(r);
  }
  // keep simples first, in order
  std::stable_sort(pos.begin(), pos.end(), [&](const auto& a, const auto& b) {
    auto nonzeros = [&](const auto& v) {
      int c = 0;
      for (const auto& x : v)
        if (!F.is_zero(x)) ++c;
      return c;
    };
    int na = nonzeros(a), nb = nonzeros(b);
    bool sa = na == 1, sb = nb == 1;
    if (sa != sb) return sa;
    return false;
  });
  num_pos_ = static_cast<int>(pos.size());
  roots_.clear();
  root_lookup_.clear();
  for (const auto& r : pos) {
    root_lookup_.emplace(coord_key(r), static_cast<int>(roots_.size()));
    roots_.push_back(r);
  }
  for (int i = 0; i < num_pos_; ++i) {
    std::vector<FieldElem> r(rank_);
    for (int j = 0; j < rank_; ++j) r[j] = F.neg(roots_[i][j]);
    root_lookup_.emplace(coord_key(r), static_cast<int>(roots_.size()));
    roots_.push_back(r);
  }
  // make sure alpha_i sits at index i
  for (int i = 0; i < rank_; ++i) {
    std::vector<FieldElem> c(rank_, F.zero());
    c[i] = F.one();
    int idx = root_index(c);
    if (idx != i) {
      std::swap(roots_[i], roots_[idx]);
      std::swap(roots_[i + num_pos_], roots_[idx + num_pos_]);
      root_lookup_[coord_key(roots_[i])] = i;
      root_lookup_[coord_key(roots_[idx])] = idx;
      root_lookup_[coord_key(roots_[i + num_pos_])] = i + num_pos_;
      root_lookup_[coord_key(roots_[idx + num_pos_])] = idx + num_pos_;
    }
  }
}

void CoxeterGroup::build_reflection_tables() {
  const NumberField& F = field_;
  int total = 2 * num_pos_;
  simple_act_.assign(rank_, std::vector<uint16_t>(total));
  for (int i = 0; i < rank_; ++i) {
    for (int r = 0; r < total; ++r) {
      FieldElem coef = F.zero();
      for (int j = 0; j < rank_; ++j)
        coef = F.add(coef, F.mul(gram_[i][j], roots_[r][j]));
      coef = F.mul(coef, two_over_norm_[i]);
      std::vector<FieldElem> img = roots_[r];
      img[i] = F.sub(img[i], coef);
      int idx = root_index(img);
      if (idx < 0) throw std::logic_error("root system not closed under simple reflection");
      simple_act_[i][r] = static_cast<uint16_t>(idx);
    }
  }
  // t_{w(alpha)} = w t_alpha w^{-1}: propagate reflection permutations along
  // the simple-reflection orbit of the positive roots
  refl_act_.assign(num_pos_, {});
  std::deque<int> queue;
  for (int i = 0; i < rank_; ++i) {
    refl_act_[i] = simple_act_[i];
    queue.push_back(i);
  }
  while (!queue.empty()) {
    int r = queue.front();
    queue.pop_front();
    for (int i = 0; i < rank_; ++i) {
      int img = simple_act_[i][r];
      if (img >= num_pos_) img -= num_pos_;  // reflections of a root and its negative agree
      if (!refl_act_[img].empty()) continue;
      // t_img = s_i t_r s_i
      std::vector<uint16_t> t(total);
      for (int x = 0; x < total; ++x)
        t[x] = simple_act_[i][refl_act_[r][simple_act_[i][x]]];
      refl_act_[img] = std::move(t);
      queue.push_back(img);
    }
  }
}

CoxeterGroup CoxeterGroup::build(const GroupSpec& spec) {
  CoxeterGroup G;
  G.spec_ = spec;
  int n = spec.rank;
  switch (spec.family) {
    case Family::A: if (n < 1) throw std::invalid_argument("A_n needs rank >= 1"); break;
    case Family::B: if (n < 2) throw std::invalid_argument("B_n needs rank >= 2"); break;
    case Family::D: if (n < 3) throw std::invalid_argument("D_n needs rank >= 3"); break;
    case Family::E: if (n < 6 || n > 8) throw std::invalid_argument("E_n has rank 6, 7 or 8"); break;
    case Family::F: if (n != 4) throw std::invalid_argument("F has rank 4"); break;
    case Family::H: if (n != 3 && n != 4) throw std::invalid_argument("H has rank 3 or 4"); break;
    case Family::I:
      if (n != 2) throw std::invalid_argument("I2(m) has rank 2");
      if (spec.dihedral_m < 3) throw std::invalid_argument("I2(m) needs m >= 3");
      break;
  }
  G.rank_ = n;

  // Coxeter matrix
  G.cox_mat_.assign(n, std::vector<int>(n, 2));
  for (int i = 0; i < n; ++i) G.cox_mat_[i][i] = 1;
  auto set_m = [&](int i, int j, int m) { G.cox_mat_[i][j] = G.cox_mat_[j][i] = m; };
  std::vector<std::pair<int, int>> edges;  // simply-laced edges, gram -1
  switch (spec.family) {
    case Family::A:
      for (int i = 0; i + 1 < n; ++i) { set_m(i, i + 1, 3); edges.push_back({i, i + 1}); }
      break;
    case Family::B:
      for (int i = 0; i + 2 < n; ++i) { set_m(i, i + 1, 3); }
      set_m(n - 2, n - 1, 4);
      break;
    case Family::D:
      for (int i = 0; i + 2 < n; ++i) { set_m(i, i + 1, 3); edges.push_back({i, i + 1}); }
      set_m(n - 3, n - 1, 3);
      edges.push_back({n - 3, n - 1});
      break;
    case Family::E: {
      std::vector<std::pair<int, int>> e8 = {{0, 2}, {1, 3}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}};
      for (auto [a, b] : e8)
        if (a < n && b < n) { set_m(a, b, 3); edges.push_back({a, b}); }
      break;
    }
    case Family::F:
      set_m(0, 1, 3);
      set_m(1, 2, 4);
      set_m(2, 3, 3);
      break;
    case Family::H:
      set_m(0, 1, 5);
      for (int i = 1; i + 1 < n; ++i) set_m(i, i + 1, 3);
      break;
    case Family::I:
      set_m(0, 1, spec.dihedral_m);
      break;
  }

  // field and Gram matrix
  int m12 = spec.family == Family::I ? spec.dihedral_m : 0;
  bool golden = spec.family == Family::H || (spec.family == Family::I && m12 == 5);
  bool general_dihedral =
      spec.family == Family::I && m12 != 3 && m12 != 4 && m12 != 5 && m12 != 6;
  if (golden) G.field_ = NumberField::golden();
  else if (general_dihedral) G.field_ = NumberField::real_cyclotomic(m12);
  else G.field_ = NumberField::rationals();
  const NumberField& F = G.field_;

  auto rat = [&](long long p, long long q = 1) { return F.scalar(Rational(BigInt(p), BigInt(q))); };
  G.gram_.assign(n, std::vector<FieldElem>(n, F.zero()));
  for (int i = 0; i < n; ++i) G.gram_[i][i] = rat(2);
  switch (spec.family) {
    case Family::A:
    case Family::D:
    case Family::E:
      for (auto [a, b] : edges) G.gram_[a][b] = G.gram_[b][a] = rat(-1);
      break;
    case Family::B:
      G.gram_[n - 1][n - 1] = rat(1);
      for (int i = 0; i + 1 < n; ++i) G.gram_[i][i + 1] = G.gram_[i + 1][i] = rat(-1);
      break;
    case Family::F:
      G.gram_[2][2] = rat(1);
      G.gram_[3][3] = rat(1);
      G.gram_[0][1] = G.gram_[1][0] = rat(-1);
      G.gram_[1][2] = G.gram_[2][1] = rat(-1);
      G.gram_[2][3] = G.gram_[3][2] = rat(-1, 2);
      break;
    case Family::H: {
      FieldElem phi = F.generator();
      G.gram_[0][1] = G.gram_[1][0] = F.neg(phi);
      for (int i = 1; i + 1 < n; ++i) G.gram_[i][i + 1] = G.gram_[i + 1][i] = rat(-1);
      break;
    }
    case Family::I:
      if (m12 == 3) {
        G.gram_[0][1] = G.gram_[1][0] = rat(-1);
      } else if (m12 == 4) {
        G.gram_[1][1] = rat(1);
        G.gram_[0][1] = G.gram_[1][0] = rat(-1);
      } else if (m12 == 6) {
        G.gram_[1][1] = rat(6);
        G.gram_[0][1] = G.gram_[1][0] = rat(-3);
      } else {
        FieldElem z = F.generator();  // 2cos(pi/m), also phi when m = 5
        G.gram_[0][1] = G.gram_[1][0] = F.neg(z);
      }
      break;
  }
  G.two_over_norm_.resize(n);
  for (int i = 0; i < n; ++i)
    G.two_over_norm_[i] = F.div(rat(2), G.gram_[i][i]);

  G.generate_roots();
  G.build_reflection_tables();

  G.degrees_ = degrees_for(spec);
  G.order_ = BigInt(1);
  for (int d : G.degrees_) G.order_ *= BigInt(d);
  G.cox_number_ = G.degrees_.back();

  // structural consistency: sum of degrees, N = nh/2, order of a Coxeter element
  int N = G.num_pos_;
  int sum_d = std::accumulate(G.degrees_.begin(), G.degrees_.end(), 0);
  if (sum_d != N + n) throw std::logic_error("degree sum does not match root count");
  if (2 * N != n * G.cox_number_) throw std::logic_error("N != nh/2");
  if (G.element_order(G.coxeter_element_bipartite().c) != G.cox_number_)
    throw std::logic_error("Coxeter element order != h");
  return G;
}

Element CoxeterGroup::identity() const {
  Element e;
  e.perm.resize(2 * num_pos_);
  for (size_t i = 0; i < e.perm.size(); ++i) e.perm[i] = static_cast<uint16_t>(i);
  return e;
}

Element CoxeterGroup::simple_reflection(int i) const { return Element{simple_act_[i]}; }
Element CoxeterGroup::reflection(int pos_root) const { return Element{refl_act_[pos_root]}; }

Element CoxeterGroup::multiply(const Element& a, const Element& b) const {
  Element r;
  r.perm.resize(a.perm.size());
  for (size_t i = 0; i < a.perm.size(); ++i) r.perm[i] = a.perm[b.perm[i]];
  return r;
}

Element CoxeterGroup::invert(const Element& a) const {
  Element r;
  r.perm.resize(a.perm.size());
  for (size_t i = 0; i < a.perm.size(); ++i) r.perm[a.perm[i]] = static_cast<uint16_t>(i);
  return r;
}

Element CoxeterGroup::conjugate(const Element& s, const Element& w) const {
  return multiply(multiply(s, w), invert(s));
}

long long CoxeterGroup::element_order(const Element& w) const {
  long long ord = 1;
  size_t total = w.perm.size();
  std::vector<char> seen(total, 0);
  for (size_t i = 0; i < total; ++i) {
    if (seen[i]) continue;
    long long len = 0;
    for (size_t j = i; !seen[j]; j = w.perm[j]) {
      seen[j] = 1;
      ++len;
    }
    ord = std::lcm(ord, len);
  }
  return ord;
}

int CoxeterGroup::std_length(const Element& w) const {
  int inv = 0;
  for (int i = 0; i < num_pos_; ++i)
    if (w.perm[i] >= num_pos_) ++inv;
  return inv;
}

std::vector<std::vector<FieldElem>> CoxeterGroup::matrix_of(const Element& w) const {
  std::vector<std::vector<FieldElem>> m(rank_, std::vector<FieldElem>(rank_));
  for (int j = 0; j < rank_; ++j) {
    const auto& img = roots_[w.perm[j]];
    for (int i = 0; i < rank_; ++i) m[i][j] = img[i];
  }
  return m;
}

int CoxeterGroup::abs_length(const Element& w) const {
  auto m = matrix_of(w);
  for (int i = 0; i < rank_; ++i)
    m[i][i] = field_.sub(m[i][i], field_.one());
  return field_matrix_rank(field_, m);
}

bool CoxeterGroup::abs_leq(const Element& a, const Element& b) const {
  Element d = multiply(invert(a), b);
  return abs_length(b) == abs_length(a) + abs_length(d);
}

std::vector<int> CoxeterGroup::reflections_below(const Element& w) const {
  std::vector<int> out;
  int lw = abs_length(w);
  for (int t = 0; t < num_pos_; ++t) {
    Element d = multiply(Element{refl_act_[t]}, w);
    if (abs_length(d) == lw - 1) out.push_back(t);
  }
  return out;
}

bool CoxeterGroup::is_orthogonal(const Element& w) const {
  auto m = matrix_of(w);
  // check M^T G M == G
  const NumberField& F = field_;
  for (int i = 0; i < rank_; ++i)
    for (int j = 0; j < rank_; ++j) {
      FieldElem s = F.zero();
      for (int a = 0; a < rank_; ++a)
        for (int b = 0; b < rank_; ++b)
          s = F.add(s, F.mul(F.mul(m[a][i], gram_[a][b]), m[b][j]));
      if (!F.is_zero(F.sub(s, gram_[i][j]))) return false;
    }
  return true;
}

CoxeterElementData CoxeterGroup::coxeter_element_bipartite() const {
  // proper 2-coloring of the Coxeter diagram (a forest)
  std::vector<int> color(rank_, -1);
  for (int start = 0; start < rank_; ++start) {
    if (color[start] != -1) continue;
    color[start] = 0;
    std::deque<int> q{start};
    while (!q.empty()) {
      int v = q.front();
      q.pop_front();
      for (int u = 0; u < rank_; ++u) {
        if (u == v || cox_mat_[v][u] < 3) continue;
        if (color[u] == -1) {
          color[u] = 1 - color[v];
          q.push_back(u);
        }
      }
    }
  }
  CoxeterElementData d;
  d.left = identity();
  d.right = identity();
  for (int i = 0; i < rank_; ++i) {
    if (color[i] == 0) {
      d.left_set.push_back(i);
      d.left = multiply(d.left, simple_reflection(i));
    } else {
      d.right_set.push_back(i);
      d.right = multiply(d.right, simple_reflection(i));
    }
  }
  d.c = multiply(d.left, d.right);
  return d;
}

CoxeterElementData CoxeterGroup::coxeter_element_standard() const {
  CoxeterElementData d;
  d.c = identity();
  for (int i = 0; i < rank_; ++i) d.c = multiply(d.c, simple_reflection(i));
  d.left = identity();
  d.right = d.c;
  return d;
}

std::vector<Element> CoxeterGroup::all_elements(long long cap) const {
  if (!(order_ <= BigInt(cap)))
    throw std::runtime_error("group too large for full enumeration: |" + label() +
                             "| = " + order_.str());
  std::vector<Element> elems{identity()};
  std::unordered_map<Element, int, ElementHash> seen;
  seen.emplace(elems[0], 0);
  for (size_t head = 0; head < elems.size(); ++head) {
    Element cur = elems[head];
    for (int i = 0; i < rank_; ++i) {
      Element nxt = multiply(cur, simple_reflection(i));
      if (seen.emplace(nxt, static_cast<int>(elems.size())).second) elems.push_back(nxt);
    }
  }
  return elems;
}

LengthPolys CoxeterGroup::length_generating_polynomials(long long cap) const {
  auto elems = all_elements(cap);
  std::unordered_map<Element, int, ElementHash> index;
  for (size_t i = 0; i < elems.size(); ++i) index.emplace(elems[i], static_cast<int>(i));

  auto bfs_poly = [&](const std::vector<Element>& gens) {
    std::vector<int> dist(elems.size(), -1);
    std::deque<int> q;
    dist[index.at(identity())] = 0;
    q.push_back(index.at(identity()));
    int maxd = 0;
    while (!q.empty()) {
      int v = q.front();
      q.pop_front();
      for (const auto& g : gens) {
        int u = index.at(multiply(elems[v], g));
        if (dist[u] == -1) {
          dist[u] = dist[v] + 1;
          maxd = std::max(maxd, dist[u]);
          q.push_back(u);
        }
      }
    }
    std::vector<BigInt> coef(maxd + 1, BigInt(0));
    for (int d : dist) coef[d] += BigInt(1);
    return IntPoly(std::move(coef));
  };

  std::vector<Element> sgens, tgens;
  for (int i = 0; i < rank_; ++i) sgens.push_back(simple_reflection(i));
  for (int t = 0; t < num_pos_; ++t) tgens.push_back(reflection(t));

  LengthPolys out;
  out.p_s_enumerated = bfs_poly(sgens);
  out.p_t_enumerated = bfs_poly(tgens);
  // product formulas from the degrees
  IntPoly ps(BigInt(1)), pt(BigInt(1));
  for (int d : degrees_) {
    ps *= IntPoly::q_integer(d);
    pt *= IntPoly(std::vector<BigInt>{BigInt(1), BigInt(d - 1)});
  }
  out.p_s_formula = ps;
  out.p_t_formula = pt;
  return out;
}

std::vector<int> CoxeterGroup::roots_in_span(const std::vector<int>& pos_roots) const {
  // exact rank tests over the field
  std::vector<std::vector<FieldElem>> base;
  for (int r : pos_roots) base.push_back(roots_[r]);
  auto rank_of = [&](std::vector<std::vector<FieldElem>> rows) {
    return field_matrix_rank(field_, rows);
  };
  int base_rank = rank_of(base);
  std::vector<int> out;
  for (int r = 0; r < num_pos_; ++r) {
    auto rows = base;
    rows.push_back(roots_[r]);
    if (rank_of(rows) == base_rank) out.push_back(r);
  }
  return out;
}

std::vector<std::string> CoxeterGroup::classify_components(
    const std::vector<int>& simples) const {
  // ambient length classes, for distinguishing short/long parabolics
  bool multi_length = false;
  {
    FieldElem n0 = root_norm(0);
    for (int i = 1; i < rank_; ++i)
      if (!field_.is_zero(field_.sub(root_norm(i), n0))) multi_length = true;
  }
  int k = static_cast<int>(simples.size());
  std::vector<std::vector<int>> m(k, std::vector<int>(k, 2));
  for (int i = 0; i < k; ++i) {
    m[i][i] = 1;
    for (int j = i + 1; j < k; ++j) {
      Element p = multiply(reflection(simples[i]), reflection(simples[j]));
      m[i][j] = m[j][i] = static_cast<int>(element_order(p));
    }
  }
  // connected components of the diagram
  std::vector<int> comp(k, -1);
  int nc = 0;
  for (int i = 0; i < k; ++i) {
    if (comp[i] != -1) continue;
    std::deque<int> q{i};
    comp[i] = nc;
    while (!q.empty()) {
      int v = q.front();
      q.pop_front();
      for (int u = 0; u < k; ++u)
        if (comp[u] == -1 && m[v][u] >= 3) {
          comp[u] = nc;
          q.push_back(u);
        }
    }
    ++nc;
  }
  std::vector<std::string> labels;
  for (int c = 0; c < nc; ++c) {
    std::vector<int> nodes;
    for (int i = 0; i < k; ++i)
      if (comp[i] == c) nodes.push_back(i);
    int r = static_cast<int>(nodes.size());
    auto deg = [&](int v) {
      int d = 0;
      for (int u : nodes)
        if (u != v && m[v][u] >= 3) ++d;
      return d;
    };
    std::string label;
    if (r == 1) {
      label = "A1";
    } else if (r == 2) {
      int mm = m[nodes[0]][nodes[1]];
      if (mm == 3) label = "A2";
      else if (mm == 4) label = "B2";
      else if (mm == 6) label = "G2";
      else label = "I2(" + std::to_string(mm) + ")";
    } else {
      int branch = -1, maxdeg = 0;
      for (int v : nodes) maxdeg = std::max(maxdeg, deg(v));
      if (maxdeg <= 2) {
        // a path; walk it from an end and collect edge orders
        int end = -1;
        for (int v : nodes)
          if (deg(v) == 1) { end = v; break; }
        std::vector<int> orders;
        std::vector<char> used(k, 0);
        int cur = end;
        used[cur] = 1;
        for (int step = 1; step < r; ++step) {
          for (int u : nodes)
            if (!used[u] && m[cur][u] >= 3) {
              orders.push_back(m[cur][u]);
              cur = u;
              used[u] = 1;
              break;
            }
        }
        if (orders.front() < orders.back()) std::reverse(orders.begin(), orders.end());
        bool all3 = std::all_of(orders.begin(), orders.end(), [](int x) { return x == 3; });
        if (all3) label = "A" + std::to_string(r);
        else if (orders.front() == 4 &&
                 std::all_of(orders.begin() + 1, orders.end(), [](int x) { return x == 3; }))
          label = "B" + std::to_string(r);
        else if (r == 4 && orders == std::vector<int>{3, 4, 3})
          label = "F4";
        else if (orders.front() == 5 &&
                 std::all_of(orders.begin() + 1, orders.end(), [](int x) { return x == 3; }))
          label = "H" + std::to_string(r);
        else
          label = "X" + std::to_string(r);
      } else {
        for (int v : nodes)
          if (deg(v) == 3) branch = v;
        // branch lengths from the degree-3 node
        std::vector<int> lens;
        for (int u : nodes) {
          if (u == branch || m[branch][u] < 3) continue;
          int len = 1, prev = branch, cur2 = u;
          while (true) {
            int nxt = -1;
            for (int w : nodes)
              if (w != prev && w != cur2 && m[cur2][w] >= 3) nxt = w;
            if (nxt == -1) break;
            prev = cur2;
            cur2 = nxt;
            ++len;
          }
          lens.push_back(len);
        }
        std::sort(lens.begin(), lens.end());
        if (lens == std::vector<int>{1, 1, r - 3} || (r == 4 && lens == std::vector<int>{1, 1, 1}))
          label = "D" + std::to_string(r);
        else if (lens == std::vector<int>{1, 2, 2}) label = "E6";
        else if (lens == std::vector<int>{1, 2, 3}) label = "E7";
        else if (lens == std::vector<int>{1, 2, 4}) label = "E8";
        else label = "X" + std::to_string(r);
      }
    }
    if (label == "D3") label = "A3";
    if (multi_length && (label == "A1" || label[0] == 'A')) {
      // annotate with the root norms so that short and long parabolics of
      // the same diagram shape stay distinguishable
      std::vector<std::string> norms;
      for (int v : nodes) norms.push_back(field_.str(root_norm(simples[v])));
      std::sort(norms.begin(), norms.end());
      std::string tag;
      for (const auto& s : norms) tag += (tag.empty() ? "" : ",") + s;
      label += "{" + tag + "}";
    }
    labels.push_back(label);
  }
  std::sort(labels.begin(), labels.end());
  return labels;
}

std::vector<std::string> CoxeterGroup::parabolic_type(const Element& w) const {
  std::vector<int> below = reflections_below(w);
  if (below.empty()) return {};
  // sub-simple roots: reflections permuting the other positive roots of the
  // subsystem among the positives
  std::vector<char> in_set(num_pos_, 0);
  for (int t : below) in_set[t] = 1;
  std::vector<int> simples;
  for (int a : below) {
    bool simple = true;
    for (int b : below) {
      if (a == b) continue;
      if (refl_act_[a][b] >= num_pos_) { simple = false; break; }
    }
    if (simple) simples.push_back(a);
  }
  return classify_components(simples);
}

std::vector<std::string> CoxeterGroup::parabolic_type_of_reflections(
    const std::vector<int>& pos_roots) const {
  if (pos_roots.empty()) return {};
  std::vector<int> sys = roots_in_span(pos_roots);
  std::vector<char> in_set(num_pos_, 0);
  for (int t : sys) in_set[t] = 1;
  std::vector<int> simples;
  for (int a : sys) {
    bool simple = true;
    for (int b : sys) {
      if (a == b) continue;
      if (refl_act_[a][b] >= num_pos_) { simple = false; break; }
    }
    if (simple) simples.push_back(a);
  }
  return classify_components(simples);
}

Element CoxeterGroup::longest_element() const {
  Element w = identity();
  bool progressed = true;
  while (progressed) {
    progressed = false;
    for (int i = 0; i < rank_; ++i) {
      if (w.perm[i] < num_pos_) {  // w(alpha_i) still positive
        w = multiply(w, simple_reflection(i));
        progressed = true;
      }
    }
  }
  return w;
}

bool CoxeterGroup::longest_is_minus_one() const {
  Element w0 = longest_element();
  for (int i = 0; i < 2 * num_pos_; ++i)
    if (w0.perm[i] != negate_root(i)) return false;
  return true;
}

std::vector<int> CoxeterGroup::point_permutation(const Element& w) const {
  const NumberField& F = field_;
  if (spec_.family == Family::A) {
    int pts = rank_ + 1;
    // decode a root index into the ordered pair (a, b) meaning e_a - e_b
    auto decode = [&](int r) -> std::pair<int, int> {
      const auto& c = roots_[r];
      int lo = -1, hi = -1, sign = 0;
      for (int j = 0; j < rank_; ++j) {
        if (F.is_zero(c[j])) continue;
        if (lo == -1) { lo = j; sign = F.real_sign(c[j]); }
        hi = j;
      }
      if (sign > 0) return {lo + 1, hi + 2};
      return {hi + 2, lo + 1};
    };
    std::vector<int> img(pts, 0);
    for (int i = 0; i < rank_; ++i) {
      auto [a, b] = decode(w.perm[i]);
      img[i] = a;
      img[i + 1] = b;
    }
    return img;  // 1-based images of 1..n+1
  }
  if (spec_.family == Family::B) {
    int n = rank_;
    // e_i = alpha_i + ... + alpha_n; a root +-e_j has all coordinates equal
    // on the support [j, n]
    auto decode_short = [&](int r) -> int {
      const auto& c = roots_[r];
      for (int j = 0; j < n; ++j) {
        if (F.is_zero(c[j])) continue;
        return F.real_sign(c[j]) * (j + 1);
      }
      return 0;
    };
    std::vector<int> img(n, 0);
    for (int i = 0; i < n; ++i) {
      // index of the positive root e_{i+1}
      std::vector<FieldElem> coords(n, F.zero());
      for (int j = i; j < n; ++j) coords[j] = F.one();
      int r = root_index(coords);
      img[i] = decode_short(w.perm[r]);
    }
    return img;  // img[i] = signed image of point i+1
  }
  throw std::logic_error("point_permutation: only types A and B have point actions");
}

Element CoxeterGroup::from_point_permutation(const std::vector<int>& img) const {
  const NumberField& F = field_;
  Element w;
  w.perm.resize(2 * num_pos_);
  if (spec_.family == Family::A) {
    int pts = rank_ + 1;
    if (static_cast<int>(img.size()) != pts)
      throw std::invalid_argument("point permutation has wrong size");
    for (int r = 0; r < 2 * num_pos_; ++r) {
      // convert simple-basis coords to e-basis, permute, convert back
      const auto& c = roots_[r];
      std::vector<FieldElem> e(pts, F.zero());
      for (int j = 0; j < rank_; ++j) {
        e[j] = F.add(e[j], c[j]);
        e[j + 1] = F.sub(e[j + 1], c[j]);
      }
      std::vector<FieldElem> pe(pts, F.zero());
      for (int j = 0; j < pts; ++j) pe[img[j] - 1] = e[j];
      std::vector<FieldElem> out(rank_, F.zero());
      FieldElem acc = F.zero();
      for (int j = 0; j < rank_; ++j) {
        acc = F.add(acc, pe[j]);
        out[j] = acc;
      }
      int idx = root_index(out);
      if (idx < 0) throw std::invalid_argument("map does not permute the roots");
      w.perm[r] = static_cast<uint16_t>(idx);
    }
    return w;
  }
  if (spec_.family == Family::B) {
    int n = rank_;
    for (int r = 0; r < 2 * num_pos_; ++r) {
      const auto& c = roots_[r];
      std::vector<FieldElem> e(n, F.zero());
      for (int j = 0; j < n; ++j) {
        e[j] = F.add(e[j], c[j]);
        if (j + 1 < n) e[j + 1] = F.sub(e[j + 1], c[j]);
      }
      std::vector<FieldElem> pe(n, F.zero());
      for (int j = 0; j < n; ++j) {
        int t = img[j];
        int a = std::abs(t) - 1;
        pe[a] = F.add(pe[a], t > 0 ? e[j] : F.neg(e[j]));
      }
      std::vector<FieldElem> out(n, F.zero());
      FieldElem acc = F.zero();
      for (int j = 0; j < n; ++j) {
        acc = F.add(acc, pe[j]);
        out[j] = acc;
      }
      int idx = root_index(out);
      if (idx < 0) throw std::invalid_argument("map does not permute the roots");
      w.perm[r] = static_cast<uint16_t>(idx);
    }
    return w;
  }
  throw std::logic_error("from_point_permutation: only types A and B");
}

}  // namespace coxcat
