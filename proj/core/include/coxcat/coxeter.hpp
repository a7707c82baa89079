#pragma once

// Finite Coxeter groups in their geometric representation, with exact
// arithmetic. A group is built from classification data (Coxeter matrix,
// Gram matrix of the simple roots); the full root system is generated by
// closure and every group element is stored as the permutation it induces
// on the root list. Absolute (reflection) length is computed as the rank
// of w - 1 over the coefficient field.
//
// Chosen realizations (simple-basis coordinates are exact over the field):
//   A_n, B_n, D_n, E6..E8, F4        integer Cartan data over Q
//   I2(3), I2(4), I2(6)              crystallographic dihedral over Q
//   H3, H4, I2(5)                    Q(phi), phi^2 = phi + 1
//   I2(m), other m                   Q(2cos(pi/m))

#include <array>
#include <cstdint>
#include <unordered_map>

#include "coxcat/field.hpp"

namespace coxcat {

enum class Family : char { A = 'A', B = 'B', D = 'D', E = 'E', F = 'F', H = 'H', I = 'I' };

struct GroupSpec {
  Family family;
  int rank = 0;
  int dihedral_m = 0;  // only for I2(m)

  static GroupSpec parse(const std::string& label);
  std::string str() const;
};

// A group element as a permutation of the 2N roots.
struct Element {
  std::vector<uint16_t> perm;

  bool operator==(const Element& o) const { return perm == o.perm; }
  bool is_identity() const {
    for (size_t i = 0; i < perm.size(); ++i)
      if (perm[i] != i) return false;
    return true;
  }
};

struct ElementHash {
  size_t operator()(const Element& e) const {
    size_t h = 0xcbf29ce484222325ull;
    for (uint16_t v : e.perm) h = (h ^ v) * 0x100000001b3ull;
    return h;
  }
};

struct CoxeterElementData {
  Element c, left, right;
  std::vector<int> left_set, right_set;  // simple generator indices, 2-coloring
};

struct LengthPolys {
  IntPoly p_s_enumerated, p_t_enumerated;
  IntPoly p_s_formula, p_t_formula;
};

class CoxeterGroup {
public:
  static CoxeterGroup build(const GroupSpec& spec);
  static CoxeterGroup build(const std::string& label) { return build(GroupSpec::parse(label)); }

  const GroupSpec& spec() const { return spec_; }
  std::string label() const { return spec_.str(); }
  const NumberField& field() const { return field_; }

  int rank() const { return rank_; }
  int num_positive_roots() const { return num_pos_; }
  int num_roots() const { return 2 * num_pos_; }
  int coxeter_number() const { return cox_number_; }
  const std::vector<int>& degrees() const { return degrees_; }
  std::vector<int> exponents() const {
    std::vector<int> e;
    for (int d : degrees_) e.push_back(d - 1);
    return e;
  }
  const BigInt& order() const { return order_; }

  // root coordinates in the simple basis; index < N positive, >= N negative
  const std::vector<FieldElem>& root(int i) const { return roots_[i]; }
  int negate_root(int i) const { return i < num_pos_ ? i + num_pos_ : i - num_pos_; }
  int root_index(const std::vector<FieldElem>& coords) const;
  int simple_root(int i) const { return i; }  // simples are the first n roots
  FieldElem inner(const std::vector<FieldElem>& a, const std::vector<FieldElem>& b) const;
  FieldElem root_norm(int i) const { return inner(roots_[i], roots_[i]); }
  int coxeter_matrix(int i, int j) const { return cox_mat_[i][j]; }

  Element identity() const;
  Element simple_reflection(int i) const;
  Element reflection(int pos_root) const;  // t_alpha for a positive-root index
  Element multiply(const Element& a, const Element& b) const;  // apply b, then a
  Element invert(const Element& a) const;
  Element conjugate(const Element& s, const Element& w) const;  // s w s^{-1}
  long long element_order(const Element& w) const;

  // standard length: number of inversions
  int std_length(const Element& w) const;
  // absolute length: n - dim Fix(w), as a matrix rank over the field
  int abs_length(const Element& w) const;
  bool abs_leq(const Element& a, const Element& b) const;
  // positive-root indices of all reflections t with t <= w in absolute order
  std::vector<int> reflections_below(const Element& w) const;

  // matrix of w on the simple basis (columns are images of simple roots)
  std::vector<std::vector<FieldElem>> matrix_of(const Element& w) const;
  bool is_orthogonal(const Element& w) const;

  CoxeterElementData coxeter_element_bipartite() const;
  CoxeterElementData coxeter_element_standard() const;

  // full enumeration; refuses when |W| exceeds the cap
  std::vector<Element> all_elements(long long cap = 1000000) const;
  LengthPolys length_generating_polynomials(long long cap = 1000000) const;

  // isomorphism type of the parabolic subgroup generated by the reflections
  // below w, as a sorted list of irreducible labels
  std::vector<std::string> parabolic_type(const Element& w) const;
  // same, for the parabolic generated by an explicit set of reflections
  // whose roots are linearly independent (e.g. a root-poset antichain)
  std::vector<std::string> parabolic_type_of_reflections(const std::vector<int>& pos_roots) const;

  // positive-root indices spanning-closure: all positive roots inside the
  // linear span of the given ones
  std::vector<int> roots_in_span(const std::vector<int>& pos_roots) const;

  // point actions for the classical models
  bool has_point_action() const { return spec_.family == Family::A || spec_.family == Family::B; }
  // type A rank n: permutation of {0,..,n}; type B rank n: signed permutation
  // of {1..n} encoded as images in {+-1..+-n}
  std::vector<int> point_permutation(const Element& w) const;
  Element from_point_permutation(const std::vector<int>& img) const;

  // the longest element, and whether it acts as -1 on the root system
  Element longest_element() const;
  bool longest_is_minus_one() const;

private:
  GroupSpec spec_;
  NumberField field_ = NumberField::rationals();
  int rank_ = 0;
  int num_pos_ = 0;
  int cox_number_ = 0;
  std::vector<int> degrees_;
  BigInt order_;
  std::vector<std::vector<int>> cox_mat_;
  std::vector<std::vector<FieldElem>> gram_;
  std::vector<FieldElem> two_over_norm_;  // 2 / B(alpha_i, alpha_i)
  std::vector<std::vector<FieldElem>> roots_;
  std::unordered_map<std::string, int> root_lookup_;
  std::vector<std::vector<uint16_t>> simple_act_;  // n x 2N
  std::vector<std::vector<uint16_t>> refl_act_;    // N x 2N

  CoxeterGroup() = default;
  void generate_roots();
  void build_reflection_tables();
  std::string coord_key(const std::vector<FieldElem>& coords) const;
  std::vector<std::string> classify_components(const std::vector<int>& simple_pos_roots) const;
};

}  // namespace coxcat
