#pragma once

// Exact coefficient fields for root-system arithmetic: Q itself, Q(phi) for
// the H types and I2(5), and Q(2cos(pi/m)) for general dihedral groups.
// A field is Q[x]/(minpoly); elements are coefficient vectors of fixed
// length deg(minpoly), and all arithmetic goes through the NumberField
// context so that element storage stays a plain vector.

#include <algorithm>
#include <cmath>

#include "coxcat/polynomial.hpp"

namespace coxcat {

using FieldElem = std::vector<Rational>;

class NumberField {
public:
  // minpoly must be monic irreducible over Q; degree 1 gives Q itself.
  explicit NumberField(RatPoly minpoly) : minpoly_(std::move(minpoly)) {
    deg_ = minpoly_.degree();
    if (deg_ < 1) throw std::invalid_argument("NumberField: bad minimal polynomial");
  }

  static NumberField rationals() {
    return NumberField(RatPoly(std::vector<Rational>{Rational(0), Rational(1)}));
  }
  // x^2 = x + 1, the golden ratio field
  static NumberField golden() {
    NumberField f(RatPoly(std::vector<Rational>{Rational(-1), Rational(-1), Rational(1)}));
    f.set_root_bracket(Rational(1), Rational(2));
    return f;
  }
  // Q(2cos(pi/m)): minimal polynomial obtained from Phi_{2m} via y = x + 1/x.
  static NumberField real_cyclotomic(unsigned m);

  int degree() const { return deg_; }
  const RatPoly& minpoly() const { return minpoly_; }

  // Designate which real root of minpoly the generator denotes, by an
  // isolating rational bracket (lo, hi). Required before real_sign is used
  // on a field of degree > 1.
  void set_root_bracket(Rational lo, Rational hi) {
    if (!(minpoly_.eval(lo).sign() * minpoly_.eval(hi).sign() < 0))
      throw std::invalid_argument("NumberField: bracket does not isolate a root");
    lo_ = std::move(lo);
    hi_ = std::move(hi);
    has_bracket_ = true;
  }

  // Exact sign of the real value of the element under the designated
  // embedding. Interval arithmetic over the bracket, refined by exact
  // bisection until the sign is determined.
  int real_sign(const FieldElem& a) const {
    if (is_zero(a)) return 0;
    if (deg_ == 1) {
      Rational v(0);
      Rational x = -minpoly_.coeff(0);
      Rational p(1);
      for (const auto& c : a) { v += c * p; p *= x; }
      return v.sign();
    }
    if (!has_bracket_) throw std::logic_error("NumberField: no root bracket set");
    Rational lo = lo_, hi = hi_;
    int slo = minpoly_.eval(lo).sign();
    for (int iter = 0; iter < 4096; ++iter) {
      auto [vlo, vhi] = interval_eval(a, lo, hi);
      if (vlo.sign() > 0) return 1;
      if (vhi.sign() < 0) return -1;
      Rational mid = (lo + hi) * Rational(BigInt(1), BigInt(2));
      int smid = minpoly_.eval(mid).sign();
      if (smid == 0) {  // mid is the root itself, evaluate directly
        Rational v(0), p(1);
        for (const auto& c : a) { v += c * p; p *= mid; }
        return v.sign();
      }
      if (smid == slo) lo = mid; else hi = mid;
    }
    throw std::runtime_error("NumberField: sign refinement did not converge");
  }

  FieldElem zero() const { return FieldElem(deg_, Rational(0)); }
  FieldElem one() const { return scalar(Rational(1)); }
  FieldElem scalar(Rational r) const {
    FieldElem e(deg_, Rational(0));
    e[0] = std::move(r);
    return e;
  }
  // the generator x (for degree 1 this is the rational root of minpoly)
  FieldElem generator() const {
    if (deg_ == 1) return scalar(-minpoly_.coeff(0));
    FieldElem e(deg_, Rational(0));
    e[1] = Rational(1);
    return e;
  }

  bool is_zero(const FieldElem& a) const {
    for (const auto& c : a)
      if (!c.is_zero()) return false;
    return true;
  }

  FieldElem add(const FieldElem& a, const FieldElem& b) const {
    FieldElem r(deg_);
    for (int i = 0; i < deg_; ++i) r[i] = a[i] + b[i];
    return r;
  }
  FieldElem sub(const FieldElem& a, const FieldElem& b) const {
    FieldElem r(deg_);
    for (int i = 0; i < deg_; ++i) r[i] = a[i] - b[i];
    return r;
  }
  FieldElem neg(const FieldElem& a) const {
    FieldElem r(deg_);
    for (int i = 0; i < deg_; ++i) r[i] = -a[i];
    return r;
  }
  FieldElem mul(const FieldElem& a, const FieldElem& b) const {
    std::vector<Rational> prod(2 * deg_ - 1, Rational(0));
    for (int i = 0; i < deg_; ++i) {
      if (a[i].is_zero()) continue;
      for (int j = 0; j < deg_; ++j) prod[i + j] += a[i] * b[j];
    }
    reduce(prod);
    prod.resize(deg_);
    return prod;
  }
  FieldElem mul_rat(const FieldElem& a, const Rational& r) const {
    FieldElem e(deg_);
    for (int i = 0; i < deg_; ++i) e[i] = a[i] * r;
    return e;
  }
  FieldElem inv(const FieldElem& a) const;
  FieldElem div(const FieldElem& a, const FieldElem& b) const { return mul(a, inv(b)); }

  std::string str(const FieldElem& a) const {
    RatPoly p{std::vector<Rational>(a.begin(), a.end())};
    return p.str("x");
  }

private:
  RatPoly minpoly_;
  int deg_;
  bool has_bracket_ = false;
  Rational lo_, hi_;

  // Horner evaluation with rational interval arithmetic over [lo, hi].
  std::pair<Rational, Rational> interval_eval(const FieldElem& a, const Rational& lo,
                                              const Rational& hi) const {
    Rational vlo(0), vhi(0);
    for (size_t i = a.size(); i-- > 0;) {
      Rational c1 = vlo * lo, c2 = vlo * hi, c3 = vhi * lo, c4 = vhi * hi;
      Rational mn = std::min(std::min(c1, c2), std::min(c3, c4));
      Rational mx = std::max(std::max(c1, c2), std::max(c3, c4));
      vlo = mn + a[i];
      vhi = mx + a[i];
    }
    return {vlo, vhi};
  }

  void reduce(std::vector<Rational>& v) const {
    for (size_t i = v.size(); i-- > static_cast<size_t>(deg_);) {
      if (v[i].is_zero()) continue;
      Rational c = v[i];
      v[i] = Rational(0);
      // x^i = -sum_{j<deg} minpoly[j] x^{i-deg+j}   (minpoly monic)
      for (int j = 0; j < deg_; ++j)
        v[i - deg_ + j] -= c * minpoly_.coeff(j);
    }
  }
};

inline FieldElem NumberField::inv(const FieldElem& a) const {
  if (is_zero(a)) throw std::domain_error("NumberField: inverse of zero");
  if (deg_ == 1) return scalar(a[0].inv());
  // extended Euclid in Q[x]: s*a + t*minpoly = gcd = const
  RatPoly r0 = minpoly_, r1{std::vector<Rational>(a.begin(), a.end())};
  RatPoly t0, t1{Rational(1)};
  while (!r1.is_zero() && r1.degree() > 0) {
    auto [q, r2] = divmod(r0, r1);
    RatPoly t2 = t0 - q * t1;
    r0 = r1; r1 = r2;
    t0 = t1; t1 = t2;
  }
  if (r1.is_zero()) throw std::domain_error("NumberField: element not invertible");
  Rational c = r1.coeff(0).inv();
  FieldElem out = zero();
  for (int i = 0; i <= t1.degree() && i < deg_; ++i) out[i] = t1.coeff(i) * c;
  return out;
}

inline NumberField NumberField::real_cyclotomic(unsigned m) {
  // z = 2cos(pi/m) = zeta + 1/zeta for zeta a primitive 2m-th root of unity.
  // Phi_{2m}(x) is palindromic of degree 2d; dividing by x^d and writing
  // powers as x^k + x^{-k} = V_k(z) (V_0=2, V_1=z, V_k = z V_{k-1} - V_{k-2})
  // yields the minimal polynomial of z, of degree d = phi(2m)/2.
  if (m < 3) throw std::invalid_argument("real_cyclotomic: m >= 3 required");
  IntPoly phi = cyclotomic(2 * m);
  int d = phi.degree() / 2;
  std::vector<RatPoly> V(d + 1);
  V[0] = RatPoly(Rational(2));
  if (d >= 1) V[1] = RatPoly(std::vector<Rational>{Rational(0), Rational(1)});
  for (int k = 2; k <= d; ++k)
    V[k] = V[1] * V[k - 1] - V[k - 2];
  RatPoly mini = RatPoly(Rational(phi.coeff(d)));
  for (int k = 1; k <= d; ++k)
    mini += RatPoly(Rational(phi.coeff(d + k))) * V[k];
  // make monic
  Rational lead = mini.coeff(mini.degree());
  std::vector<Rational> c;
  for (int i = 0; i <= mini.degree(); ++i) c.push_back(mini.coeff(i) / lead);
  NumberField F{RatPoly(std::move(c))};
  // isolate z = 2cos(pi/m), the largest root: a double approximation padded
  // to a rational bracket, then verified exactly by a sign change
  double z = 2.0 * std::cos(3.14159265358979323846 / m);
  long long lo_n = static_cast<long long>((z - 1e-7) * (1ll << 40));
  long long hi_n = static_cast<long long>((z + 1e-7) * (1ll << 40));
  F.set_root_bracket(Rational(BigInt(lo_n), BigInt(1ll << 40)),
                     Rational(BigInt(hi_n), BigInt(1ll << 40)));
  return F;
}

// Rank of a matrix over the field, by Gaussian elimination. Rows are
// FieldElem-valued vectors; the matrix is destroyed.
inline int field_matrix_rank(const NumberField& F, std::vector<std::vector<FieldElem>>& m) {
  size_t rows = m.size();
  if (rows == 0) return 0;
  size_t cols = m[0].size();
  int rank = 0;
  size_t rr = 0;
  for (size_t c = 0; c < cols && rr < rows; ++c) {
    size_t piv = rr;
    while (piv < rows && F.is_zero(m[piv][c])) ++piv;
    if (piv == rows) continue;
    std::swap(m[rr], m[piv]);
    FieldElem pinv = F.inv(m[rr][c]);
    for (size_t r2 = rr + 1; r2 < rows; ++r2) {
      if (F.is_zero(m[r2][c])) continue;
      FieldElem f = F.mul(m[r2][c], pinv);
      for (size_t c2 = c; c2 < cols; ++c2)
        m[r2][c2] = F.sub(m[r2][c2], F.mul(f, m[rr][c2]));
    }
    ++rr;
    ++rank;
  }
  return rank;
}

}  // namespace coxcat
