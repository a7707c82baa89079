#pragma once

// Exact univariate and bivariate polynomials, cyclotomic polynomials, and
// residue arithmetic modulo a cyclotomic polynomial.

#include <map>
#include <optional>
#include <utility>

#include "coxcat/bigint.hpp"

namespace coxcat {

// Univariate polynomial over an exact coefficient ring (BigInt or Rational).
template <class C>
class Poly {
public:
  Poly() = default;
  Poly(C c) { coeffs_.push_back(std::move(c)); trim(); }
  explicit Poly(std::vector<C> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

  static Poly monomial(C c, size_t deg) {
    std::vector<C> v(deg + 1, C(0));
    v[deg] = std::move(c);
    return Poly(std::move(v));
  }
  // [m]_q = 1 + q + ... + q^{m-1}
  static Poly q_integer(unsigned m) {
    return Poly(std::vector<C>(m, C(1)));
  }

  bool is_zero() const { return coeffs_.empty(); }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }  // -1 for zero
  const std::vector<C>& coeffs() const { return coeffs_; }
  C coeff(size_t i) const { return i < coeffs_.size() ? coeffs_[i] : C(0); }

  friend Poly operator+(const Poly& a, const Poly& b) {
    std::vector<C> r(std::max(a.coeffs_.size(), b.coeffs_.size()), C(0));
    for (size_t i = 0; i < a.coeffs_.size(); ++i) r[i] += a.coeffs_[i];
    for (size_t i = 0; i < b.coeffs_.size(); ++i) r[i] += b.coeffs_[i];
    return Poly(std::move(r));
  }
  friend Poly operator-(const Poly& a, const Poly& b) {
    std::vector<C> r(std::max(a.coeffs_.size(), b.coeffs_.size()), C(0));
    for (size_t i = 0; i < a.coeffs_.size(); ++i) r[i] += a.coeffs_[i];
    for (size_t i = 0; i < b.coeffs_.size(); ++i) r[i] -= b.coeffs_[i];
    return Poly(std::move(r));
  }
  friend Poly operator-(const Poly& a) { return Poly() - a; }
  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    std::vector<C> r(a.coeffs_.size() + b.coeffs_.size() - 1, C(0));
    for (size_t i = 0; i < a.coeffs_.size(); ++i)
      for (size_t j = 0; j < b.coeffs_.size(); ++j)
        r[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return Poly(std::move(r));
  }
  Poly& operator+=(const Poly& o) { return *this = *this + o; }
  Poly& operator-=(const Poly& o) { return *this = *this - o; }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }

  friend bool operator==(const Poly& a, const Poly& b) { return a.coeffs_ == b.coeffs_; }

  C eval(const C& x) const {
    C r(0);
    for (size_t i = coeffs_.size(); i-- > 0;) r = r * x + coeffs_[i];
    return r;
  }

  std::string str(const char* var = "q") const {
    if (is_zero()) return "0";
    std::string out;
    for (size_t i = 0; i < coeffs_.size(); ++i) {
      if (coeffs_[i] == C(0)) continue;
      if (!out.empty()) out += " + ";
      out += coeffs_[i].str();
      if (i >= 1) { out += "*"; out += var; }
      if (i >= 2) out += "^" + std::to_string(i);
    }
    return out;
  }

protected:
  std::vector<C> coeffs_;  // coeffs_[i] is the coefficient of x^i
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == C(0)) coeffs_.pop_back();
  }
};

using IntPoly = Poly<BigInt>;
using RatPoly = Poly<Rational>;

inline RatPoly to_rational(const IntPoly& p) {
  std::vector<Rational> c;
  c.reserve(p.coeffs().size());
  for (const auto& x : p.coeffs()) c.emplace_back(x);
  return RatPoly(std::move(c));
}

// Exact division over the rationals. Returns quotient and remainder.
inline std::pair<RatPoly, RatPoly> divmod(const RatPoly& a, const RatPoly& b) {
  if (b.is_zero()) throw std::domain_error("Poly: division by zero");
  RatPoly rem = a, quo;
  Rational lead = b.coeff(b.degree());
  while (!rem.is_zero() && rem.degree() >= b.degree()) {
    size_t d = rem.degree() - b.degree();
    Rational c = rem.coeff(rem.degree()) / lead;
    RatPoly t = RatPoly::monomial(c, d);
    quo += t;
    rem -= t * b;
  }
  return {quo, rem};
}

// Divides exactly, or returns nullopt when a remainder is left.
inline std::optional<IntPoly> exact_divide(const IntPoly& a, const IntPoly& b) {
  auto [q, r] = divmod(to_rational(a), to_rational(b));
  if (!r.is_zero()) return std::nullopt;
  std::vector<BigInt> c;
  c.reserve(q.coeffs().size());
  for (const auto& x : q.coeffs()) {
    if (!x.is_integer()) return std::nullopt;
    c.push_back(x.num());
  }
  return IntPoly(std::move(c));
}

// n-th cyclotomic polynomial, by dividing x^n - 1 by the lower ones.
inline IntPoly cyclotomic(unsigned n) {
  std::vector<BigInt> xn(n + 1, BigInt(0));
  xn[0] = BigInt(-1);
  xn[n] = BigInt(1);
  IntPoly p(std::move(xn));
  for (unsigned d = 1; d < n; ++d) {
    if (n % d) continue;
    auto q = exact_divide(p, cyclotomic(d));
    p = *q;
  }
  return p;
}

// Residue ring Z[q]/Phi_d(q); used to evaluate polynomials at primitive
// d-th roots of unity with exact arithmetic.
class CycInt {
public:
  explicit CycInt(unsigned d) : d_(d), phi_(cyclotomic(d)), coeffs_(phi_.degree(), BigInt(0)) {}

  unsigned order() const { return d_; }

  // residue of q^e
  static CycInt power_of_root(unsigned d, unsigned long long e) {
    CycInt r(d);
    std::vector<BigInt> v(static_cast<size_t>(e % d) + 1, BigInt(0));
    v.back() = BigInt(1);
    r.assign(IntPoly(std::move(v)));
    return r;
  }

  void assign(const IntPoly& p) {
    IntPoly rem = reduce(p);
    coeffs_.assign(phi_.degree(), BigInt(0));
    for (int i = 0; i <= rem.degree(); ++i) coeffs_[i] = rem.coeff(i);
  }

  void add_power(const BigInt& c, unsigned long long e) {
    std::vector<BigInt> v(static_cast<size_t>(e % d_) + 1, BigInt(0));
    v.back() = c;
    IntPoly rem = reduce(IntPoly(std::move(v)));
    for (int i = 0; i <= rem.degree(); ++i) coeffs_[i] += rem.coeff(i);
  }

  bool is_rational_integer() const {
    for (size_t i = 1; i < coeffs_.size(); ++i)
      if (!(coeffs_[i] == BigInt(0))) return false;
    return true;
  }
  BigInt integer_value() const {
    if (!is_rational_integer())
      throw std::domain_error("CycInt: residue is not a rational integer");
    return coeffs_.empty() ? BigInt(0) : coeffs_[0];
  }

private:
  unsigned d_;
  IntPoly phi_;
  std::vector<BigInt> coeffs_;

  IntPoly reduce(IntPoly p) const {
    auto [q, r] = divmod(to_rational(p), to_rational(phi_));
    std::vector<BigInt> c;
    for (const auto& x : r.coeffs()) c.push_back(x.num());  // Phi_d is monic
    return IntPoly(std::move(c));
  }
};

// Evaluate p at (zeta_d)^e where zeta_d is a primitive d-th root of unity;
// the result must reduce to a rational integer.
inline BigInt eval_at_root_of_unity(const IntPoly& p, unsigned d, unsigned long long e) {
  if (d == 1) {
    BigInt s(0);
    for (const auto& c : p.coeffs()) s += c;
    return s;
  }
  CycInt acc(d);
  for (int i = 0; i <= p.degree(); ++i) {
    if (p.coeff(i) == BigInt(0)) continue;
    acc.add_power(p.coeff(i), static_cast<unsigned long long>(i) * e);
  }
  return acc.integer_value();
}

// Sparse bivariate polynomial with exact integer coefficients.
class BivarPoly {
public:
  using Key = std::pair<int, int>;  // (x-degree, y-degree)

  BivarPoly() = default;
  static BivarPoly constant(BigInt c) {
    BivarPoly p;
    p.add(0, 0, std::move(c));
    return p;
  }
  static BivarPoly var_x() { BivarPoly p; p.add(1, 0, BigInt(1)); return p; }
  static BivarPoly var_y() { BivarPoly p; p.add(0, 1, BigInt(1)); return p; }

  void add(int dx, int dy, BigInt c) {
    if (c.is_zero()) return;
    auto it = terms_.find({dx, dy});
    if (it == terms_.end()) {
      terms_.emplace(Key{dx, dy}, std::move(c));
    } else {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }
  BigInt coeff(int dx, int dy) const {
    auto it = terms_.find({dx, dy});
    return it == terms_.end() ? BigInt(0) : it->second;
  }
  const std::map<Key, BigInt>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  friend BivarPoly operator+(const BivarPoly& a, const BivarPoly& b) {
    BivarPoly r = a;
    for (const auto& [k, c] : b.terms_) r.add(k.first, k.second, c);
    return r;
  }
  friend BivarPoly operator-(const BivarPoly& a, const BivarPoly& b) {
    BivarPoly r = a;
    for (const auto& [k, c] : b.terms_) r.add(k.first, k.second, -c);
    return r;
  }
  friend BivarPoly operator*(const BivarPoly& a, const BivarPoly& b) {
    BivarPoly r;
    for (const auto& [ka, ca] : a.terms_)
      for (const auto& [kb, cb] : b.terms_)
        r.add(ka.first + kb.first, ka.second + kb.second, ca * cb);
    return r;
  }
  friend bool operator==(const BivarPoly& a, const BivarPoly& b) {
    return a.terms_ == b.terms_;
  }

  BivarPoly pow(unsigned e) const {
    BivarPoly r = constant(BigInt(1)), b = *this;
    for (; e; e >>= 1) {
      if (e & 1) r = r * b;
      b = b * b;
    }
    return r;
  }

  BigInt eval(const BigInt& x, const BigInt& y) const {
    BigInt s(0);
    for (const auto& [k, c] : terms_)
      s += c * BigInt::pow(x, static_cast<unsigned>(k.first)) *
           BigInt::pow(y, static_cast<unsigned>(k.second));
    return s;
  }

  std::string str(const char* vx = "x", const char* vy = "y") const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [k, c] : terms_) {
      if (!out.empty()) out += " + ";
      out += c.str();
      if (k.first) out += std::string("*") + vx + (k.first > 1 ? "^" + std::to_string(k.first) : "");
      if (k.second) out += std::string("*") + vy + (k.second > 1 ? "^" + std::to_string(k.second) : "");
    }
    return out;
  }

private:
  std::map<Key, BigInt> terms_;
};

}  // namespace coxcat
