#pragma once

// Arbitrary-precision signed integers and rationals. Operands in this
// project stay small (hundreds of bits at most), so schoolbook algorithms
// are used throughout.

#include <cstdint>
#include <cstdlib>
#include <compare>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace coxcat {

class BigInt {
public:
  BigInt() = default;
  BigInt(long long v) {
    if (v < 0) { sign_ = -1; }
    else if (v > 0) { sign_ = 1; }
    unsigned long long u = (v < 0) ? -static_cast<unsigned long long>(v) : v;
    while (u) { mag_.push_back(static_cast<uint32_t>(u & 0xffffffffu)); u >>= 32; }
  }
  BigInt(int v) : BigInt(static_cast<long long>(v)) {}

  static BigInt from_string(const std::string& s) {
    BigInt r;
    size_t i = 0;
    int sign = 1;
    if (i < s.size() && (s[i] == '-' || s[i] == '+')) { sign = s[i] == '-' ? -1 : 1; ++i; }
    if (i == s.size()) throw std::invalid_argument("BigInt: empty numeral");
    for (; i < s.size(); ++i) {
      if (s[i] < '0' || s[i] > '9') throw std::invalid_argument("BigInt: bad digit");
      r = r.mul_small(10);
      r = r + BigInt(s[i] - '0');
    }
    if (sign < 0) r = -r;
    return r;
  }

  bool is_zero() const { return sign_ == 0; }
  int sign() const { return sign_; }

  bool fits_ll() const {
    if (mag_.size() > 2) return false;
    unsigned long long u = abs_ull();
    return u <= 0x7fffffffffffffffull || (sign_ < 0 && u == 0x8000000000000000ull);
  }
  long long to_ll() const {
    if (!fits_ll()) throw std::overflow_error("BigInt: does not fit long long");
    unsigned long long u = abs_ull();
    return sign_ < 0 ? -static_cast<long long>(u) : static_cast<long long>(u);
  }

  friend BigInt operator-(const BigInt& a) {
    BigInt r = a;
    r.sign_ = -r.sign_;
    return r;
  }

  friend BigInt operator+(const BigInt& a, const BigInt& b) {
    if (a.sign_ == 0) return b;
    if (b.sign_ == 0) return a;
    BigInt r;
    if (a.sign_ == b.sign_) {
      r.mag_ = add_mag(a.mag_, b.mag_);
      r.sign_ = a.sign_;
    } else {
      int c = cmp_mag(a.mag_, b.mag_);
      if (c == 0) return BigInt();
      const BigInt& big = c > 0 ? a : b;
      const BigInt& small = c > 0 ? b : a;
      r.mag_ = sub_mag(big.mag_, small.mag_);
      r.sign_ = big.sign_;
    }
    return r;
  }
  friend BigInt operator-(const BigInt& a, const BigInt& b) { return a + (-b); }

  friend BigInt operator*(const BigInt& a, const BigInt& b) {
    if (a.sign_ == 0 || b.sign_ == 0) return BigInt();
    BigInt r;
    r.mag_.assign(a.mag_.size() + b.mag_.size(), 0);
    for (size_t i = 0; i < a.mag_.size(); ++i) {
      uint64_t carry = 0;
      for (size_t j = 0; j < b.mag_.size(); ++j) {
        uint64_t cur = static_cast<uint64_t>(a.mag_[i]) * b.mag_[j] + r.mag_[i + j] + carry;
        r.mag_[i + j] = static_cast<uint32_t>(cur);
        carry = cur >> 32;
      }
      size_t j = i + b.mag_.size();
      while (carry) {
        uint64_t cur = r.mag_[j] + carry;
        r.mag_[j] = static_cast<uint32_t>(cur);
        carry = cur >> 32;
        ++j;
      }
    }
    r.trim();
    r.sign_ = a.sign_ * b.sign_;
    return r;
  }

  // Truncated division (C semantics: quotient rounds toward zero).
  static void divmod(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r) {
    if (b.sign_ == 0) throw std::domain_error("BigInt: division by zero");
    if (cmp_mag(a.mag_, b.mag_) < 0) { q = BigInt(); r = a; return; }
    if (b.mag_.size() == 1) {
      uint64_t d = b.mag_[0], rem = 0;
      q.mag_.assign(a.mag_.size(), 0);
      for (size_t i = a.mag_.size(); i-- > 0;) {
        uint64_t cur = (rem << 32) | a.mag_[i];
        q.mag_[i] = static_cast<uint32_t>(cur / d);
        rem = cur % d;
      }
      q.trim();
      q.sign_ = q.mag_.empty() ? 0 : a.sign_ * b.sign_;
      r = BigInt(static_cast<long long>(rem));
      if (a.sign_ < 0) r = -r;
      return;
    }
    // Knuth-style normalized long division, one 32-bit digit at a time.
    int shift = 0;
    for (uint32_t top = b.mag_.back(); !(top & 0x80000000u); top <<= 1) ++shift;
    std::vector<uint32_t> u = shl_mag(a.mag_, shift), v = shl_mag(b.mag_, shift);
    size_t n = v.size(), m = u.size() - n;
    u.push_back(0);
    q.mag_.assign(m + 1, 0);
    for (size_t j = m + 1; j-- > 0;) {
      uint64_t num = (static_cast<uint64_t>(u[j + n]) << 32) | u[j + n - 1];
      uint64_t qhat = num / v[n - 1], rhat = num % v[n - 1];
      while (qhat > 0xffffffffull ||
             (n >= 2 && qhat * v[n - 2] > ((rhat << 32) | u[j + n - 2]))) {
        --qhat;
        rhat += v[n - 1];
        if (rhat > 0xffffffffull) break;
      }
      int64_t borrow = 0;
      uint64_t carry = 0;
      for (size_t i = 0; i < n; ++i) {
        uint64_t p = qhat * v[i] + carry;
        carry = p >> 32;
        int64_t t = static_cast<int64_t>(u[i + j]) - static_cast<int64_t>(p & 0xffffffffu) - borrow;
        u[i + j] = static_cast<uint32_t>(t);
        borrow = t < 0 ? 1 : 0;
      }
      int64_t t = static_cast<int64_t>(u[j + n]) - static_cast<int64_t>(carry) - borrow;
      u[j + n] = static_cast<uint32_t>(t);
      if (t < 0) {
        --qhat;
        uint64_t c2 = 0;
        for (size_t i = 0; i < n; ++i) {
          uint64_t s = static_cast<uint64_t>(u[i + j]) + v[i] + c2;
          u[i + j] = static_cast<uint32_t>(s);
          c2 = s >> 32;
        }
        u[j + n] = static_cast<uint32_t>(u[j + n] + c2);
      }
      q.mag_[j] = static_cast<uint32_t>(qhat);
    }
    u.resize(n);
    r.mag_ = shr_mag(u, shift);
    r.trim();
    q.trim();
    q.sign_ = q.mag_.empty() ? 0 : a.sign_ * b.sign_;
    r.sign_ = r.mag_.empty() ? 0 : a.sign_;
  }

  friend BigInt operator/(const BigInt& a, const BigInt& b) {
    BigInt q, r;
    divmod(a, b, q, r);
    return q;
  }
  friend BigInt operator%(const BigInt& a, const BigInt& b) {
    BigInt q, r;
    divmod(a, b, q, r);
    return r;
  }

  BigInt& operator+=(const BigInt& o) { return *this = *this + o; }
  BigInt& operator-=(const BigInt& o) { return *this = *this - o; }
  BigInt& operator*=(const BigInt& o) { return *this = *this * o; }
  BigInt& operator/=(const BigInt& o) { return *this = *this / o; }

  friend bool operator==(const BigInt& a, const BigInt& b) {
    return a.sign_ == b.sign_ && a.mag_ == b.mag_;
  }
  friend std::strong_ordering operator<=>(const BigInt& a, const BigInt& b) {
    if (a.sign_ != b.sign_) return a.sign_ <=> b.sign_;
    int c = cmp_mag(a.mag_, b.mag_) * (a.sign_ < 0 ? -1 : 1);
    return c <=> 0;
  }

  BigInt abs() const { return sign_ < 0 ? -*this : *this; }

  static BigInt gcd(BigInt a, BigInt b) {
    a = a.abs();
    b = b.abs();
    while (!b.is_zero()) {
      BigInt q, r;
      divmod(a, b, q, r);
      a = b;
      b = r;
    }
    return a;
  }

  static BigInt pow(const BigInt& base, unsigned e) {
    BigInt r(1), b = base;
    for (; e; e >>= 1) {
      if (e & 1) r *= b;
      b *= b;
    }
    return r;
  }

  static BigInt factorial(unsigned n) {
    BigInt r(1);
    for (unsigned i = 2; i <= n; ++i) r = r.mul_small(i);
    return r;
  }

  // binomial(n, k) for a possibly negative BigInt n and k >= 0
  static BigInt binomial(const BigInt& n, long long k) {
    if (k < 0) return BigInt();
    BigInt num(1);
    for (long long i = 0; i < k; ++i) num *= n - BigInt(i);
    return num / factorial(static_cast<unsigned>(k));
  }
  static BigInt binomial(long long n, long long k) { return binomial(BigInt(n), k); }

  std::string str() const {
    if (sign_ == 0) return "0";
    std::string digits;
    std::vector<uint32_t> m = mag_;
    while (!m.empty()) {
      uint64_t rem = 0;
      for (size_t i = m.size(); i-- > 0;) {
        uint64_t cur = (rem << 32) | m[i];
        m[i] = static_cast<uint32_t>(cur / 1000000000u);
        rem = cur % 1000000000u;
      }
      while (!m.empty() && m.back() == 0) m.pop_back();
      for (int d = 0; d < 9; ++d) {
        digits.push_back(static_cast<char>('0' + rem % 10));
        rem /= 10;
      }
    }
    while (digits.size() > 1 && digits.back() == '0') digits.pop_back();
    if (sign_ < 0) digits.push_back('-');
    return std::string(digits.rbegin(), digits.rend());
  }

  size_t hash() const {
    size_t h = static_cast<size_t>(sign_) * 0x9e3779b97f4a7c15ull;
    for (uint32_t w : mag_) h = h * 1000003u ^ w;
    return h;
  }

private:
  int sign_ = 0;
  std::vector<uint32_t> mag_;  // little-endian, no leading zeros

  unsigned long long abs_ull() const {
    unsigned long long u = 0;
    for (size_t i = mag_.size(); i-- > 0;) u = (u << 32) | mag_[i];
    return u;
  }
  void trim() {
    while (!mag_.empty() && mag_.back() == 0) mag_.pop_back();
    if (mag_.empty()) sign_ = 0;
  }
  BigInt mul_small(uint32_t f) const {
    if (sign_ == 0 || f == 0) return BigInt();
    BigInt r;
    r.sign_ = sign_;
    uint64_t carry = 0;
    for (uint32_t w : mag_) {
      uint64_t cur = static_cast<uint64_t>(w) * f + carry;
      r.mag_.push_back(static_cast<uint32_t>(cur));
      carry = cur >> 32;
    }
    if (carry) r.mag_.push_back(static_cast<uint32_t>(carry));
    return r;
  }
  static int cmp_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
    if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
    for (size_t i = a.size(); i-- > 0;)
      if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    return 0;
  }
  static std::vector<uint32_t> add_mag(const std::vector<uint32_t>& a,
                                       const std::vector<uint32_t>& b) {
    const std::vector<uint32_t>& x = a.size() >= b.size() ? a : b;
    const std::vector<uint32_t>& y = a.size() >= b.size() ? b : a;
    std::vector<uint32_t> r;
    r.reserve(x.size() + 1);
    uint64_t carry = 0;
    for (size_t i = 0; i < x.size(); ++i) {
      uint64_t cur = static_cast<uint64_t>(x[i]) + (i < y.size() ? y[i] : 0) + carry;
      r.push_back(static_cast<uint32_t>(cur));
      carry = cur >> 32;
    }
    if (carry) r.push_back(static_cast<uint32_t>(carry));
    return r;
  }
  static std::vector<uint32_t> sub_mag(const std::vector<uint32_t>& a,
                                       const std::vector<uint32_t>& b) {
    std::vector<uint32_t> r;
    r.reserve(a.size());
    int64_t borrow = 0;
    for (size_t i = 0; i < a.size(); ++i) {
      int64_t cur = static_cast<int64_t>(a[i]) - (i < b.size() ? b[i] : 0) - borrow;
      borrow = cur < 0 ? 1 : 0;
      r.push_back(static_cast<uint32_t>(cur));
    }
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
  }
  static std::vector<uint32_t> shl_mag(std::vector<uint32_t> m, int s) {
    if (s == 0) return m;
    uint32_t carry = 0;
    for (auto& w : m) {
      uint32_t nw = (w << s) | carry;
      carry = w >> (32 - s);
      w = nw;
    }
    if (carry) m.push_back(carry);
    return m;
  }
  static std::vector<uint32_t> shr_mag(std::vector<uint32_t> m, int s) {
    if (s == 0) return m;
    uint32_t carry = 0;
    for (size_t i = m.size(); i-- > 0;) {
      uint32_t nw = (m[i] >> s) | carry;
      carry = m[i] << (32 - s);
      m[i] = nw;
    }
    while (!m.empty() && m.back() == 0) m.pop_back();
    return m;
  }
};

// Always-normalized rational with BigInt parts; denominator > 0.
class Rational {
public:
  Rational() : num_(0), den_(1) {}
  Rational(long long v) : num_(v), den_(1) {}
  Rational(int v) : num_(v), den_(1) {}
  Rational(BigInt n) : num_(std::move(n)), den_(1) {}
  Rational(BigInt n, BigInt d) : num_(std::move(n)), den_(std::move(d)) { normalize(); }

  const BigInt& num() const { return num_; }
  const BigInt& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_integer() const { return den_ == BigInt(1); }
  int sign() const { return num_.sign(); }

  friend Rational operator+(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
  }
  friend Rational operator-(const Rational& a) { return Rational(-a.num_, a.den_); }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.num_, a.den_ * b.den_);
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.is_zero()) throw std::domain_error("Rational: division by zero");
    return Rational(a.num_ * b.den_, a.den_ * b.num_);
  }
  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  Rational inv() const {
    if (is_zero()) throw std::domain_error("Rational: inverse of zero");
    return Rational(den_, num_);
  }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    return (a.num_ * b.den_) <=> (b.num_ * a.den_);
  }

  std::string str() const {
    if (is_integer()) return num_.str();
    return num_.str() + "/" + den_.str();
  }

  size_t hash() const { return num_.hash() * 31 + den_.hash(); }

private:
  BigInt num_, den_;
  void normalize() {
    if (den_.is_zero()) throw std::domain_error("Rational: zero denominator");
    if (den_.sign() < 0) { num_ = -num_; den_ = -den_; }
    BigInt g = BigInt::gcd(num_, den_);
    if (!g.is_zero() && !(g == BigInt(1))) { num_ = num_ / g; den_ = den_ / g; }
    if (num_.is_zero()) den_ = BigInt(1);
  }
};

}  // namespace coxcat

template <>
struct std::hash<coxcat::BigInt> {
  size_t operator()(const coxcat::BigInt& v) const { return v.hash(); }
};
template <>
struct std::hash<coxcat::Rational> {
  size_t operator()(const coxcat::Rational& v) const { return v.hash(); }
};
