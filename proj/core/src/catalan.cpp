#include "coxcat/catalan.hpp"

#include <stdexcept>

namespace coxcat {

namespace {

RatPoly kvar() { return RatPoly(std::vector<Rational>{Rational(0), Rational(1)}); }
RatPoly lin(long long a, long long b) {  // a*k + b
  return RatPoly(std::vector<Rational>{Rational(b), Rational(a)});
}
// binomial(a*k + c, m) as a polynomial in k
RatPoly binom_poly(long long a, long long c, int m) {
  RatPoly p{Rational(1)};
  for (int j = 0; j < m; ++j) p *= lin(a, c - j);
  return p * RatPoly(Rational(BigInt(1), BigInt::factorial(m)));
}

}  // namespace

RatPoly fuss_catalan_poly(const CoxeterGroup& G) {
  RatPoly p{Rational(1)};
  for (int d : G.degrees()) {
    p *= lin(G.coxeter_number(), d);
    p *= RatPoly(Rational(BigInt(1), BigInt(d)));
  }
  return p;
}

RatPoly fuss_catalan_plus_poly(const CoxeterGroup& G) {
  RatPoly p{Rational(1)};
  for (int d : G.degrees()) {
    p *= lin(G.coxeter_number(), d - 2);
    p *= RatPoly(Rational(BigInt(1), BigInt(d)));
  }
  return p;
}

BigInt fuss_catalan(const CoxeterGroup& G, long long k) {
  if (k < 0) throw std::invalid_argument("fuss_catalan: k >= 0 required, use the signed form");
  Rational v = fuss_catalan_poly(G).eval(Rational(k));
  if (!v.is_integer()) throw std::logic_error("Cat^(k) not integral");
  return v.num();
}

BigInt fuss_catalan_plus(const CoxeterGroup& G, long long k) {
  if (k < 0) throw std::invalid_argument("fuss_catalan_plus: k >= 0 required");
  Rational v = fuss_catalan_plus_poly(G).eval(Rational(k));
  if (!v.is_integer()) throw std::logic_error("Cat_+^(k) not integral");
  return v.num();
}

Rational fuss_catalan_signed(const CoxeterGroup& G, long long k) {
  return fuss_catalan_poly(G).eval(Rational(k));
}

RatPoly fuss_narayana_poly(const CoxeterGroup& G, int i) {
  int n = G.rank();
  if (i < 0 || i > n) throw std::invalid_argument("fuss_narayana: index range");
  const GroupSpec& s = G.spec();
  auto k = kvar();
  auto c = [](long long v) { return RatPoly(Rational(v)); };
  switch (s.family) {
    case Family::A: {
      long long m = n + 1;  // A_{m-1}
      return c(BigInt::binomial(m, i).to_ll()) * binom_poly(m, 0, static_cast<int>(m) - 1 - i) *
             RatPoly(Rational(BigInt(1), BigInt(m)));
    }
    case Family::B:
      return c(BigInt::binomial(n, i).to_ll()) * binom_poly(n, 0, n - i);
    case Family::D:
      return c(BigInt::binomial(n, i).to_ll()) * binom_poly(n - 1, 0, n - i) +
             c(BigInt::binomial(n - 2, i).to_ll()) * binom_poly(n - 1, 1, n - i);
    case Family::I: {
      long long m = s.dihedral_m;
      if (i == 2) return c(1);
      if (i == 1) return lin(m, 0);
      return lin(1, 0) * lin(m, -m + 2) * RatPoly(Rational(BigInt(1), BigInt(2)));
    }
    case Family::H:
      if (n == 3) {
        switch (i) {
          case 3: return c(1);
          case 2: return lin(15, 0);
          case 1: return lin(5, 0) * lin(5, -2);
          case 0: return lin(1, 0) * lin(5, -2) * lin(5, -4) * RatPoly(Rational(BigInt(1), BigInt(3)));
        }
      } else {
        switch (i) {
          case 4: return c(1);
          case 3: return lin(60, 0);
          case 2: return lin(1, 0) * lin(465, -149) * RatPoly(Rational(BigInt(1), BigInt(2)));
          case 1: return lin(15, 0) * lin(3, -1) * lin(5, -3);
          case 0:
            return lin(1, 0) * lin(3, -1) * lin(5, -3) * lin(15, -14) *
                   RatPoly(Rational(BigInt(1), BigInt(4)));
        }
      }
      break;
    case Family::F:
      switch (i) {
        case 4: return c(1);
        case 3: return lin(24, 0);
        case 2: return lin(1, 0) * lin(78, -23);
        case 1: return lin(12, 0) * lin(3, -1) * lin(2, -1);
        case 0:
          return lin(1, 0) * lin(3, -1) * lin(2, -1) * lin(6, -5) *
                 RatPoly(Rational(BigInt(1), BigInt(2)));
      }
      break;
    case Family::E:
      if (n == 6) {
        switch (i) {
          case 6: return c(1);
          case 5: return lin(36, 0);
          case 4: return lin(12, 0) * lin(21, -4);
          case 3: return lin(9, 0) * lin(4, -1) * lin(18, -5);
          case 2: return lin(2, 0) * lin(4, -1) * lin(3, -1) * lin(30, -13);
          case 1:
            return lin(6, 0) * lin(4, -1) * lin(3, -1) * lin(2, -1) * lin(12, -7) *
                   RatPoly(Rational(BigInt(1), BigInt(5)));
          case 0:
            return lin(1, 0) * lin(4, -1) * lin(3, -1) * lin(2, -1) * lin(12, -7) * lin(6, -5) *
                   RatPoly(Rational(BigInt(1), BigInt(30)));
        }
      } else if (n == 7) {
        switch (i) {
          case 7: return c(1);
          case 6: return lin(63, 0);
          case 5: return lin(21, 0) * lin(63, -11) * RatPoly(Rational(BigInt(1), BigInt(2)));
          case 4: return lin(21, 0) * lin(9, -2) * lin(27, -7) * RatPoly(Rational(BigInt(1), BigInt(2)));
          case 3:
            return lin(21, 0) * lin(9, -2) * lin(3, -1) * lin(63, -23) *
                   RatPoly(Rational(BigInt(1), BigInt(8)));
          case 2:
            return lin(3, 0) * lin(9, -2) * lin(3, -1) * lin(9, -4) * lin(207, -103) *
                   RatPoly(Rational(BigInt(1), BigInt(40)));
          case 1:
            return lin(9, 0) * lin(9, -2) * lin(3, -1) * lin(9, -4) * lin(9, -5) * lin(3, -2) *
                   RatPoly(Rational(BigInt(1), BigInt(40)));
          case 0:
            return lin(1, 0) * lin(9, -2) * lin(3, -1) * lin(9, -4) * lin(9, -5) * lin(3, -2) *
                   lin(9, -8) * RatPoly(Rational(BigInt(1), BigInt(280)));
        }
      } else {
        switch (i) {
          case 8: return c(1);
          case 7: return lin(120, 0);
          case 6: return lin(35, 0) * lin(105, -17) * RatPoly(Rational(BigInt(1), BigInt(2)));
          case 5: return lin(45, 0) * lin(5, -1) * lin(45, -11);
          case 4:
            return lin(1, 0) * lin(5, -1) *
                   RatPoly(std::vector<Rational>{Rational(1084), Rational(-6675), Rational(10350)}) *
                   RatPoly(Rational(BigInt(1), BigInt(2)));
          case 3: return lin(15, 0) * lin(5, -1) * lin(3, -1) * lin(5, -2) * lin(30, -13);
          case 2:
            return lin(5, 0) * lin(5, -1) * lin(3, -1) * lin(5, -2) * lin(15, -8) * lin(195, -107) *
                   RatPoly(Rational(BigInt(1), BigInt(48)));
          case 1:
            return lin(5, 0) * lin(5, -1) * lin(3, -1) * lin(5, -2) * lin(15, -8) * lin(5, -3) *
                   lin(15, -11) * RatPoly(Rational(BigInt(1), BigInt(56)));
          case 0:
            return lin(1, 0) * lin(5, -1) * lin(3, -1) * lin(5, -2) * lin(15, -8) * lin(5, -3) *
                   lin(15, -11) * lin(15, -14) * RatPoly(Rational(BigInt(1), BigInt(1344)));
        }
      }
      break;
  }
  throw std::logic_error("fuss_narayana_poly: unhandled case");
}

BigInt fuss_narayana(const CoxeterGroup& G, long long k, int i) {
  Rational v = fuss_narayana_poly(G, i).eval(Rational(k));
  if (!v.is_integer()) throw std::logic_error("Nar^(k) not integral");
  return v.num();
}

}  // namespace coxcat
