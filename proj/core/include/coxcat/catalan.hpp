#pragma once

// Closed-form Fuss-Catalan and Fuss-Narayana arithmetic, exact in k: the
// numbers are represented as polynomials in k and evaluated on demand.

#include "coxcat/coxeter.hpp"
#include "coxcat/polynomial.hpp"

namespace coxcat {

// prod_i (kh + d_i)/d_i as a polynomial in k
RatPoly fuss_catalan_poly(const CoxeterGroup& G);
// prod_i (kh + d_i - 2)/d_i
RatPoly fuss_catalan_plus_poly(const CoxeterGroup& G);

BigInt fuss_catalan(const CoxeterGroup& G, long long k);
BigInt fuss_catalan_plus(const CoxeterGroup& G, long long k);
// signed evaluation at arbitrary integers (e.g. Cat^(-k-1) = +-Cat_+^(k))
Rational fuss_catalan_signed(const CoxeterGroup& G, long long k);

// Nar^(k)(W, i) as a polynomial in k; closed forms for A, B, D and the
// published table for the dihedral and exceptional types
RatPoly fuss_narayana_poly(const CoxeterGroup& G, int i);
BigInt fuss_narayana(const CoxeterGroup& G, long long k, int i);

}  // namespace coxcat
