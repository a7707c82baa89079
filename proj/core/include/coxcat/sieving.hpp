#pragma once

// q-Fuss-Catalan polynomials, cyclic sieving verification for the C* action
// on delta sequences and the tau* action on colored clusters, and the
// maximal-interval overlap statistic.

#include "coxcat/catalan.hpp"
#include "coxcat/cluster.hpp"
#include "coxcat/noncrossing.hpp"

namespace coxcat {

struct QCatalan {
  IntPoly poly;
  bool exact_division = true;        // the defining quotient left no remainder
  bool nonnegative_coeffs = true;    // conjectured in general, reported
};
QCatalan q_fuss_catalan(const CoxeterGroup& G, int k);

struct SievingReport {
  long long order = 0;
  std::vector<BigInt> fixed;       // fixed points of the j-th power
  std::vector<BigInt> evaluated;   // q-Catalan at the j-th power of the root
  bool pass = false;
};

// (NC_(k)(W), qCat^(k), <C*>), C* of order kh
SievingReport sieving_nc(const KDivisible& kd);
// (facets of Delta^(k)(W), qCat^(k), <tau*>)
SievingReport sieving_clusters(const ClusterComplex& cc);

// expected number of maximal intervals containing a uniformly random
// l-multichain with bottom rank i; exact rational
Rational overlap_statistic(const KDivisible& kd, int l, int i);

}  // namespace coxcat
