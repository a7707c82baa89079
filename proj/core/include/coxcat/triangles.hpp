#pragma once

// Chapoton triangles: the Moebius generating function M over the poset of
// delta sequences, the floor statistic H over the extended Shi chambers,
// the face statistic F over the generalized cluster complex, the conjectured
// transform identities relating them, and their duals.

#include "coxcat/cluster.hpp"
#include "coxcat/noncrossing.hpp"
#include "coxcat/shi.hpp"

namespace coxcat {

BivarPoly m_triangle(const KDivisible& kd);
BivarPoly h_triangle(const ShiArrangement& shi);
BivarPoly f_triangle(const ClusterComplex& cc);

// each direction of the conjectured transform identities
BivarPoly m_from_f(const BivarPoly& F, int n);
BivarPoly m_from_h(const BivarPoly& H, int n);
BivarPoly h_from_m(const BivarPoly& M, int n);
BivarPoly h_from_f(const BivarPoly& F, int n);
BivarPoly f_from_m(const BivarPoly& M, int n);
BivarPoly f_from_h(const BivarPoly& H, int n);

struct TriangleChecks {
  bool m_f = false, m_h = false, h_m = false, h_f = false, f_m = false, f_h = false;
  bool all() const { return m_f && m_h && h_m && h_f && f_m && f_h; }
};
TriangleChecks check_transforms(const BivarPoly& M, const BivarPoly& H, const BivarPoly& F, int n);

BivarPoly dual_m(const BivarPoly& M, int n);
BivarPoly dual_h(const BivarPoly& H, int n);
BivarPoly dual_f(const BivarPoly& F, int n);

// dual F-triangle prediction: coefficients scaled by Nar^(k)/Nar^(1) per
// face cardinality; rational-valued in general
std::map<std::pair<int, int>, Rational> dual_f_prediction(const ClusterComplex& cc);

}  // namespace coxcat
