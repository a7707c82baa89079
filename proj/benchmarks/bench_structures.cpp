#include "bench.hpp"
#include "coxcat/cluster.hpp"
#include "coxcat/noncrossing.hpp"
#include "coxcat/shi.hpp"
#include "coxcat/sieving.hpp"
#include "coxcat/triangles.hpp"

using namespace coxcat;

int main() {
  CoxeterGroup D4 = CoxeterGroup::build("D4");
  bench::run("NC(D4) interval BFS (50 elements)", [&] { NCLattice::build_bipartite(D4); });
  CoxeterGroup H4 = CoxeterGroup::build("H4");
  bench::run("NC(H4) interval BFS (280 elements)", [&] { NCLattice::build_bipartite(H4); });

  CoxeterGroup B3 = CoxeterGroup::build("B3");
  NCLattice ncb3 = NCLattice::build_bipartite(B3);
  bench::run("NC^(3)(B3) poset (220 multichains)", [&] { KDivisible::build(ncb3, 3); });

  CoxeterGroup H3 = CoxeterGroup::build("H3");
  NCLattice nch3 = NCLattice::build_bipartite(H3);
  bench::run("NC^(3)(H3) poset (384 multichains)", [&] { KDivisible::build(nch3, 3); });
  auto kd = KDivisible::build(nch3, 2);
  bench::run("M-triangle of NC^(2)(H3)", [&] { m_triangle(kd); });

  CoxeterGroup A3 = CoxeterGroup::build("A3");
  RootPoset rp = RootPoset::build(A3);
  bench::run("Shi^(2)(A3) chambers (55, exact LP)", [&] { shi_chambers(rp, 2); });

  bench::run("cluster complex Delta^(3)(H3)", [&] { ClusterComplex::build(H3, 3); });

  CoxeterGroup E8 = CoxeterGroup::build("E8");
  bench::run("q-Catalan of E8 (degree 240 division)", [&] { q_fuss_catalan(E8, 1); });
  return 0;
}
