#include "bench.hpp"
#include "coxcat/noncrossing.hpp"

using namespace coxcat;

int main() {
  bench::run("build A5 (root system + tables)", [] { CoxeterGroup::build("A5"); });
  bench::run("build E6", [] { CoxeterGroup::build("E6"); });
  bench::run("build H4", [] { CoxeterGroup::build("H4"); });
  bench::run("build I2(12)", [] { CoxeterGroup::build("I2(12)"); });

  CoxeterGroup F4 = CoxeterGroup::build("F4");
  bench::run("enumerate F4 (1152 elements)", [&] { F4.all_elements(); });
  bench::run("length polynomials F4", [&] { F4.length_generating_polynomials(); });

  CoxeterGroup H4 = CoxeterGroup::build("H4");
  auto elems = H4.all_elements(20000);
  bench::run("abs_length over 1000 H4 elements", [&] {
    int acc = 0;
    for (size_t i = 0; i < 1000; ++i) acc += H4.abs_length(elems[i * 14 % elems.size()]);
    if (acc < 0) std::abort();
  });
  return 0;
}
