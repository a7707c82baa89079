#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "coxcat/coxeter.hpp"
#include "coxcat/poset.hpp"

using namespace coxcat;

TEST_CASE("bigint basics") {
  CHECK(BigInt::factorial(20).str() == "2432902008176640000");
  CHECK(BigInt::factorial(25).str() == "15511210043330985984000000");
  BigInt a = BigInt::from_string("123456789123456789123456789");
  BigInt b = BigInt::from_string("-987654321987654321");
  CHECK((a * b).str() == "-121932631356500531469135800347203169112635269");
  BigInt q, r;
  BigInt::divmod(a, b, q, r);
  CHECK((q * b + r) == a);
  CHECK(BigInt::binomial(52, 26).str() == "495918532948104");
  CHECK(BigInt::gcd(BigInt::factorial(10), BigInt::factorial(7)) == BigInt::factorial(7));
  CHECK(Rational(BigInt(6), BigInt(-4)).str() == "-3/2");
}

TEST_CASE("group construction sanity") {
  for (const char* label : {"A1", "A2", "A3", "B2", "B3", "D4", "I2(5)", "I2(7)", "H3", "F4"}) {
    CoxeterGroup G = CoxeterGroup::build(label);
    CHECK(2 * G.num_positive_roots() == G.rank() * G.coxeter_number());
  }
  CoxeterGroup A3 = CoxeterGroup::build("A3");
  CHECK(A3.order() == BigInt(24));
  CHECK(A3.num_positive_roots() == 6);
  CHECK(A3.degrees() == std::vector<int>{2, 3, 4});
  CoxeterGroup H3 = CoxeterGroup::build("H3");
  CHECK(H3.order() == BigInt(120));
  CHECK(H3.num_positive_roots() == 15);
  CHECK(H3.degrees() == std::vector<int>{2, 6, 10});
}

TEST_CASE("absolute length and order") {
  CoxeterGroup G = CoxeterGroup::build("A3");
  CHECK(G.abs_length(G.identity()) == 0);
  for (int t = 0; t < G.num_positive_roots(); ++t) CHECK(G.abs_length(G.reflection(t)) == 1);
  auto all = G.all_elements();
  CHECK(all.size() == 24);
  // (12)(34) as a point permutation
  Element w = G.from_point_permutation({2, 1, 4, 3});
  CHECK(G.abs_length(w) == 2);
  auto lp = G.length_generating_polynomials();
  CHECK(lp.p_t_enumerated == lp.p_t_formula);
  CHECK(lp.p_s_enumerated == lp.p_s_formula);
}

TEST_CASE("poset basics") {
  // chain of 3
  auto chain = FinitePoset::from_leq(3, [](int a, int b) { return a <= b; });
  CHECK(chain.covers().size() == 2);
  CHECK(chain.is_lattice());
  CHECK(chain.zeta_at(1) == BigInt(3));
  // antichain of 4
  auto anti = FinitePoset::from_leq(4, [](int a, int b) { return a == b; });
  CHECK(anti.zeta_at(5) == BigInt(4));
  CHECK(!anti.is_lattice());
  CHECK(chain.reduced_euler_char() == BigInt(0));
  auto empty = FinitePoset::from_leq(0, [](int, int) { return false; });
  CHECK(empty.reduced_euler_char() == BigInt(-1));
}

TEST_CASE("absolute order point values in A2") {
  CoxeterGroup G = CoxeterGroup::build("A2");
  Element t12 = G.from_point_permutation({2, 1, 3});
  Element c123 = G.from_point_permutation({2, 3, 1});
  Element c132 = G.from_point_permutation({3, 1, 2});
  CHECK(G.abs_leq(t12, c123));
  CHECK(!G.abs_leq(c123, c132));
  for (const auto& w : G.all_elements()) CHECK(G.abs_leq(G.identity(), w));
  // (12)(23) = (123) under right-to-left application
  Element t23 = G.from_point_permutation({1, 3, 2});
  CHECK(G.multiply(t12, t23) == c123);
  CHECK(G.invert(c123) == c132);
}

TEST_CASE("parabolic types") {
  CoxeterGroup G = CoxeterGroup::build("A3");
  CHECK(G.parabolic_type(G.identity()).empty());
  for (int t = 0; t < G.num_positive_roots(); ++t)
    CHECK(G.parabolic_type(G.reflection(t)) == std::vector<std::string>{"A1"});
  Element c = G.from_point_permutation({2, 3, 4, 1});
  CHECK(G.parabolic_type(c) == std::vector<std::string>{"A3"});
  CHECK(G.reflections_below(c).size() == 6);
  CoxeterGroup B3 = CoxeterGroup::build("B3");
  // short and long A1 parabolics stay distinguishable
  std::set<std::vector<std::string>> kinds;
  for (int t = 0; t < B3.num_positive_roots(); ++t) kinds.insert(B3.parabolic_type(B3.reflection(t)));
  CHECK(kinds.size() == 2);
}

TEST_CASE("EL verifier on toy posets") {
  // chain with increasing labels
  auto chain = FinitePoset::from_leq(3, [](int a, int b) { return a <= b; });
  CHECK(chain.verify_el_labelling({0, 1}));
  CHECK(!chain.verify_el_labelling({1, 0}));
  // diamond with both maximal chains rising fails uniqueness
  auto diamond = FinitePoset::from_covers(4, {{0, 1}, {0, 2}, {1, 3}, {2, 3}});
  CHECK(!diamond.verify_el_labelling({0, 1, 2, 3}));   // both maximal chains rise
  CHECK(diamond.verify_el_labelling({0, 1, 1, 0}));    // one rising chain, lex first
  // boolean interval of height 2 has Moebius value +1
  CHECK(diamond.mobius(0, 3) == BigInt(1));
  CHECK(diamond.mobius(0, 1) == BigInt(-1));
}
