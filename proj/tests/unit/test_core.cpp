#include <doctest.h>

#include "homok/error.hpp"
#include "homok/graded_bracket.hpp"
#include "homok/group.hpp"
#include "homok/higher_orders.hpp"
#include "homok/homogeneous.hpp"
#include "homok/snf.hpp"

using namespace homok;

namespace {
std::vector<std::int64_t> inv(const std::string& spec) { return Group::parse(spec).invariant_factors().factors(); }
std::vector<std::int64_t> V(std::initializer_list<std::int64_t> l) { return l; }
}  // namespace

TEST_CASE("parse canonicalizes") {
  CHECK(inv("3,3") == V({3, 3}));
  CHECK(inv("2,3") == V({6}));
  CHECK(inv("6,4") == V({2, 12}));
  CHECK(inv("3^2,9") == V({3, 3, 9}));
  CHECK(Group::parse("1").is_trivial());
  CHECK_THROWS_AS(Group::parse("0"), Error);
  CHECK_THROWS_AS(Group::parse("3,,3"), Error);
  CHECK_THROWS_AS(Group::parse("1000,1000"), Error);
}

TEST_CASE("element order and subgroups") {
  Group G = Group::parse("3,9");
  CHECK(G.element_order(G.make_element({1, 3})) == 3);
  CHECK(G.element_order(G.zero()) == 1);
  CHECK(cyclic_subgroups(G).size() == 8);
  CHECK(cyclic_subgroups(Group::parse("6")).size() == 4);
  CHECK(cyclic_subgroups(Group::parse("3,3")).size() == 5);
  CHECK(count_cyclic_subgroups(G) == 8);
  CHECK(character_value(G, V({1, 3}), G.make_element({2, 1})) == RationalResidue(0, 1));
}

TEST_CASE("sylow") {
  auto parts = sylow_decompose(Group::parse("6,2"));
  REQUIRE(parts.size() == 2);
  CHECK(parts[0].prime == 2);
  CHECK(parts[0].sylow_group.invariant_factors().factors() == V({2, 2}));
  CHECK(parts[0].q_complement == 2);
  CHECK(parts[1].q_complement == 4);
}

TEST_CASE("higher orders") {
  CHECK(vp(48, 2) == 4);
  CHECK(vp(-27, 3) == 3);
  CHECK(vp_factorial(9, 3) == 4);
  CHECK(vp_factorial(8, 2) == 7);
  CHECK(o_prime_power(3, 1, 9) == 27);
  CHECK(o_prime_power(2, 1, 6) == 24);
  CHECK(o_prime_power(2, 2, 12) == 48);
  CHECK(higher_order(1, 15) == 15);
  CHECK(higher_order(6, 9) == 27);
  CHECK(higher_order(-3, 3) == 9);
  CHECK(higher_order(0, 5) == 0);
  CHECK(higher_order_oracle(3, 3) == 9);
  CHECK(higher_order_oracle(2, 15) == 15);
  CHECK(higher_order_oracle(1, 7) == 7);
}

TEST_CASE("snf") {
  IntMatrix M = IntMatrix::from_rows({{4, 6}, {2, 8}}, 2);
  auto s = smith_normal_form(M);
  CHECK(s.S(0, 0) == 2);
  CHECK(s.S(1, 1) == 10);
  CHECK(s.U * M * s.V == s.S);
  CHECK(s.V * s.V_inverse == IntMatrix::identity(2));
  std::vector<std::int64_t> m33{3, 3};
  CHECK(cokernel_invariants(IntMatrix::from_rows({{1, 1}}, 2), m33).factors() == V({3}));
  std::vector<std::int64_t> m39{3, 9};
  CHECK(cokernel_invariants(IntMatrix::from_rows({{0, 3}}, 2), m39).factors() == V({3, 3}));
  CHECK(subgroup_invariants(IntMatrix::from_rows({{0, 3}}, 2), m39).factors() == V({3}));
  std::vector<std::int64_t> m0{0, 4};
  CHECK(cokernel_invariants(IntMatrix::from_rows({{2, 2}}, 2), m0).factors() == V({2, 4}));
  CHECK(cokernel_invariants(IntMatrix::from_rows({{0, 2}}, 2), m0).factors() == V({2, 0}));
}

TEST_CASE("graded bracket") {
  Group Z9 = Group::parse("9");
  auto P = graded_presentation(Z9, 2);
  auto pr = project_element(P, Z9.make_element({4}));
  CHECK(pr.summand == 2);
  CHECK(pr.coordinate == 7);
  CHECK(graded_presentation(Group::parse("3"), 3).invariants().factors() == V({9}));
  CHECK(graded_presentation(Z9, 0).free_rank() == 3);
  auto P1 = graded_presentation(Z9, 1);
  CHECK(hom_invariants(P1, HomTarget::rationals_mod_integers()).factors() == V({3, 9}));
  CHECK(hom_invariants(P1, HomTarget::cyclic(3)).factors() == V({3, 3}));
  CHECK(hom_invariants(graded_presentation(Group(), 2), HomTarget::rationals_mod_integers()).factors().empty());
  CHECK_THROWS_AS(hom_invariants(graded_presentation(Z9, 0), HomTarget::rationals_mod_integers()), Error);
  Group G15 = Group::parse("15");
  CHECK(sylow_decomposition_invariants(G15, 1) == hom_invariants(graded_presentation(G15, 1), HomTarget::rationals_mod_integers()));
}

TEST_CASE("homogeneous tables") {
  Group Z3 = Group::parse("3");
  auto good = FunctionTable::rational(Z3, 1, {RationalResidue(0, 1), RationalResidue(1, 3), RationalResidue(2, 3)});
  CHECK(is_homogeneous(good).homogeneous);
  auto bad = FunctionTable::rational(Z3, 1, {RationalResidue(0, 1), RationalResidue(1, 3), RationalResidue(1, 3)});
  auto r = is_homogeneous(bad);
  REQUIRE_FALSE(r.homogeneous);
  CHECK(r.violation->x == 1);
  CHECK(r.violation->n == 2);
  auto P = graded_presentation(Z3, 1);
  std::vector<RationalResidue> c{RationalResidue(), RationalResidue(1, 3)};
  CHECK(from_coordinates(P, c) == good);
  CHECK(to_coordinates(good) == c);
  Group Z9 = Group::parse("9");
  auto P9 = graded_presentation(Z9, 2);
  std::vector<RationalResidue> c9{RationalResidue(), RationalResidue(), RationalResidue(1, 9)};
  CHECK(from_coordinates(P9, c9).rational_values()[4] == RationalResidue(7, 9));
  std::vector<FunctionTable> ts{good, good};
  std::vector<std::int64_t> w{1, -1};
  CHECK(pointwise_combine(ts, w) == FunctionTable::zero(Z3, 1));
}

#include "homok/cocyclic.hpp"

TEST_CASE("cocyclic") {
  CHECK(cocyclic_subgroups(Group::parse("9")).size() == 3);
  CHECK(cocyclic_subgroups(Group::parse("3,3")).size() == 5);
  CHECK(cocyclic_subgroups(Group::parse("3^3")).size() == 14);
  CHECK(sk1_invariants(Group::parse("15")).quotient.empty());
  CHECK(sk1_invariants(Group::parse("3,3")).quotient.empty());
  auto r = sk1_invariants(Group::parse("3^3"));
  MESSAGE("(Z/3)^3 quotient " << r.quotient.to_string() << " coc " << r.coc.to_string());
  auto full = sk1_invariants(Group::parse("3^3"), SK1Options{{}, true});
  CHECK(full.quotient == r.quotient);
  CHECK(sk1_sylow_check(Group::parse("3^3,5")).equal);
}

#include "homok/transfer.hpp"

TEST_CASE("transfer example") {
  Group Z3 = Group::parse("3"), Z9 = Group::parse("9");
  HomogeneousMap t{Z3, Z9, 1, {0, 3, 6}};
  InducedGradedMap m(t);
  CHECK(m.kernel_size() == 1);
  CHECK(m.is_onto(1));
  CHECK_FALSE(m.is_onto(2));
  std::vector<RationalResidue> f{RationalResidue(), RationalResidue(1, 3)};
  auto out = transfer_apply(m, f);
  CHECK(out[1] == RationalResidue(1, 3));
  CHECK(out[2].is_zero());
  CHECK(transfer_literal(m, f) == transfer_table(m, f));
  HomogeneousMap zero{Z3, Z9, 1, {0, 0, 0}};
  InducedGradedMap mz(zero);
  CHECK(mz.kernel_size() == 3);
  CHECK(transfer_kernel_size(mz) == transfer_kernel_size_enumerated(mz));
  CHECK(transfer_literal(mz, f) == transfer_table(mz, f));
  HomogeneousMap id{Z9, Z9, 1, {0, 1, 2, 3, 4, 5, 6, 7, 8}};
  CHECK(InducedGradedMap(id).kernel_size() == 1);
  HomogeneousMap even{Group::parse("2"), Z9, 1, {0, 0}};
  CHECK_THROWS_AS(InducedGradedMap{even}, Error);
}
