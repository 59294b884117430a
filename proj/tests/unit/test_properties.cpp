#include <doctest.h>

#include <random>

#include "homok/graded_bracket.hpp"
#include "homok/group.hpp"
#include "homok/homogeneous.hpp"
#include "homok/snf.hpp"
#include "support/oracles.hpp"

using namespace homok;

TEST_CASE("random coordinates give homogeneous tables that round trip") {
  std::mt19937_64 rng(17);
  const std::vector<Group> groups = abelian_groups_up_to(48);
  int checked = 0;
  for (const Group& G : groups) {
    for (std::int64_t d : {-3, -1, 1, 2, 3, 4, 6}) {
      const GradedPresentation P = graded_presentation(G, d);
      std::vector<RationalResidue> coords;
      for (std::size_t i = 0; i < P.size(); ++i) {
        const std::int64_t m = P.modulus(i);
        coords.emplace_back(std::uniform_int_distribution<std::int64_t>(0, m - 1)(rng), m);
      }
      const FunctionTable t = from_coordinates(P, coords);
      REQUIRE(is_homogeneous(t).homogeneous);
      CHECK(to_coordinates(t, P) == coords);
      ++checked;
    }
  }
  CHECK(checked == static_cast<int>(groups.size()) * 7);
}

TEST_CASE("sums of homogeneous tables stay homogeneous") {
  const Group G = Group::parse("3,9");
  const GradedPresentation P = graded_presentation(G, 2);
  std::vector<RationalResidue> a(P.size()), b(P.size());
  for (std::size_t i = 0; i < P.size(); ++i) {
    a[i] = RationalResidue(1, P.modulus(i));
    b[i] = RationalResidue(static_cast<std::int64_t>(i) % P.modulus(i), P.modulus(i));
  }
  const std::vector<FunctionTable> ts{from_coordinates(P, a), from_coordinates(P, b)};
  const std::vector<std::int64_t> w{2, 5};
  const FunctionTable sum = pointwise_combine(ts, w);
  REQUIRE(is_homogeneous(sum).homogeneous);
  const auto coords = to_coordinates(sum, P);
  for (std::size_t i = 0; i < P.size(); ++i) CHECK(coords[i] == a[i].scaled(2) + b[i].scaled(5));
}

TEST_CASE("cokernels agree with coset enumeration") {
  std::mt19937_64 rng(101);
  std::uniform_int_distribution<std::int64_t> modulus(1, 9), entry(-9, 9);
  for (int trial = 0; trial < 200; ++trial) {
    testing::Vec moduli{modulus(rng), modulus(rng)};
    if (trial % 2) moduli.push_back(modulus(rng));
    std::vector<testing::Vec> rows(static_cast<std::size_t>(trial % 4));
    IntMatrix M(rows.size(), moduli.size());
    for (std::size_t i = 0; i < rows.size(); ++i)
      for (std::size_t j = 0; j < moduli.size(); ++j) {
        rows[i].push_back(entry(rng));
        M(i, j) = static_cast<long>(rows[i][j]);
      }
    const InvariantFactors inv = cokernel_invariants(M, moduli);
    CHECK(testing::cyclic_sum_fingerprint(inv.factors()) == testing::quotient_fingerprint(moduli, rows));
  }
}

TEST_CASE("finite-field oracle on small elementary groups") {
  // Cyclic and rank-two groups have trivial quotients.
  CHECK(testing::elementary_quotient_rank(3, 1) == 0);
  CHECK(testing::elementary_quotient_rank(3, 2) == 0);
  CHECK(testing::elementary_quotient_rank(5, 2) == 0);
}
