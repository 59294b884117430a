#pragma once

// Property suites checking the structural identities exhaustively or on
// seeded random instances. Each suite stops at its first counterexample.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "homok/group.hpp"

namespace homok {

struct VerifyOptions {
  std::int64_t kmax = 60;
  std::int64_t dmax = 24;
  std::uint64_t seed = 20260101;
  /// Largest group order visited; 0 selects the suite default.
  std::int64_t max_order = 0;
  /// Random trials for randomized suites; 0 selects the suite default.
  std::int64_t trials = 0;
  /// lemma211 only: require v_2(o_d(k)) = v_2(k) + v_2(d) + 1 for every
  /// k = 2 (mod 4), including odd d, where it does not hold.
  bool strict_two_adic_equality = false;
};

struct VerifyReport {
  std::string suite;
  bool passed = true;
  std::int64_t checks = 0;
  std::optional<std::string> counterexample;
};

std::vector<std::string> verify_suite_names();
/// Throws invalid_argument for an unknown suite name.
VerifyReport run_verify_suite(const std::string& name, const VerifyOptions& options);

VerifyReport verify_lemma211(const VerifyOptions& options);
VerifyReport verify_lemma212(const VerifyOptions& options);
VerifyReport verify_prop29(const VerifyOptions& options);
VerifyReport verify_thm213(const VerifyOptions& options);
VerifyReport verify_cor214(const VerifyOptions& options);
VerifyReport verify_thm216(const VerifyOptions& options);
VerifyReport verify_prop32(const VerifyOptions& options);

/// Number of maps f: G -> Z/m with f(nx) = n^d f(x) (d >= 0), or
/// n^-d f(nx) = f(x) (d < 0), for all x and n coprime to o(x). Exhaustive
/// search over all m^|G| tables, abandoning a partial table at the first
/// violated constraint.
std::uint64_t count_homogeneous_tables(const Group& G, std::int64_t d, std::int64_t m);

/// Invariants of the graded bracket built literally as the free abelian group
/// on G modulo [n x] - n^d [x] for n = 1..(terms + 1) * o(x) coprime to o(x).
InvariantFactors graded_bracket_by_relations(const Group& G, std::int64_t d, int terms = 16);

}  // namespace homok
