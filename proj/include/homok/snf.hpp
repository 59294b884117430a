#pragma once

// Exact Smith normal form over Z and the cokernel / subgroup computations
// built on it. Entries are arbitrary precision.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace homok {

class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static IntMatrix identity(std::size_t n);
  static IntMatrix diagonal(std::span<const std::int64_t> entries);
  static IntMatrix from_rows(const std::vector<std::vector<std::int64_t>>& rows, std::size_t cols);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  mpz_class& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const mpz_class& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  void append_row(std::span<const std::int64_t> row);

  IntMatrix operator*(const IntMatrix& rhs) const;
  friend bool operator==(const IntMatrix& a, const IntMatrix& b);

  bool is_diagonal() const;
  /// Determinant of a square matrix (fraction-free Bareiss elimination).
  mpz_class determinant() const;

  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<mpz_class> data_;
};

/// Canonical isomorphism type of a finitely generated abelian group: a divisor
/// chain d1 | d2 | ... with every entry >= 2, followed by zeros for free
/// summands.
class InvariantFactors {
 public:
  InvariantFactors() = default;

  /// Validates an already canonical chain.
  static InvariantFactors from_chain(std::vector<std::int64_t> factors);
  /// Canonical form of the direct sum of Z/a over the given orders
  /// (0 meaning Z), via Smith normal form of the diagonal relation matrix.
  static InvariantFactors from_cyclic_orders(std::span<const std::int64_t> orders);
  static InvariantFactors free(std::size_t rank);

  const std::vector<std::int64_t>& factors() const noexcept { return factors_; }
  std::size_t size() const noexcept { return factors_.size(); }
  bool empty() const noexcept { return factors_.empty(); }
  std::size_t free_rank() const;
  bool is_finite() const { return free_rank() == 0; }
  /// Group order; throws invalid_argument for infinite groups.
  mpz_class order() const;
  std::int64_t exponent() const;

  /// Direct sum with another group, recanonicalized.
  InvariantFactors operator+(const InvariantFactors& other) const;
  InvariantFactors repeated(std::size_t times) const;

  friend bool operator==(const InvariantFactors&, const InvariantFactors&) = default;

  /// "[2,12]" style rendering.
  std::string to_string() const;

 private:
  explicit InvariantFactors(std::vector<std::int64_t> f) : factors_(std::move(f)) {}
  std::vector<std::int64_t> factors_;
};

struct SmithDecomposition {
  IntMatrix U;
  IntMatrix S;
  IntMatrix V;
  IntMatrix V_inverse;
};

/// U * M * V = S with S diagonal, nonnegative, and S[i][i] | S[i+1][i+1];
/// U and V unimodular. Pivots are chosen by least absolute value.
SmithDecomposition smith_normal_form(const IntMatrix& M);

/// Diagonal of the Smith form only (no transforms tracked).
std::vector<mpz_class> smith_diagonal(const IntMatrix& M);

/// Invariant factors of (sum_i Z/m_i) / <rows of generators>. A modulus of 0
/// stands for a free summand Z.
InvariantFactors cokernel_invariants(const IntMatrix& generators,
                                     std::span<const std::int64_t> ambient_moduli);

/// A basis of a subgroup of a finite sum_i Z/m_i: independent generators whose
/// orders form a divisor chain.
struct SubgroupBasis {
  std::vector<std::vector<std::int64_t>> generators;
  std::vector<std::int64_t> orders;
};

/// Basis of the subgroup generated by the rows inside sum_i Z/m_i (all m_i >= 1).
SubgroupBasis subgroup_basis(const IntMatrix& generators, std::span<const std::int64_t> ambient_moduli);

/// Isomorphism type of the subgroup generated by the rows.
InvariantFactors subgroup_invariants(const IntMatrix& generators,
                                     std::span<const std::int64_t> ambient_moduli);

/// Incremental Hermite basis of the lattice spanned by diag(moduli) plus
/// inserted rows, for a finite ambient group. Every stored vector is reduced
/// column-wise modulo its modulus, which is valid because m_i e_i lies in the
/// lattice; this keeps all arithmetic in 64 bits.
class ModularHermiteBasis {
 public:
  explicit ModularHermiteBasis(std::span<const std::int64_t> moduli);

  void insert(std::span<const std::int64_t> row);
  void insert(const IntMatrix& rows);

  std::size_t dimension() const noexcept { return moduli_.size(); }
  /// Upper triangular n x n basis; row c has its pivot in column c.
  IntMatrix basis() const;
  /// Pivots h_cc; their product is the index of the lattice in Z^n.
  std::vector<std::int64_t> pivots() const;

 private:
  std::vector<std::int64_t> moduli_;
  std::vector<std::vector<std::int64_t>> rows_;
  std::vector<std::int64_t> scratch_;
};

}  // namespace homok
