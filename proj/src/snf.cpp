#include "homok/snf.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "homok/arith.hpp"
#include "homok/error.hpp"

namespace homok {

// ---------------------------------------------------------------------------
// IntMatrix

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::diagonal(std::span<const std::int64_t> entries) {
  IntMatrix m(entries.size(), entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i) m(i, i) = static_cast<long>(entries[i]);
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<std::int64_t>>& rows, std::size_t cols) {
  IntMatrix m(0, cols);
  for (const auto& r : rows) m.append_row(r);
  return m;
}

void IntMatrix::append_row(std::span<const std::int64_t> row) {
  if (row.size() != cols_) {
    throw Error(Errc::invalid_argument, "row length " + std::to_string(row.size()) +
                                            " does not match column count " + std::to_string(cols_));
  }
  for (std::int64_t v : row) data_.emplace_back(static_cast<long>(v));
  ++rows_;
}

IntMatrix IntMatrix::operator*(const IntMatrix& rhs) const {
  if (cols_ != rhs.rows_) throw Error(Errc::invalid_argument, "matrix dimension mismatch");
  IntMatrix out(rows_, rhs.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t k = 0; k < cols_; ++k) {
      const mpz_class& a = (*this)(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < rhs.cols_; ++j) out(i, j) += a * rhs(k, j);
    }
  }
  return out;
}

bool operator==(const IntMatrix& a, const IntMatrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

bool IntMatrix::is_diagonal() const {
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (i != j && (*this)(i, j) != 0) return false;
  return true;
}

mpz_class IntMatrix::determinant() const {
  if (rows_ != cols_) throw Error(Errc::invalid_argument, "determinant of a non-square matrix");
  std::size_t n = rows_;
  if (n == 0) return 1;
  IntMatrix a = *this;
  int sign = 1;
  mpz_class prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t swap_with = k + 1;
      while (swap_with < n && a(swap_with, k) == 0) ++swap_with;
      if (swap_with == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(swap_with, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
      }
    }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

std::string IntMatrix::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < rows_; ++i) {
    os << (i ? ",[" : "[");
    for (std::size_t j = 0; j < cols_; ++j) os << (j ? "," : "") << (*this)(i, j).get_str();
    os << ']';
  }
  os << ']';
  return os.str();
}

// ---------------------------------------------------------------------------
// Smith normal form

namespace {

bool abs_less(const mpz_class& a, const mpz_class& b) { return mpz_cmpabs(a.get_mpz_t(), b.get_mpz_t()) < 0; }

class SmithWork {
 public:
  SmithWork(const IntMatrix& m, bool track)
      : a_(m), track_(track) {
    if (track_) {
      u_ = IntMatrix::identity(m.rows());
      v_ = IntMatrix::identity(m.cols());
      vi_ = IntMatrix::identity(m.cols());
    }
  }

  void run() {
    const std::size_t r = a_.rows(), c = a_.cols();
    for (std::size_t t = 0; t < std::min(r, c); ++t) {
      if (!move_least_to(t, t, r, c)) break;
      for (;;) {
        bool clean = true;
        for (std::size_t i = t + 1; i < r; ++i) {
          if (a_(i, t) == 0) continue;
          mpz_class q = a_(i, t) / a_(t, t);
          if (q != 0) add_row(i, t, -q);
          if (a_(i, t) != 0) clean = false;
        }
        for (std::size_t j = t + 1; j < c; ++j) {
          if (a_(t, j) == 0) continue;
          mpz_class q = a_(t, j) / a_(t, t);
          if (q != 0) add_col(j, t, -q);
          if (a_(t, j) != 0) clean = false;
        }
        if (!clean) {
          move_least_in_cross(t);
          continue;
        }
        std::size_t bad_row = find_non_divisible(t);
        if (bad_row == r) break;
        add_row(t, bad_row, 1);
      }
      if (a_(t, t) < 0) negate_row(t);
    }
  }

  IntMatrix& a() { return a_; }
  IntMatrix& u() { return u_; }
  IntMatrix& v() { return v_; }
  IntMatrix& vi() { return vi_; }

 private:
  // Moves the least nonzero |entry| of the block [r0,r1) x [c0,c1) to (r0,c0).
  bool move_least_to(std::size_t r0, std::size_t c0, std::size_t r1, std::size_t c1) {
    bool found = false;
    std::size_t bi = 0, bj = 0;
    mpz_class best;
    for (std::size_t i = r0; i < r1; ++i) {
      for (std::size_t j = c0; j < c1; ++j) {
        const mpz_class& x = a_(i, j);
        if (x == 0) continue;
        if (!found || abs_less(x, best)) {
          found = true;
          best = x;
          bi = i;
          bj = j;
          if (best == 1 || best == -1) goto done;
        }
      }
    }
  done:
    if (!found) return false;
    if (bi != r0) swap_rows(bi, r0);
    if (bj != c0) swap_cols(bj, c0);
    return true;
  }

  void move_least_in_cross(std::size_t t) {
    std::size_t bi = t, bj = t;
    mpz_class best = a_(t, t);
    for (std::size_t i = t + 1; i < a_.rows(); ++i) {
      if (a_(i, t) != 0 && (best == 0 || abs_less(a_(i, t), best))) {
        best = a_(i, t);
        bi = i;
        bj = t;
      }
    }
    for (std::size_t j = t + 1; j < a_.cols(); ++j) {
      if (a_(t, j) != 0 && (best == 0 || abs_less(a_(t, j), best))) {
        best = a_(t, j);
        bi = t;
        bj = j;
      }
    }
    if (bi != t) swap_rows(bi, t);
    if (bj != t) swap_cols(bj, t);
  }

  std::size_t find_non_divisible(std::size_t t) {
    const mpz_class& p = a_(t, t);
    for (std::size_t i = t + 1; i < a_.rows(); ++i)
      for (std::size_t j = t + 1; j < a_.cols(); ++j)
        if (a_(i, j) != 0 && !mpz_divisible_p(a_(i, j).get_mpz_t(), p.get_mpz_t())) return i;
    return a_.rows();
  }

  void swap_rows(std::size_t i, std::size_t j) {
    for (std::size_t k = 0; k < a_.cols(); ++k) std::swap(a_(i, k), a_(j, k));
    if (track_)
      for (std::size_t k = 0; k < u_.cols(); ++k) std::swap(u_(i, k), u_(j, k));
  }

  void swap_cols(std::size_t i, std::size_t j) {
    for (std::size_t k = 0; k < a_.rows(); ++k) std::swap(a_(k, i), a_(k, j));
    if (track_) {
      for (std::size_t k = 0; k < v_.rows(); ++k) std::swap(v_(k, i), v_(k, j));
      for (std::size_t k = 0; k < vi_.cols(); ++k) std::swap(vi_(i, k), vi_(j, k));
    }
  }

  // row dst += q * row src
  void add_row(std::size_t dst, std::size_t src, const mpz_class& q) {
    for (std::size_t k = 0; k < a_.cols(); ++k)
      if (a_(src, k) != 0) a_(dst, k) += q * a_(src, k);
    if (track_)
      for (std::size_t k = 0; k < u_.cols(); ++k)
        if (u_(src, k) != 0) u_(dst, k) += q * u_(src, k);
  }

  // col dst += q * col src; the inverse transform subtracts row dst from row src.
  void add_col(std::size_t dst, std::size_t src, const mpz_class& q) {
    for (std::size_t k = 0; k < a_.rows(); ++k)
      if (a_(k, src) != 0) a_(k, dst) += q * a_(k, src);
    if (track_) {
      for (std::size_t k = 0; k < v_.rows(); ++k)
        if (v_(k, src) != 0) v_(k, dst) += q * v_(k, src);
      for (std::size_t k = 0; k < vi_.cols(); ++k)
        if (vi_(dst, k) != 0) vi_(src, k) -= q * vi_(dst, k);
    }
  }

  void negate_row(std::size_t i) {
    for (std::size_t k = 0; k < a_.cols(); ++k) a_(i, k) = -a_(i, k);
    if (track_)
      for (std::size_t k = 0; k < u_.cols(); ++k) u_(i, k) = -u_(i, k);
  }

  IntMatrix a_;
  bool track_;
  IntMatrix u_, v_, vi_;
};

}  // namespace

SmithDecomposition smith_normal_form(const IntMatrix& M) {
  SmithWork work(M, true);
  work.run();
  return {std::move(work.u()), std::move(work.a()), std::move(work.v()), std::move(work.vi())};
}

std::vector<mpz_class> smith_diagonal(const IntMatrix& M) {
  SmithWork work(M, false);
  work.run();
  std::vector<mpz_class> diag;
  for (std::size_t i = 0; i < std::min(M.rows(), M.cols()); ++i) diag.push_back(work.a()(i, i));
  return diag;
}

// ---------------------------------------------------------------------------
// InvariantFactors

namespace {

std::int64_t to_int64(const mpz_class& x) {
  if (!x.fits_slong_p()) throw Error(Errc::overflow, "invariant factor exceeds 64 bits: " + x.get_str());
  return x.get_si();
}

// Smith form of a diagonal matrix by pairwise (gcd, lcm) exchange, which is a
// unimodular equivalence diag(a, b) ~ diag(gcd(a,b), lcm(a,b)).
std::vector<std::int64_t> diagonal_smith(std::vector<std::int64_t> d) {
  for (auto& x : d) x = x < 0 ? -x : x;
  for (std::size_t i = 0; i < d.size(); ++i) {
    for (std::size_t j = i + 1; j < d.size(); ++j) {
      std::int64_t g = std::gcd(d[i], d[j]);
      std::int64_t l = arith::checked_lcm(d[i], d[j]);
      d[i] = g;
      d[j] = l;
    }
  }
  return d;
}

std::vector<std::int64_t> drop_units(const std::vector<std::int64_t>& chain) {
  std::vector<std::int64_t> out;
  for (std::int64_t x : chain)
    if (x != 1) out.push_back(x);
  return out;
}

}  // namespace

InvariantFactors InvariantFactors::from_chain(std::vector<std::int64_t> factors) {
  bool seen_zero = false;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    std::int64_t f = factors[i];
    if (f == 0) {
      seen_zero = true;
      continue;
    }
    if (seen_zero || f < 2) throw Error(Errc::invalid_argument, "not a canonical invariant-factor chain");
    if (i > 0 && factors[i] % factors[i - 1] != 0)
      throw Error(Errc::invalid_argument, "invariant factors must form a divisor chain");
  }
  return InvariantFactors(std::move(factors));
}

InvariantFactors InvariantFactors::from_cyclic_orders(std::span<const std::int64_t> orders) {
  for (std::int64_t a : orders)
    if (a < 0) throw Error(Errc::invalid_argument, "cyclic order must be >= 0");
  return InvariantFactors(drop_units(diagonal_smith({orders.begin(), orders.end()})));
}

InvariantFactors InvariantFactors::free(std::size_t rank) {
  return InvariantFactors(std::vector<std::int64_t>(rank, 0));
}

std::size_t InvariantFactors::free_rank() const {
  return static_cast<std::size_t>(std::count(factors_.begin(), factors_.end(), 0));
}

mpz_class InvariantFactors::order() const {
  if (!is_finite()) throw Error(Errc::invalid_argument, "order of an infinite group");
  mpz_class n = 1;
  for (std::int64_t f : factors_) n *= static_cast<long>(f);
  return n;
}

std::int64_t InvariantFactors::exponent() const {
  if (!is_finite()) throw Error(Errc::invalid_argument, "exponent of an infinite group");
  return factors_.empty() ? 1 : factors_.back();
}

InvariantFactors InvariantFactors::operator+(const InvariantFactors& other) const {
  std::vector<std::int64_t> all = factors_;
  all.insert(all.end(), other.factors_.begin(), other.factors_.end());
  return from_cyclic_orders(all);
}

InvariantFactors InvariantFactors::repeated(std::size_t times) const {
  std::vector<std::int64_t> all;
  for (std::size_t i = 0; i < times; ++i) all.insert(all.end(), factors_.begin(), factors_.end());
  return from_cyclic_orders(all);
}

std::string InvariantFactors::to_string() const {
  std::string s = "[";
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(factors_[i]);
  }
  return s + "]";
}

// ---------------------------------------------------------------------------
// Hermite bases

ModularHermiteBasis::ModularHermiteBasis(std::span<const std::int64_t> moduli)
    : moduli_(moduli.begin(), moduli.end()), rows_(moduli.size()), scratch_(moduli.size()) {
  for (std::size_t c = 0; c < moduli_.size(); ++c) {
    if (moduli_[c] < 1) throw Error(Errc::invalid_argument, "modular Hermite basis needs moduli >= 1");
    rows_[c].assign(moduli_.size(), 0);
    rows_[c][c] = moduli_[c];
  }
}

void ModularHermiteBasis::insert(std::span<const std::int64_t> row) {
  const std::size_t n = moduli_.size();
  if (row.size() != n) throw Error(Errc::invalid_argument, "row length does not match ambient rank");
  std::vector<std::int64_t>& v = scratch_;
  bool nonzero = false;
  for (std::size_t c = 0; c < n; ++c) {
    v[c] = arith::mod(row[c], moduli_[c]);
    nonzero = nonzero || v[c] != 0;
  }
  if (!nonzero) return;
  for (std::size_t c = 0; c < n; ++c) {
    if (v[c] == 0) continue;
    std::vector<std::int64_t>& p = rows_[c];
    const std::int64_t a = p[c], b = v[c];
    if (b % a == 0) {
      const std::int64_t q = b / a;
      for (std::size_t k = c; k < n; ++k)
        if (p[k] != 0) v[k] = arith::mod(v[k] - arith::mulmod(q, p[k], moduli_[k]), moduli_[k]);
      v[c] = 0;
      continue;
    }
    // [p; v] <- [[x, y], [b/g, -a/g]] [p; v], determinant -1.
    const arith::Bezout e = arith::ext_gcd(a, b);
    const std::int64_t bg = b / e.g, ag = a / e.g;
    for (std::size_t k = c + 1; k < n; ++k) {
      const std::int64_t m = moduli_[k];
      const std::int64_t np = arith::mod(arith::mulmod(e.x, p[k], m) + arith::mulmod(e.y, v[k], m), m);
      const std::int64_t nv = arith::mod(arith::mulmod(bg, p[k], m) - arith::mulmod(ag, v[k], m), m);
      p[k] = np;
      v[k] = nv;
    }
    p[c] = e.g;
    v[c] = 0;
  }
}

void ModularHermiteBasis::insert(const IntMatrix& rows) {
  std::vector<std::int64_t> buf(moduli_.size());
  for (std::size_t i = 0; i < rows.rows(); ++i) {
    for (std::size_t c = 0; c < moduli_.size(); ++c) {
      mpz_class r = rows(i, c) % static_cast<long>(moduli_[c]);
      buf[c] = r.get_si();
    }
    insert(buf);
  }
}

IntMatrix ModularHermiteBasis::basis() const {
  IntMatrix b(moduli_.size(), moduli_.size());
  for (std::size_t r = 0; r < moduli_.size(); ++r)
    for (std::size_t c = 0; c < moduli_.size(); ++c) b(r, c) = static_cast<long>(rows_[r][c]);
  return b;
}

std::vector<std::int64_t> ModularHermiteBasis::pivots() const {
  std::vector<std::int64_t> out;
  for (std::size_t c = 0; c < moduli_.size(); ++c) out.push_back(rows_[c][c]);
  return out;
}

namespace {

// Hermite-style row compression over Z without modular reduction; keeps one
// row per pivot column.
class IntegerEchelon {
 public:
  explicit IntegerEchelon(std::size_t n) : rows_(n) {}

  void insert(std::vector<mpz_class> v) {
    const std::size_t n = rows_.size();
    for (std::size_t c = 0; c < n; ++c) {
      if (v[c] == 0) continue;
      if (rows_[c].empty()) {
        if (v[c] < 0)
          for (auto& x : v) x = -x;
        rows_[c] = std::move(v);
        return;
      }
      std::vector<mpz_class>& p = rows_[c];
      if (mpz_divisible_p(v[c].get_mpz_t(), p[c].get_mpz_t())) {
        mpz_class q = v[c] / p[c];
        for (std::size_t k = c; k < n; ++k)
          if (p[k] != 0) v[k] -= q * p[k];
        continue;
      }
      mpz_class g, x, y;
      mpz_gcdext(g.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t(), p[c].get_mpz_t(), v[c].get_mpz_t());
      mpz_class bg = v[c] / g, ag = p[c] / g;
      for (std::size_t k = c; k < n; ++k) {
        mpz_class np = x * p[k] + y * v[k];
        mpz_class nv = bg * p[k] - ag * v[k];
        p[k] = std::move(np);
        v[k] = std::move(nv);
      }
      if (p[c] < 0)
        for (auto& e : p) e = -e;
    }
  }

  IntMatrix matrix() const {
    std::size_t count = 0;
    for (const auto& r : rows_) count += r.empty() ? 0 : 1;
    IntMatrix m(count, rows_.size());
    std::size_t i = 0;
    for (const auto& r : rows_) {
      if (r.empty()) continue;
      for (std::size_t c = 0; c < rows_.size(); ++c) m(i, c) = r[c];
      ++i;
    }
    return m;
  }

 private:
  std::vector<std::vector<mpz_class>> rows_;
};

void check_columns(const IntMatrix& generators, std::span<const std::int64_t> moduli) {
  if (generators.cols() != moduli.size() && generators.rows() > 0) {
    throw Error(Errc::invalid_argument, "generator matrix has " + std::to_string(generators.cols()) +
                                            " columns but " + std::to_string(moduli.size()) +
                                            " ambient moduli were given");
  }
}

InvariantFactors chain_from_diagonal(const std::vector<mpz_class>& diag, std::size_t ambient_rank) {
  std::vector<std::int64_t> chain;
  for (std::size_t i = 0; i < ambient_rank; ++i) {
    std::int64_t s = i < diag.size() ? to_int64(abs(diag[i])) : 0;
    if (s != 1) chain.push_back(s);
  }
  std::stable_partition(chain.begin(), chain.end(), [](std::int64_t x) { return x != 0; });
  return InvariantFactors::from_chain(std::move(chain));
}

}  // namespace

InvariantFactors cokernel_invariants(const IntMatrix& generators, std::span<const std::int64_t> ambient_moduli) {
  check_columns(generators, ambient_moduli);
  const std::size_t n = ambient_moduli.size();
  for (std::int64_t m : ambient_moduli)
    if (m < 0) throw Error(Errc::invalid_argument, "ambient modulus must be >= 0");
  const bool finite = std::all_of(ambient_moduli.begin(), ambient_moduli.end(), [](std::int64_t m) { return m > 0; });
  if (finite) {
    ModularHermiteBasis hb(ambient_moduli);
    if (generators.rows() > 0) hb.insert(generators);
    return chain_from_diagonal(smith_diagonal(hb.basis()), n);
  }
  IntegerEchelon ech(n);
  for (std::size_t c = 0; c < n; ++c) {
    if (ambient_moduli[c] == 0) continue;
    std::vector<mpz_class> row(n);
    row[c] = static_cast<long>(ambient_moduli[c]);
    ech.insert(std::move(row));
  }
  for (std::size_t i = 0; i < generators.rows(); ++i) {
    std::vector<mpz_class> row(n);
    for (std::size_t c = 0; c < n; ++c) row[c] = generators(i, c);
    ech.insert(std::move(row));
  }
  return chain_from_diagonal(smith_diagonal(ech.matrix()), n);
}

SubgroupBasis subgroup_basis(const IntMatrix& generators, std::span<const std::int64_t> ambient_moduli) {
  check_columns(generators, ambient_moduli);
  const std::size_t n = ambient_moduli.size();
  ModularHermiteBasis hb(ambient_moduli);
  if (generators.rows() > 0) hb.insert(generators);
  const IntMatrix b = hb.basis();

  // The subgroup is L / D with L = rowspan(B) and D = rowspan(diag(m)).
  // Write diag(m) = X * B (B upper triangular) and take the Smith form of X:
  // in coordinates c' = c V the relations become diagonal, and the generator
  // for coordinate i is (row i of V^-1) * B.
  IntMatrix x(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t c = 0; c < n; ++c) {
      mpz_class target = (i == c) ? mpz_class(static_cast<long>(ambient_moduli[i])) : mpz_class(0);
      for (std::size_t j = 0; j < c; ++j) target -= x(i, j) * b(j, c);
      if (!mpz_divisible_p(target.get_mpz_t(), b(c, c).get_mpz_t()))
        throw Error(Errc::compute, "ambient relations are not contained in the subgroup lattice");
      x(i, c) = target / b(c, c);
    }
  }
  SmithDecomposition snf = smith_normal_form(x);
  IntMatrix images = snf.V_inverse * b;
  SubgroupBasis out;
  for (std::size_t i = 0; i < n; ++i) {
    std::int64_t s = to_int64(snf.S(i, i));
    if (s == 1) continue;
    std::vector<std::int64_t> g(n);
    for (std::size_t c = 0; c < n; ++c) {
      mpz_class r = images(i, c) % static_cast<long>(ambient_moduli[c]);
      if (r < 0) r += static_cast<long>(ambient_moduli[c]);
      g[c] = r.get_si();
    }
    out.generators.push_back(std::move(g));
    out.orders.push_back(s);
  }
  return out;
}

InvariantFactors subgroup_invariants(const IntMatrix& generators, std::span<const std::int64_t> ambient_moduli) {
  return InvariantFactors::from_chain(subgroup_basis(generators, ambient_moduli).orders);
}

}  // namespace homok
