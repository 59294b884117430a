#pragma once

// Independent brute-force oracles. They share no code with the library beyond
// the C++ standard library, so agreement is evidence rather than tautology.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <vector>

namespace homok::testing {

using Vec = std::vector<std::int64_t>;

/// All vectors of (Z/p)^r in lexicographic order.
inline std::vector<Vec> all_vectors(std::int64_t p, int r) {
  std::vector<Vec> out{Vec{}};
  for (int i = 0; i < r; ++i) {
    std::vector<Vec> next;
    for (const Vec& v : out)
      for (std::int64_t a = 0; a < p; ++a) {
        Vec w = v;
        w.push_back(a);
        next.push_back(std::move(w));
      }
    out = std::move(next);
  }
  return out;
}

inline std::int64_t dot(const Vec& a, const Vec& b, std::int64_t p) {
  std::int64_t s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s = (s + a[i] * b[i]) % p;
  return s;
}

inline std::int64_t inverse_mod_prime(std::int64_t a, std::int64_t p) {
  std::int64_t r = 1, e = p - 2;
  for (a %= p; e > 0; e >>= 1, a = a * a % p)
    if (e & 1) r = r * a % p;
  return r;
}

/// Rank over F_p by Gaussian elimination.
inline std::size_t rank_mod_p(std::vector<Vec> rows, std::int64_t p) {
  std::size_t rank = 0;
  const std::size_t cols = rows.empty() ? 0 : rows[0].size();
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][c] % p == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    const std::int64_t inv = inverse_mod_prime(rows[rank][c], p);
    for (std::int64_t& x : rows[rank]) x = x * inv % p;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || rows[r][c] == 0) continue;
      const std::int64_t f = rows[r][c];
      for (std::size_t k = 0; k < cols; ++k) rows[r][k] = ((rows[r][k] - f * rows[rank][k]) % p + p) % p;
    }
    ++rank;
  }
  return rank;
}

/// For G = (Z/p)^r: a degree-one homogeneous function is free on one
/// representative per line, so Hmg(G) = (Z/p)^lines. Cocyclic subgroups are G
/// and the hyperplanes ker(psi); their characters are restrictions of linear
/// functionals. Returns the number of Z/p summands of Hmg(G)/Coc(G).
inline std::size_t elementary_quotient_rank(std::int64_t p, int r) {
  std::vector<Vec> reps;
  for (const Vec& v : all_vectors(p, r)) {
    auto lead = std::find_if(v.begin(), v.end(), [](std::int64_t a) { return a != 0; });
    if (lead != v.end() && *lead == 1) reps.push_back(v);
  }
  const std::vector<Vec> functionals = all_vectors(p, r);
  std::vector<Vec> rows;
  std::vector<const Vec*> kernels{nullptr};
  for (const Vec& psi : reps) kernels.push_back(&psi);
  for (const Vec* psi : kernels) {
    for (const Vec& lambda : functionals) {
      Vec row;
      for (const Vec& x : reps) row.push_back(psi == nullptr || dot(*psi, x, p) == 0 ? dot(lambda, x, p) : 0);
      rows.push_back(std::move(row));
    }
  }
  return reps.size() - rank_mod_p(std::move(rows), p);
}

/// Fingerprint of a finite abelian group A: n -> #{a in A : n a = 0} for each
/// n dividing |A|. Two finite abelian groups are isomorphic iff these agree.
using Fingerprint = std::map<std::int64_t, std::int64_t>;

/// Fingerprint of (sum_i Z/m_i) / <rows>, by closing the subgroup and counting
/// cosets element by element.
inline Fingerprint quotient_fingerprint(const Vec& moduli, const std::vector<Vec>& rows) {
  std::int64_t order = 1;
  for (std::int64_t m : moduli) order *= m;
  auto encode = [&](const Vec& v) {
    std::int64_t code = 0;
    for (std::size_t i = 0; i < moduli.size(); ++i) code = code * moduli[i] + ((v[i] % moduli[i]) + moduli[i]) % moduli[i];
    return code;
  };
  auto decode = [&](std::int64_t code) {
    Vec v(moduli.size());
    for (std::size_t i = moduli.size(); i-- > 0;) {
      v[i] = code % moduli[i];
      code /= moduli[i];
    }
    return v;
  };
  std::vector<char> in_h(static_cast<std::size_t>(order), 0);
  std::vector<std::int64_t> frontier{0};
  in_h[0] = 1;
  while (!frontier.empty()) {
    const Vec v = decode(frontier.back());
    frontier.pop_back();
    for (const Vec& r : rows) {
      Vec w = v;
      for (std::size_t i = 0; i < w.size(); ++i) w[i] += r[i];
      const std::int64_t code = encode(w);
      if (!in_h[code]) {
        in_h[code] = 1;
        frontier.push_back(code);
      }
    }
  }
  const std::int64_t h = std::count(in_h.begin(), in_h.end(), 1);
  const std::int64_t q = order / h;
  Fingerprint fp;
  for (std::int64_t n = 1; n <= q; ++n) {
    if (q % n) continue;
    std::int64_t hits = 0;
    for (std::int64_t code = 0; code < order; ++code) {
      Vec v = decode(code);
      for (std::int64_t& x : v) x *= n;
      hits += in_h[encode(v)];
    }
    fp[n] = hits / h;
  }
  return fp;
}

/// Fingerprint of sum_i Z/c_i computed from the factor list.
inline Fingerprint cyclic_sum_fingerprint(const Vec& factors) {
  std::int64_t q = 1;
  for (std::int64_t c : factors) q *= c;
  Fingerprint fp;
  for (std::int64_t n = 1; n <= q; ++n) {
    if (q % n) continue;
    std::int64_t count = 1;
    for (std::int64_t c : factors) count *= std::gcd(n, c);
    fp[n] = count;
  }
  return fp;
}

}  // namespace homok::testing
