#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <random>
#include <utility>
#include <vector>

#include "chartab/errors.hpp"

/// Arithmetic, dense linear algebra and polynomial root finding over a prime
/// field F_p with p < 2^31.
namespace chartab::modp {

using u64 = std::uint64_t;
using Vec = std::vector<u64>;
/// Row-major dense matrix.
using Mat = std::vector<Vec>;
/// Polynomial, coefficients in ascending degree, no trailing zeros (zero poly is empty).
using Poly = std::vector<u64>;

inline bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

inline std::vector<u64> prime_factors(u64 n) {
  std::vector<u64> out;
  for (u64 d = 2; d * d <= n; ++d) {
    if (n % d) continue;
    out.push_back(d);
    while (n % d == 0) n /= d;
  }
  if (n > 1) out.push_back(n);
  return out;
}

struct Field {
  u64 p;

  explicit Field(u64 prime) : p(prime) {
    if (prime < 2 || prime >= (u64{1} << 31) || !is_prime(prime)) throw DomainError("modulus is not a prime below 2^31");
  }

  u64 reduce(long long v) const {
    const auto pp = static_cast<long long>(p);
    return static_cast<u64>(((v % pp) + pp) % pp);
  }
  u64 add(u64 a, u64 b) const { return (a + b) % p; }
  u64 sub(u64 a, u64 b) const { return (a + p - b) % p; }
  u64 mul(u64 a, u64 b) const { return (a * b) % p; }
  u64 neg(u64 a) const { return a ? p - a : 0; }
  u64 pow(u64 a, u64 e) const {
    u64 r = 1;
    a %= p;
    while (e) {
      if (e & 1U) r = mul(r, a);
      a = mul(a, a);
      e >>= 1U;
    }
    return r;
  }
  u64 inv(u64 a) const {
    if (a % p == 0) throw DomainError("inverse of zero modulo p");
    return pow(a, p - 2);
  }

  /// Smallest element of multiplicative order exactly e; e must divide p-1.
  u64 element_of_order(u64 e) const {
    if ((p - 1) % e) throw DomainError("order does not divide p-1");
    const auto qs = prime_factors(e);
    for (u64 g = 2; g < p; ++g) {
      const u64 z = pow(g, (p - 1) / e);
      bool exact = true;
      for (u64 q : qs)
        if (pow(z, e / q) == 1) {
          exact = false;
          break;
        }
      if (exact) return z;
    }
    return 1;  // e == 1
  }

  /// A square root of a by Tonelli-Shanks, or nullopt for a non-residue.
  std::optional<u64> sqrt(u64 a) const {
    a %= p;
    if (a == 0) return 0;
    if (p == 2) return a;
    if (pow(a, (p - 1) / 2) != 1) return std::nullopt;
    u64 q = p - 1, s = 0;
    while (q % 2 == 0) {
      q /= 2;
      ++s;
    }
    u64 z = 2;
    while (pow(z, (p - 1) / 2) != p - 1) ++z;
    u64 m = s, c = pow(z, q), t = pow(a, q), r = pow(a, (q + 1) / 2);
    while (t != 1) {
      u64 i = 0, tt = t;
      while (tt != 1) {
        tt = mul(tt, tt);
        ++i;
      }
      u64 b = c;
      for (u64 k = 0; k + 1 < m - i; ++k) b = mul(b, b);
      m = i;
      c = mul(b, b);
      t = mul(t, c);
      r = mul(r, b);
    }
    return r;
  }
};

// ---------------------------------------------------------------------------
// Linear algebra

inline Vec mat_vec(const Field& f, const Mat& m, const Vec& v) {
  Vec out(m.size(), 0);
  for (std::size_t r = 0; r < m.size(); ++r) {
    u64 acc = 0;
    for (std::size_t c = 0; c < v.size(); ++c) acc = (acc + m[r][c] * v[c]) % f.p;
    out[r] = acc;
  }
  return out;
}

/// Basis of {x : A x = 0} for an m x n matrix A (vectors of length n).
inline std::vector<Vec> kernel(const Field& f, Mat a, std::size_t ncols) {
  const std::size_t m = a.size();
  std::vector<std::size_t> pivot_col;
  std::size_t row = 0;
  for (std::size_t col = 0; col < ncols && row < m; ++col) {
    std::size_t piv = row;
    while (piv < m && a[piv][col] == 0) ++piv;
    if (piv == m) continue;
    std::swap(a[row], a[piv]);
    const u64 inv = f.inv(a[row][col]);
    for (auto& x : a[row]) x = f.mul(x, inv);
    for (std::size_t r = 0; r < m; ++r) {
      if (r == row || a[r][col] == 0) continue;
      const u64 factor = a[r][col];
      for (std::size_t c = 0; c < ncols; ++c) a[r][c] = f.sub(a[r][c], f.mul(factor, a[row][c]));
    }
    pivot_col.push_back(col);
    ++row;
  }
  std::vector<bool> is_pivot(ncols, false);
  for (auto c : pivot_col) is_pivot[c] = true;
  std::vector<Vec> basis;
  for (std::size_t free = 0; free < ncols; ++free) {
    if (is_pivot[free]) continue;
    Vec x(ncols, 0);
    x[free] = 1;
    for (std::size_t r = 0; r < pivot_col.size(); ++r) x[pivot_col[r]] = f.neg(a[r][free]);
    basis.push_back(std::move(x));
  }
  return basis;
}

/// Minimal polynomial of v under m (monic), from the Krylov sequence v, mv, m^2 v, ...
inline Poly krylov_min_poly(const Field& f, const Mat& m, const Vec& v) {
  const std::size_t n = v.size();
  std::vector<Vec> rows;    // reduced Krylov vectors
  std::vector<Vec> combos;  // rows[i] = sum combos[i][k] * (m^k v)
  std::vector<std::size_t> pivots;
  Vec cur = v;
  for (std::size_t k = 0; k <= n; ++k) {
    Vec red = cur;
    Vec comb(k + 1, 0);
    comb[k] = 1;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      const u64 factor = red[pivots[i]];
      if (factor == 0) continue;
      for (std::size_t c = 0; c < n; ++c) red[c] = f.sub(red[c], f.mul(factor, rows[i][c]));
      for (std::size_t c = 0; c < combos[i].size(); ++c) comb[c] = f.sub(comb[c], f.mul(factor, combos[i][c]));
    }
    std::size_t piv = 0;
    while (piv < n && red[piv] == 0) ++piv;
    if (piv == n) return comb;  // comb[k] == 1
    const u64 inv = f.inv(red[piv]);
    for (auto& x : red) x = f.mul(x, inv);
    for (auto& x : comb) x = f.mul(x, inv);
    rows.push_back(std::move(red));
    combos.push_back(std::move(comb));
    pivots.push_back(piv);
    cur = mat_vec(f, m, cur);
  }
  throw InternalError("Krylov sequence did not terminate");
}

// ---------------------------------------------------------------------------
// Polynomials

inline void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

inline std::pair<Poly, Poly> divmod(const Field& f, Poly a, const Poly& b) {
  trim(a);
  if (b.empty()) throw DomainError("polynomial division by zero");
  if (a.size() < b.size()) return {{}, a};
  const u64 lead_inv = f.inv(b.back());
  Poly q(a.size() - b.size() + 1, 0);
  for (std::size_t k = a.size(); k-- >= b.size();) {
    const u64 c = f.mul(a[k], lead_inv);
    q[k - (b.size() - 1)] = c;
    if (c == 0) continue;
    for (std::size_t i = 0; i < b.size(); ++i)
      a[k - (b.size() - 1) + i] = f.sub(a[k - (b.size() - 1) + i], f.mul(c, b[i]));
  }
  trim(a);
  trim(q);
  return {q, a};
}

inline Poly monic(const Field& f, Poly a) {
  trim(a);
  if (a.empty()) return a;
  const u64 inv = f.inv(a.back());
  for (auto& x : a) x = f.mul(x, inv);
  return a;
}

inline Poly gcd(const Field& f, Poly a, Poly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = divmod(f, a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return monic(f, a);
}

inline Poly mulmod(const Field& f, const Poly& a, const Poly& b, const Poly& mod) {
  if (a.empty() || b.empty()) return {};
  Poly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] = (out[i + j] + a[i] * b[j]) % f.p;
  return divmod(f, out, mod).second;
}

inline Poly powmod(const Field& f, Poly base, u64 e, const Poly& mod) {
  Poly r{1};
  base = divmod(f, base, mod).second;
  while (e) {
    if (e & 1U) r = mulmod(f, r, base, mod);
    base = mulmod(f, base, base, mod);
    e >>= 1U;
  }
  return r;
}

namespace detail {

inline void split_roots(const Field& f, const Poly& poly, std::mt19937_64& rng, std::vector<u64>& roots) {
  if (poly.size() <= 1) return;
  if (poly.size() == 2) {
    roots.push_back(f.mul(f.neg(poly[0]), f.inv(poly[1])));
    return;
  }
  std::uniform_int_distribution<u64> dist(0, f.p - 1);
  for (int attempt = 0; attempt < 256; ++attempt) {
    const Poly shifted{dist(rng), 1};
    Poly t = powmod(f, shifted, (f.p - 1) / 2, poly);
    if (t.empty()) t = {0};
    t[0] = f.sub(t[0], 1);
    Poly g = gcd(f, poly, t);
    if (g.size() > 1 && g.size() < poly.size()) {
      split_roots(f, g, rng, roots);
      split_roots(f, divmod(f, poly, g).first, rng, roots);
      return;
    }
  }
  throw InternalError("equal-degree splitting failed to separate roots");
}

}  // namespace detail

/// All roots in F_p of a nonzero polynomial, ascending, without multiplicity.
inline std::vector<u64> roots(const Field& f, Poly poly, std::mt19937_64& rng) {
  poly = monic(f, poly);
  if (poly.size() <= 1) return {};
  // the split, squarefree part gcd(poly, x^p - x)
  Poly xp = powmod(f, Poly{0, 1}, f.p, poly);
  xp.resize(std::max<std::size_t>(xp.size(), 2), 0);
  xp[1] = f.sub(xp[1], 1);
  trim(xp);
  Poly split = xp.empty() ? poly : gcd(f, poly, xp);
  std::vector<u64> out;
  detail::split_roots(f, split, rng, out);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace chartab::modp
