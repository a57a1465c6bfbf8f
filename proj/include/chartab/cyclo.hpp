#pragma once

#include <gmpxx.h>

#include <cmath>
#include <complex>
#include <concepts>
#include <cstdio>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "chartab/errors.hpp"

namespace chartab {

using Rational = mpq_class;

/// Largest cyclotomic order the field arithmetic accepts.
inline constexpr std::size_t kMaxCycloOrder = 10000;

inline std::size_t euler_phi(std::size_t n) {
  std::size_t result = n;
  for (std::size_t p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    while (n % p == 0) n /= p;
    result -= result / p;
  }
  if (n > 1) result -= result / n;
  return result;
}

/// The e-th cyclotomic polynomial, coefficients in ascending degree.
struct CycloPoly {
  std::size_t e = 1;
  std::vector<long> coeffs;
  std::size_t degree() const { return coeffs.size() - 1; }
};

namespace detail {

inline const CycloPoly& cyclotomic_polynomial_cached(std::size_t e) {
  static std::recursive_mutex mutex;
  static std::map<std::size_t, std::unique_ptr<const CycloPoly>> cache;
  std::lock_guard lock(mutex);
  if (auto it = cache.find(e); it != cache.end()) return *it->second;

  // x^e - 1 divided exactly by Phi_d for every proper divisor d of e
  std::vector<mpz_class> num(e + 1);
  num[0] = -1;
  num[e] = 1;
  for (std::size_t d = 1; d < e; ++d) {
    if (e % d) continue;
    const CycloPoly& div = cyclotomic_polynomial_cached(d);
    const std::size_t dd = div.degree();
    const std::size_t nd = num.size() - 1;
    std::vector<mpz_class> quot(nd - dd + 1);
    for (std::size_t k = nd + 1; k-- > dd;) {
      const mpz_class c = num[k];
      quot[k - dd] = c;
      if (c == 0) continue;
      for (std::size_t i = 0; i <= dd; ++i) num[k - dd + i] -= c * div.coeffs[i];
    }
    for (std::size_t i = 0; i < dd; ++i)
      if (num[i] != 0) throw InternalError("cyclotomic division left a remainder");
    num = std::move(quot);
  }
  auto poly = std::make_unique<CycloPoly>();
  poly->e = e;
  for (const auto& c : num) {
    if (!c.fits_slong_p()) throw ResourceError("cyclotomic coefficient overflow");
    poly->coeffs.push_back(c.get_si());
  }
  const CycloPoly& ref = *poly;
  cache.emplace(e, std::move(poly));
  return ref;
}

}  // namespace detail

inline const CycloPoly& cyclotomic_polynomial(std::size_t e) {
  if (e < 1 || e > kMaxCycloOrder)
    throw DomainError("cyclotomic order " + std::to_string(e) + " outside 1.." + std::to_string(kMaxCycloOrder));
  return detail::cyclotomic_polynomial_cached(e);
}

/// Canonical "p/q" text of a rational (denominator always present).
inline std::string rational_fraction(const Rational& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

inline Rational parse_rational(const std::string& text) {
  Rational q;
  if (text.empty() || q.set_str(text, 10) != 0 || q.get_den() == 0)
    throw ParseError("malformed rational '" + text + "'");
  q.canonicalize();
  return q;
}

/// An exact element of the cyclotomic field Q(zeta_e).
///
/// Stored as coordinates over the power basis 1, z, ..., z^(phi(e)-1) after
/// reduction modulo Phi_e, so two values of the same order are equal iff their
/// coordinates are. Binary operations on different orders embed both operands
/// into Q(zeta_lcm) first; results are never descended automatically.
class Cyclo {
 public:
  Cyclo() : order_(1), coeffs_(1) {}
  Cyclo(const Rational& q) : order_(1), coeffs_{q} { coeffs_[0].canonicalize(); }  // NOLINT(google-explicit-constructor)
  template <std::integral T>
  Cyclo(T v) : Cyclo(Rational(static_cast<long>(v))) {}  // NOLINT(google-explicit-constructor)

  static Cyclo from_rational(const Rational& q) { return Cyclo(q); }

  /// zeta_e^k, with k taken modulo e.
  static Cyclo root_of_unity(std::size_t e, long long k) {
    std::vector<Rational> raw(e);
    const auto ee = static_cast<long long>(e);
    raw[static_cast<std::size_t>(((k % ee) + ee) % ee)] = 1;
    return from_poly(e, std::move(raw));
  }

  /// Evaluates sum raw[k] * zeta_e^k for a polynomial of any length.
  static Cyclo from_poly(std::size_t e, std::vector<Rational> raw) {
    Cyclo out;
    out.order_ = e;
    out.coeffs_ = reduce(e, std::move(raw));
    return out;
  }

  std::size_t order() const { return order_; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  bool is_zero() const {
    for (const auto& c : coeffs_)
      if (c != 0) return false;
    return true;
  }

  bool is_rational() const {
    for (std::size_t k = 1; k < coeffs_.size(); ++k)
      if (coeffs_[k] != 0) return false;
    return true;
  }

  Rational as_rational() const {
    if (!is_rational()) throw DomainError("value " + to_string() + " is not rational");
    return coeffs_[0];
  }

  /// Same value in Q(zeta_1) when it is rational, otherwise unchanged.
  Cyclo descended() const { return is_rational() ? Cyclo(coeffs_[0]) : *this; }

  std::complex<double> to_complex() const {
    std::complex<double> z = 0.0;
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
      if (coeffs_[k] == 0) continue;
      const double angle = 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(order_);
      z += coeffs_[k].get_d() * std::polar(1.0, angle);
    }
    return z;
  }

  /// Re-embeds into Q(zeta_target); the current order must divide target.
  Cyclo change_order(std::size_t target) const {
    if (target == 0 || target % order_)
      throw DomainError("order " + std::to_string(order_) + " does not divide " + std::to_string(target));
    if (target == order_) return *this;
    const std::size_t step = target / order_;
    std::vector<Rational> raw(target);
    for (std::size_t k = 0; k < coeffs_.size(); ++k) raw[k * step] = coeffs_[k];
    return from_poly(target, std::move(raw));
  }

  /// Applies zeta -> zeta^t; requires gcd(t, order) = 1.
  Cyclo galois(long long t) const {
    const auto e = static_cast<long long>(order_);
    const long long tt = ((t % e) + e) % e;
    if (std::gcd(tt, e) != 1)
      throw DomainError("galois exponent " + std::to_string(t) + " not coprime to " + std::to_string(order_));
    if (order_ <= 2) return *this;
    std::vector<Rational> raw(order_);
    for (std::size_t k = 0; k < coeffs_.size(); ++k)
      raw[(static_cast<long long>(k) * tt) % e] += coeffs_[k];
    return from_poly(order_, std::move(raw));
  }

  /// Complex conjugate, zeta -> zeta^-1.
  Cyclo conj() const { return order_ <= 2 ? *this : galois(static_cast<long long>(order_) - 1); }

  Cyclo inverse() const;

  Cyclo operator-() const {
    Cyclo out = *this;
    for (auto& c : out.coeffs_) c = -c;
    return out;
  }

  friend Cyclo operator+(const Cyclo& a, const Cyclo& b) {
    if (a.order_ != b.order_) {
      auto [x, y] = embed_common(a, b);
      return x + y;
    }
    Cyclo out = a;
    for (std::size_t k = 0; k < out.coeffs_.size(); ++k) out.coeffs_[k] += b.coeffs_[k];
    return out;
  }

  friend Cyclo operator-(const Cyclo& a, const Cyclo& b) { return a + (-b); }

  friend Cyclo operator*(const Cyclo& a, const Cyclo& b) {
    if (b.order_ == 1) return a.scaled(b.coeffs_[0]);
    if (a.order_ == 1) return b.scaled(a.coeffs_[0]);
    if (a.order_ != b.order_) {
      auto [x, y] = embed_common(a, b);
      return x * y;
    }
    const std::size_t n = a.coeffs_.size();
    std::vector<Rational> raw(2 * n - 1);
    for (std::size_t i = 0; i < n; ++i) {
      if (a.coeffs_[i] == 0) continue;
      for (std::size_t j = 0; j < n; ++j)
        if (b.coeffs_[j] != 0) raw[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return from_poly(a.order_, std::move(raw));
  }

  friend Cyclo operator/(const Cyclo& a, const Cyclo& b) { return a * b.inverse(); }

  Cyclo& operator+=(const Cyclo& b) { return *this = *this + b; }
  Cyclo& operator-=(const Cyclo& b) { return *this = *this - b; }
  Cyclo& operator*=(const Cyclo& b) { return *this = *this * b; }

  friend bool operator==(const Cyclo& a, const Cyclo& b) {
    if (a.order_ == b.order_) return a.coeffs_ == b.coeffs_;
    auto [x, y] = embed_common(a, b);
    return x.coeffs_ == y.coeffs_;
  }

  Cyclo pow(long long s) const {
    Cyclo base = s < 0 ? inverse() : *this;
    unsigned long long n = s < 0 ? static_cast<unsigned long long>(-s) : static_cast<unsigned long long>(s);
    Cyclo acc(1);
    while (n) {
      if (n & 1U) acc *= base;
      n >>= 1U;
      if (n) base *= base;
    }
    return acc;
  }

  /// Exact form "a0 + a1*z(e)^1 + ...", omitting zero terms; z(e) is zeta_e.
  std::string to_string() const {
    std::string out;
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
      const Rational& c = coeffs_[k];
      if (c == 0) continue;
      const bool neg = c < 0;
      const Rational mag = neg ? Rational(-c) : c;
      if (out.empty()) {
        if (neg) out += "-";
      } else {
        out += neg ? " - " : " + ";
      }
      if (k == 0) {
        out += mag.get_str();
      } else {
        if (mag != 1) out += mag.get_str() + "*";
        out += "z(" + std::to_string(order_) + ")^" + std::to_string(k);
      }
    }
    return out.empty() ? "0" : out;
  }

  /// Decimal approximation, e.g. "1.6180" or "-0.5000+0.8660i".
  std::string approx(int places = 4) const {
    const std::complex<double> z = to_complex();
    const double tol = 0.5 * std::pow(10.0, -places);
    double re = std::abs(z.real()) < tol ? 0.0 : z.real();
    double im = std::abs(z.imag()) < tol ? 0.0 : z.imag();
    char buf[96];
    if (im == 0.0) {
      std::snprintf(buf, sizeof buf, "%.*f", places, re);
    } else {
      std::snprintf(buf, sizeof buf, "%.*f%+.*fi", places, re, places, im);
    }
    return buf;
  }

 private:
  Cyclo scaled(const Rational& q) const {
    Cyclo out = *this;
    for (auto& c : out.coeffs_) c *= q;
    return out;
  }

  static std::pair<Cyclo, Cyclo> embed_common(const Cyclo& a, const Cyclo& b) {
    const std::size_t l = std::lcm(a.order_, b.order_);
    return {a.change_order(l), b.change_order(l)};
  }

  static std::vector<Rational> reduce(std::size_t e, std::vector<Rational> raw) {
    const CycloPoly& phi = cyclotomic_polynomial(e);
    const std::size_t d = phi.degree();
    std::vector<Rational> folded(std::max(e, d));
    for (std::size_t k = 0; k < raw.size(); ++k)
      if (raw[k] != 0) folded[k % e] += raw[k];
    for (std::size_t k = folded.size(); k-- > d;) {
      if (folded[k] == 0) continue;
      const Rational c = folded[k];
      for (std::size_t i = 0; i <= d; ++i)
        if (phi.coeffs[i] != 0) folded[k - d + i] -= c * phi.coeffs[i];
    }
    folded.resize(d);
    return folded;
  }

  std::size_t order_;
  std::vector<Rational> coeffs_;
};

inline Cyclo Cyclo::inverse() const {
  if (is_zero()) throw DomainError("division by zero in cyclotomic field");
  if (order_ == 1) return Cyclo(Rational(1) / coeffs_[0]);
  // Solve a * x = 1 through the multiplication matrix of a on the power basis.
  const std::size_t n = coeffs_.size();
  std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n + 1));
  for (std::size_t k = 0; k < n; ++k) {
    std::vector<Rational> raw(n + k);
    for (std::size_t i = 0; i < n; ++i) raw[i + k] = coeffs_[i];
    const auto col = reduce(order_, std::move(raw));
    for (std::size_t r = 0; r < n; ++r) m[r][k] = col[r];
  }
  m[0][n] = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && m[piv][c] == 0) ++piv;
    if (piv == n) throw InternalError("singular multiplication matrix for nonzero cyclotomic");
    std::swap(m[c], m[piv]);
    const Rational inv = Rational(1) / m[c][c];
    for (std::size_t k = c; k <= n; ++k) m[c][k] *= inv;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || m[r][c] == 0) continue;
      const Rational f = m[r][c];
      for (std::size_t k = c; k <= n; ++k) m[r][k] -= f * m[c][k];
    }
  }
  Cyclo out;
  out.order_ = order_;
  out.coeffs_.resize(n);
  for (std::size_t r = 0; r < n; ++r) out.coeffs_[r] = m[r][n];
  return out;
}

inline Cyclo root_of_unity(std::size_t e, long long k) { return Cyclo::root_of_unity(e, k); }
inline Cyclo from_rational(const Rational& q) { return Cyclo::from_rational(q); }

}  // namespace chartab
