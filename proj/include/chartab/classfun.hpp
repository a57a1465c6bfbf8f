#pragma once

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "chartab/cyclo.hpp"
#include "chartab/errors.hpp"
#include "chartab/permgroup.hpp"

namespace chartab {

/// A function on a group that is constant on conjugacy classes, stored as one
/// value per class in the group's canonical class order.
class ClassFunction {
 public:
  ClassFunction() = default;
  ClassFunction(GroupPtr group, std::vector<Cyclo> values) : group_(std::move(group)), values_(std::move(values)) {
    if (!group_) throw DomainError("class function without a group");
    if (values_.size() != group_->classes().count())
      throw DomainError("class function has " + std::to_string(values_.size()) + " values but the group has " +
                        std::to_string(group_->classes().count()) + " classes");
  }

  const GroupPtr& group() const { return group_; }
  const std::vector<Cyclo>& values() const { return values_; }
  std::size_t size() const { return values_.size(); }
  const Cyclo& operator[](std::size_t j) const { return values_[j]; }

  /// Value at the identity class.
  const Cyclo& degree_value() const { return values_[0]; }

  /// Value at an arbitrary group element.
  const Cyclo& at(const Perm& p) const { return values_[group_->class_of(p)]; }

  friend bool operator==(const ClassFunction& a, const ClassFunction& b) {
    return a.group_ == b.group_ && a.values_ == b.values_;
  }

 private:
  GroupPtr group_;
  std::vector<Cyclo> values_;
};

namespace detail {

inline void require_same_group(const ClassFunction& a, const ClassFunction& b) {
  if (a.group() != b.group()) throw DomainError("class functions belong to different groups");
}

template <typename Op>
ClassFunction pointwise(const ClassFunction& a, const ClassFunction& b, Op op) {
  require_same_group(a, b);
  std::vector<Cyclo> out;
  out.reserve(a.size());
  for (std::size_t j = 0; j < a.size(); ++j) out.push_back(op(a[j], b[j]));
  return {a.group(), std::move(out)};
}

}  // namespace detail

inline ClassFunction constant_function(const GroupPtr& g, const Cyclo& value) {
  return {g, std::vector<Cyclo>(g->classes().count(), value)};
}

inline ClassFunction trivial_character(const GroupPtr& g) { return constant_function(g, Cyclo(1)); }

/// |G| at the identity class, 0 elsewhere.
inline ClassFunction regular_character(const GroupPtr& g) {
  std::vector<Cyclo> v(g->classes().count(), Cyclo(0));
  v[0] = Cyclo(static_cast<long>(g->order()));
  return {g, std::move(v)};
}

/// <f1, f2> = (1/|G|) sum_j r_j f1(g_j) conj(f2(g_j)).
inline Cyclo inner_product(const ClassFunction& f1, const ClassFunction& f2) {
  detail::require_same_group(f1, f2);
  const ClassData& cd = f1.group()->classes();
  Cyclo acc(0);
  for (std::size_t j = 0; j < f1.size(); ++j)
    acc += Cyclo(static_cast<long>(cd[j].size)) * f1[j] * f2[j].conj();
  return acc * Cyclo(Rational(1, static_cast<unsigned long>(f1.group()->order())));
}

/// (f1, f2) = (1/|G|) sum_j r_j f1(g_j) f2(g_j^-1).
inline Cyclo bilinear_form(const ClassFunction& f1, const ClassFunction& f2) {
  detail::require_same_group(f1, f2);
  const ClassData& cd = f1.group()->classes();
  Cyclo acc(0);
  for (std::size_t j = 0; j < f1.size(); ++j)
    acc += Cyclo(static_cast<long>(cd[j].size)) * f1[j] * f2[cd.inverse_class(j)];
  return acc * Cyclo(Rational(1, static_cast<unsigned long>(f1.group()->order())));
}

inline ClassFunction product(const ClassFunction& a, const ClassFunction& b) {
  return detail::pointwise(a, b, [](const Cyclo& x, const Cyclo& y) { return x * y; });
}

inline ClassFunction sum(const ClassFunction& a, const ClassFunction& b) {
  return detail::pointwise(a, b, [](const Cyclo& x, const Cyclo& y) { return x + y; });
}

inline ClassFunction difference(const ClassFunction& a, const ClassFunction& b) {
  return detail::pointwise(a, b, [](const Cyclo& x, const Cyclo& y) { return x - y; });
}

inline ClassFunction scale(const ClassFunction& a, const Cyclo& c) {
  std::vector<Cyclo> out;
  for (const auto& v : a.values()) out.push_back(c * v);
  return {a.group(), std::move(out)};
}

inline ClassFunction conjugate(const ClassFunction& a) {
  std::vector<Cyclo> out;
  for (const auto& v : a.values()) out.push_back(v.conj());
  return {a.group(), std::move(out)};
}

inline ClassFunction operator*(const ClassFunction& a, const ClassFunction& b) { return product(a, b); }
inline ClassFunction operator+(const ClassFunction& a, const ClassFunction& b) { return sum(a, b); }
inline ClassFunction operator-(const ClassFunction& a, const ClassFunction& b) { return difference(a, b); }

struct SymAltSquare {
  ClassFunction sym;  // chi_S(g) = (chi(g)^2 + chi(g^2)) / 2
  ClassFunction alt;  // chi_A(g) = (chi(g)^2 - chi(g^2)) / 2
};

inline SymAltSquare sym_alt_square(const ClassFunction& chi) {
  const ClassData& cd = chi.group()->classes();
  const Cyclo half(Rational(1, 2));
  std::vector<Cyclo> sym, alt;
  for (std::size_t j = 0; j < chi.size(); ++j) {
    const Cyclo sq = chi[j] * chi[j];
    const Cyclo at_square = chi[cd.power_class(j, 2)];
    sym.push_back(half * (sq + at_square));
    alt.push_back(half * (sq - at_square));
  }
  return {{chi.group(), std::move(sym)}, {chi.group(), std::move(alt)}};
}

inline bool is_irreducible(const ClassFunction& chi) { return inner_product(chi, chi) == Cyclo(1); }

/// Multiplicities <chi, chi_i> against a complete list of irreducible characters.
/// Throws DomainError when chi is not a nonnegative integer combination of them.
inline std::vector<long> decompose(const ClassFunction& chi, std::span<const ClassFunction> irreducibles) {
  std::vector<long> mult;
  ClassFunction rebuilt = constant_function(chi.group(), Cyclo(0));
  for (std::size_t i = 0; i < irreducibles.size(); ++i) {
    const Cyclo m = inner_product(chi, irreducibles[i]);
    if (!m.is_rational() || m.as_rational().get_den() != 1 || m.as_rational() < 0)
      throw DomainError("not a character: multiplicity of irreducible " + std::to_string(i + 1) + " is " +
                        m.to_string());
    const Rational q = m.as_rational();
    mult.push_back(q.get_num().get_si());
    if (q != 0) rebuilt = rebuilt + scale(irreducibles[i], Cyclo(q));
  }
  if (!(rebuilt == chi)) throw DomainError("not a character: multiplicities do not reconstruct the class function");
  return mult;
}

// ---------------------------------------------------------------------------
// Fourier transform on Z/nZ with fhat(q) = (1/n) sum_k f(k) zeta_n^(-kq).

namespace detail {

inline void require_length(std::span<const Cyclo> f, std::size_t n) {
  if (n == 0 || f.size() != n)
    throw DomainError("Fourier input has length " + std::to_string(f.size()) + ", expected " + std::to_string(n));
}

}  // namespace detail

inline std::vector<Cyclo> dft_cyclic(std::span<const Cyclo> f, std::size_t n) {
  detail::require_length(f, n);
  const Cyclo inv_n(Rational(1, static_cast<unsigned long>(n)));
  std::vector<Cyclo> out;
  for (std::size_t q = 0; q < n; ++q) {
    Cyclo acc(0);
    for (std::size_t k = 0; k < n; ++k) acc += f[k] * Cyclo::root_of_unity(n, -static_cast<long long>(k * q));
    out.push_back(inv_n * acc);
  }
  return out;
}

/// f(k) = sum_q fhat(q) zeta_n^(kq).
inline std::vector<Cyclo> inverse_dft_cyclic(std::span<const Cyclo> fhat, std::size_t n) {
  detail::require_length(fhat, n);
  std::vector<Cyclo> out;
  for (std::size_t k = 0; k < n; ++k) {
    Cyclo acc(0);
    for (std::size_t q = 0; q < n; ++q) acc += fhat[q] * Cyclo::root_of_unity(n, static_cast<long long>(k * q));
    out.push_back(acc);
  }
  return out;
}

struct PlancherelSides {
  Cyclo time_side;       // (1/n) sum_k |f(k)|^2
  Cyclo frequency_side;  // sum_q |fhat(q)|^2
  bool holds() const { return time_side == frequency_side; }
};

inline PlancherelSides plancherel_check(std::span<const Cyclo> f, std::size_t n) {
  const auto fhat = dft_cyclic(f, n);
  Cyclo lhs(0), rhs(0);
  for (const auto& v : f) lhs += v * v.conj();
  for (const auto& v : fhat) rhs += v * v.conj();
  return {lhs * Cyclo(Rational(1, static_cast<unsigned long>(n))), rhs};
}

}  // namespace chartab
