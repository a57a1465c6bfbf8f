#pragma once

#include <cmath>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "chartab/classfun.hpp"
#include "chartab/cyclo.hpp"
#include "chartab/errors.hpp"
#include "chartab/modp.hpp"
#include "chartab/permgroup.hpp"
#include "chartab/tablegen.hpp"

namespace chartab {

// ---------------------------------------------------------------------------
// Restriction

inline ClassFunction restrict(const ClassFunction& chi, const Subgroup& h) {
  if (chi.group() != h.parent()) throw DomainError("subgroup is not a subgroup of the character's group");
  const auto& fusion = h.class_fusion();
  std::vector<Cyclo> values;
  for (auto j : fusion) values.push_back(chi[j]);
  return {h.group(), std::move(values)};
}

enum class SplitCase { Irreducible, Splits, Reducible };

inline const char* split_case_name(SplitCase c) {
  switch (c) {
    case SplitCase::Irreducible: return "irreducible";
    case SplitCase::Splits: return "splits";
    case SplitCase::Reducible: return "reducible";
  }
  return "?";
}

struct RestrictionReport {
  std::size_t char_index = 0;
  ClassFunction restricted;
  std::vector<long> multiplicities;
  Rational norm;
  std::size_t index = 1;
  bool vanishes_off_subgroup = false;
  bool bound_holds = false;     // norm <= [G:H], with equality exactly when chi vanishes off H
  bool index_two_holds = true;  // index 2: norm 1 iff nonzero off H, norm 2 iff two distinct constituents
  SplitCase split = SplitCase::Reducible;

  bool consistent() const { return bound_holds && index_two_holds; }
};

/// Requires chi irreducible on G; decomposes chi|_H against an independently
/// built table of H.
inline RestrictionReport restriction_report(const ClassFunction& chi, const Subgroup& h, const CharacterTable& sub_table,
                                            std::size_t char_index = 0) {
  if (sub_table.group != h.group()) throw DomainError("subgroup table belongs to a different group");
  RestrictionReport r;
  r.char_index = char_index;
  r.restricted = restrict(chi, h);
  r.multiplicities = decompose(r.restricted, sub_table);
  r.index = h.index();

  const Cyclo norm = inner_product(r.restricted, r.restricted);
  if (!norm.is_rational()) throw InternalError("restriction norm is not rational");
  r.norm = norm.as_rational();
  Rational squares = 0;
  for (long d : r.multiplicities) squares += d * d;
  if (squares != r.norm) throw InternalError("sum of squared multiplicities differs from the restriction norm");

  const PermGroup& g = *chi.group();
  const ClassData& cd = g.classes();
  r.vanishes_off_subgroup = true;
  for (std::size_t j = 0; j < cd.count() && r.vanishes_off_subgroup; ++j) {
    if (chi[j].is_zero()) continue;
    for (auto idx : cd.members(j))
      if (!h.contains(g.element(idx))) {
        r.vanishes_off_subgroup = false;
        break;
      }
  }

  const Rational idx(static_cast<unsigned long>(r.index));
  r.bound_holds = r.norm <= idx && ((r.norm == idx) == r.vanishes_off_subgroup);
  r.split = r.norm == 1 ? SplitCase::Irreducible : SplitCase::Reducible;
  if (r.index == 2) {
    std::size_t ones = 0, others = 0;
    for (long d : r.multiplicities) (d == 1 ? ones : others) += d != 0;
    if (r.norm == 2) r.split = SplitCase::Splits;
    r.index_two_holds = (r.norm == 1 && !r.vanishes_off_subgroup) ||
                        (r.norm == 2 && r.vanishes_off_subgroup && ones == 2 && others == 0);
  }
  return r;
}

inline std::vector<long> regular_decomposition(const CharacterTable& table) {
  return decompose(regular_character(table.group), table);
}

// ---------------------------------------------------------------------------
// Burnside

using Factorization = std::vector<std::pair<std::uint64_t, int>>;

inline Factorization factorize(std::uint64_t n) {
  Factorization f;
  for (auto p : modp::prime_factors(n)) {
    int k = 0;
    while (n % p == 0) {
      n /= p;
      ++k;
    }
    f.emplace_back(p, k);
  }
  return f;
}

inline std::string factorization_string(std::uint64_t n) {
  if (n == 1) return "1";
  std::string s;
  for (const auto& [p, k] : factorize(n)) {
    if (!s.empty()) s += "*";
    s += std::to_string(p);
    if (k > 1) s += "^" + std::to_string(k);
  }
  return s;
}

namespace detail {

/// Smallest normal closure of a single class representative that is neither
/// trivial nor G; ties go to the earliest class.
inline std::optional<Subgroup> smallest_proper_normal_closure(const GroupPtr& g) {
  const ClassData& cd = g->classes();
  std::optional<Subgroup> best;
  for (std::size_t j = 1; j < cd.count(); ++j) {
    Subgroup n = normal_closure(g, cd[j].representative);
    if (n.order() == 1 || n.order() == g->order()) continue;
    if (!best || n.order() < best->order()) best = std::move(n);
  }
  return best;
}

}  // namespace detail

struct ClassSizeEntry {
  std::size_t class_index;
  Perm representative;
  std::size_t size;
  std::string factorization;
  bool prime_power;
};

struct BurnsideClassReport {
  std::vector<ClassSizeEntry> classes;  // non-identity classes only
  std::optional<std::size_t> prime_power_class;
  bool simple = false;
  std::optional<Subgroup> witness;

  bool conclusive() const { return prime_power_class.has_value(); }
  /// A prime-power class forces non-simplicity, and is_simple agrees with the witness search.
  bool consistent(const PermGroup& g) const {
    const bool witness_says_simple = !witness && g.order() > 1;
    return (!conclusive() || !simple) && simple == witness_says_simple;
  }
};

inline BurnsideClassReport burnside_class_test(const GroupPtr& g) {
  const ClassData& cd = g->classes();
  BurnsideClassReport r;
  for (std::size_t j = 1; j < cd.count(); ++j) {
    const std::size_t size = cd[j].size;
    const bool pp = size > 1 && factorize(size).size() == 1;
    r.classes.push_back({j, cd[j].representative, size, factorization_string(size), pp});
    if (pp && !r.prime_power_class) r.prime_power_class = j;
  }
  r.simple = is_simple(g);
  r.witness = detail::smallest_proper_normal_closure(g);
  return r;
}

struct SolvabilityReport {
  std::size_t order = 1;
  std::string factorization;
  bool theorem_applies = false;  // at most two primes divide |G|
  bool solvable = false;         // derived-series verdict
  std::vector<std::size_t> derived_orders;

  bool consistent() const { return !theorem_applies || solvable; }
};

inline SolvabilityReport burnside_solvability(const GroupPtr& g) {
  SolvabilityReport r;
  r.order = g->order();
  r.factorization = factorization_string(r.order);
  r.theorem_applies = factorize(r.order).size() <= 2;
  for (const auto& s : derived_series(g)) r.derived_orders.push_back(s.order());
  r.solvable = r.derived_orders.back() == 1;
  return r;
}

// ---------------------------------------------------------------------------
// Full verification suite

struct CheckResult {
  std::string name;
  bool passed;
  std::string detail;
};

struct CheckReport {
  std::vector<CheckResult> checks;
  bool all_passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
  }
};

namespace detail {

struct Verdict {
  bool ok = true;
  std::string detail;
  void fail(std::string why) {
    if (ok) detail = std::move(why);
    ok = false;
  }
};

inline std::string label(std::size_t i) { return "chi" + std::to_string(i + 1); }

}  // namespace detail

/// Runs every table invariant; failures are recorded, never thrown.
inline CheckReport check_all(const CharacterTable& t) {
  CheckReport report;
  const GroupPtr& g = t.group;
  const ClassData& cd = g->classes();
  const std::size_t h = cd.count();
  const std::size_t n_rows = t.size();
  const auto order = static_cast<long>(g->order());

  auto run = [&](std::string name, const std::function<detail::Verdict()>& body) {
    detail::Verdict v;
    try {
      v = body();
    } catch (const std::exception& e) {
      v.fail(std::string("exception: ") + e.what());
    }
    if (v.ok && v.detail.empty()) v.detail = "ok";
    report.checks.push_back({std::move(name), v.ok, std::move(v.detail)});
  };

  run("square", [&] {
    detail::Verdict v;
    if (n_rows != h) v.fail(std::to_string(n_rows) + " rows for " + std::to_string(h) + " classes");
    else v.detail = std::to_string(h) + " x " + std::to_string(h);
    return v;
  });

  run("trivial-first", [&] {
    detail::Verdict v;
    if (n_rows == 0 || !(t.rows[0] == trivial_character(g))) v.fail("first row is not the trivial character");
    return v;
  });

  run("degrees-sorted", [&] {
    detail::Verdict v;
    if (!std::is_sorted(t.degrees.begin(), t.degrees.end())) v.fail("degrees are not ascending");
    return v;
  });

  run("row-orthonormality", [&] {
    detail::Verdict v;
    for (std::size_t i = 0; i < n_rows && v.ok; ++i)
      for (std::size_t j = i; j < n_rows && v.ok; ++j) {
        const Cyclo ip = inner_product(t.rows[i], t.rows[j]);
        if (!(ip == Cyclo(i == j ? 1 : 0)))
          v.fail("<" + detail::label(i) + "," + detail::label(j) + "> = " + ip.to_string());
      }
    return v;
  });

  run("column-orthogonality", [&] {
    detail::Verdict v;
    for (std::size_t l = 0; l < h && v.ok; ++l)
      for (std::size_t m = l; m < h && v.ok; ++m) {
        Cyclo s(0);
        for (const auto& r : t.rows) s += r[l] * r[m].conj();
        const Cyclo expected = l == m ? Cyclo(Rational(order, static_cast<unsigned long>(cd[l].size))) : Cyclo(0);
        if (!(s == expected))
          v.fail("columns " + std::to_string(l + 1) + "," + std::to_string(m + 1) + " give " + s.to_string() +
                 ", expected " + expected.to_string());
      }
    return v;
  });

  run("degree-sum", [&] {
    detail::Verdict v;
    long s = 0;
    for (long n : t.degrees) s += n * n;
    if (s != order) v.fail("sum of squares " + std::to_string(s) + " != |G| = " + std::to_string(order));
    else v.detail = "sum n_i^2 = " + std::to_string(s);
    return v;
  });

  run("degree-divisibility", [&] {
    detail::Verdict v;
    for (std::size_t i = 0; i < t.degrees.size(); ++i)
      if (order % t.degrees[i]) v.fail("degree " + std::to_string(t.degrees[i]) + " does not divide |G|");
    return v;
  });

  run("weighted-column-sums", [&] {
    detail::Verdict v;
    for (std::size_t l = 1; l < h && v.ok; ++l) {
      Cyclo s(0);
      for (std::size_t i = 0; i < n_rows; ++i) s += Cyclo(t.degrees[i]) * t.rows[i][l];
      if (!s.is_zero()) v.fail("sum n_i chi_i at class " + std::to_string(l + 1) + " = " + s.to_string());
    }
    return v;
  });

  run("linear-characters", [&] {
    detail::Verdict v;
    const std::size_t quotient = commutator_subgroup(g).index();
    std::vector<const ClassFunction*> deg1;
    for (const auto& r : t.rows)
      if (r.degree_value() == Cyclo(1)) deg1.push_back(&r);
    if (deg1.size() != quotient) {
      v.fail(std::to_string(deg1.size()) + " degree-1 rows but [G:G'] = " + std::to_string(quotient));
      return v;
    }
    const auto lin = linear_characters(g);
    for (const auto& l : lin)
      if (std::none_of(deg1.begin(), deg1.end(), [&](const ClassFunction* r) { return *r == l; }))
        v.fail("a linear character of G/G' is missing from the table");
    if (v.ok) v.detail = std::to_string(quotient) + " = [G:G']";
    return v;
  });

  run("central-characters", [&] {
    detail::Verdict v;
    const ClassConstants cc = class_constants(*g);
    for (std::size_t i = 0; i < n_rows && v.ok; ++i) {
      std::vector<Cyclo> lambda;
      const Cyclo inv_n(Rational(1, static_cast<unsigned long>(t.degrees[i])));
      for (std::size_t j = 0; j < h; ++j) lambda.push_back(Cyclo(static_cast<long>(cd[j].size)) * t.rows[i][j] * inv_n);
      for (std::size_t j = 0; j < h && v.ok; ++j)
        for (std::size_t k = j; k < h && v.ok; ++k) {
          Cyclo rhs(0);
          for (std::size_t l = 0; l < h; ++l)
            if (cc(j, k, l)) rhs += Cyclo(static_cast<long>(cc(j, k, l))) * lambda[l];
          if (!(lambda[j] * lambda[k] == rhs))
            v.fail("lambda identity fails for " + detail::label(i) + " at classes " + std::to_string(j + 1) + "," +
                   std::to_string(k + 1));
        }
    }
    return v;
  });

  run("column-distinctness", [&] {
    detail::Verdict v;
    for (std::size_t l = 0; l < h && v.ok; ++l)
      for (std::size_t m = l + 1; m < h && v.ok; ++m)
        if (std::all_of(t.rows.begin(), t.rows.end(), [&](const ClassFunction& r) { return r[l] == r[m]; }))
          v.fail("classes " + std::to_string(l + 1) + " and " + std::to_string(m + 1) + " are not separated");
    return v;
  });

  run("inverse-conjugate", [&] {
    detail::Verdict v;
    for (std::size_t i = 0; i < n_rows && v.ok; ++i)
      for (std::size_t j = 0; j < h && v.ok; ++j)
        if (!(t.rows[i][cd.inverse_class(j)] == t.rows[i][j].conj()))
          v.fail(detail::label(i) + "(g^-1) != conj " + detail::label(i) + "(g) at class " + std::to_string(j + 1));
    return v;
  });

  run("real-on-self-inverse", [&] {
    detail::Verdict v;
    for (std::size_t j = 0; j < h && v.ok; ++j) {
      if (cd.inverse_class(j) != j) continue;
      for (std::size_t i = 0; i < n_rows && v.ok; ++i)
        if (!(t.rows[i][j] == t.rows[i][j].conj()))
          v.fail(detail::label(i) + " is not real on self-inverse class " + std::to_string(j + 1));
    }
    return v;
  });

  run("value-bound", [&] {
    detail::Verdict v;
    for (std::size_t i = 0; i < n_rows && v.ok; ++i)
      for (std::size_t j = 0; j < h && v.ok; ++j)
        if (std::abs(t.rows[i][j].to_complex()) > static_cast<double>(t.degrees[i]) + 1e-9)
          v.fail("|" + detail::label(i) + "| exceeds its degree at class " + std::to_string(j + 1));
    return v;
  });

  run("irreducibility", [&] {
    detail::Verdict v;
    for (std::size_t i = 0; i < n_rows; ++i)
      if (!is_irreducible(t.rows[i])) v.fail(detail::label(i) + " has norm != 1");
    return v;
  });

  run("regular-decomposition", [&] {
    detail::Verdict v;
    if (regular_decomposition(t) != t.degrees) v.fail("regular character multiplicities differ from the degrees");
    return v;
  });

  run("sym-alt-square", [&] {
    detail::Verdict v;
    for (std::size_t i = 0; i < n_rows && v.ok; ++i) {
      const auto sa = sym_alt_square(t.rows[i]);
      if (!(sa.sym + sa.alt == t.rows[i] * t.rows[i])) v.fail("chi_S + chi_A != chi^2 for " + detail::label(i));
      decompose(sa.sym, t);
      decompose(sa.alt, t);
    }
    return v;
  });

  run("linear-twist", [&] {
    detail::Verdict v;
    for (const auto& lin : t.rows) {
      if (!(lin.degree_value() == Cyclo(1))) continue;
      for (std::size_t i = 0; i < n_rows && v.ok; ++i) {
        const ClassFunction twisted = lin * t.rows[i];
        if (std::none_of(t.rows.begin(), t.rows.end(), [&](const ClassFunction& r) { return r == twisted; }))
          v.fail("a linear twist of " + detail::label(i) + " is not a table row");
      }
    }
    return v;
  });

  return report;
}

}  // namespace chartab
