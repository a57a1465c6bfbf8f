#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "chartab/classfun.hpp"
#include "chartab/cyclo.hpp"
#include "chartab/errors.hpp"
#include "chartab/modp.hpp"
#include "chartab/permgroup.hpp"

namespace chartab {

/// Class multiplication constants: c_j * c_k = sum_l a(j,k,l) c_l for the class sums c_j.
class ClassConstants {
 public:
  ClassConstants() = default;
  explicit ClassConstants(std::size_t h) : h_(h), a_(h * h * h, 0) {}

  std::size_t classes() const { return h_; }
  std::uint64_t operator()(std::size_t j, std::size_t k, std::size_t l) const { return a_[(j * h_ + k) * h_ + l]; }
  std::uint64_t& at(std::size_t j, std::size_t k, std::size_t l) { return a_[(j * h_ + k) * h_ + l]; }

  /// Class matrix M_j with (M_j)[k][l] = a(j,k,l), reduced modulo p.
  modp::Mat class_matrix(std::size_t j, std::uint64_t p) const {
    modp::Mat m(h_, modp::Vec(h_));
    for (std::size_t k = 0; k < h_; ++k)
      for (std::size_t l = 0; l < h_; ++l) m[k][l] = (*this)(j, k, l) % p;
    return m;
  }

 private:
  std::size_t h_ = 0;
  std::vector<std::uint64_t> a_;
};

namespace detail {

using CycleCounts = std::array<std::uint8_t, kMaxDegree + 1>;

/// Number of cycles of each length, a conjugation invariant.
inline CycleCounts cycle_counts(const Perm& p) {
  CycleCounts counts{};
  std::array<bool, kMaxDegree> seen{};
  for (std::size_t i = 0; i < p.degree(); ++i) {
    if (seen[i]) continue;
    std::size_t len = 0;
    for (std::size_t j = i; !seen[j]; j = p[j]) {
      seen[j] = true;
      ++len;
    }
    ++counts[len];
  }
  return counts;
}

}  // namespace detail

/// a(j,k,l) = #{x in C_j : x^-1 g_l in C_k}, counted once per class-l representative.
inline ClassConstants class_constants(const PermGroup& g) {
  const ClassData& cd = g.classes();
  const std::size_t h = cd.count();
  ClassConstants cc(h);

  // A cycle type owned by a single class settles membership without the
  // element lookup; shared types map to -1.
  std::map<detail::CycleCounts, long> by_type;
  for (std::size_t j = 0; j < h; ++j) {
    const auto [it, fresh] = by_type.emplace(detail::cycle_counts(cd[j].representative), static_cast<long>(j));
    if (!fresh) it->second = -1;
  }
  auto class_of = [&](const Perm& y) {
    const long k = by_type.at(detail::cycle_counts(y));
    return k >= 0 ? static_cast<std::size_t>(k) : cd.class_of_element(*g.index_of(y));
  };

  for (std::size_t l = 0; l < h; ++l) {
    const Perm& gl = cd[l].representative;
    for (std::size_t j = 0; j < h; ++j)
      for (auto idx : cd.members(j)) ++cc.at(j, class_of(g.element(idx).inverse() * gl), l);
  }
  return cc;
}

/// Smallest prime p = 1 (mod exponent) with p > 2 sqrt|G|.
inline std::uint64_t choose_prime(const PermGroup& g) {
  const std::uint64_t e = g.exponent();
  const std::uint64_t four_order = 4 * static_cast<std::uint64_t>(g.order());
  constexpr std::uint64_t kLimit = std::uint64_t{1} << 31;
  for (std::uint64_t p = e + 1; p < kLimit; p += e)
    if (p * p > four_order && modp::is_prime(p)) return p;
  throw ResourceError("no suitable prime below 2^31 for exponent " + std::to_string(e));
}

namespace detail {

inline constexpr std::uint64_t kSplitSeed = 0x5EED;

/// Splits the M-invariant subspace spanned by `basis` into eigenspaces of M.
inline std::vector<std::vector<modp::Vec>> split_space(const modp::Field& f, const modp::Mat& m,
                                                       const std::vector<modp::Vec>& basis, std::mt19937_64& rng) {
  const std::size_t d = basis.size();
  const std::size_t h = basis.front().size();
  std::vector<modp::Vec> images;
  for (const auto& b : basis) images.push_back(modp::mat_vec(f, m, b));

  std::set<modp::u64> seen;
  std::vector<std::vector<modp::Vec>> spaces;
  std::size_t covered = 0;
  std::uniform_int_distribution<modp::u64> dist(0, f.p - 1);
  for (int attempt = 0; attempt < 64 && covered < d; ++attempt) {
    modp::Vec v(h, 0);
    for (std::size_t b = 0; b < d; ++b) {
      const modp::u64 y = dist(rng);
      for (std::size_t r = 0; r < h; ++r) v[r] = f.add(v[r], f.mul(y, basis[b][r]));
    }
    for (modp::u64 lambda : modp::roots(f, modp::krylov_min_poly(f, m, v), rng)) {
      if (!seen.insert(lambda).second) continue;
      modp::Mat a(h, modp::Vec(d));
      for (std::size_t r = 0; r < h; ++r)
        for (std::size_t b = 0; b < d; ++b) a[r][b] = f.sub(images[b][r], f.mul(lambda, basis[b][r]));
      std::vector<modp::Vec> eig;
      for (const auto& y : modp::kernel(f, std::move(a), d)) {
        modp::Vec w(h, 0);
        for (std::size_t b = 0; b < d; ++b)
          if (y[b])
            for (std::size_t r = 0; r < h; ++r) w[r] = f.add(w[r], f.mul(y[b], basis[b][r]));
        eig.push_back(std::move(w));
      }
      if (eig.empty()) continue;
      covered += eig.size();
      spaces.push_back(std::move(eig));
    }
  }
  if (covered != d) throw InternalError("eigenspace splitting failed to diagonalize a class matrix");
  return spaces;
}

}  // namespace detail

/// Simultaneous eigenvectors of all class matrices over F_p, each scaled so
/// that its identity-class coordinate is 1. Vector i holds the reduced central
/// character lambda_ij = r_j chi_i(g_j) / n_i at coordinate j.
inline std::vector<modp::Vec> modp_eigenbasis(const ClassConstants& cc, std::uint64_t p) {
  const modp::Field f(p);
  const std::size_t h = cc.classes();
  std::mt19937_64 rng(detail::kSplitSeed);

  std::vector<modp::Vec> identity(h, modp::Vec(h, 0));
  for (std::size_t i = 0; i < h; ++i) identity[i][i] = 1;
  std::vector<std::vector<modp::Vec>> spaces{identity};

  auto refine = [&](const modp::Mat& m) {
    std::vector<std::vector<modp::Vec>> next;
    for (auto& space : spaces) {
      if (space.size() == 1) {
        next.push_back(std::move(space));
        continue;
      }
      for (auto& piece : detail::split_space(f, m, space, rng)) next.push_back(std::move(piece));
    }
    spaces = std::move(next);
  };
  auto separated = [&] {
    return std::all_of(spaces.begin(), spaces.end(), [](const auto& s) { return s.size() == 1; });
  };

  for (std::size_t j = 1; j < h && !separated(); ++j) refine(cc.class_matrix(j, p));

  std::uniform_int_distribution<modp::u64> dist(0, p - 1);
  for (int round = 0; round < 32 && !separated(); ++round) {
    modp::Mat combo(h, modp::Vec(h, 0));
    for (std::size_t j = 1; j < h; ++j) {
      const modp::u64 c = dist(rng);
      const modp::Mat mj = cc.class_matrix(j, p);
      for (std::size_t k = 0; k < h; ++k)
        for (std::size_t l = 0; l < h; ++l) combo[k][l] = f.add(combo[k][l], f.mul(c, mj[k][l]));
    }
    refine(combo);
  }
  if (!separated()) throw InternalError("class matrices did not separate into one-dimensional eigenspaces");

  std::vector<modp::Vec> out;
  for (auto& s : spaces) {
    modp::Vec v = std::move(s.front());
    if (v[0] == 0) throw InternalError("common eigenvector vanishes at the identity class");
    const modp::u64 inv = f.inv(v[0]);
    for (auto& x : v) x = f.mul(x, inv);
    out.push_back(std::move(v));
  }
  return out;
}

/// Degrees from n_i^2 = |G| / sum_j lambda_ij lambda_ij* / r_j (mod p), taking
/// the square root in (0, p/2).
inline std::vector<long> degrees_from_eigen(const std::vector<modp::Vec>& vectors, const ClassData& cd,
                                            std::uint64_t p, std::size_t group_order) {
  const modp::Field f(p);
  std::vector<long> degrees;
  std::size_t total = 0;
  for (const auto& v : vectors) {
    modp::u64 s = 0;
    for (std::size_t j = 0; j < v.size(); ++j)
      s = f.add(s, f.mul(f.mul(v[j], v[cd.inverse_class(j)]), f.inv(cd[j].size % p)));
    if (s == 0) throw InternalError("degenerate norm while recovering a degree");
    const auto root = f.sqrt(f.mul(group_order % p, f.inv(s)));
    if (!root) throw InternalError("degree square is not a quadratic residue");
    const modp::u64 n = std::min(*root, p - *root);
    degrees.push_back(static_cast<long>(n));
    total += n * n;
  }
  if (total != group_order) throw InternalError("recovered degrees do not satisfy sum n_i^2 = |G|");
  return degrees;
}

// ---------------------------------------------------------------------------
// Character tables

namespace detail {

/// Rows sort by ascending degree, then by descending values (real part, then
/// imaginary part, rounded to 1e-9) in class order, so the trivial character
/// comes first.
inline bool canonical_row_before(const ClassFunction& a, const ClassFunction& b) {
  auto key = [](const ClassFunction& f) {
    std::vector<long long> k;
    for (const auto& v : f.values()) {
      const auto z = v.to_complex();
      k.push_back(std::llround(z.real() * 1e9));
      k.push_back(std::llround(z.imag() * 1e9));
    }
    return k;
  };
  const auto da = a.degree_value().to_complex().real();
  const auto db = b.degree_value().to_complex().real();
  if (std::llround(da) != std::llround(db)) return da < db;
  return key(a) > key(b);
}

}  // namespace detail

struct CharacterTable {
  GroupPtr group;
  std::vector<ClassFunction> rows;
  std::vector<long> degrees;

  CharacterTable() = default;

  /// Rows are taken as given; degrees must be positive integers.
  CharacterTable(GroupPtr g, std::vector<ClassFunction> chars) : group(std::move(g)), rows(std::move(chars)) {
    for (const auto& r : rows) {
      if (r.group() != group) throw DomainError("character table row belongs to a different group");
      const Cyclo& d = r.degree_value();
      if (!d.is_rational() || d.as_rational().get_den() != 1 || d.as_rational() <= 0)
        throw DomainError("character degree " + d.to_string() + " is not a positive integer");
      degrees.push_back(d.as_rational().get_num().get_si());
    }
  }

  static CharacterTable canonical(GroupPtr g, std::vector<ClassFunction> chars) {
    std::stable_sort(chars.begin(), chars.end(), detail::canonical_row_before);
    return {std::move(g), std::move(chars)};
  }

  const ClassData& class_data() const { return group->classes(); }
  std::size_t size() const { return rows.size(); }
  const ClassFunction& operator[](std::size_t i) const { return rows[i]; }
};

inline std::vector<long> decompose(const ClassFunction& chi, const CharacterTable& table) {
  return decompose(chi, std::span<const ClassFunction>(table.rows));
}

/// Recovers exact rows from the F_p eigenvectors. For class j of element order
/// d the eigenvalue multiplicities m_k = (1/d) sum_s chi(g_j^s) z^(-sk) are read
/// off mod p, with z of order d in F_p, and chi(g_j) = sum_k m_k zeta_d^k.
inline CharacterTable lift_characters(const GroupPtr& g, const std::vector<modp::Vec>& vectors,
                                      const std::vector<long>& degrees, std::uint64_t p) {
  const modp::Field f(p);
  const ClassData& cd = g->classes();
  const std::size_t h = cd.count();
  const modp::u64 e = g->exponent();
  const modp::u64 z = f.element_of_order(e);

  std::vector<ClassFunction> rows;
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    const auto n = static_cast<modp::u64>(degrees[i]);
    modp::Vec reduced(h);
    for (std::size_t c = 0; c < h; ++c) reduced[c] = f.mul(f.mul(n, vectors[i][c]), f.inv(cd[c].size % p));

    std::vector<Cyclo> values;
    for (std::size_t j = 0; j < h; ++j) {
      const modp::u64 d = cd[j].element_order;
      const modp::u64 zd_inv = f.inv(f.pow(z, e / d));
      const modp::u64 d_inv = f.inv(d % p);
      std::vector<Rational> mult(d);
      modp::u64 total = 0;
      for (modp::u64 k = 0; k < d; ++k) {
        modp::u64 acc = 0;
        const modp::u64 step = f.pow(zd_inv, k);
        modp::u64 w = 1;
        for (modp::u64 s = 0; s < d; ++s) {
          acc = f.add(acc, f.mul(reduced[cd.power_class(j, static_cast<long long>(s))], w));
          w = f.mul(w, step);
        }
        const modp::u64 m = f.mul(acc, d_inv);
        if (m > n)
          throw InternalError("lifting produced multiplicity " + std::to_string(m) + " out of range for degree " +
                              std::to_string(n));
        mult[k] = static_cast<long>(m);
        total += m;
      }
      if (total != n) throw InternalError("lifted eigenvalue multiplicities do not sum to the degree");
      values.push_back(Cyclo::from_poly(d, std::move(mult)).descended());
    }
    rows.emplace_back(g, std::move(values));
  }
  return CharacterTable::canonical(g, std::move(rows));
}

inline CharacterTable build_character_table(const GroupPtr& g) {
  const ClassConstants cc = class_constants(*g);
  const std::uint64_t p = choose_prime(*g);
  const auto vectors = modp_eigenbasis(cc, p);
  const auto degrees = degrees_from_eigen(vectors, g->classes(), p, g->order());
  CharacterTable table = lift_characters(g, vectors, degrees, p);
  if (table.size() != g->classes().count()) throw InternalError("character table is not square");
  return table;
}

/// Same abstract table: equal class-size vectors and the value matrix equal up
/// to a class-size-preserving permutation of columns and any permutation of
/// rows. Element orders are not compared, so D4 and Q8 agree.
inline bool tables_abstractly_equal(const CharacterTable& t1, const CharacterTable& t2) {
  const ClassData& c1 = t1.class_data();
  const ClassData& c2 = t2.class_data();
  const std::size_t h = c1.count();
  if (h != c2.count() || t1.size() != h || t2.size() != h) return false;
  if (t1.group->order() != t2.group->order()) return false;

  auto column = [](const CharacterTable& t, std::size_t j) {
    std::vector<std::pair<long long, long long>> key;
    for (const auto& r : t.rows) {
      const auto z = r[j].to_complex();
      key.emplace_back(std::llround(z.real() * 1e9), std::llround(z.imag() * 1e9));
    }
    std::sort(key.begin(), key.end());
    return key;
  };
  std::vector<std::vector<bool>> compatible(h, std::vector<bool>(h));
  for (std::size_t j = 0; j < h; ++j)
    for (std::size_t k = 0; k < h; ++k)
      compatible[j][k] = c1[j].size == c2[k].size && column(t1, j) == column(t2, k);

  auto rows_match = [&](const std::vector<std::size_t>& perm) {
    std::vector<bool> used(h, false);
    for (const auto& r1 : t1.rows) {
      bool found = false;
      for (std::size_t i = 0; i < h && !found; ++i) {
        if (used[i]) continue;
        bool same = true;
        for (std::size_t j = 0; j < h && same; ++j) same = r1[j] == t2.rows[i][perm[j]];
        if (same) found = used[i] = true;
      }
      if (!found) return false;
    }
    return true;
  };

  std::vector<std::size_t> perm(h);
  std::vector<bool> taken(h, false);
  auto search = [&](auto&& self, std::size_t j) -> bool {
    if (j == h) return rows_match(perm);
    for (std::size_t k = 0; k < h; ++k) {
      if (taken[k] || !compatible[j][k]) continue;
      taken[k] = true;
      perm[j] = k;
      if (self(self, j + 1)) return true;
      taken[k] = false;
    }
    return false;
  };
  return search(search, 0);
}

/// Degree-1 characters, obtained from G/G' alone: the quotient is built up
/// one cyclic extension at a time and every character of the smaller quotient
/// is extended in all k ways, k being the order of the new generator modulo
/// the part already covered.
inline std::vector<ClassFunction> linear_characters(const GroupPtr& g) {
  const Subgroup derived = commutator_subgroup(g);
  const std::size_t n = g->order();
  std::vector<long> coset(n, -1);
  std::vector<std::size_t> reps;
  for (std::size_t i = 0; i < n; ++i) {
    if (coset[i] >= 0) continue;
    for (const auto& d : derived.group()->elements())
      coset[*g->index_of(g->element(i) * d)] = static_cast<long>(reps.size());
    reps.push_back(i);
  }
  const std::size_t m = reps.size();
  auto qmul = [&](std::size_t a, std::size_t b) {
    return static_cast<std::size_t>(coset[*g->index_of(g->element(reps[a]) * g->element(reps[b]))]);
  };

  const auto e = static_cast<long>(g->exponent());
  std::vector<bool> covered(m, false);
  std::vector<std::size_t> members{0};
  covered[0] = true;
  std::vector<std::vector<long>> exps{std::vector<long>(m, 0)};  // psi(q) = zeta_e^exps[q]

  for (const auto& s : g->generators()) {
    const auto x = static_cast<std::size_t>(coset[*g->index_of(s)]);
    if (covered[x]) continue;
    std::size_t y = x;
    long k = 1;
    while (!covered[y]) {
      y = qmul(y, x);
      ++k;
    }
    std::vector<std::size_t> new_members = members;
    std::vector<std::vector<std::size_t>> shifted(members.size());  // shifted[q][i] = members[q] * x^i
    for (std::size_t q = 0; q < members.size(); ++q) {
      std::size_t c = members[q];
      shifted[q].push_back(c);
      for (long i = 1; i < k; ++i) {
        c = qmul(c, x);
        shifted[q].push_back(c);
        new_members.push_back(c);
      }
    }
    std::vector<std::vector<long>> next;
    for (const auto& psi : exps) {
      const long a = psi[y];
      if (a % k) throw InternalError("linear character does not extend through the quotient");
      for (long t = 0; t < k; ++t) {
        const long beta = a / k + t * (e / k);
        std::vector<long> ext(m, 0);
        for (std::size_t q = 0; q < members.size(); ++q)
          for (long i = 0; i < k; ++i) ext[shifted[q][i]] = (psi[members[q]] + i * beta) % e;
        next.push_back(std::move(ext));
      }
    }
    exps = std::move(next);
    members = std::move(new_members);
    for (auto c : members) covered[c] = true;
  }
  if (members.size() != m) throw InternalError("generators do not cover G/G'");

  const ClassData& cd = g->classes();
  std::vector<ClassFunction> out;
  for (const auto& psi : exps) {
    std::vector<Cyclo> values;
    for (std::size_t j = 0; j < cd.count(); ++j) {
      const long a = psi[coset[*g->index_of(cd[j].representative)]];
      values.push_back(Cyclo::root_of_unity(static_cast<std::size_t>(e), a).descended());
    }
    out.emplace_back(g, std::move(values));
  }
  std::stable_sort(out.begin(), out.end(), detail::canonical_row_before);
  return out;
}

}  // namespace chartab
