#pragma once

#include <algorithm>
#include <cstdint>
#include <memory>
#include <mutex>
#include <numeric>
#include <optional>
#include <string>
#include <string_view>
#include <tuple>
#include <unordered_map>
#include <utility>
#include <vector>

#include "chartab/errors.hpp"
#include "chartab/perm.hpp"

namespace chartab {

inline constexpr std::size_t kDefaultCap = 100000;

class PermGroup;
using GroupPtr = std::shared_ptr<const PermGroup>;

struct ConjugacyClass {
  Perm representative;  // lexicographically least member
  std::size_t size = 0;
  std::size_t element_order = 1;
};

/// Conjugacy classes in canonical order together with the inverse and power maps.
///
/// Canonical order sorts by (size, element order, representative); class 0 is
/// always the identity.
class ClassData {
 public:
  std::size_t count() const { return classes_.size(); }
  const ConjugacyClass& operator[](std::size_t j) const { return classes_[j]; }
  const std::vector<ConjugacyClass>& classes() const { return classes_; }

  /// Class index of the element at position `element_index` of the group's element list.
  std::size_t class_of_element(std::size_t element_index) const { return class_of_[element_index]; }
  /// Element indices belonging to class j, ascending.
  const std::vector<std::uint32_t>& members(std::size_t j) const { return members_[j]; }

  std::size_t inverse_class(std::size_t j) const { return inverse_[j]; }

  /// Class of g_j^s; s is reduced modulo the group exponent.
  std::size_t power_class(std::size_t j, long long s) const {
    const auto e = static_cast<long long>(exponent_);
    const long long r = ((s % e) + e) % e;
    return power_[j * exponent_ + static_cast<std::size_t>(r)];
  }
  std::size_t exponent() const { return exponent_; }

  std::vector<std::size_t> sizes() const {
    std::vector<std::size_t> out;
    for (const auto& c : classes_) out.push_back(c.size);
    return out;
  }

 private:
  friend class PermGroup;
  std::vector<ConjugacyClass> classes_;
  std::vector<std::uint32_t> class_of_;
  std::vector<std::vector<std::uint32_t>> members_;
  std::vector<std::uint32_t> inverse_;
  std::vector<std::uint32_t> power_;
  std::size_t exponent_ = 1;
};

/// A finite permutation group with all elements enumerated.
///
/// Elements are listed by breadth-first closure: starting from the identity,
/// each listed element x contributes x * s for every generator s in order.
/// Instances are immutable and shared through GroupPtr; class data is built on
/// first use.
class PermGroup {
 public:
  PermGroup(const PermGroup&) = delete;
  PermGroup& operator=(const PermGroup&) = delete;

  static GroupPtr generate(std::size_t degree, std::vector<Perm> generators, std::size_t cap = kDefaultCap,
                           std::string spec = {}) {
    return GroupPtr(new PermGroup(degree, std::move(generators), cap, std::move(spec)));
  }

  std::size_t degree() const { return degree_; }
  const std::vector<Perm>& generators() const { return generators_; }
  const std::vector<Perm>& elements() const { return elements_; }
  const Perm& element(std::size_t i) const { return elements_[i]; }
  std::size_t order() const { return elements_.size(); }
  std::size_t exponent() const { return exponent_; }
  std::size_t cap() const { return cap_; }
  Perm identity() const { return Perm(degree_); }

  /// The spec text this group was parsed from, or an explicit `perm:` form.
  std::string spec() const {
    if (!spec_.empty()) return spec_;
    std::string out = "perm:" + std::to_string(degree_) + ":";
    if (generators_.empty()) return out + "()";
    for (std::size_t i = 0; i < generators_.size(); ++i) {
      if (i) out += ';';
      out += generators_[i].cycles();
    }
    return out;
  }

  std::optional<std::size_t> index_of(const Perm& p) const {
    auto it = index_.find(p);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }
  bool contains(const Perm& p) const { return p.degree() == degree_ && index_.contains(p); }

  bool is_abelian() const {
    for (std::size_t i = 0; i < generators_.size(); ++i)
      for (std::size_t j = i + 1; j < generators_.size(); ++j)
        if (generators_[i] * generators_[j] != generators_[j] * generators_[i]) return false;
    return true;
  }

  const ClassData& classes() const {
    std::call_once(classes_once_, [this] { build_classes(); });
    return classes_;
  }

  std::size_t class_of(const Perm& p) const {
    auto idx = index_of(p);
    if (!idx) throw DomainError("element " + p.cycles() + " is not in the group");
    return classes().class_of_element(*idx);
  }

 private:
  PermGroup(std::size_t degree, std::vector<Perm> generators, std::size_t cap, std::string spec)
      : degree_(degree), cap_(cap), spec_(std::move(spec)) {
    if (degree == 0 || degree > kMaxDegree)
      throw ParseError("group degree must lie in 1.." + std::to_string(kMaxDegree));
    for (auto& g : generators) {
      if (g.degree() != degree) throw ParseError("generator degree does not match group degree");
      if (!g.is_identity() && std::find(generators_.begin(), generators_.end(), g) == generators_.end())
        generators_.push_back(g);
    }
    enumerate_elements();
  }

  void enumerate_elements() {
    elements_.push_back(Perm(degree_));
    index_.emplace(elements_.back(), 0);
    for (std::size_t i = 0; i < elements_.size(); ++i) {
      for (const auto& s : generators_) {
        Perm y = elements_[i] * s;
        if (index_.contains(y)) continue;
        if (elements_.size() >= cap_)
          throw ResourceError("group order exceeds the enumeration cap of " + std::to_string(cap_));
        index_.emplace(y, elements_.size());
        elements_.push_back(y);
      }
    }
    exponent_ = 1;
    for (const auto& x : elements_) exponent_ = std::lcm(exponent_, x.order());
  }

  void build_classes() const {
    constexpr std::uint32_t kUnset = ~std::uint32_t{0};
    const std::size_t n = elements_.size();
    std::vector<Perm> inv_gens;
    for (const auto& t : generators_) inv_gens.push_back(t.inverse());

    std::vector<std::uint32_t> raw_class(n, kUnset);
    std::vector<std::vector<std::uint32_t>> raw_members;
    for (std::size_t start = 0; start < n; ++start) {
      if (raw_class[start] != kUnset) continue;
      const auto id = static_cast<std::uint32_t>(raw_members.size());
      std::vector<std::uint32_t> orbit{static_cast<std::uint32_t>(start)};
      raw_class[start] = id;
      for (std::size_t k = 0; k < orbit.size(); ++k) {
        const Perm& x = elements_[orbit[k]];
        for (std::size_t g = 0; g < generators_.size(); ++g) {
          const std::size_t y = index_.at(generators_[g] * x * inv_gens[g]);
          if (raw_class[y] == kUnset) {
            raw_class[y] = id;
            orbit.push_back(static_cast<std::uint32_t>(y));
          }
        }
      }
      std::sort(orbit.begin(), orbit.end());
      raw_members.push_back(std::move(orbit));
    }

    struct Entry {
      ConjugacyClass cls;
      std::size_t raw;
    };
    std::vector<Entry> entries;
    for (std::size_t r = 0; r < raw_members.size(); ++r) {
      Perm rep = elements_[raw_members[r].front()];
      for (auto m : raw_members[r]) rep = std::min(rep, elements_[m]);
      entries.push_back({{rep, raw_members[r].size(), rep.order()}, r});
    }
    std::sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) {
      return std::tie(a.cls.size, a.cls.element_order, a.cls.representative) <
             std::tie(b.cls.size, b.cls.element_order, b.cls.representative);
    });

    std::vector<std::uint32_t> remap(entries.size());
    for (std::size_t j = 0; j < entries.size(); ++j) {
      remap[entries[j].raw] = static_cast<std::uint32_t>(j);
      classes_.classes_.push_back(entries[j].cls);
      classes_.members_.push_back(std::move(raw_members[entries[j].raw]));
    }
    classes_.class_of_.resize(n);
    for (std::size_t i = 0; i < n; ++i) classes_.class_of_[i] = remap[raw_class[i]];

    const std::size_t h = entries.size();
    classes_.exponent_ = exponent_;
    classes_.inverse_.resize(h);
    classes_.power_.resize(h * exponent_);
    for (std::size_t j = 0; j < h; ++j) {
      const Perm& rep = classes_.classes_[j].representative;
      classes_.inverse_[j] = classes_.class_of_[index_.at(rep.inverse())];
      Perm cur(degree_);
      for (std::size_t s = 0; s < exponent_; ++s) {
        classes_.power_[j * exponent_ + s] = classes_.class_of_[index_.at(cur)];
        cur = cur * rep;
      }
    }
  }

  std::size_t degree_;
  std::size_t cap_;
  std::string spec_;
  std::vector<Perm> generators_;
  std::vector<Perm> elements_;
  std::unordered_map<Perm, std::size_t, PermHash> index_;
  std::size_t exponent_ = 1;

  mutable std::once_flag classes_once_;
  mutable ClassData classes_;
};

/// A subgroup H of a parent group G; H is itself a full PermGroup.
class Subgroup {
 public:
  Subgroup(GroupPtr parent, GroupPtr group)
      : parent_(std::move(parent)), group_(std::move(group)), fusion_(std::make_shared<FusionCache>()) {}

  const GroupPtr& parent() const { return parent_; }
  const GroupPtr& group() const { return group_; }
  std::size_t order() const { return group_->order(); }
  std::size_t index() const { return parent_->order() / group_->order(); }
  bool contains(const Perm& p) const { return group_->contains(p); }

  /// For each class of H (in H's canonical order), the class of G containing it.
  const std::vector<std::size_t>& class_fusion() const {
    std::call_once(fusion_->once, [this] {
      const ClassData& hc = group_->classes();
      for (std::size_t j = 0; j < hc.count(); ++j) fusion_->map.push_back(parent_->class_of(hc[j].representative));
    });
    return fusion_->map;
  }

  bool is_normal() const {
    for (const auto& t : parent_->generators())
      for (const auto& s : group_->generators())
        if (!group_->contains(t * s * t.inverse())) return false;
    return true;
  }

 private:
  struct FusionCache {
    std::once_flag once;
    std::vector<std::size_t> map;
  };
  GroupPtr parent_;
  GroupPtr group_;
  std::shared_ptr<FusionCache> fusion_;
};

// ---------------------------------------------------------------------------
// Group specs

namespace detail {

inline std::size_t factorial(std::size_t n) {
  std::size_t f = 1;
  for (std::size_t i = 2; i <= n; ++i) f *= i;
  return f;
}

inline Perm cycle_perm(std::size_t degree, const std::vector<int>& pts) {
  std::vector<int> img(degree);
  std::iota(img.begin(), img.end(), 0);
  for (std::size_t i = 0; i < pts.size(); ++i) img[pts[i]] = pts[(i + 1) % pts.size()];
  return Perm::from_images(img);
}

inline Perm full_cycle(std::size_t n) {
  std::vector<int> pts(n);
  std::iota(pts.begin(), pts.end(), 0);
  return cycle_perm(n, pts);
}

/// Left-regular action of Q8 on the points 1,-1,i,-i,j,-j,k,-k (indices 0..7).
inline Perm quaternion_left_mult(int unit) {
  // unit products: table[a][b] = (sign, unit) of a*b for a,b in {1,i,j,k}
  static constexpr int kUnit[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  static constexpr int kSign[4][4] = {{1, 1, 1, 1}, {1, -1, 1, -1}, {1, -1, -1, 1}, {1, 1, -1, -1}};
  std::vector<int> img(8);
  for (int x = 0; x < 8; ++x) {
    const int u = x / 2;
    const int sign = (x % 2) ? -1 : 1;
    const int prod_sign = sign * kSign[unit][u];
    img[x] = 2 * kUnit[unit][u] + (prod_sign < 0 ? 1 : 0);
  }
  return Perm::from_images(img);
}

}  // namespace detail

/// Parses `S<n>`, `A<n>`, `C<n>`, `D<n>` (1 <= n <= 9), `Q8`, or
/// `perm:<degree>:<cycles>(;<cycles>)*`.
///
/// D<n> has order 2n. For n >= 3 it acts on n points via the n-cycle and the
/// reflection i -> -i; D1 and D2 are modelled as C2 on 2 points and the Klein
/// four group on 4 points.
inline GroupPtr parse_group_spec(std::string_view text, std::size_t cap = kDefaultCap) {
  const std::string spec(detail::trim(text));
  if (spec.empty()) throw ParseError("empty group spec");

  if (spec.rfind("perm:", 0) == 0) {
    const std::size_t colon = spec.find(':', 5);
    if (colon == std::string::npos) throw ParseError("perm spec must look like perm:<degree>:<cycles>");
    const std::string deg_text = spec.substr(5, colon - 5);
    if (deg_text.empty() || deg_text.size() > 3 ||
        !std::all_of(deg_text.begin(), deg_text.end(), [](char c) { return c >= '0' && c <= '9'; }))
      throw ParseError("malformed degree '" + deg_text + "' in perm spec");
    const std::size_t degree = std::stoul(deg_text);
    if (degree == 0 || degree > kMaxDegree)
      throw ParseError("perm degree " + deg_text + " out of range 1.." + std::to_string(kMaxDegree));
    std::vector<Perm> gens;
    std::string_view rest = std::string_view(spec).substr(colon + 1);
    std::size_t start = 0;
    while (true) {
      const std::size_t semi = rest.find(';', start);
      gens.push_back(Perm::from_cycles(degree, rest.substr(start, semi - start)));
      if (semi == std::string_view::npos) break;
      start = semi + 1;
    }
    return PermGroup::generate(degree, std::move(gens), cap, spec);
  }

  if (spec == "Q8") {
    return PermGroup::generate(8, {detail::quaternion_left_mult(1), detail::quaternion_left_mult(2)}, cap, spec);
  }

  if (spec.size() != 2 || spec[1] < '1' || spec[1] > '9')
    throw ParseError("unknown group name '" + spec + "'");
  const char family = spec[0];
  const std::size_t n = static_cast<std::size_t>(spec[1] - '0');

  std::size_t predicted = 0;
  switch (family) {
    case 'S': predicted = detail::factorial(n); break;
    case 'A': predicted = n >= 2 ? detail::factorial(n) / 2 : 1; break;
    case 'C': predicted = n; break;
    case 'D': predicted = 2 * n; break;
    default: throw ParseError("unknown group name '" + spec + "'");
  }
  if (predicted > cap)
    throw ResourceError("predicted order " + std::to_string(predicted) + " of " + spec +
                        " exceeds the enumeration cap of " + std::to_string(cap));

  std::vector<Perm> gens;
  std::size_t degree = n;
  switch (family) {
    case 'S':
      if (n >= 2) gens = {detail::cycle_perm(n, {0, 1}), detail::full_cycle(n)};
      break;
    case 'A':
      for (std::size_t k = 2; k < n; ++k) gens.push_back(detail::cycle_perm(n, {0, 1, static_cast<int>(k)}));
      break;
    case 'C':
      if (n >= 2) gens = {detail::full_cycle(n)};
      break;
    case 'D':
      if (n == 1) {
        degree = 2;
        gens = {detail::cycle_perm(2, {0, 1})};
      } else if (n == 2) {
        degree = 4;
        gens = {Perm::from_cycles(4, "(0,1)(2,3)"), Perm::from_cycles(4, "(0,2)(1,3)")};
      } else {
        std::vector<int> refl(n);
        for (std::size_t i = 0; i < n; ++i) refl[i] = static_cast<int>((n - i) % n);
        gens = {detail::full_cycle(n), Perm::from_images(refl)};
      }
      break;
  }
  return PermGroup::generate(degree, std::move(gens), cap, spec);
}

/// Builtin group names in library order.
inline std::vector<std::string> builtin_group_names() {
  std::vector<std::string> names;
  for (char family : {'S', 'A', 'C', 'D'})
    for (int n = 1; n <= 9; ++n) names.push_back(std::string(1, family) + std::to_string(n));
  names.push_back("Q8");
  return names;
}

// ---------------------------------------------------------------------------
// Structural operations

inline const std::vector<Perm>& enumerate(const PermGroup& g) { return g.elements(); }

inline const ClassData& conjugacy_classes(const PermGroup& g) { return g.classes(); }

/// Subgroup generated by `gens`, which must be elements of `parent`.
inline Subgroup subgroup(const GroupPtr& parent, std::vector<Perm> gens, std::string spec = {}) {
  for (const auto& s : gens)
    if (!parent->contains(s)) throw DomainError("generator " + s.cycles() + " is not an element of the parent group");
  return Subgroup(parent, PermGroup::generate(parent->degree(), std::move(gens), parent->cap(), std::move(spec)));
}

/// Smallest normal subgroup of g containing every element of `seeds`.
inline Subgroup normal_closure(const GroupPtr& g, const std::vector<Perm>& seeds) {
  std::vector<Perm> gens;
  for (const auto& s : seeds) {
    if (!g->contains(s)) throw DomainError("element " + s.cycles() + " is not in the group");
    if (!s.is_identity() && std::find(gens.begin(), gens.end(), s) == gens.end()) gens.push_back(s);
  }
  GroupPtr n = PermGroup::generate(g->degree(), gens, g->cap());
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (const auto& t : g->generators()) {
      Perm c = t * gens[i] * t.inverse();
      if (!n->contains(c)) {
        gens.push_back(c);
        n = PermGroup::generate(g->degree(), gens, g->cap());
      }
    }
  }
  return Subgroup(g, n);
}

inline Subgroup normal_closure(const GroupPtr& g, const Perm& s) { return normal_closure(g, std::vector<Perm>{s}); }

/// G' as the normal closure of the commutators of generator pairs.
inline Subgroup commutator_subgroup(const GroupPtr& g) {
  std::vector<Perm> comms;
  const auto& gens = g->generators();
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j) {
      Perm c = gens[i] * gens[j] * gens[i].inverse() * gens[j].inverse();
      if (!c.is_identity()) comms.push_back(c);
    }
  return normal_closure(g, comms);
}

/// G = G0 > G1 > ... with G(k+1) = G(k)'; stops at the first repeated term.
/// Every term is expressed as a subgroup of g.
inline std::vector<Subgroup> derived_series(const GroupPtr& g) {
  std::vector<Subgroup> series{Subgroup(g, g)};
  while (true) {
    const GroupPtr& cur = series.back().group();
    Subgroup next = commutator_subgroup(cur);
    if (next.order() == cur->order()) break;
    series.emplace_back(g, next.group());
  }
  return series;
}

inline bool is_solvable(const GroupPtr& g) { return derived_series(g).back().order() == 1; }

inline Subgroup center(const GroupPtr& g) {
  std::vector<Perm> gens;
  GroupPtr z = PermGroup::generate(g->degree(), {}, g->cap());
  for (const auto& x : g->elements()) {
    bool central = true;
    for (const auto& s : g->generators())
      if (x * s != s * x) {
        central = false;
        break;
      }
    if (central && !z->contains(x)) {
      gens.push_back(x);
      z = PermGroup::generate(g->degree(), gens, g->cap());
    }
  }
  return Subgroup(g, z);
}

/// The trivial group is not considered simple.
inline bool is_simple(const GroupPtr& g) {
  if (g->order() == 1) return false;
  const ClassData& cd = g->classes();
  for (std::size_t j = 1; j < cd.count(); ++j)
    if (normal_closure(g, cd[j].representative).order() != g->order()) return false;
  return true;
}

}  // namespace chartab
