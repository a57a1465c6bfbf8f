#pragma once

#include <charconv>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "chartab/classfun.hpp"
#include "chartab/cyclo.hpp"
#include "chartab/errors.hpp"
#include "chartab/permgroup.hpp"

namespace chartab {

/// Square matrix over cyclotomics, row-major.
class CycloMatrix {
 public:
  CycloMatrix() = default;
  explicit CycloMatrix(std::size_t n) : n_(n), a_(n * n, Cyclo(0)) {}
  CycloMatrix(std::size_t n, std::vector<Cyclo> entries) : n_(n), a_(std::move(entries)) {
    if (a_.size() != n * n) throw DomainError("matrix entry count does not match its dimension");
  }
  CycloMatrix(std::initializer_list<std::initializer_list<Cyclo>> rows) : n_(rows.size()) {
    for (const auto& r : rows) {
      if (r.size() != n_) throw DomainError("matrix rows must form a square");
      a_.insert(a_.end(), r.begin(), r.end());
    }
  }

  static CycloMatrix identity(std::size_t n) {
    CycloMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = Cyclo(1);
    return m;
  }

  std::size_t dim() const { return n_; }
  Cyclo& operator()(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }
  const Cyclo& operator()(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }

  Cyclo trace() const {
    Cyclo t(0);
    for (std::size_t i = 0; i < n_; ++i) t += (*this)(i, i);
    return t;
  }

  Cyclo det() const {
    std::vector<Cyclo> m = a_;
    Cyclo d(1);
    for (std::size_t c = 0; c < n_; ++c) {
      std::size_t piv = c;
      while (piv < n_ && m[piv * n_ + c].is_zero()) ++piv;
      if (piv == n_) return Cyclo(0);
      if (piv != c) {
        for (std::size_t k = 0; k < n_; ++k) std::swap(m[c * n_ + k], m[piv * n_ + k]);
        d = -d;
      }
      const Cyclo p = m[c * n_ + c];
      d *= p;
      const Cyclo pinv = p.inverse();
      for (std::size_t r = c + 1; r < n_; ++r) {
        if (m[r * n_ + c].is_zero()) continue;
        const Cyclo f = m[r * n_ + c] * pinv;
        for (std::size_t k = c; k < n_; ++k) m[r * n_ + k] -= f * m[c * n_ + k];
      }
    }
    return d;
  }

  friend CycloMatrix operator*(const CycloMatrix& x, const CycloMatrix& y) {
    if (x.n_ != y.n_) throw DomainError("matrix dimensions differ");
    CycloMatrix out(x.n_);
    for (std::size_t i = 0; i < x.n_; ++i)
      for (std::size_t k = 0; k < x.n_; ++k) {
        if (x(i, k).is_zero()) continue;
        for (std::size_t j = 0; j < x.n_; ++j) out(i, j) += x(i, k) * y(k, j);
      }
    return out;
  }

  friend bool operator==(const CycloMatrix& x, const CycloMatrix& y) { return x.n_ == y.n_ && x.a_ == y.a_; }

  std::string to_string() const {
    std::string s = "[";
    for (std::size_t i = 0; i < n_; ++i) {
      s += i ? ",[" : "[";
      for (std::size_t j = 0; j < n_; ++j) s += (j ? "," : "") + (*this)(i, j).to_string();
      s += "]";
    }
    return s + "]";
  }

 private:
  std::size_t n_ = 0;
  std::vector<Cyclo> a_;
};

/// A representation given by one matrix per generator of the group, in the
/// group's generator order. After extension, full_images()[i] is the image of
/// group element i.
class MatrixRep {
 public:
  MatrixRep(GroupPtr group, std::size_t dim, std::vector<CycloMatrix> images)
      : group_(std::move(group)), dim_(dim), images_(std::move(images)) {
    if (!group_) throw DomainError("representation without a group");
    if (dim_ == 0) throw DomainError("representation dimension must be at least 1");
    if (images_.size() != group_->generators().size())
      throw DomainError("representation has " + std::to_string(images_.size()) + " generator images but the group has " +
                        std::to_string(group_->generators().size()) + " generators");
    for (std::size_t k = 0; k < images_.size(); ++k) {
      if (images_[k].dim() != dim_) throw DomainError("generator image " + std::to_string(k) + " has the wrong size");
      if (images_[k].det().is_zero())
        throw HomomorphismError("generator image " + images_[k].to_string() + " is singular");
    }
  }

  const GroupPtr& group() const { return group_; }
  std::size_t dim() const { return dim_; }
  const std::vector<CycloMatrix>& images() const { return images_; }
  const std::vector<CycloMatrix>& full_images() const { return full_; }
  bool extended() const { return !full_.empty(); }

  const CycloMatrix& image(const Perm& p) const {
    if (!extended()) throw DomainError("representation has not been extended to the group");
    const auto idx = group_->index_of(p);
    if (!idx) throw DomainError(p.cycles() + " is not an element of the group");
    return full_[*idx];
  }

  friend MatrixRep extend_to_group(MatrixRep rep);

 private:
  GroupPtr group_;
  std::size_t dim_;
  std::vector<CycloMatrix> images_;
  std::vector<CycloMatrix> full_;
};

/// Walks the Cayley graph in enumeration order, setting image(x s) =
/// image(x) image(s) and checking that relation on every edge. Consistency on
/// all edges is exactly the homomorphism property.
inline MatrixRep extend_to_group(MatrixRep rep) {
  const PermGroup& g = *rep.group_;
  const auto& gens = g.generators();
  std::vector<std::optional<CycloMatrix>> img(g.order());
  img[*g.index_of(g.identity())] = CycloMatrix::identity(rep.dim_);
  for (std::size_t i = 0; i < g.order(); ++i) {
    if (!img[i]) throw InternalError("enumeration order left element " + g.element(i).cycles() + " unreached");
    for (std::size_t k = 0; k < gens.size(); ++k) {
      const Perm y = g.element(i) * gens[k];
      const std::size_t yi = *g.index_of(y);
      CycloMatrix m = *img[i] * rep.images_[k];
      if (!img[yi]) {
        img[yi] = std::move(m);
      } else if (!(*img[yi] == m)) {
        throw HomomorphismError("generator images are not a homomorphism: two words for element " + y.cycles() +
                                " give " + img[yi]->to_string() + " and " + m.to_string());
      }
    }
  }
  rep.full_.clear();
  for (auto& m : img) rep.full_.push_back(std::move(*m));
  return rep;
}

inline ClassFunction character_of(const MatrixRep& rep) {
  if (!rep.extended()) throw DomainError("representation has not been extended to the group");
  const ClassData& cd = rep.group()->classes();
  std::vector<Cyclo> values;
  for (std::size_t j = 0; j < cd.count(); ++j) values.push_back(rep.image(cd[j].representative).trace().descended());
  return {rep.group(), std::move(values)};
}

/// Number of fixed points on {0..degree-1}.
inline ClassFunction permutation_character(const GroupPtr& g) {
  const ClassData& cd = g->classes();
  std::vector<Cyclo> values;
  for (std::size_t j = 0; j < cd.count(); ++j) values.emplace_back(static_cast<long>(cd[j].representative.fixed_points()));
  return {g, std::move(values)};
}

inline ClassFunction standard_character(const GroupPtr& g) { return permutation_character(g) - trivial_character(g); }

inline MatrixRep trivial_rep(const GroupPtr& g) {
  return extend_to_group(MatrixRep(g, 1, std::vector<CycloMatrix>(g->generators().size(), CycloMatrix::identity(1))));
}

/// The 1-dimensional representation afforded by a linear character.
inline MatrixRep one_dim_rep(const ClassFunction& linear) {
  if (!(linear.degree_value() == Cyclo(1))) throw DomainError("character is not linear");
  std::vector<CycloMatrix> images;
  for (const auto& s : linear.group()->generators()) images.push_back(CycloMatrix(1, {linear.at(s)}));
  return extend_to_group(MatrixRep(linear.group(), 1, std::move(images)));
}

// ---------------------------------------------------------------------------
// Matrix-element orthogonality

enum class PairingMode { Self, Cross, Undetermined };

struct PairingViolation {
  std::size_t i, l, m, j;
  Cyclo value;
  Cyclo expected;
};

struct OrthogonalityReport {
  PairingMode mode = PairingMode::Undetermined;
  std::size_t pairings = 0;
  std::vector<PairingViolation> violations;

  bool holds() const { return mode != PairingMode::Undetermined && violations.empty(); }
};

/// Evaluates (a_il, b_mj) = (1/|G|) sum_t a_il(t) b_mj(t^-1) for every index
/// tuple. Identical reps are held to (1/n) delta_ij delta_lm; reps with
/// different characters to 0.
inline OrthogonalityReport check_matrix_orthogonality(const MatrixRep& r1, const MatrixRep& r2) {
  if (r1.group() != r2.group()) throw DomainError("representations belong to different groups");
  if (!r1.extended() || !r2.extended()) throw DomainError("representations must be extended to the group");
  const PermGroup& g = *r1.group();

  OrthogonalityReport report;
  if (r1.dim() == r2.dim() && r1.images() == r2.images())
    report.mode = PairingMode::Self;
  else if (!(character_of(r1) == character_of(r2)))
    report.mode = PairingMode::Cross;

  std::vector<std::size_t> inv(g.order());
  for (std::size_t t = 0; t < g.order(); ++t) inv[t] = *g.index_of(g.element(t).inverse());
  const Cyclo inv_order(Rational(1, static_cast<unsigned long>(g.order())));
  const Cyclo inv_dim(Rational(1, static_cast<unsigned long>(r1.dim())));
  const auto& a = r1.full_images();
  const auto& b = r2.full_images();

  for (std::size_t i = 0; i < r1.dim(); ++i)
    for (std::size_t l = 0; l < r1.dim(); ++l)
      for (std::size_t m = 0; m < r2.dim(); ++m)
        for (std::size_t j = 0; j < r2.dim(); ++j) {
          Cyclo acc(0);
          for (std::size_t t = 0; t < g.order(); ++t) acc += a[t](i, l) * b[inv[t]](m, j);
          acc = (acc * inv_order).descended();
          ++report.pairings;
          if (report.mode == PairingMode::Undetermined) continue;
          const bool kronecker = report.mode == PairingMode::Self && i == j && l == m;
          const Cyclo expected = kronecker ? inv_dim : Cyclo(0);
          if (!(acc == expected)) report.violations.push_back({i, l, m, j, acc, expected});
        }
  return report;
}

// ---------------------------------------------------------------------------
// Builtin representations

namespace detail {

inline long parse_rep_int(std::string_view text, std::string_view what) {
  long v = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size() || text.empty())
    throw ParseError("malformed " + std::string(what) + " '" + std::string(text) + "' in representation name");
  return v;
}

/// Rotation by 2 pi r / n: [[cos, -sin], [sin, cos]].
inline CycloMatrix rotation(std::size_t n, long r) {
  const Cyclo z = Cyclo::root_of_unity(n, r);
  const Cyclo zi = Cyclo::root_of_unity(n, -r);
  const Cyclo half(Rational(1, 2));
  const Cyclo c = half * (z + zi);
  const Cyclo s = -half * Cyclo::root_of_unity(4, 1) * (z - zi);
  return {{c, -s}, {s, c}};
}

}  // namespace detail

inline std::vector<std::string> builtin_rep_names() { return {"q8-2dim", "dihedral-rot:<n>:<r>"}; }

/// `q8-2dim`: i -> [[0,1],[-1,0]], j -> [[0,i],[i,0]] on the builtin Q8.
/// `dihedral-rot:<n>:<r>`: rotation by 2 pi r/n and the swap [[0,1],[1,0]] on D_n, 3 <= n <= 9.
inline MatrixRep builtin_rep(std::string_view name, std::size_t cap = kDefaultCap) {
  const std::string spec(detail::trim(name));
  if (spec == "q8-2dim") {
    const Cyclo i = Cyclo::root_of_unity(4, 1);
    GroupPtr g = parse_group_spec("Q8", cap);
    return extend_to_group(MatrixRep(g, 2, {CycloMatrix{{0, 1}, {-1, 0}}, CycloMatrix{{0, i}, {i, 0}}}));
  }
  constexpr std::string_view kDihedral = "dihedral-rot:";
  if (spec.rfind(kDihedral, 0) == 0) {
    const std::string_view rest = std::string_view(spec).substr(kDihedral.size());
    const auto colon = rest.find(':');
    if (colon == std::string_view::npos) throw ParseError("dihedral representation must look like dihedral-rot:<n>:<r>");
    const long n = detail::parse_rep_int(rest.substr(0, colon), "n");
    const long r = detail::parse_rep_int(rest.substr(colon + 1), "r");
    if (n < 3 || n > 9) throw ParseError("dihedral representation needs 3 <= n <= 9, got " + std::to_string(n));
    GroupPtr g = parse_group_spec("D" + std::to_string(n), cap);
    return extend_to_group(MatrixRep(g, 2, {detail::rotation(static_cast<std::size_t>(n), r), CycloMatrix{{0, 1}, {1, 0}}}));
  }
  throw ParseError("unknown representation '" + spec + "'");
}

}  // namespace chartab
