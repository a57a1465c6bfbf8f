#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <functional>
#include <numeric>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "chartab/errors.hpp"

namespace chartab {

/// Largest supported permutation degree. Images are stored in a fixed-width
/// byte array so that a permutation doubles as its own hash key.
inline constexpr std::size_t kMaxDegree = 32;

/// A permutation of {0, ..., degree-1}, stored by its image sequence.
///
/// Products compose right to left: (a * b)(x) = a(b(x)).
class Perm {
 public:
  Perm() = default;

  /// Identity of the given degree.
  explicit Perm(std::size_t degree) : degree_(check_degree(degree)) {
    for (std::size_t i = 0; i < degree_; ++i) images_[i] = static_cast<std::uint8_t>(i);
  }

  static Perm from_images(std::span<const int> images) {
    Perm p(images.size());
    std::array<bool, kMaxDegree> seen{};
    for (std::size_t i = 0; i < images.size(); ++i) {
      const int v = images[i];
      if (v < 0 || static_cast<std::size_t>(v) >= images.size())
        throw ParseError("permutation image " + std::to_string(v) + " out of range for degree " +
                         std::to_string(images.size()));
      if (seen[v]) throw ParseError("permutation images are not a bijection");
      seen[v] = true;
      p.images_[i] = static_cast<std::uint8_t>(v);
    }
    return p;
  }

  /// Parses a product of disjoint cycles such as "(0,1,2)(3,4)". "()" is the identity.
  static Perm from_cycles(std::size_t degree, std::string_view text);

  std::size_t degree() const { return degree_; }
  std::size_t operator[](std::size_t i) const { return images_[i]; }
  std::span<const std::uint8_t> images() const { return {images_.data(), degree_}; }

  Perm operator*(const Perm& rhs) const {
    Perm out;
    out.degree_ = degree_;
    for (std::size_t i = 0; i < degree_; ++i) out.images_[i] = images_[rhs.images_[i]];
    return out;
  }

  Perm inverse() const {
    Perm out;
    out.degree_ = degree_;
    for (std::size_t i = 0; i < degree_; ++i) out.images_[images_[i]] = static_cast<std::uint8_t>(i);
    return out;
  }

  Perm pow(long long s) const {
    Perm base = s < 0 ? inverse() : *this;
    unsigned long long n = s < 0 ? static_cast<unsigned long long>(-s) : static_cast<unsigned long long>(s);
    Perm acc(degree_);
    while (n) {
      if (n & 1U) acc = acc * base;
      base = base * base;
      n >>= 1U;
    }
    return acc;
  }

  bool is_identity() const {
    for (std::size_t i = 0; i < degree_; ++i)
      if (images_[i] != i) return false;
    return true;
  }

  std::size_t fixed_points() const {
    std::size_t n = 0;
    for (std::size_t i = 0; i < degree_; ++i) n += images_[i] == i;
    return n;
  }

  /// Cycle lengths (including fixed points), in order of smallest point.
  std::vector<std::size_t> cycle_type() const {
    std::vector<std::size_t> lengths;
    std::array<bool, kMaxDegree> seen{};
    for (std::size_t i = 0; i < degree_; ++i) {
      if (seen[i]) continue;
      std::size_t len = 0;
      for (std::size_t j = i; !seen[j]; j = images_[j]) {
        seen[j] = true;
        ++len;
      }
      lengths.push_back(len);
    }
    return lengths;
  }

  std::size_t order() const {
    std::size_t ord = 1;
    for (std::size_t len : cycle_type()) ord = std::lcm(ord, len);
    return ord;
  }

  /// Disjoint-cycle notation on 0-based points, omitting fixed points.
  std::string cycles() const {
    std::string out;
    std::array<bool, kMaxDegree> seen{};
    for (std::size_t i = 0; i < degree_; ++i) {
      if (seen[i] || images_[i] == i) continue;
      out += '(';
      for (std::size_t j = i; !seen[j]; j = images_[j]) {
        seen[j] = true;
        if (j != i) out += ',';
        out += std::to_string(j);
      }
      out += ')';
    }
    return out.empty() ? "()" : out;
  }

  bool operator==(const Perm& rhs) const {
    return degree_ == rhs.degree_ && std::equal(images_.begin(), images_.begin() + degree_, rhs.images_.begin());
  }

  /// Degree first, then lexicographic on the image sequence.
  std::strong_ordering operator<=>(const Perm& rhs) const {
    if (auto c = degree_ <=> rhs.degree_; c != 0) return c;
    for (std::size_t i = 0; i < degree_; ++i)
      if (auto c = images_[i] <=> rhs.images_[i]; c != 0) return c;
    return std::strong_ordering::equal;
  }

  std::size_t hash() const {
    return std::hash<std::string_view>{}(
        std::string_view(reinterpret_cast<const char*>(images_.data()), degree_));
  }

 private:
  static std::size_t check_degree(std::size_t degree) {
    if (degree > kMaxDegree)
      throw ParseError("permutation degree " + std::to_string(degree) + " exceeds the maximum of " +
                       std::to_string(kMaxDegree));
    return degree;
  }

  std::uint8_t degree_ = 0;
  std::array<std::uint8_t, kMaxDegree> images_{};
};

struct PermHash {
  std::size_t operator()(const Perm& p) const { return p.hash(); }
};

namespace detail {

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

inline int parse_point(std::string_view tok, std::size_t degree) {
  tok = trim(tok);
  if (tok.empty()) throw ParseError("empty point in cycle");
  int v = 0;
  for (char c : tok) {
    if (c < '0' || c > '9') throw ParseError("malformed point '" + std::string(tok) + "' in cycle");
    v = v * 10 + (c - '0');
    if (v > 1000) break;
  }
  if (static_cast<std::size_t>(v) >= degree)
    throw ParseError("point " + std::string(tok) + " out of range for degree " + std::to_string(degree));
  return v;
}

}  // namespace detail

inline Perm Perm::from_cycles(std::size_t degree, std::string_view text) {
  if (degree == 0) throw ParseError("permutation degree must be at least 1");
  Perm p(degree);
  std::array<bool, kMaxDegree> used{};
  text = detail::trim(text);
  if (text.empty()) throw ParseError("empty cycle list");
  std::size_t pos = 0;
  while (pos < text.size()) {
    if (text[pos] == ' ') {
      ++pos;
      continue;
    }
    if (text[pos] != '(') throw ParseError("expected '(' in cycles '" + std::string(text) + "'");
    const std::size_t close = text.find(')', pos);
    if (close == std::string_view::npos) throw ParseError("unterminated cycle in '" + std::string(text) + "'");
    std::string_view body = detail::trim(text.substr(pos + 1, close - pos - 1));
    pos = close + 1;
    if (body.empty()) continue;  // "()"
    std::vector<int> pts;
    std::size_t start = 0;
    while (true) {
      const std::size_t comma = body.find(',', start);
      pts.push_back(detail::parse_point(body.substr(start, comma - start), degree));
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
    for (int v : pts) {
      if (used[v]) throw ParseError("cycles are not disjoint: point " + std::to_string(v) + " repeated");
      used[v] = true;
    }
    for (std::size_t i = 0; i < pts.size(); ++i)
      p.images_[pts[i]] = static_cast<std::uint8_t>(pts[(i + 1) % pts.size()]);
  }
  return p;
}

}  // namespace chartab
