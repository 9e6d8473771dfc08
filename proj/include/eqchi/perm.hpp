#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <numeric>
#include <span>
#include <string>
#include <vector>

#include "eqchi/common.hpp"

namespace eqchi {

using Point = std::uint32_t;

/// A bijection of {0, ..., degree-1}, acting on the right: x * (g h) = (x g) h.
class Permutation {
 public:
  Permutation() = default;

  explicit Permutation(std::vector<Point> images) : images_(std::move(images)) {
    std::vector<bool> seen(images_.size(), false);
    for (Point p : images_) {
      if (p >= images_.size() || seen[p])
        throw DomainError("Permutation: images do not form a bijection");
      seen[p] = true;
    }
  }

  static Permutation identity(std::size_t degree) {
    Permutation g;
    g.images_.resize(degree);
    std::iota(g.images_.begin(), g.images_.end(), Point{0});
    return g;
  }

  /// Builds a permutation from 0-indexed cycles; points not mentioned are fixed.
  static Permutation from_cycles(std::size_t degree, const std::vector<std::vector<Point>>& cycles) {
    Permutation g = identity(degree);
    std::vector<bool> used(degree, false);
    for (const auto& cyc : cycles) {
      for (Point p : cyc) {
        if (p >= degree) throw DomainError("Permutation: cycle point " + std::to_string(p + 1) +
                                           " exceeds degree " + std::to_string(degree));
        if (used[p]) throw DomainError("Permutation: point " + std::to_string(p + 1) + " repeated in cycles");
        used[p] = true;
      }
      for (std::size_t i = 0; i < cyc.size(); ++i) g.images_[cyc[i]] = cyc[(i + 1) % cyc.size()];
    }
    return g;
  }

  std::size_t degree() const { return images_.size(); }
  Point operator()(Point x) const { return images_[x]; }
  std::span<const Point> images() const { return images_; }

  /// Apply *this first, then rhs.
  Permutation operator*(const Permutation& rhs) const {
    if (rhs.degree() != degree()) throw DomainError("Permutation: degree mismatch in product");
    Permutation out;
    out.images_.resize(images_.size());
    for (std::size_t x = 0; x < images_.size(); ++x) out.images_[x] = rhs.images_[images_[x]];
    return out;
  }

  Permutation inverse() const {
    Permutation out;
    out.images_.resize(images_.size());
    for (std::size_t x = 0; x < images_.size(); ++x) out.images_[images_[x]] = static_cast<Point>(x);
    return out;
  }

  /// g^-1 * this * g
  Permutation conjugate_by(const Permutation& g) const { return g.inverse() * *this * g; }

  bool is_identity() const {
    for (std::size_t x = 0; x < images_.size(); ++x)
      if (images_[x] != x) return false;
    return true;
  }

  std::size_t fixed_point_count() const {
    std::size_t c = 0;
    for (std::size_t x = 0; x < images_.size(); ++x) c += images_[x] == x;
    return c;
  }

  /// All cycles including fixed points, each starting at its least point.
  std::vector<std::vector<Point>> cycles() const {
    std::vector<std::vector<Point>> out;
    std::vector<bool> seen(images_.size(), false);
    for (Point x = 0; x < images_.size(); ++x) {
      if (seen[x]) continue;
      std::vector<Point> cyc;
      for (Point y = x; !seen[y]; y = images_[y]) {
        seen[y] = true;
        cyc.push_back(y);
      }
      out.push_back(std::move(cyc));
    }
    return out;
  }

  /// Cycle lengths (fixed points included), sorted descending.
  std::vector<std::size_t> cycle_type() const {
    std::vector<std::size_t> t;
    for (const auto& c : cycles()) t.push_back(c.size());
    std::sort(t.rbegin(), t.rend());
    return t;
  }

  std::size_t order() const {
    std::size_t o = 1;
    for (const auto& c : cycles()) o = std::lcm(o, c.size());
    return o;
  }

  /// Cycle notation, 1-indexed by default; the identity prints as "()".
  std::string to_cycle_string(bool one_indexed = true) const {
    std::string s;
    for (const auto& c : cycles()) {
      if (c.size() < 2) continue;
      s += '(';
      for (std::size_t i = 0; i < c.size(); ++i) {
        if (i) s += ' ';
        s += std::to_string(c[i] + (one_indexed ? 1 : 0));
      }
      s += ')';
    }
    return s.empty() ? "()" : s;
  }

  auto operator<=>(const Permutation&) const = default;
  bool operator==(const Permutation&) const = default;

 private:
  std::vector<Point> images_;
};

}  // namespace eqchi

template <>
struct std::hash<eqchi::Permutation> {
  std::size_t operator()(const eqchi::Permutation& g) const noexcept {
    std::size_t h = g.degree();
    for (auto p : g.images()) h = h * 1000003u ^ p;
    return h;
  }
};
