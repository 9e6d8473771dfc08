#pragma once

// Set partitions of {0, ..., n-1} under refinement, the partition lattice, the
// action of permutations on partitions, and fixed subposets.

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "eqchi/common.hpp"
#include "eqchi/perm.hpp"
#include "eqchi/posets.hpp"

namespace eqchi::partitions {

inline constexpr std::size_t kMaxPoints = 32;
inline constexpr std::size_t kDefaultListCap = 10;
inline constexpr std::size_t kDefaultLatticeCap = 8;

/// Block ids are assigned by first occurrence, so equal partitions have equal
/// representations.
class SetPartition {
 public:
  SetPartition() = default;

  explicit SetPartition(std::span<const std::uint32_t> ids) {
    if (ids.size() > kMaxPoints) throw DomainError("SetPartition: at most 32 points supported");
    std::vector<std::int32_t> remap(ids.size() + 1, -1);
    std::vector<std::uint32_t> canon(ids.size());
    std::uint32_t next = 0;
    for (std::size_t x = 0; x < ids.size(); ++x) {
      if (ids[x] >= remap.size()) remap.resize(ids[x] + 1, -1);
      if (remap[ids[x]] < 0) remap[ids[x]] = static_cast<std::int32_t>(next++);
      canon[x] = static_cast<std::uint32_t>(remap[ids[x]]);
    }
    ids_.assign(canon.begin(), canon.end());
    masks_.assign(next, 0);
    for (std::size_t x = 0; x < ids_.size(); ++x) masks_[ids_[x]] |= std::uint32_t{1} << x;
  }
  explicit SetPartition(const std::vector<std::uint32_t>& ids) : SetPartition(std::span<const std::uint32_t>(ids)) {}

  /// From disjoint block masks covering {0, ..., n-1}.
  static SetPartition from_blocks(std::size_t n, std::span<const std::uint32_t> blocks) {
    if (n > kMaxPoints) throw DomainError("SetPartition: at most 32 points supported");
    std::vector<std::uint32_t> ids(n, ~std::uint32_t{0});
    for (std::size_t b = 0; b < blocks.size(); ++b)
      for (std::size_t x = 0; x < n; ++x)
        if ((blocks[b] >> x) & 1u) {
          if (ids[x] != ~std::uint32_t{0}) throw DomainError("SetPartition: blocks overlap");
          ids[x] = static_cast<std::uint32_t>(b);
        }
    for (auto v : ids)
      if (v == ~std::uint32_t{0}) throw DomainError("SetPartition: blocks do not cover the set");
    for (auto m : blocks)
      if (n < 32 && (m >> n) != 0) throw DomainError("SetPartition: block mask exceeds point count");
    return SetPartition(ids);
  }

  /// 0-hat: every point alone.
  static SetPartition discrete(std::size_t n) {
    std::vector<std::uint32_t> ids(n);
    for (std::size_t x = 0; x < n; ++x) ids[x] = static_cast<std::uint32_t>(x);
    return SetPartition(ids);
  }
  /// 1-hat: one block.
  static SetPartition indiscrete(std::size_t n) { return SetPartition(std::vector<std::uint32_t>(n, 0)); }

  /// Parses "13-24", "1|2|34", or "1,10-2,3" (1-indexed points). Without
  /// commas every character of a block is one point.
  static SetPartition parse(std::string_view text, std::size_t n) {
    std::vector<std::uint32_t> blocks;
    std::size_t pos = 0;
    while (pos <= text.size()) {
      std::size_t end = text.find_first_of("-|/", pos);
      if (end == std::string_view::npos) end = text.size();
      std::string_view part = text.substr(pos, end - pos);
      std::uint32_t mask = 0;
      auto add = [&](std::size_t point) {
        if (point < 1 || point > n)
          throw UsageError("SetPartition::parse: point " + std::to_string(point) + " out of range at offset " +
                           std::to_string(pos));
        if ((mask >> (point - 1)) & 1u) throw UsageError("SetPartition::parse: repeated point");
        mask |= std::uint32_t{1} << (point - 1);
      };
      if (part.find_first_of(", ") != std::string_view::npos) {
        std::size_t p = 0;
        while (p < part.size()) {
          while (p < part.size() && (part[p] == ',' || part[p] == ' ')) ++p;
          std::size_t q = p;
          while (q < part.size() && std::isdigit(static_cast<unsigned char>(part[q]))) ++q;
          if (q == p) {
            if (p < part.size()) throw UsageError("SetPartition::parse: unexpected character");
            break;
          }
          add(std::stoul(std::string(part.substr(p, q - p))));
          p = q;
        }
      } else {
        for (char c : part) {
          if (!std::isdigit(static_cast<unsigned char>(c)))
            throw UsageError(std::string("SetPartition::parse: unexpected character '") + c + "'");
          add(static_cast<std::size_t>(c - '0'));
        }
      }
      if (mask == 0) throw UsageError("SetPartition::parse: empty block");
      blocks.push_back(mask);
      pos = end + 1;
    }
    try {
      return from_blocks(n, blocks);
    } catch (const DomainError& e) {
      throw UsageError(std::string("SetPartition::parse: ") + e.what());
    }
  }

  std::size_t size() const { return ids_.size(); }
  std::size_t block_count() const { return masks_.size(); }
  std::uint32_t block_of(std::size_t x) const { return ids_[x]; }
  const std::vector<std::uint8_t>& ids() const { return ids_; }
  const std::vector<std::uint32_t>& blocks() const { return masks_; }
  bool is_discrete() const { return masks_.size() == ids_.size(); }
  bool is_indiscrete() const { return masks_.size() <= 1; }

  /// this <= other: every block of this lies inside a block of other.
  bool refines(const SetPartition& other) const {
    if (other.size() != size()) throw DomainError("SetPartition: size mismatch");
    for (auto m : masks_) {
      auto b = other.masks_[other.ids_[static_cast<std::size_t>(std::countr_zero(m))]];
      if ((m & ~b) != 0) return false;
    }
    return true;
  }

  SetPartition meet(const SetPartition& other) const {
    if (other.size() != size()) throw DomainError("SetPartition: size mismatch");
    std::vector<std::uint32_t> ids(size());
    for (std::size_t x = 0; x < size(); ++x) ids[x] = ids_[x] * 64u + other.ids_[x];
    return SetPartition(ids);
  }

  SetPartition join(const SetPartition& other) const {
    if (other.size() != size()) throw DomainError("SetPartition: size mismatch");
    std::vector<std::uint32_t> acc;
    std::uint32_t todo = size() == 32 ? ~std::uint32_t{0} : ((std::uint32_t{1} << size()) - 1);
    while (todo) {
      std::uint32_t comp = std::uint32_t{1} << std::countr_zero(todo);
      std::uint32_t prev = 0;
      while (comp != prev) {
        prev = comp;
        for (auto m : masks_)
          if (m & comp) comp |= m;
        for (auto m : other.masks_)
          if (m & comp) comp |= m;
      }
      acc.push_back(comp);
      todo &= ~comp;
    }
    return from_blocks(size(), acc);
  }

  /// Blocks joined by '-', points 1-indexed; points are comma-separated when n > 9.
  std::string to_string() const {
    std::string s;
    for (std::size_t b = 0; b < masks_.size(); ++b) {
      if (b) s += '-';
      bool first = true;
      for (std::size_t x = 0; x < ids_.size(); ++x)
        if ((masks_[b] >> x) & 1u) {
          if (!first && ids_.size() > 9) s += ',';
          s += std::to_string(x + 1);
          first = false;
        }
    }
    return s;
  }

  auto operator<=>(const SetPartition& o) const { return ids_ <=> o.ids_; }
  bool operator==(const SetPartition& o) const { return ids_ == o.ids_; }

 private:
  std::vector<std::uint8_t> ids_;
  std::vector<std::uint32_t> masks_;
};

/// pi acted on by g: x ~ y in the result iff g(x) ~ g(y) in pi.
inline SetPartition act(const SetPartition& pi, const Permutation& g) {
  if (pi.size() != g.degree())
    throw DomainError("act: partition on " + std::to_string(pi.size()) + " points, permutation of degree " +
                      std::to_string(g.degree()));
  std::vector<std::uint32_t> ids(pi.size());
  for (std::size_t x = 0; x < pi.size(); ++x) ids[x] = pi.block_of(g(static_cast<Point>(x)));
  return SetPartition(ids);
}

inline bool is_fixed(const SetPartition& pi, const Permutation& g) {
  for (auto m : pi.blocks()) {
    std::uint32_t img = 0;
    for (std::size_t x = 0; x < pi.size(); ++x)
      if ((m >> x) & 1u) img |= std::uint32_t{1} << g(static_cast<Point>(x));
    if (img != m && std::find(pi.blocks().begin(), pi.blocks().end(), img) == pi.blocks().end()) return false;
  }
  return true;
}

/// All partitions of an n-set by restricted growth strings, in lexicographic
/// order of the canonical id arrays.
inline std::vector<SetPartition> all_partitions(std::size_t n, std::size_t cap = kDefaultListCap) {
  if (n > cap) throw ResourceError("all_partitions: n = " + std::to_string(n) + " exceeds cap " + std::to_string(cap));
  std::vector<SetPartition> out;
  if (n == 0) {
    out.emplace_back(std::vector<std::uint32_t>{});
    return out;
  }
  std::vector<std::uint32_t> a(n, 0), mx(n, 0);
  while (true) {
    out.emplace_back(a);
    std::size_t i = n - 1;
    while (i > 0 && a[i] > mx[i - 1]) --i;
    if (i == 0) break;
    ++a[i];
    for (std::size_t j = i + 1; j < n; ++j) a[j] = 0;
    for (std::size_t j = i; j < n; ++j) mx[j] = std::max(mx[j - 1], a[j]);
  }
  return out;
}

using PartitionPoset = posets::FinitePoset<SetPartition>;

inline PartitionPoset refinement_poset(std::vector<SetPartition> elems) {
  const std::size_t k = elems.size();
  std::vector<Bitset> up(k, Bitset(k));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      if (elems[i].refines(elems[j])) up[i].set(j);
  return PartitionPoset::from_up_sets(std::move(elems), std::move(up));
}

/// Pi(n) under refinement. Materialization is quadratic in Bell(n).
inline PartitionPoset partition_lattice(std::size_t n, bool strip_bounds = false,
                                        std::size_t cap = kDefaultLatticeCap) {
  if (n > cap)
    throw ResourceError("partition_lattice: n = " + std::to_string(n) + " exceeds cap " + std::to_string(cap));
  auto all = all_partitions(n, std::max(cap, n));
  if (strip_bounds)
    std::erase_if(all, [&](const SetPartition& p) { return p.is_discrete() || p.is_indiscrete(); });
  return refinement_poset(std::move(all));
}

inline constexpr std::size_t kDefaultPosetElementCap = 5000;

/// Pi(n)^X: partitions fixed by every permutation in X, optionally without
/// the bounds.
inline PartitionPoset fixed_subposet(std::size_t n, std::span<const Permutation> xs, bool strip_bounds,
                                     std::size_t cap = kDefaultListCap,
                                     std::size_t element_cap = kDefaultPosetElementCap) {
  for (const auto& g : xs)
    if (g.degree() != n) throw DomainError("fixed_subposet: permutation degree differs from n");
  std::vector<SetPartition> keep;
  for (auto& p : all_partitions(n, cap)) {
    if (strip_bounds && (p.is_discrete() || p.is_indiscrete())) continue;
    if (std::all_of(xs.begin(), xs.end(), [&](const Permutation& g) { return is_fixed(p, g); }))
      keep.push_back(std::move(p));
  }
  if (keep.size() > element_cap)
    throw ResourceError("fixed_subposet: " + std::to_string(keep.size()) + " elements exceed cap " +
                        std::to_string(element_cap));
  return refinement_poset(std::move(keep));
}

}  // namespace eqchi::partitions

template <>
struct std::hash<eqchi::partitions::SetPartition> {
  std::size_t operator()(const eqchi::partitions::SetPartition& p) const noexcept {
    std::size_t h = p.size();
    for (auto v : p.ids()) h = h * 31u + v;
    return h;
  }
};
