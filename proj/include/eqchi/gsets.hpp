#pragma once

// Finite right G-sets and their G-partitions: orbits, stabilizers, orbit-type
// fingerprints, coset G-sets, block G-sets, direct enumeration of Pi(S)^G, and
// reduced Euler characteristics of G-partition posets.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "eqchi/common.hpp"
#include "eqchi/group.hpp"
#include "eqchi/partitions.hpp"
#include "eqchi/perm.hpp"
#include "eqchi/posets.hpp"

namespace eqchi::gsets {

using groups::FiniteGroup;
using groups::PermGroup;
using partitions::SetPartition;

using GroupPtr = std::shared_ptr<const FiniteGroup>;

/// Number of orbits of each subgroup-class type, indexed by class id.
using Fingerprint = std::vector<std::uint16_t>;

inline std::string fingerprint_to_string(const FiniteGroup& g, const Fingerprint& fp) {
  std::string s;
  for (std::size_t c = 0; c < fp.size(); ++c) {
    if (!fp[c]) continue;
    if (!s.empty()) s += " + ";
    s += std::to_string(fp[c]) + "*[" + std::to_string(c) + "|" + std::to_string(g.classes()[c].order) + "]";
  }
  return s.empty() ? "0" : s;
}

inline constexpr std::size_t kDefaultPointCap = 14;
inline constexpr std::size_t kMaxEnumerationPoints = 24;

class GSetAction {
 public:
  /// action[i] is the permutation of S induced by group element i.
  GSetAction(GroupPtr group, std::size_t degree, std::vector<Permutation> action)
      : group_(std::move(group)), degree_(degree), action_(std::move(action)) {
    const auto& t = group_->table();
    if (action_.size() != t.order()) throw DomainError("GSetAction: one permutation per group element required");
    if (degree_ > partitions::kMaxPoints) throw DomainError("GSetAction: at most 32 points supported");
    for (const auto& a : action_)
      if (a.degree() != degree_) throw DomainError("GSetAction: action permutation has wrong degree");
    if (!action_[0].is_identity()) throw DomainError("GSetAction: identity does not act trivially");
    for (std::size_t i = 0; i < t.order(); ++i)
      for (std::size_t j = 0; j < t.order(); ++j)
        if (action_[t.mul(i, j)] != action_[i] * action_[j])
          throw DomainError("GSetAction: action is not a homomorphism");
  }

  /// G acting on its own points.
  static GSetAction natural(GroupPtr group) {
    auto acts = group->perm_group().elements();
    const auto n = group->perm_group().degree();
    return GSetAction(std::move(group), n, std::move(acts));
  }

  const GroupPtr& group_ptr() const { return group_; }
  const FiniteGroup& group() const { return *group_; }
  std::size_t degree() const { return degree_; }
  const std::vector<Permutation>& action() const { return action_; }
  const Permutation& acting(std::size_t g) const { return action_[g]; }

  std::vector<std::vector<Point>> orbits() const { return orbits_under(group_->table().all()); }

  /// Orbits of the subgroup K (element-index set), each sorted, ordered by least point.
  std::vector<std::vector<Point>> orbits_under(const Bitset& k) const {
    std::vector<int> which(degree_, -1);
    std::vector<std::vector<Point>> out;
    for (Point x = 0; x < degree_; ++x) {
      if (which[x] >= 0) continue;
      std::vector<Point> orb;
      k.for_each([&](std::size_t g) {
        Point y = action_[g](x);
        if (which[y] < 0) {
          which[y] = static_cast<int>(out.size());
          orb.push_back(y);
        }
      });
      std::sort(orb.begin(), orb.end());
      out.push_back(std::move(orb));
    }
    return out;
  }

  Bitset stabilizer(Point x) const {
    Bitset s(action_.size());
    for (std::size_t g = 0; g < action_.size(); ++g)
      if (action_[g](x) == x) s.set(g);
    return s;
  }

  std::size_t stabilizer_class(Point x) const { return group_->lattice().class_of(stabilizer(x)); }

  Fingerprint fingerprint() const {
    Fingerprint fp(group_->classes().size(), 0);
    for (const auto& orb : orbits()) ++fp[stabilizer_class(orb.front())];
    return fp;
  }

  bool isomorphic_to(const GSetAction& o) const { return group_ == o.group_ && fingerprint() == o.fingerprint(); }

  bool is_isotypical() const {
    auto fp = fingerprint();
    return std::count_if(fp.begin(), fp.end(), [](std::uint16_t c) { return c != 0; }) <= 1;
  }

  bool is_free() const {
    for (std::size_t g = 1; g < action_.size(); ++g)
      if (action_[g].fixed_point_count() != 0) return false;
    return true;
  }

  /// True iff only the identity element acts trivially.
  bool is_effective() const {
    for (std::size_t g = 1; g < action_.size(); ++g)
      if (action_[g].is_identity()) return false;
    return true;
  }

 private:
  GroupPtr group_;
  std::size_t degree_ = 0;
  std::vector<Permutation> action_;
};

/// m copies of the right coset G-set H\G.
inline GSetAction coset_gset(const GroupPtr& g, const Bitset& h, std::size_t m,
                             std::size_t cap = 32) {
  const auto& t = g->table();
  if (!t.is_subgroup(h)) throw DomainError("coset_gset: H is not a subgroup");
  if (m == 0) throw DomainError("coset_gset: multiplicity must be >= 1");
  const std::size_t idx = t.order() / h.count();
  if (idx * m > cap)
    throw ResourceError("coset_gset: " + std::to_string(idx * m) + " points exceed cap " + std::to_string(cap));
  // Right cosets Hx, labelled by their least element index.
  std::vector<int> coset_of(t.order(), -1);
  std::vector<std::size_t> reps;
  for (std::size_t x = 0; x < t.order(); ++x) {
    if (coset_of[x] >= 0) continue;
    h.for_each([&](std::size_t k) { coset_of[t.mul(k, x)] = static_cast<int>(reps.size()); });
    reps.push_back(x);
  }
  std::vector<Permutation> acts;
  acts.reserve(t.order());
  for (std::size_t a = 0; a < t.order(); ++a) {
    std::vector<Point> im(idx * m);
    for (std::size_t c = 0; c < m; ++c)
      for (std::size_t i = 0; i < idx; ++i)
        im[c * idx + i] = static_cast<Point>(c * idx + static_cast<std::size_t>(coset_of[t.mul(reps[i], a)]));
    acts.emplace_back(std::move(im));
  }
  return GSetAction(g, idx * m, std::move(acts));
}

inline GSetAction coset_gset_of_class(const GroupPtr& g, std::size_t class_id, std::size_t m, std::size_t cap = 32) {
  return coset_gset(g, g->classes().at(class_id).representative, m, cap);
}

inline GSetAction disjoint_union(const GSetAction& a, const GSetAction& b) {
  if (a.group_ptr() != b.group_ptr()) throw DomainError("disjoint_union: actions of different groups");
  const std::size_t n = a.degree() + b.degree();
  std::vector<Permutation> acts;
  for (std::size_t g = 0; g < a.action().size(); ++g) {
    std::vector<Point> im(n);
    for (std::size_t x = 0; x < a.degree(); ++x) im[x] = a.acting(g)(static_cast<Point>(x));
    for (std::size_t x = 0; x < b.degree(); ++x)
      im[a.degree() + x] = static_cast<Point>(a.degree() + b.acting(g)(static_cast<Point>(x)));
    acts.emplace_back(std::move(im));
  }
  return GSetAction(a.group_ptr(), n, std::move(acts));
}

/// A representative G-set for a fingerprint; classes in increasing id order.
inline GSetAction gset_from_fingerprint(const GroupPtr& g, const Fingerprint& fp, std::size_t cap = 32) {
  std::size_t points = 0;
  for (std::size_t c = 0; c < fp.size(); ++c) points += fp[c] * g->class_index(c);
  if (points > cap)
    throw ResourceError("gset_from_fingerprint: " + std::to_string(points) + " points exceed cap " + std::to_string(cap));
  std::optional<GSetAction> acc;
  for (std::size_t c = 0; c < fp.size(); ++c) {
    if (!fp[c]) continue;
    auto part = coset_gset_of_class(g, c, fp[c], cap);
    acc = acc ? disjoint_union(*acc, part) : std::move(part);
  }
  if (!acc) {
    std::vector<Permutation> acts(g->order(), Permutation::identity(0));
    return GSetAction(g, 0, std::move(acts));
  }
  return std::move(*acc);
}

struct CanonicalPartitions {
  SetPartition omega;  ///< orbits of K
  SetPartition theta;  ///< points grouped by stabilizer conjugacy class
  bool isotypical = false;
};

inline CanonicalPartitions canonical_partitions(const GSetAction& s, std::optional<Bitset> k = std::nullopt) {
  const auto& t = s.group().table();
  Bitset kk = k ? *k : t.all();
  if (!t.is_subgroup(kk)) throw DomainError("canonical_partitions: K is not a subgroup");
  std::vector<std::uint32_t> om(s.degree()), th(s.degree());
  auto orbs = s.orbits_under(kk);
  for (std::size_t o = 0; o < orbs.size(); ++o)
    for (auto x : orbs[o]) om[x] = static_cast<std::uint32_t>(o);
  for (Point x = 0; x < s.degree(); ++x) th[x] = static_cast<std::uint32_t>(s.stabilizer_class(x));
  CanonicalPartitions cp{SetPartition(om), SetPartition(th), false};
  cp.isotypical = cp.theta.is_indiscrete();
  return cp;
}

inline bool is_g_partition(const GSetAction& s, const SetPartition& pi) {
  if (pi.size() != s.degree()) return false;
  for (const auto& g : s.group().perm_group().generators()) {
    auto idx = s.group().perm_group().index_of(g);
    if (!partitions::is_fixed(pi, s.acting(*idx))) return false;
  }
  return true;
}

struct BlockGSet {
  GSetAction action;               ///< G acting on the blocks, block i = pi.blocks()[i]
  Fingerprint fingerprint;
  std::vector<Bitset> stabilizers;  ///< setwise stabilizer of each block
};

/// The G-set of pi-blocks, [x]g = [xg].
inline BlockGSet block_gset_type(const GSetAction& s, const SetPartition& pi) {
  if (!is_g_partition(s, pi)) throw DomainError("block_gset_type: partition " + pi.to_string() + " is not G-fixed");
  const std::size_t k = pi.block_count();
  std::vector<Permutation> acts;
  acts.reserve(s.action().size());
  for (const auto& a : s.action()) {
    std::vector<Point> im(k);
    for (std::size_t b = 0; b < k; ++b) {
      auto x = static_cast<Point>(std::countr_zero(pi.blocks()[b]));
      im[b] = static_cast<Point>(pi.block_of(a(x)));
    }
    acts.emplace_back(std::move(im));
  }
  GSetAction blocks(s.group_ptr(), k, std::move(acts));
  BlockGSet out{blocks, blocks.fingerprint(), {}};
  for (std::size_t b = 0; b < k; ++b) out.stabilizers.push_back(blocks.stabilizer(static_cast<Point>(b)));
  return out;
}

/// The subgroup K (element-index set) acting on a K-invariant subset of S,
/// with points relabelled in increasing order.
inline GSetAction subgroup_action(const GSetAction& s, const Bitset& k, std::uint32_t points,
                                  std::size_t cap = groups::kDefaultSubgroupCap) {
  const auto& t = s.group().table();
  auto sub = FiniteGroup::make(t.as_group(k), cap);
  std::vector<Point> label(s.degree(), 0), pts;
  for (Point x = 0; x < s.degree(); ++x)
    if ((points >> x) & 1u) {
      label[x] = static_cast<Point>(pts.size());
      pts.push_back(x);
    }
  std::vector<Permutation> acts;
  for (const auto& e : sub->perm_group().elements()) {
    const auto& a = s.acting(*s.group().perm_group().index_of(e));
    std::vector<Point> im(pts.size());
    for (std::size_t i = 0; i < pts.size(); ++i) {
      Point y = a(pts[i]);
      if (!((points >> y) & 1u)) throw DomainError("subgroup_action: point set is not K-invariant");
      im[i] = label[y];
    }
    acts.emplace_back(std::move(im));
  }
  return GSetAction(std::move(sub), pts.size(), std::move(acts));
}

/// G/H for normal H, realized by the action of G on the cosets H\G.
inline PermGroup quotient_group(const GroupPtr& g, const Bitset& h) {
  const auto& t = g->table();
  if (t.normalizer(h) != t.all()) throw DomainError("quotient_group: subgroup is not normal");
  auto cosets = coset_gset(g, h, 1, t.order());
  std::vector<Permutation> gens;
  for (const auto& e : g->perm_group().generators()) gens.push_back(cosets.acting(*g->perm_group().index_of(e)));
  return PermGroup::generate(cosets.degree(), std::move(gens));
}

/// Recursive block-candidate enumeration of Pi(S)^G. The visitor receives the
/// block masks, grouped by G-orbit, and the orbit-type multiplicities.
class GPartitionEnumerator {
 public:
  explicit GPartitionEnumerator(const GSetAction& s, std::size_t cap = kDefaultPointCap) : s_(s) {
    n_ = s.degree();
    if (n_ > cap || n_ > kMaxEnumerationPoints)
      throw ResourceError("g-partition enumeration: |S| = " + std::to_string(n_) + " exceeds cap " +
                          std::to_string(std::min(cap, kMaxEnumerationPoints)));
    // Distinct images of the action, and which group elements induce each.
    std::unordered_map<Permutation, std::size_t> seen;
    image_of_.resize(s.action().size());
    for (std::size_t g = 0; g < s.action().size(); ++g) {
      auto [it, fresh] = seen.emplace(s.acting(g), images_.size());
      if (fresh) images_.push_back(s.acting(g));
      image_of_[g] = it->second;
    }
    chunks_ = (n_ + 7) / 8;
    lut_.assign(images_.size() * chunks_ * 256, 0);
    for (std::size_t i = 0; i < images_.size(); ++i)
      for (std::size_t c = 0; c < chunks_; ++c)
        for (std::uint32_t v = 0; v < 256; ++v) {
          std::uint32_t img = 0;
          for (std::size_t b = 0; b < 8; ++b) {
            std::size_t x = c * 8 + b;
            if (x < n_ && ((v >> b) & 1u)) img |= std::uint32_t{1} << images_[i](static_cast<Point>(x));
          }
          lut_[(i * chunks_ + c) * 256 + v] = img;
        }
    // Point-stabilizer orbits shape the candidate blocks through x.
    for (Point x = 0; x < n_; ++x) {
      std::vector<std::uint32_t> units(n_, 0);
      Bitset st = s.stabilizer(x);
      std::vector<bool> done(n_, false);
      std::vector<std::uint32_t> u;
      for (Point y = 0; y < n_; ++y) {
        if (done[y]) continue;
        std::uint32_t orb = 0;
        st.for_each([&](std::size_t g) { orb |= std::uint32_t{1} << s.acting(g)(y); });
        for (Point z = 0; z < n_; ++z)
          if ((orb >> z) & 1u) done[z] = true;
        u.push_back(orb);
      }
      units_.push_back(std::move(u));
    }
    stab_class_.assign(std::size_t{1} << n_, -1);
    classes_ = s.group().classes().size();
    for (const auto& orb : s.orbits()) {
      std::uint32_t m = 0;
      for (auto y : orb) m |= std::uint32_t{1} << y;
      orbit_masks_.push_back(m);
      orbit_class_.push_back(s.stabilizer_class(orb.front()));
    }
  }

  std::size_t degree() const { return n_; }
  std::size_t class_count() const { return classes_; }

  std::uint32_t image(std::size_t i, std::uint32_t mask) const {
    std::uint32_t out = 0;
    for (std::size_t c = 0; c < chunks_; ++c) out |= lut_[(i * chunks_ + c) * 256 + ((mask >> (8 * c)) & 0xFFu)];
    return out;
  }

  /// Class id of the setwise stabilizer of the block mask.
  std::size_t block_class(std::uint32_t mask) {
    auto& slot = stab_class_[mask];
    if (slot >= 0) return static_cast<std::size_t>(slot);
    Bitset st(image_of_.size());
    for (std::size_t g = 0; g < image_of_.size(); ++g)
      if (image(image_of_[g], mask) == mask) st.set(g);
    slot = static_cast<std::int32_t>(s_.group().lattice().class_of(st));
    return static_cast<std::size_t>(slot);
  }

  using Visitor = std::function<void(const std::vector<std::uint32_t>& blocks, const Fingerprint& fp)>;

  void for_each(const Visitor& visit) {
    blocks_.clear();
    fp_.assign(classes_, 0);
    const std::uint32_t all = n_ == 32 ? ~std::uint32_t{0} : ((std::uint32_t{1} << n_) - 1);
    recurse(all, visit);
  }

 using Distribution = std::map<Fingerprint, std::uint64_t>;

  /// Number of G-partitions of S per block G-set type, by dynamic programming
  /// over the G-set type of the part not yet covered.
  Distribution type_distribution() {
    memo_.clear();
    const std::uint32_t all = n_ == 32 ? ~std::uint32_t{0} : ((std::uint32_t{1} << n_) - 1);
    return distribution(all);
  }

 private:
  /// Calls f(block, orbit_mask) for every admissible block through the least
  /// uncovered point: a union of Stab(x)-orbits whose images are equal to it
  /// or disjoint from it.
  template <class F>
  void for_each_candidate(std::uint32_t uncovered, F&& f) {
    const auto x = static_cast<Point>(std::countr_zero(uncovered));
    std::uint32_t base = 0;
    std::vector<std::uint32_t> free;
    for (auto u : units_[x]) {
      if ((u >> x) & 1u)
        base = u;
      else if ((u & uncovered) == u)
        free.push_back(u);
    }
    const std::size_t k = free.size();
    for (std::uint64_t pick = 0; pick < (std::uint64_t{1} << k); ++pick) {
      std::uint32_t b = base;
      for (std::size_t i = 0; i < k; ++i)
        if ((pick >> i) & 1u) b |= free[i];
      bool ok = true;
      std::uint32_t orbit = 0;
      for (std::size_t i = 0; i < images_.size() && ok; ++i) {
        std::uint32_t img = image(i, b);
        if (img != b && (img & b)) ok = false;
        orbit |= img;
      }
      if (ok) f(b, orbit);
    }
  }

  void recurse(std::uint32_t uncovered, const Visitor& visit) {
    if (uncovered == 0) {
      visit(blocks_, fp_);
      return;
    }
    for_each_candidate(uncovered, [&](std::uint32_t b, std::uint32_t orbit) {
      const std::size_t start = blocks_.size();
      std::uint32_t covered = 0;
      for (std::size_t i = 0; i < images_.size(); ++i) {
        std::uint32_t img = image(i, b);
        if ((img & covered) == 0) {
          covered |= img;
          blocks_.push_back(img);
        }
      }
      const std::size_t cls = block_class(b);
      ++fp_[cls];
      recurse(uncovered & ~orbit, visit);
      --fp_[cls];
      blocks_.resize(start);
    });
  }

  Fingerprint subset_type(std::uint32_t mask) const {
    Fingerprint fp(classes_, 0);
    for (std::size_t o = 0; o < orbit_masks_.size(); ++o)
      if ((orbit_masks_[o] & mask) == orbit_masks_[o]) ++fp[orbit_class_[o]];
    return fp;
  }

  Distribution distribution(std::uint32_t uncovered) {
    if (uncovered == 0) return {{Fingerprint(classes_, 0), 1}};
    auto key = subset_type(uncovered);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    Distribution out;
    for_each_candidate(uncovered, [&](std::uint32_t b, std::uint32_t orbit) {
      const std::size_t cls = block_class(b);
      for (const auto& [fp, count] : distribution(uncovered & ~orbit)) {
        Fingerprint f = fp;
        ++f[cls];
        out[f] += count;
      }
    });
    memo_.emplace(std::move(key), out);
    return out;
  }

  const GSetAction& s_;
  std::size_t n_ = 0, chunks_ = 0, classes_ = 0;
  std::vector<Permutation> images_;
  std::vector<std::size_t> image_of_;
  std::vector<std::uint32_t> lut_;
  std::vector<std::vector<std::uint32_t>> units_;
  std::vector<std::int32_t> stab_class_;
  std::vector<std::uint32_t> orbit_masks_;
  std::vector<std::size_t> orbit_class_;
  std::map<Fingerprint, Distribution> memo_;
  std::vector<std::uint32_t> blocks_;
  Fingerprint fp_;
};

/// Every G-partition of S as a canonical SetPartition, sorted.
inline std::vector<SetPartition> g_partitions(const GSetAction& s, std::size_t cap = kDefaultPointCap) {
  GPartitionEnumerator e(s, cap);
  std::vector<SetPartition> out;
  e.for_each([&](const std::vector<std::uint32_t>& blocks, const Fingerprint&) {
    out.push_back(SetPartition::from_blocks(s.degree(), blocks));
  });
  std::sort(out.begin(), out.end());
  return out;
}

/// Number of G-partitions of S with each block G-set type.
inline std::map<Fingerprint, std::uint64_t> block_type_counts(const GSetAction& s, bool strip_bounds = true,
                                                              std::size_t cap = kDefaultPointCap) {
  GPartitionEnumerator e(s, cap);
  auto out = e.type_distribution();
  if (strip_bounds && s.degree() > 0) {
    out.erase(s.fingerprint());
    Fingerprint top(s.group().classes().size(), 0);
    top[0] = 1;
    out.erase(top);
  }
  return out;
}

struct GPartitionPosetOptions {
  bool strip_bounds = true;
  bool isotypical_only = false;
  std::size_t point_cap = kDefaultPointCap;
  std::size_t element_cap = partitions::kDefaultPosetElementCap;
};

/// Pi(S)^G (or its isotypical part) as a refinement poset.
inline partitions::PartitionPoset g_partition_poset(const GSetAction& s, GPartitionPosetOptions opt = {}) {
  GPartitionEnumerator e(s, opt.point_cap);
  std::vector<SetPartition> elems;
  const std::size_t n = s.degree();
  e.for_each([&](const std::vector<std::uint32_t>& blocks, const Fingerprint& fp) {
    if (opt.strip_bounds && (blocks.size() == n || blocks.size() <= 1)) return;
    if (opt.isotypical_only && std::count_if(fp.begin(), fp.end(), [](std::uint16_t c) { return c != 0; }) > 1)
      return;
    if (elems.size() >= opt.element_cap)
      throw ResourceError("g_partition_poset: more than " + std::to_string(opt.element_cap) + " elements");
    elems.push_back(SetPartition::from_blocks(n, blocks));
  });
  std::sort(elems.begin(), elems.end());
  return partitions::refinement_poset(std::move(elems));
}

/// Reduced Euler characteristics of Pi*(S)^G, memoized by G-set type. The
/// slice identity mu(0, 1) = -1 - sum_{pi in Pi*} mu(pi, 1) with the interval
/// [pi, 1] isomorphic to Pi(pi\S)^G reduces each type to smaller ones.
class GPartitionEuler {
 public:
  explicit GPartitionEuler(GroupPtr g, std::size_t cap = kDefaultPointCap) : g_(std::move(g)), cap_(cap) {}

  const GroupPtr& group() const { return g_; }
  std::size_t cap() const { return cap_; }

  Integer chi_tilde(const GSetAction& s) { return chi_tilde(s.fingerprint()); }

  Integer chi_tilde(const Fingerprint& fp) {
    if (auto it = memo_.find(fp); it != memo_.end()) return it->second;
    std::size_t points = 0;
    for (std::size_t c = 0; c < fp.size(); ++c) points += fp[c] * g_->class_index(c);
    if (points > cap_)
      throw ResourceError("chi_tilde: G-set with " + std::to_string(points) + " points exceeds cap " +
                          std::to_string(cap_) + " (feasible: |S| <= " + std::to_string(cap_) + ")");
    Integer v = -1;
    if (points > 2) {
      auto s = gset_from_fingerprint(g_, fp, cap_);
      for (const auto& [child, count] : block_type_counts(s, true, cap_)) v -= chi_tilde(child) * Integer(count);
    } else if (points < 2) {
      throw DomainError("chi_tilde: Pi*(S)^G needs |S| >= 2");
    }
    memo_.emplace(fp, v);
    return v;
  }

  std::size_t memo_size() const { return memo_.size(); }

 private:
  GroupPtr g_;
  std::size_t cap_;
  std::map<Fingerprint, Integer> memo_;
};

/// chi~ of Pi*(S)^G by materializing the poset.
inline Integer chi_tilde_poset(const GSetAction& s, bool isotypical_only = false,
                               std::size_t cap = kDefaultPointCap) {
  return posets::reduced_euler(g_partition_poset(s, {true, isotypical_only, cap}));
}

}  // namespace eqchi::gsets
