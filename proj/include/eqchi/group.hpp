#pragma once

// Finite permutation groups given by their complete element lists, together
// with the subgroup machinery needed downstream: Cayley tables, subgroup
// enumeration by cyclic extension, conjugacy classes of subgroups, tables of
// marks, commuting tuples, and counts of generating tuples.

#include <algorithm>
#include <cstdint>
#include <deque>
#include <functional>
#include <map>
#include <memory>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "eqchi/common.hpp"
#include "eqchi/perm.hpp"
#include "eqchi/posets.hpp"

namespace eqchi::groups {

inline constexpr std::size_t kDefaultClosureCap = 50000;
inline constexpr std::size_t kDefaultSubgroupCap = 240;

class PermGroup {
 public:
  PermGroup() { init(1, {}, {Permutation::identity(1)}); }

  /// Closure of `generators` on `degree` points. Elements are sorted by image
  /// arrays, so the identity always has index 0.
  static PermGroup generate(std::size_t degree, std::vector<Permutation> generators,
                            std::size_t cap = kDefaultClosureCap) {
    for (const auto& g : generators)
      if (g.degree() != degree)
        throw DomainError("PermGroup: generator " + g.to_cycle_string() + " has wrong degree");
    std::unordered_map<Permutation, std::size_t> seen;
    std::vector<Permutation> elems{Permutation::identity(degree)};
    seen.emplace(elems[0], 0);
    for (std::size_t i = 0; i < elems.size(); ++i) {
      for (const auto& s : generators) {
        Permutation y = elems[i] * s;
        if (seen.count(y)) continue;
        if (elems.size() >= cap)
          throw ResourceError("PermGroup: closure exceeds cap of " + std::to_string(cap) + " elements");
        seen.emplace(y, elems.size());
        elems.push_back(std::move(y));
      }
    }
    PermGroup g(Empty{});
    g.init(degree, std::move(generators), std::move(elems));
    return g;
  }

  /// Wraps an element list that is already closed (e.g. a subgroup).
  static PermGroup from_elements(std::size_t degree, std::vector<Permutation> elements) {
    std::unordered_map<Permutation, std::size_t> members;
    for (const auto& e : elements) members.emplace(e, 0);
    if (!members.count(Permutation::identity(degree)))
      throw DomainError("PermGroup::from_elements: identity missing");
    // Greedy generating set: add elements not yet in the running closure.
    std::vector<Permutation> gens;
    std::unordered_map<Permutation, std::size_t> closure{{Permutation::identity(degree), 0}};
    std::vector<Permutation> list{Permutation::identity(degree)};
    std::sort(elements.begin(), elements.end());
    for (const auto& e : elements) {
      if (closure.count(e)) continue;
      gens.push_back(e);
      for (std::size_t i = 0; i < list.size(); ++i) {
        for (const auto& s : gens) {
          Permutation y = list[i] * s;
          if (closure.count(y)) continue;
          if (!members.count(y)) throw DomainError("PermGroup::from_elements: element list is not closed");
          closure.emplace(y, 0);
          list.push_back(std::move(y));
        }
      }
    }
    if (list.size() != members.size()) throw DomainError("PermGroup::from_elements: element list is not closed");
    PermGroup g(Empty{});
    g.init(degree, std::move(gens), std::move(list));
    return g;
  }

  std::size_t degree() const { return degree_; }
  std::size_t order() const { return elements_.size(); }
  const std::vector<Permutation>& elements() const { return elements_; }
  const Permutation& element(std::size_t i) const { return elements_[i]; }
  const std::vector<Permutation>& generators() const { return generators_; }

  std::optional<std::size_t> index_of(const Permutation& g) const {
    auto it = index_->find(g);
    if (it == index_->end()) return std::nullopt;
    return it->second;
  }
  bool contains(const Permutation& g) const { return index_->count(g) != 0; }

  bool is_abelian() const {
    for (std::size_t i = 0; i < generators_.size(); ++i)
      for (std::size_t j = i + 1; j < generators_.size(); ++j)
        if (generators_[i] * generators_[j] != generators_[j] * generators_[i]) return false;
    return true;
  }

  bool is_subgroup_of(const PermGroup& g) const {
    if (g.degree() != degree_) return false;
    return std::all_of(generators_.begin(), generators_.end(), [&](const Permutation& s) { return g.contains(s); });
  }

  /// True iff no non-identity element fixes a point.
  bool acts_freely() const {
    for (std::size_t i = 1; i < elements_.size(); ++i)
      if (elements_[i].fixed_point_count() != 0) return false;
    return true;
  }

 private:
  struct Empty {};
  explicit PermGroup(Empty) {}

  void init(std::size_t degree, std::vector<Permutation> gens, std::vector<Permutation> elems) {
    degree_ = degree;
    generators_ = std::move(gens);
    std::sort(elems.begin(), elems.end());
    elements_ = std::move(elems);
    auto idx = std::make_shared<std::unordered_map<Permutation, std::size_t>>();
    idx->reserve(elements_.size());
    for (std::size_t i = 0; i < elements_.size(); ++i) idx->emplace(elements_[i], i);
    index_ = std::move(idx);
  }

  std::size_t degree_ = 1;
  std::vector<Permutation> generators_;
  std::vector<Permutation> elements_;
  std::shared_ptr<const std::unordered_map<Permutation, std::size_t>> index_;
};

// Named families. Degree-1 "S1"/"C1"/"A1" give the trivial group.

inline PermGroup symmetric_group(std::size_t n) {
  if (n < 1) throw DomainError("symmetric_group: degree must be >= 1");
  std::vector<Permutation> gens;
  if (n >= 2) {
    gens.push_back(Permutation::from_cycles(n, {{0, 1}}));
    std::vector<Point> cyc(n);
    std::iota(cyc.begin(), cyc.end(), Point{0});
    if (n >= 3) gens.push_back(Permutation::from_cycles(n, {cyc}));
  }
  return PermGroup::generate(n, std::move(gens));
}

inline PermGroup alternating_group(std::size_t n) {
  if (n < 1) throw DomainError("alternating_group: degree must be >= 1");
  std::vector<Permutation> gens;
  for (Point k = 2; k < n; ++k) gens.push_back(Permutation::from_cycles(n, {{0, 1, k}}));
  return PermGroup::generate(n, std::move(gens));
}

/// Cyclic group of order n acting regularly on n points.
inline PermGroup cyclic_group(std::size_t n) {
  if (n < 1) throw DomainError("cyclic_group: order must be >= 1");
  std::vector<Point> cyc(n);
  std::iota(cyc.begin(), cyc.end(), Point{0});
  std::vector<Permutation> gens;
  if (n >= 2) gens.push_back(Permutation::from_cycles(n, {cyc}));
  return PermGroup::generate(n, std::move(gens));
}

/// Direct product acting on the disjoint union of the point sets.
inline PermGroup direct_product(const PermGroup& a, const PermGroup& b) {
  const std::size_t n = a.degree() + b.degree();
  std::vector<Permutation> gens;
  for (const auto& g : a.generators()) {
    std::vector<Point> im(n);
    std::iota(im.begin(), im.end(), Point{0});
    for (std::size_t x = 0; x < a.degree(); ++x) im[x] = g(static_cast<Point>(x));
    gens.emplace_back(std::move(im));
  }
  for (const auto& g : b.generators()) {
    std::vector<Point> im(n);
    std::iota(im.begin(), im.end(), Point{0});
    for (std::size_t x = 0; x < b.degree(); ++x)
      im[a.degree() + x] = static_cast<Point>(a.degree() + g(static_cast<Point>(x)));
    gens.emplace_back(std::move(im));
  }
  return PermGroup::generate(n, std::move(gens));
}

/// Cayley table over the element indices of a PermGroup.
class GroupTable {
 public:
  explicit GroupTable(const PermGroup& g, std::size_t cap = kDefaultSubgroupCap) : group_(g) {
    const std::size_t n = g.order();
    if (n > cap)
      throw ResourceError("GroupTable: group order " + std::to_string(n) + " exceeds cap " + std::to_string(cap));
    mul_.resize(n * n);
    inv_.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j)
        mul_[i * n + j] = static_cast<std::uint32_t>(*g.index_of(g.element(i) * g.element(j)));
      inv_[i] = static_cast<std::uint32_t>(*g.index_of(g.element(i).inverse()));
    }
    order_of_.resize(n);
    for (std::size_t i = 0; i < n; ++i) order_of_[i] = g.element(i).order();
  }

  const PermGroup& group() const { return group_; }
  std::size_t order() const { return inv_.size(); }
  std::size_t mul(std::size_t i, std::size_t j) const { return mul_[i * inv_.size() + j]; }
  std::size_t inv(std::size_t i) const { return inv_[i]; }
  std::size_t element_order(std::size_t i) const { return order_of_[i]; }
  std::size_t conj(std::size_t h, std::size_t g) const { return mul(mul(inv(g), h), g); }

  Bitset all() const { return Bitset::full(order()); }
  Bitset trivial() const {
    Bitset b(order());
    b.set(0);
    return b;
  }

  /// Subgroup generated by `gens`, seeded with `start` (a subset of it).
  Bitset closure(const Bitset& start, std::span<const std::size_t> gens) const {
    Bitset r = start;
    std::vector<std::size_t> queue = start.indices();
    for (std::size_t q = 0; q < queue.size(); ++q) {
      for (auto s : gens) {
        auto y = mul(queue[q], s);
        if (!r.test(y)) {
          r.set(y);
          queue.push_back(y);
        }
      }
    }
    return r;
  }

  Bitset generated(std::span<const std::size_t> gens) const { return closure(trivial(), gens); }

  Bitset conjugate(const Bitset& h, std::size_t g) const {
    Bitset r(order());
    h.for_each([&](std::size_t x) { r.set(conj(x, g)); });
    return r;
  }

  Bitset centralizer(std::size_t x) const {
    Bitset r(order());
    for (std::size_t g = 0; g < order(); ++g)
      if (mul(g, x) == mul(x, g)) r.set(g);
    return r;
  }

  Bitset normalizer(const Bitset& h) const {
    Bitset r(order());
    for (std::size_t g = 0; g < order(); ++g)
      if (conjugate(h, g) == h) r.set(g);
    return r;
  }

  bool is_subgroup(const Bitset& h) const {
    if (!h.test(0)) return false;
    bool ok = true;
    h.for_each([&](std::size_t a) {
      if (!ok) return;
      h.for_each([&](std::size_t b) {
        if (ok && !h.test(mul(a, b))) ok = false;
      });
    });
    return ok;
  }

  bool is_abelian(const Bitset& h) const {
    auto idx = h.indices();
    for (std::size_t i = 0; i < idx.size(); ++i)
      for (std::size_t j = i + 1; j < idx.size(); ++j)
        if (mul(idx[i], idx[j]) != mul(idx[j], idx[i])) return false;
    return true;
  }

  PermGroup as_group(const Bitset& h) const {
    std::vector<Permutation> elems;
    h.for_each([&](std::size_t i) { elems.push_back(group_.element(i)); });
    return PermGroup::from_elements(group_.degree(), std::move(elems));
  }

  Bitset members_of(const PermGroup& h) const {
    Bitset r(order());
    for (const auto& e : h.elements()) {
      auto i = group_.index_of(e);
      if (!i) throw DomainError("GroupTable: element " + e.to_cycle_string() + " is not in the group");
      r.set(*i);
    }
    return r;
  }

 private:
  PermGroup group_;
  std::vector<std::uint32_t> mul_, inv_;
  std::vector<std::size_t> order_of_;
};

struct Subgroup {
  Bitset members;
  std::vector<std::size_t> generators;
  std::size_t class_id = 0;
  std::size_t order() const { return members.count(); }
};

struct SubgroupClass {
  Bitset representative;     ///< lexicographically least conjugate
  std::size_t order = 0;     ///< subgroup order
  std::size_t class_size = 0;
  std::size_t normalizer_order = 0;
  std::vector<std::size_t> members;  ///< indices into SubgroupLattice::subgroups()
  std::size_t index(std::size_t group_order) const { return group_order / order; }
};

struct LatticeOptions {
  bool abelian_only = false;
  std::size_t cap = kDefaultSubgroupCap;
};

/// All subgroups (or all abelian subgroups) of a group, with conjugacy
/// classes ordered by decreasing order, the whole group first when present.
class SubgroupLattice {
 public:
  explicit SubgroupLattice(std::shared_ptr<const GroupTable> table, LatticeOptions opt = {})
      : table_(std::move(table)), abelian_only_(opt.abelian_only) {
    const auto& t = *table_;
    if (t.order() > opt.cap)
      throw ResourceError("subgroup_classes: group order " + std::to_string(t.order()) + " exceeds cap " +
                          std::to_string(opt.cap));
    std::vector<Subgroup> found{{t.trivial(), {}, 0}};
    std::unordered_map<Bitset, std::size_t> where{{found[0].members, 0}};
    std::vector<Bitset> cent;
    if (abelian_only_)
      for (std::size_t x = 0; x < t.order(); ++x) cent.push_back(t.centralizer(x));
    for (std::size_t q = 0; q < found.size(); ++q) {
      for (std::size_t g = 1; g < t.order(); ++g) {
        if (found[q].members.test(g)) continue;
        if (abelian_only_ &&
            !std::all_of(found[q].generators.begin(), found[q].generators.end(),
                         [&](std::size_t s) { return cent[g].test(s); }))
          continue;
        auto gens = found[q].generators;
        gens.push_back(g);
        Bitset k = t.closure(found[q].members, gens);
        if (where.count(k)) continue;
        where.emplace(k, found.size());
        found.push_back({std::move(k), std::move(gens), 0});
      }
    }
    // Conjugacy classes.
    std::vector<std::optional<std::size_t>> cls(found.size());
    std::vector<SubgroupClass> classes;
    for (std::size_t i = 0; i < found.size(); ++i) {
      if (cls[i]) continue;
      SubgroupClass c;
      c.order = found[i].order();
      c.representative = found[i].members;
      std::vector<std::size_t> members;
      for (std::size_t g = 0; g < t.order(); ++g) {
        Bitset conj = t.conjugate(found[i].members, g);
        auto it = where.find(conj);
        if (it == where.end()) throw ConsistencyError("SubgroupLattice: conjugate subgroup missing");
        if (!cls[it->second]) {
          cls[it->second] = classes.size();
          members.push_back(it->second);
          if (conj.lex_less(c.representative)) c.representative = conj;
        }
      }
      c.class_size = members.size();
      c.normalizer_order = t.order() / c.class_size;
      c.members = std::move(members);
      classes.push_back(std::move(c));
    }
    std::vector<std::size_t> perm(classes.size());
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    std::sort(perm.begin(), perm.end(), [&](std::size_t a, std::size_t b) {
      if (classes[a].order != classes[b].order) return classes[a].order > classes[b].order;
      return classes[a].representative.lex_less(classes[b].representative);
    });
    std::vector<std::size_t> rank(classes.size());
    for (std::size_t r = 0; r < perm.size(); ++r) rank[perm[r]] = r;
    // Subgroups ordered by class, then lexicographically within a class.
    std::vector<std::size_t> sorder(found.size());
    std::iota(sorder.begin(), sorder.end(), std::size_t{0});
    std::sort(sorder.begin(), sorder.end(), [&](std::size_t a, std::size_t b) {
      if (rank[*cls[a]] != rank[*cls[b]]) return rank[*cls[a]] < rank[*cls[b]];
      return found[a].members.lex_less(found[b].members);
    });
    for (auto i : sorder) {
      Subgroup s = found[i];
      s.class_id = rank[*cls[i]];
      index_.emplace(s.members, subgroups_.size());
      subgroups_.push_back(std::move(s));
    }
    for (auto c : perm) {
      SubgroupClass sc = classes[c];
      sc.members.clear();
      classes_.push_back(std::move(sc));
    }
    for (std::size_t i = 0; i < subgroups_.size(); ++i) classes_[subgroups_[i].class_id].members.push_back(i);
  }

  const GroupTable& table() const { return *table_; }
  std::shared_ptr<const GroupTable> table_ptr() const { return table_; }
  bool abelian_only() const { return abelian_only_; }
  const std::vector<Subgroup>& subgroups() const { return subgroups_; }
  const std::vector<SubgroupClass>& classes() const { return classes_; }

  std::optional<std::size_t> find(const Bitset& members) const {
    auto it = index_.find(members);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  std::size_t class_of(const Bitset& members) const {
    auto i = find(members);
    if (!i) throw DomainError("SubgroupLattice: element set is not a known subgroup");
    return subgroups_[*i].class_id;
  }

  /// Poset of all enumerated subgroups under inclusion (labels are indices).
  posets::FinitePoset<std::size_t> inclusion_poset() const {
    std::vector<std::size_t> labels(subgroups_.size());
    std::iota(labels.begin(), labels.end(), std::size_t{0});
    std::vector<Bitset> up(subgroups_.size(), Bitset(subgroups_.size()));
    for (std::size_t a = 0; a < subgroups_.size(); ++a)
      for (std::size_t b = 0; b < subgroups_.size(); ++b)
        if (subgroups_[a].members.is_subset_of(subgroups_[b].members)) up[a].set(b);
    return posets::FinitePoset<std::size_t>::from_up_sets(std::move(labels), std::move(up));
  }

  /// Moebius function mu(H, K) of the subgroup lattice (subgroup indices).
  Integer moebius(std::size_t h, std::size_t k) const {
    if (!subgroups_[h].members.is_subset_of(subgroups_[k].members))
      throw DomainError("SubgroupLattice::moebius: H is not contained in K");
    // mu(H, K) = -sum_{H <= L < K} mu(H, L), over subgroups sorted by order.
    std::vector<std::size_t> between;
    for (std::size_t l = 0; l < subgroups_.size(); ++l)
      if (subgroups_[h].members.is_subset_of(subgroups_[l].members) &&
          subgroups_[l].members.is_subset_of(subgroups_[k].members))
        between.push_back(l);
    std::sort(between.begin(), between.end(),
              [&](std::size_t a, std::size_t b) { return subgroups_[a].order() < subgroups_[b].order(); });
    std::map<std::size_t, Integer> mu;
    for (auto l : between) {
      if (l == h) {
        mu[l] = 1;
        continue;
      }
      Integer s = 0;
      for (auto& [m, v] : mu)
        if (m != l && subgroups_[m].members.is_subset_of(subgroups_[l].members)) s += v;
      mu[l] = -s;
    }
    return mu[k];
  }

  /// Index of the whole group in subgroups() (requires the full lattice or an abelian group).
  std::size_t top() const {
    auto i = find(table_->all());
    if (!i) throw DomainError("SubgroupLattice: whole group not enumerated");
    return *i;
  }

 private:
  std::shared_ptr<const GroupTable> table_;
  bool abelian_only_ = false;
  std::vector<Subgroup> subgroups_;
  std::vector<SubgroupClass> classes_;
  std::unordered_map<Bitset, std::size_t> index_;
};

/// A group with its Cayley table and full subgroup lattice, shared by the
/// G-set, Stirling, and equivariant layers.
class FiniteGroup {
 public:
  static std::shared_ptr<const FiniteGroup> make(const PermGroup& g, std::size_t cap = kDefaultSubgroupCap) {
    auto table = std::make_shared<const GroupTable>(g, cap);
    auto lattice = std::make_shared<const SubgroupLattice>(table, LatticeOptions{false, cap});
    return std::shared_ptr<const FiniteGroup>(new FiniteGroup(std::move(table), std::move(lattice)));
  }

  const PermGroup& perm_group() const { return table_->group(); }
  const GroupTable& table() const { return *table_; }
  const SubgroupLattice& lattice() const { return *lattice_; }
  std::size_t order() const { return table_->order(); }
  const std::vector<SubgroupClass>& classes() const { return lattice_->classes(); }
  std::size_t class_index(std::size_t c) const { return order() / classes()[c].order; }

 private:
  FiniteGroup(std::shared_ptr<const GroupTable> t, std::shared_ptr<const SubgroupLattice> l)
      : table_(std::move(t)), lattice_(std::move(l)) {}
  std::shared_ptr<const GroupTable> table_;
  std::shared_ptr<const SubgroupLattice> lattice_;
};

inline std::vector<SubgroupClass> subgroup_classes(const PermGroup& g, std::size_t cap = kDefaultSubgroupCap) {
  auto table = std::make_shared<const GroupTable>(g, cap);
  return SubgroupLattice(table, {false, cap}).classes();
}

struct ConjugacyData {
  PermGroup normalizer;
  std::size_t conjugate_count = 0;
};

/// Normalizer of H in G by scanning G; works for groups beyond the table cap.
inline ConjugacyData conjugacy_data(const PermGroup& g, const PermGroup& h) {
  if (!h.is_subgroup_of(g)) throw DomainError("conjugacy_data: H is not a subgroup of G");
  std::vector<Permutation> norm;
  for (const auto& x : g.elements()) {
    Permutation xi = x.inverse();
    bool keeps = std::all_of(h.generators().begin(), h.generators().end(),
                             [&](const Permutation& s) { return h.contains(xi * s * x); });
    if (keeps) norm.push_back(x);
  }
  ConjugacyData d{PermGroup::from_elements(g.degree(), std::move(norm)), 0};
  d.conjugate_count = g.order() / d.normalizer.order();
  return d;
}

/// TOM(H, K) = |(K\G)^H| over the class representatives.
inline std::vector<std::vector<std::int64_t>> table_of_marks(const SubgroupLattice& lat) {
  const auto& t = lat.table();
  const auto& cls = lat.classes();
  std::vector<std::vector<std::int64_t>> tom(cls.size(), std::vector<std::int64_t>(cls.size(), 0));
  for (std::size_t k = 0; k < cls.size(); ++k) {
    for (std::size_t g = 0; g < t.order(); ++g) {
      Bitset conj = t.conjugate(cls[k].representative, g);
      for (std::size_t h = 0; h < cls.size(); ++h)
        if (cls[h].representative.is_subset_of(conj)) ++tom[h][k];
    }
    for (std::size_t h = 0; h < cls.size(); ++h) tom[h][k] /= static_cast<std::int64_t>(cls[k].order);
  }
  return tom;
}

/// Visits every r-tuple of pairwise commuting elements (as element indices).
inline void for_each_commuting_tuple(const GroupTable& t, unsigned r,
                                     const std::function<void(std::span<const std::size_t>)>& visit) {
  if (r == 0) throw DomainError("commuting_tuples: r must be >= 1");
  std::vector<Bitset> cent;
  for (std::size_t x = 0; x < t.order(); ++x) cent.push_back(t.centralizer(x));
  std::vector<std::size_t> tuple;
  std::function<void(const Bitset&)> rec = [&](const Bitset& cand) {
    cand.for_each([&](std::size_t x) {
      tuple.push_back(x);
      if (tuple.size() == r)
        visit(tuple);
      else
        rec(cand & cent[x]);
      tuple.pop_back();
    });
  };
  rec(t.all());
}

/// |C_r(G)| by recursive centralizer intersection.
inline Integer commuting_tuple_count(const GroupTable& t, unsigned r) {
  if (r == 0) throw DomainError("commuting_tuples: r must be >= 1");
  std::vector<Bitset> cent;
  for (std::size_t x = 0; x < t.order(); ++x) cent.push_back(t.centralizer(x));
  std::function<Integer(const Bitset&, unsigned)> rec = [&](const Bitset& cand, unsigned left) -> Integer {
    if (left == 1) return Integer(cand.count());
    Integer s = 0;
    cand.for_each([&](std::size_t x) { s += rec(cand & cent[x], left - 1); });
    return s;
  };
  return rec(t.all(), r);
}

enum class PhiMethod { automatic, brute, moebius };

/// Number of r-tuples of elements of the subgroup `a` that generate it.
inline Integer phi_generating(const SubgroupLattice& lat, const Bitset& a, unsigned r,
                              PhiMethod method = PhiMethod::automatic, std::uint64_t brute_cap = 1u << 22) {
  const auto& t = lat.table();
  auto elems = a.indices();
  const std::size_t order = elems.size();
  double work = 1;
  for (unsigned i = 0; i < r; ++i) work *= static_cast<double>(order);
  if (method == PhiMethod::automatic) method = work <= static_cast<double>(brute_cap) ? PhiMethod::brute : PhiMethod::moebius;
  if (method == PhiMethod::brute) {
    if (work > static_cast<double>(brute_cap))
      throw ResourceError("phi_generating: |A|^r = " + std::to_string(static_cast<long double>(work)) +
                          " exceeds brute-force cap");
    Integer count = 0;
    std::vector<std::size_t> digit(r, 0), tuple(r);
    while (true) {
      for (unsigned i = 0; i < r; ++i) tuple[i] = elems[digit[i]];
      if (t.generated(tuple).count() == order) ++count;
      unsigned i = 0;
      while (i < r && ++digit[i] == order) digit[i++] = 0;
      if (i == r) break;
    }
    return count;
  }
  auto top = lat.find(a);
  if (!top) throw DomainError("phi_generating: subgroup not present in the lattice");
  Integer total = 0;
  for (std::size_t b = 0; b < lat.subgroups().size(); ++b) {
    const auto& sb = lat.subgroups()[b];
    if (!sb.members.is_subset_of(a)) continue;
    total += lat.moebius(b, *top) * ipow(Integer(sb.order()), r);
  }
  return total;
}

/// Convenience overload for a standalone group.
inline Integer phi_generating(const PermGroup& a, unsigned r, PhiMethod method = PhiMethod::automatic) {
  auto table = std::make_shared<const GroupTable>(a, std::max<std::size_t>(a.order(), kDefaultSubgroupCap));
  LatticeOptions opt{a.is_abelian(), std::max<std::size_t>(a.order(), kDefaultSubgroupCap)};
  SubgroupLattice lat(table, opt);
  return phi_generating(lat, table->all(), r, method);
}

}  // namespace eqchi::groups
