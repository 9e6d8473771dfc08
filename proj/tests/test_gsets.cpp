#include <catch2/catch_amalgamated.hpp>

#include <functional>

#include "eqchi/gsets.hpp"
#include "oracles.hpp"

using namespace eqchi;
using namespace eqchi::gsets;
using partitions::SetPartition;

namespace {

GroupPtr make(std::size_t degree, const std::vector<std::vector<std::vector<Point>>>& gens) {
  std::vector<Permutation> ps;
  for (const auto& c : gens) ps.push_back(Permutation::from_cycles(degree, c));
  return FiniteGroup::make(PermGroup::generate(degree, std::move(ps)));
}

std::vector<GroupPtr> corpus_groups() {
  return {FiniteGroup::make(groups::cyclic_group(1)),
          FiniteGroup::make(groups::cyclic_group(2)),
          FiniteGroup::make(groups::cyclic_group(3)),
          FiniteGroup::make(groups::cyclic_group(4)),
          make(4, {{{0, 1}, {2, 3}}, {{0, 2}, {1, 3}}}),
          FiniteGroup::make(groups::symmetric_group(3))};
}

/// Every G-set with 2 <= |S| <= max_points, one per isomorphism type.
std::vector<GSetAction> all_gsets(const GroupPtr& g, std::size_t max_points) {
  std::vector<GSetAction> out;
  const std::size_t k = g->classes().size();
  Fingerprint fp(k, 0);
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t c, std::size_t used) {
    if (c == k) {
      if (used >= 2) out.push_back(gset_from_fingerprint(g, fp));
      return;
    }
    for (std::size_t m = 0; used + m * g->class_index(c) <= max_points; ++m) {
      fp[c] = static_cast<std::uint16_t>(m);
      rec(c + 1, used + m * g->class_index(c));
    }
    fp[c] = 0;
  };
  rec(0, 0);
  return out;
}

std::vector<GSetAction> corpus(std::size_t max_points = 7) {
  std::vector<GSetAction> out;
  for (const auto& g : corpus_groups())
    for (auto& s : all_gsets(g, max_points)) out.push_back(std::move(s));
  return out;
}

std::vector<std::string> labels(const partitions::PartitionPoset& p) {
  std::vector<std::string> out;
  for (const auto& e : p.elements()) out.push_back(e.to_string());
  std::sort(out.begin(), out.end());
  return out;
}

auto meet = [](const SetPartition& a, const SetPartition& b) { return a.meet(b); };
auto join = [](const SetPartition& a, const SetPartition& b) { return a.join(b); };

struct Node {
  std::string label;
  int up, down;
};

void check_weights(const GSetAction& s, const std::vector<Node>& nodes, int total) {
  auto p = g_partition_poset(s);
  auto w = posets::weighting(p);
  REQUIRE(p.size() == nodes.size());
  for (const auto& n : nodes) {
    auto i = p.index_of(SetPartition::parse(n.label, s.degree()));
    REQUIRE(i.has_value());
    CAPTURE(n.label);
    CHECK(w.up[*i] == n.up);
    CHECK(w.down[*i] == n.down);
  }
  CHECK(w.euler == total);
}

}  // namespace

TEST_CASE("the first figure", "[gsets][figures]") {
  auto s = GSetAction::natural(make(4, {{{0, 1}, {2, 3}}}));
  auto p = g_partition_poset(s);
  CHECK(labels(p) == std::vector<std::string>{"1-2-34", "12-3-4", "12-34", "13-24", "14-23"});
  check_weights(s, {{"13-24", 1, 1}, {"12-34", 1, -1}, {"14-23", 1, 1}, {"1-2-34", 0, 1}, {"12-3-4", 0, 1}}, 3);
  auto b = block_gset_type(s, SetPartition::parse("13-24", 4));
  CHECK(b.action.degree() == 2);
  CHECK(b.action.is_free());
  CHECK(b.action.orbits().size() == 1);
}

TEST_CASE("the second figure", "[gsets][figures]") {
  auto s = GSetAction::natural(make(6, {{{0, 1, 2}}, {{3, 4}}}));
  auto p = g_partition_poset(s);
  CHECK(p.size() == 8);
  check_weights(s,
                {{"1236-45", 1, 0},
                 {"12345-6", 1, 0},
                 {"123-456", 1, 0},
                 {"1236-4-5", 0, 0},
                 {"123-45-6", -2, -1},
                 {"1-2-3-456", 0, 0},
                 {"123-4-5-6", 0, 1},
                 {"1-2-3-45-6", 0, 1}},
                1);
  auto theta = canonical_partitions(s).theta;
  CHECK(theta.to_string() == "123-45-6");
  CHECK_FALSE(s.is_isotypical());
  CHECK(posets::reduced_euler(p) == 0);
  CHECK(posets::is_contractor(p, theta, meet, join));
}

TEST_CASE("the trivial group sees every partition", "[gsets]") {
  auto g = FiniteGroup::make(groups::cyclic_group(1));
  for (std::size_t n = 2; n <= 6; ++n) {
    auto s = coset_gset(g, g->table().all(), n);
    CHECK(g_partitions(s).size() == oracle::set_partitions(static_cast<int>(n)).size());
    CHECK(chi_tilde_poset(s) == oracle::fixed_partition_euler(static_cast<int>(n), {Permutation::identity(n)}));
  }
}

TEST_CASE("G-partitions are the partitions fixed by the generators", "[gsets][property]") {
  for (const auto& s : corpus(6)) {
    std::vector<Permutation> gens;
    for (const auto& e : s.group().perm_group().generators())
      gens.push_back(s.acting(*s.group().perm_group().index_of(e)));
    auto fixed = partitions::fixed_subposet(s.degree(), gens, false);
    auto direct = g_partition_poset(s, {false, false});
    CHECK(labels(direct) == labels(fixed));
    for (const auto& pi : direct.elements()) CHECK(is_g_partition(s, pi));
  }
}

TEST_CASE("canonical partitions", "[gsets]") {
  auto g = FiniteGroup::make(groups::cyclic_group(3));
  auto trivial = coset_gset(g, g->table().all(), 4);
  auto cp = canonical_partitions(trivial);
  CHECK(cp.omega.is_discrete());
  CHECK(cp.isotypical);
  auto free = coset_gset(g, g->table().trivial(), 2);
  cp = canonical_partitions(free);
  CHECK(cp.theta.is_indiscrete());
  CHECK(cp.omega.to_string() == "123-456");
  auto s3 = FiniteGroup::make(groups::symmetric_group(3));
  auto nat = GSetAction::natural(s3);
  auto c3 = s3->classes()[1].representative;
  CHECK(canonical_partitions(nat, c3).omega.is_indiscrete());
  CHECK_THROWS_AS(canonical_partitions(nat, Bitset(6)), DomainError);
}

TEST_CASE("coset G-sets", "[gsets]") {
  auto s3 = FiniteGroup::make(groups::symmetric_group(3));
  // Class 2 is a point stabilizer of order 2.
  auto three = coset_gset_of_class(s3, 2, 1);
  CHECK(three.degree() == 3);
  CHECK(three.fingerprint() == GSetAction::natural(s3).fingerprint());
  auto fixed = coset_gset(s3, s3->table().all(), 3);
  for (const auto& a : fixed.action()) CHECK(a.is_identity());
  auto c2 = FiniteGroup::make(groups::cyclic_group(2));
  auto two = coset_gset(c2, c2->table().trivial(), 2);
  CHECK(two.orbits().size() == 2);
  CHECK(two.is_free());
  CHECK_THROWS_AS(coset_gset(s3, s3->table().trivial(), 6, 32), ResourceError);
  CHECK_THROWS_AS(coset_gset(s3, s3->table().trivial(), 0), DomainError);
  for (std::size_t c = 0; c < s3->classes().size(); ++c) {
    auto s = coset_gset_of_class(s3, c, 2);
    for (Point x = 0; x < s.degree(); ++x) CHECK(s.stabilizer_class(x) == c);
  }
}

TEST_CASE("block G-sets", "[gsets]") {
  auto s = GSetAction::natural(FiniteGroup::make(groups::symmetric_group(3)));
  auto top = block_gset_type(s, SetPartition::indiscrete(3));
  CHECK(top.action.degree() == 1);
  auto bottom = block_gset_type(s, SetPartition::discrete(3));
  CHECK(bottom.fingerprint == s.fingerprint());
  CHECK_THROWS_AS(block_gset_type(s, SetPartition::parse("12-3", 3)), DomainError);
}

TEST_CASE("block stabilizers contain point stabilizers and conjugate along the action", "[gsets][property]") {
  for (const auto& s : corpus(6)) {
    const auto& t = s.group().table();
    for (Point x = 0; x < s.degree(); ++x)
      for (std::size_t g = 0; g < t.order(); ++g)
        CHECK(s.stabilizer(s.acting(g)(x)) == t.conjugate(s.stabilizer(x), g));
    for (const auto& pi : g_partitions(s)) {
      auto b = block_gset_type(s, pi);
      for (Point x = 0; x < s.degree(); ++x) CHECK(s.stabilizer(x).is_subset_of(b.stabilizers[pi.block_of(x)]));
    }
  }
}

TEST_CASE("the block isotropy map identifies Pi(H\\G)^G with [H, G]", "[gsets][property]") {
  for (auto g : {FiniteGroup::make(groups::symmetric_group(3)), FiniteGroup::make(groups::symmetric_group(4))}) {
    for (std::size_t c = 0; c < g->classes().size(); ++c) {
      if (g->class_index(c) > 12) continue;
      auto s = coset_gset_of_class(g, c, 1);
      auto p = g_partition_poset(s, {false, false});
      // Interval [H, G] with H the stabilizer of point 0.
      auto h = s.stabilizer(0);
      std::vector<Bitset> interval;
      for (const auto& sub : g->lattice().subgroups())
        if (h.is_subset_of(sub.members)) interval.push_back(sub.members);
      CAPTURE(c);
      REQUIRE(p.size() == interval.size());
      std::vector<Bitset> image;
      for (const auto& pi : p.elements()) image.push_back(block_gset_type(s, pi).stabilizers[pi.block_of(0)]);
      for (const auto& k : interval) CHECK(std::count(image.begin(), image.end(), k) == 1);
      for (std::size_t i = 0; i < p.size(); ++i)
        for (std::size_t j = 0; j < p.size(); ++j) CHECK(p.leq(i, j) == image[i].is_subset_of(image[j]));
    }
  }
}

TEST_CASE("non-isotypical G-sets have vanishing chi~ and theta is a contractor", "[gsets][property]") {
  std::size_t tested = 0;
  for (const auto& s : corpus(7)) {
    if (s.is_isotypical()) continue;
    ++tested;
    auto p = g_partition_poset(s);
    auto theta = canonical_partitions(s).theta;
    CHECK(posets::reduced_euler(p) == 0);
    CHECK(posets::is_contractor(p, theta, meet, join));
  }
  CHECK(tested > 30);
}

TEST_CASE("weights and coweights from block G-sets", "[gsets][property]") {
  for (const auto& s : corpus(6)) {
    auto p = g_partition_poset(s);
    if (p.empty()) continue;
    auto w = posets::weighting(p);
    for (std::size_t i = 0; i < p.size(); ++i) {
      const auto& pi = p.element(i);
      auto b = block_gset_type(s, pi);
      CHECK(w.up[i] == -chi_tilde_poset(b.action));
      if (!b.action.is_isotypical()) CHECK(w.up[i] == 0);
      Integer prod = 1;
      std::vector<bool> seen(pi.block_count(), false);
      for (const auto& orb : b.action.orbits()) {
        auto blk = orb.front();
        std::uint32_t mask = pi.blocks()[blk];
        if (std::popcount(mask) < 2) continue;
        auto sub = subgroup_action(s, b.stabilizers[blk], mask);
        prod *= chi_tilde_poset(sub);
      }
      CHECK(w.down[i] == -prod);
    }
    CHECK(w.euler == posets::reduced_euler(p) + 1);
  }
}

TEST_CASE("the isotypical part has the same chi~", "[gsets][property]") {
  for (const auto& s : corpus(7)) CHECK(chi_tilde_poset(s, true) == chi_tilde_poset(s, false));
}

TEST_CASE("the slice recursion matches the materialized poset", "[gsets][property]") {
  for (const auto& g : corpus_groups()) {
    GPartitionEuler e(g);
    for (const auto& s : all_gsets(g, 8)) {
      CAPTURE(fingerprint_to_string(*g, s.fingerprint()));
      CHECK(e.chi_tilde(s) == chi_tilde_poset(s));
    }
  }
  GPartitionEuler small(FiniteGroup::make(groups::cyclic_group(2)), 6);
  CHECK_THROWS_AS(small.chi_tilde(Fingerprint{0, 4}), ResourceError);
}

TEST_CASE("normal subgroups act through the quotient", "[gsets][property]") {
  for (const auto& g : corpus_groups()) {
    const auto& t = g->table();
    for (const auto& sub : g->lattice().subgroups()) {
      if (t.normalizer(sub.members) != t.all()) continue;
      auto q = FiniteGroup::make(quotient_group(g, sub.members));
      CHECK(q->order() * sub.order() == g->order());
      for (std::size_t m = 1; m * q->order() <= 8; ++m) {
        if (m * q->order() < 2) continue;
        auto lhs = chi_tilde_poset(coset_gset(g, sub.members, m));
        auto rhs = chi_tilde_poset(coset_gset(q, q->table().trivial(), m));
        CHECK(lhs == rhs);
      }
    }
  }
  auto s3 = FiniteGroup::make(groups::symmetric_group(3));
  CHECK_THROWS_AS(quotient_group(s3, s3->classes()[2].representative), DomainError);
}

TEST_CASE("subgroup actions", "[gsets]") {
  auto s3 = FiniteGroup::make(groups::symmetric_group(3));
  auto s = coset_gset(s3, s3->classes()[2].representative, 2);
  auto c3 = s3->classes()[1].representative;
  auto sub = subgroup_action(s, c3, 0b000111);
  CHECK(sub.degree() == 3);
  CHECK(sub.group().order() == 3);
  CHECK(sub.is_free());
  auto c2 = s3->classes()[2].representative;
  CHECK_THROWS_AS(subgroup_action(GSetAction::natural(s3), c2, 0b011), DomainError);
}

TEST_CASE("enumeration caps", "[gsets]") {
  auto g = FiniteGroup::make(groups::cyclic_group(1));
  auto big = coset_gset(g, g->table().all(), 15);
  CHECK_THROWS_AS(g_partitions(big), ResourceError);
  CHECK_THROWS_AS(g_partition_poset(big), ResourceError);
}
