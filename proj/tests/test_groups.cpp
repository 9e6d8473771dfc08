#include <catch2/catch_amalgamated.hpp>

#include "eqchi/abelian.hpp"
#include "eqchi/gsets.hpp"
#include "eqchi/stirling.hpp"
#include "oracles.hpp"

using namespace eqchi;
using namespace eqchi::groups;

namespace {

PermGroup gen(std::size_t degree, const std::vector<std::vector<std::vector<Point>>>& gens) {
  std::vector<Permutation> ps;
  for (const auto& c : gens) ps.push_back(Permutation::from_cycles(degree, c));
  return PermGroup::generate(degree, std::move(ps));
}

PermGroup dihedral4() { return gen(4, {{{0, 1, 2, 3}}, {{0, 2}}}); }

std::vector<PermGroup> small_groups() {
  return {symmetric_group(3), symmetric_group(4),  alternating_group(4),
          cyclic_group(6),    dihedral4(),         direct_product(cyclic_group(2), cyclic_group(4)),
          gen(6, {{{0, 1}}, {{2, 3}}, {{4, 5}}}), cyclic_group(1)};
}

}  // namespace

TEST_CASE("generated groups have the right orders", "[groups]") {
  CHECK(symmetric_group(1).order() == 1);
  CHECK(symmetric_group(5).order() == 120);
  CHECK(alternating_group(5).order() == 60);
  CHECK(cyclic_group(7).order() == 7);
  CHECK(dihedral4().order() == 8);
  CHECK(direct_product(symmetric_group(3), cyclic_group(2)).order() == 12);
  for (const auto& g : small_groups()) CHECK(g.order() == oracle::closure(g.degree(), g.generators()).size());
  CHECK(cyclic_group(5).is_abelian());
  CHECK_FALSE(symmetric_group(3).is_abelian());
  CHECK(cyclic_group(4).acts_freely());
  CHECK_FALSE(symmetric_group(3).acts_freely());
  CHECK_THROWS_AS(symmetric_group(0), DomainError);
}

TEST_CASE("permutation products apply the left factor first", "[groups]") {
  auto a = Permutation::from_cycles(3, {{0, 1}});
  auto b = Permutation::from_cycles(3, {{1, 2}});
  auto ab = a * b;
  CHECK(ab(0) == b(a(0)));
  CHECK(ab(0) == 2);
  CHECK(ab.to_cycle_string() == "(1 3 2)");
  CHECK(ab.inverse() * ab == Permutation::identity(3));
  CHECK_THROWS_AS(Permutation::from_cycles(3, {{0, 3}}), DomainError);
  CHECK_THROWS_AS(Permutation::from_cycles(3, {{0, 1}, {1, 2}}), DomainError);
  CHECK_THROWS_AS(Permutation(std::vector<Point>{0, 0, 1}), DomainError);
}

TEST_CASE("group table caps", "[groups]") {
  CHECK_THROWS_AS(GroupTable(symmetric_group(5), 100), ResourceError);
  CHECK_NOTHROW(GroupTable(symmetric_group(5), 120));
}

TEST_CASE("subgroup class counts", "[groups]") {
  CHECK(subgroup_classes(symmetric_group(3)).size() == 4);
  CHECK(subgroup_classes(cyclic_group(5)).size() == 2);
  CHECK(subgroup_classes(cyclic_group(7)).size() == 2);
  CHECK(subgroup_classes(alternating_group(4)).size() == 5);
  CHECK(subgroup_classes(dihedral4()).size() == 8);
  auto s4 = FiniteGroup::make(symmetric_group(4));
  CHECK(s4->classes().size() == 11);
  CHECK(s4->lattice().subgroups().size() == 30);
  std::vector<std::string> want{"S1", "S2", "S3", "S4", "S6a", "S6b", "S6c", "S8", "S12a", "S12b", "S24"};
  CHECK(stirling::class_labels(*s4) == want);
}

TEST_CASE("class sizes times normalizer orders give the group order", "[groups][property]") {
  for (const auto& g : small_groups()) {
    auto fg = FiniteGroup::make(g);
    std::size_t total = 0;
    for (const auto& c : fg->classes()) {
      CHECK(c.class_size * c.normalizer_order == g.order());
      CHECK(c.members.size() == c.class_size);
      total += c.class_size;
    }
    CHECK(total == fg->lattice().subgroups().size());
    for (std::size_t i = 1; i < fg->classes().size(); ++i)
      CHECK(fg->classes()[i - 1].order >= fg->classes()[i].order);
    CHECK(fg->classes().front().order == g.order());
    CHECK(fg->classes().back().order == 1);
  }
}

TEST_CASE("every subgroup is closed and every cyclic subgroup is present", "[groups][property]") {
  for (const auto& g : small_groups()) {
    auto fg = FiniteGroup::make(g);
    const auto& t = fg->table();
    for (const auto& s : fg->lattice().subgroups()) CHECK(t.is_subgroup(s.members));
    for (std::size_t x = 0; x < t.order(); ++x) {
      std::vector<std::size_t> one{x};
      CHECK(fg->lattice().find(t.generated(one)).has_value());
    }
  }
}

TEST_CASE("conjugacy data", "[groups]") {
  auto s4 = symmetric_group(4);
  auto v4 = gen(4, {{{0, 1}, {2, 3}}, {{0, 2}, {1, 3}}});
  auto d = conjugacy_data(s4, v4);
  CHECK(d.normalizer.order() == 24);
  CHECK(d.conjugate_count == 1);
  auto c2 = gen(4, {{{0, 1}}});
  d = conjugacy_data(s4, c2);
  CHECK(d.normalizer.order() == 4);
  CHECK(d.conjugate_count == 6);
  d = conjugacy_data(symmetric_group(3), gen(3, {{{0, 1, 2}}}));
  CHECK(d.conjugate_count == 1);
  CHECK_THROWS_AS(conjugacy_data(symmetric_group(3), gen(4, {{{0, 1}}})), DomainError);
  CHECK_THROWS_AS(conjugacy_data(cyclic_group(4), gen(4, {{{0, 1}}})), DomainError);
}

TEST_CASE("table of marks of Sigma_3", "[groups]") {
  auto s3 = FiniteGroup::make(symmetric_group(3));
  auto tom = table_of_marks(s3->lattice());
  std::vector<std::vector<std::int64_t>> want{{1, 0, 0, 0}, {1, 2, 0, 0}, {1, 0, 1, 0}, {1, 2, 3, 6}};
  CHECK(tom == want);
}

TEST_CASE("marks count fixed cosets", "[groups][property]") {
  for (const auto& g : small_groups()) {
    auto fg = FiniteGroup::make(g);
    auto tom = table_of_marks(fg->lattice());
    const auto& cls = fg->classes();
    for (std::size_t k = 0; k < cls.size(); ++k) {
      auto cosets = gsets::coset_gset_of_class(fg, k, 1);
      for (std::size_t h = 0; h < cls.size(); ++h) {
        std::int64_t fixed = 0;
        for (Point x = 0; x < cosets.degree(); ++x) {
          bool all = true;
          cls[h].representative.for_each([&](std::size_t e) { all = all && cosets.acting(e)(x) == x; });
          fixed += all ? 1 : 0;
        }
        CHECK(tom[h][k] == fixed);
      }
      CHECK(tom[k][k] == static_cast<std::int64_t>(cls[k].normalizer_order / cls[k].order));
    }
  }
}

TEST_CASE("commuting tuple counts", "[groups]") {
  auto count = [](const PermGroup& g, unsigned r) { return commuting_tuple_count(GroupTable(g), r); };
  CHECK(count(symmetric_group(3), 1) == 6);
  CHECK(count(symmetric_group(3), 2) == 18);
  CHECK(count(symmetric_group(4), 2) == 120);
  CHECK(count(dihedral4(), 2) == 40);
  CHECK(count(cyclic_group(5), 3) == 125);
  CHECK_THROWS_AS(count(symmetric_group(3), 0), DomainError);

  for (const auto& g : small_groups()) {
    GroupTable t(g);
    const auto& el = g.elements();
    for (unsigned r = 1; r <= 3; ++r) {
      std::size_t visited = 0;
      for_each_commuting_tuple(t, r, [&](std::span<const std::size_t>) { ++visited; });
      std::size_t naive = 0;
      if (r == 1) naive = el.size();
      for (const auto& a : el)
        for (const auto& b : el) {
          if (a * b != b * a) continue;
          if (r == 2) ++naive;
          if (r == 3)
            for (const auto& c : el) naive += (a * c == c * a && b * c == c * b) ? 1 : 0;
        }
      CHECK(visited == naive);
      CHECK(commuting_tuple_count(t, r) == naive);
    }
  }
}

TEST_CASE("generating tuple counts", "[groups]") {
  CHECK(phi_generating(cyclic_group(4), 1) == 2);
  CHECK(phi_generating(cyclic_group(6), 2) == 24);
  auto v4 = gen(4, {{{0, 1}, {2, 3}}, {{0, 2}, {1, 3}}});
  CHECK(phi_generating(v4, 1) == 0);
  CHECK(phi_generating(v4, 2) == 6);
  CHECK(phi_generating(v4, 3) == 42);
  CHECK(phi_generating(symmetric_group(3), 2) == 18);
  CHECK(phi_generating(cyclic_group(1), 3) == 1);
}

TEST_CASE("brute and Moebius generating counts agree on small subgroups", "[groups][property]") {
  for (const auto& g : small_groups()) {
    auto fg = FiniteGroup::make(g);
    const auto& lat = fg->lattice();
    for (const auto& s : lat.subgroups()) {
      if (s.order() > 16) continue;
      for (unsigned r = 1; r <= 3; ++r) {
        CAPTURE(g.order(), s.order(), r);
        CHECK(phi_generating(lat, s.members, r, PhiMethod::brute) ==
              phi_generating(lat, s.members, r, PhiMethod::moebius));
      }
    }
  }
}

TEST_CASE("abelian-only lattices keep exactly the abelian subgroups", "[groups]") {
  auto t = std::make_shared<const GroupTable>(symmetric_group(4));
  SubgroupLattice all(t), ab(t, {true, kDefaultSubgroupCap});
  std::size_t abelian = 0;
  for (const auto& s : all.subgroups()) abelian += t->is_abelian(s.members) ? 1 : 0;
  CHECK(ab.subgroups().size() == abelian);
  CHECK(abelian == 21);
  for (const auto& s : ab.subgroups()) CHECK(t->is_abelian(s.members));
}

TEST_CASE("free abelian actions on up to six points are unique up to conjugacy", "[groups]") {
  for (std::size_t n = 1; n <= 6; ++n) {
    auto t = std::make_shared<const GroupTable>(symmetric_group(n), 720);
    SubgroupLattice lat(t, {true, 720});
    std::vector<std::string> free_types;
    for (const auto& c : lat.classes()) {
      auto a = t->as_group(c.representative);
      if (a.acts_freely()) free_types.push_back(abelian_type_of(a).to_string());
    }
    std::vector<std::string> want;
    for (const auto& f : free_abelian_classes(n)) want.push_back(f.type.to_string());
    std::sort(free_types.begin(), free_types.end());
    std::sort(want.begin(), want.end());
    CAPTURE(n);
    CHECK(free_types == want);
  }
}

TEST_CASE("subgroup Moebius function of Sigma_3", "[groups]") {
  auto s3 = FiniteGroup::make(symmetric_group(3));
  const auto& lat = s3->lattice();
  const auto bottom = *lat.find(s3->table().trivial());
  CHECK(lat.moebius(bottom, lat.top()) == 3);
  Integer sum = 0;
  for (std::size_t h = 0; h < lat.subgroups().size(); ++h) sum += lat.moebius(bottom, h);
  CHECK(sum == 0);
}
