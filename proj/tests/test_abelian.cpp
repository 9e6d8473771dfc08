#include <catch2/catch_amalgamated.hpp>

#include "eqchi/abelian.hpp"
#include "oracles.hpp"

using namespace eqchi;
using namespace eqchi::groups;

namespace {

/// |Aut A| for A = Z/m1 x ... x Z/mk by testing every assignment of
/// generator images against the relations and bijectivity.
Integer naive_aut(const std::vector<std::uint64_t>& mods) {
  std::uint64_t n = 1;
  for (auto m : mods) n *= m;
  auto decode = [&](std::uint64_t v) {
    std::vector<std::uint64_t> c;
    for (auto m : mods) {
      c.push_back(v % m);
      v /= m;
    }
    return c;
  };
  auto encode = [&](const std::vector<std::uint64_t>& c) {
    std::uint64_t v = 0, w = 1;
    for (std::size_t i = 0; i < mods.size(); ++i) {
      v += (c[i] % mods[i]) * w;
      w *= mods[i];
    }
    return v;
  };
  const std::size_t k = mods.size();
  std::vector<std::uint64_t> img(k, 0);
  Integer count = 0;
  while (true) {
    bool ok = true;
    for (std::size_t i = 0; i < k && ok; ++i) {
      auto c = decode(img[i]);
      for (std::size_t j = 0; j < k; ++j) ok = ok && (c[j] * mods[i]) % mods[j] == 0;
    }
    if (ok) {
      std::vector<bool> hit(n, false);
      std::size_t distinct = 0;
      for (std::uint64_t v = 0; v < n; ++v) {
        auto x = decode(v);
        std::vector<std::uint64_t> y(k, 0);
        for (std::size_t i = 0; i < k; ++i) {
          auto c = decode(img[i]);
          for (std::size_t j = 0; j < k; ++j) y[j] += x[i] * c[j];
        }
        auto e = encode(y);
        if (!hit[e]) ++distinct;
        hit[e] = true;
      }
      if (distinct == n) ++count;
    }
    std::size_t i = 0;
    while (i < k && ++img[i] == n) img[i++] = 0;
    if (i == k) break;
  }
  return count;
}

}  // namespace

TEST_CASE("abelian types of small orders", "[abelian]") {
  CHECK(abelian_types_of_order(1).size() == 1);
  CHECK(abelian_types_of_order(8).size() == 3);
  CHECK(abelian_types_of_order(12).size() == 2);
  CHECK(abelian_types_of_order(16).size() == 5);
  CHECK(abelian_types_of_order(36).size() == 4);
  CHECK(AbelianType::from_cyclic_orders({6, 2}).to_string() == AbelianType::from_cyclic_orders({2, 2, 3}).to_string());
  CHECK(AbelianType::from_cyclic_orders({4, 2}).order() == 8);
}

TEST_CASE("invariants of named abelian groups", "[abelian]") {
  auto inv = abelian_invariants(AbelianType::from_cyclic_orders({2, 2}));
  CHECK(inv.order == 4);
  CHECK(inv.aut_order == 6);
  CHECK(inv.mu_one == 2);
  inv = abelian_invariants(AbelianType::from_cyclic_orders({4}));
  CHECK(inv.aut_order == 2);
  CHECK(inv.mu_one == 0);
  inv = abelian_invariants(AbelianType::from_cyclic_orders({2, 2, 2}));
  CHECK(inv.aut_order == 168);
  CHECK(inv.mu_one == -8);
  inv = abelian_invariants(AbelianType::from_cyclic_orders({4, 2}));
  CHECK(inv.aut_order == 8);
  inv = abelian_invariants(AbelianType::from_cyclic_orders({6}));
  CHECK(inv.aut_order == 2);
  CHECK(inv.mu_one == 1);
  inv = abelian_invariants(AbelianType::from_cyclic_orders({3, 3}));
  CHECK(inv.aut_order == 48);
  CHECK(inv.mu_one == 3);
}

TEST_CASE("automorphism counts match a naive homomorphism search", "[abelian][property]") {
  for (std::uint64_t n = 1; n <= 16; ++n)
    for (const auto& a : abelian_types_of_order(n)) {
      CAPTURE(a.to_string());
      auto naive = naive_aut(a.cyclic_factors());
      CHECK(aut_order_formula(a) == naive);
      CHECK(aut_order_brute(a) == naive);
    }
}

TEST_CASE("generating counts of abelian types", "[abelian][property]") {
  for (std::uint64_t n = 1; n <= 16; ++n)
    for (const auto& a : abelian_types_of_order(n)) {
      auto g = regular_representation(a);
      CHECK(abelian_type_of(g) == a);
      for (unsigned r = 1; r <= 3; ++r) {
        CAPTURE(a.to_string(), r);
        CHECK(phi_formula(a, r) == phi_generating(g, r, PhiMethod::brute));
      }
    }
  CHECK(phi_elementary(2, 2, 2) == 6);
  CHECK(phi_elementary(3, 1, 1) == 2);
}

TEST_CASE("Moebius value at the trivial subgroup", "[abelian][property]") {
  for (std::uint64_t n = 1; n <= 16; ++n)
    for (const auto& a : abelian_types_of_order(n)) {
      auto g = regular_representation(a);
      auto t = std::make_shared<const GroupTable>(g);
      SubgroupLattice lat(t, {true, kDefaultSubgroupCap});
      CAPTURE(a.to_string());
      CHECK(lat.moebius(*lat.find(t->trivial()), lat.top()) == mu_one(a));
    }
}

TEST_CASE("free abelian classes", "[abelian]") {
  CHECK(free_abelian_classes(1).size() == 1);
  CHECK(free_abelian_classes(4).size() == 4);
  CHECK(free_abelian_classes(6).size() == 4);
  CHECK(free_abelian_classes(8).size() == 7);
  for (const auto& f : free_abelian_classes(12)) {
    CHECK(f.embedding.acts_freely());
    CHECK(f.embedding.order() * f.copies == 12);
  }
  CHECK_THROWS_AS(free_abelian_classes(0), DomainError);
  CHECK_THROWS_AS(abelian_type_of(symmetric_group(3)), DomainError);
  CHECK_THROWS_AS(regular_representation(AbelianType::from_cyclic_orders({2}), 0), DomainError);
}
