#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "eqchi/group.hpp"
#include "eqchi/partitions.hpp"
#include "eqchi/posets.hpp"
#include "oracles.hpp"

using namespace eqchi;
using namespace eqchi::posets;

namespace {

FinitePoset<int> chain(int n) {
  std::vector<int> e(n);
  std::iota(e.begin(), e.end(), 0);
  return FinitePoset<int>::build(e, [](int a, int b) { return a <= b; });
}

FinitePoset<int> antichain(int n) {
  std::vector<int> e(n);
  std::iota(e.begin(), e.end(), 0);
  return FinitePoset<int>::build(e, [](int a, int b) { return a == b; });
}

/// Random poset on n elements from the transitive closure of a random
/// relation compatible with 0 < 1 < ... < n-1.
FinitePoset<int> random_poset(std::mt19937& rng, int n) {
  std::bernoulli_distribution edge(0.3);
  std::vector<std::vector<bool>> le(n, std::vector<bool>(n, false));
  for (int i = 0; i < n; ++i) {
    le[i][i] = true;
    for (int j = i + 1; j < n; ++j) le[i][j] = edge(rng);
  }
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (le[i][k] && le[k][j]) le[i][j] = true;
  std::vector<int> e(n);
  std::iota(e.begin(), e.end(), 0);
  return FinitePoset<int>::build(e, [&](int a, int b) { return static_cast<bool>(le[a][b]); });
}

template <class T>
std::vector<std::vector<bool>> strict(const FinitePoset<T>& p) {
  std::vector<std::vector<bool>> s(p.size(), std::vector<bool>(p.size()));
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = 0; j < p.size(); ++j) s[i][j] = p.less(i, j);
  return s;
}

}  // namespace

TEST_CASE("build validates partial orders", "[posets]") {
  CHECK(chain(3).size() == 3);
  CHECK(FinitePoset<int>::build({}, [](int, int) { return true; }).empty());
  try {
    FinitePoset<int>::build({0, 1}, [](int, int) { return true; });
    FAIL("accepted a symmetric relation");
  } catch (const DomainError& e) {
    CHECK(std::string(e.what()).find("antisymmetry fails for pair (0, 1)") != std::string::npos);
  }
  CHECK_THROWS_AS(FinitePoset<int>::build({0, 1}, [](int a, int b) { return a < b; }), DomainError);
  auto nontransitive = [](int a, int b) { return a == b || (a == 0 && b == 1) || (a == 1 && b == 2); };
  try {
    FinitePoset<int>::build({0, 1, 2}, nontransitive);
    FAIL("accepted a non-transitive relation");
  } catch (const DomainError& e) {
    CHECK(std::string(e.what()).find("transitivity fails for pair (0, 2)") != std::string::npos);
  }
}

TEST_CASE("Moebius function examples", "[posets]") {
  auto c2 = chain(2);
  CHECK(moebius(c2, 0, 1) == -1);
  CHECK(moebius(c2, 1, 1) == 1);
  CHECK(moebius(chain(4), 0, 3) == 0);
  CHECK_THROWS_AS(moebius(c2, 1, 0), DomainError);
  auto s3 = groups::FiniteGroup::make(groups::symmetric_group(3));
  auto sub = s3->lattice().inclusion_poset();
  const auto& lat = s3->lattice();
  CHECK(moebius(sub, *lat.find(s3->table().trivial()), lat.top()) == 3);
}

TEST_CASE("reduced Euler characteristic examples", "[posets]") {
  CHECK(reduced_euler(antichain(0)) == -1);
  CHECK(reduced_euler(antichain(3)) == 2);
  CHECK(reduced_euler(chain(5)) == 0);
  CHECK(euler_characteristic(antichain(3)) == 3);
  auto pi3 = partitions::partition_lattice(3, true);
  CHECK(reduced_euler(pi3) == 2);
  CHECK(reduced_euler(partitions::partition_lattice(4, true)) == -6);
  CHECK(reduced_euler(partitions::partition_lattice(5, true)) == 24);
}

TEST_CASE("chain counts and Moebius agree on random posets", "[posets][property]") {
  std::mt19937 rng(20240917);
  std::uniform_int_distribution<int> size(0, 8);
  for (int trial = 0; trial < 200; ++trial) {
    auto p = random_poset(rng, size(rng));
    CAPTURE(trial, p.size());
    auto chains = reduced_euler_chains(p);
    CHECK(chains == reduced_euler_moebius(p));
    CHECK(chains == oracle::reduced_euler(strict(p)));

    auto z = zeta_matrix(p);
    auto m = moebius_matrix(p);
    for (std::size_t i = 0; i < p.size(); ++i)
      for (std::size_t j = 0; j < p.size(); ++j) {
        Integer s = 0;
        for (std::size_t k = 0; k < p.size(); ++k) s += z[i][k] * m[k][j];
        CHECK(s == (i == j ? 1 : 0));
      }

    auto w = weighting(p);
    Integer su = 0, sd = 0;
    for (std::size_t a = 0; a < p.size(); ++a) {
      su += w.up[a];
      sd += w.down[a];
    }
    CHECK(su == w.euler);
    CHECK(sd == w.euler);
    CHECK(w.euler == chains + 1);
  }
}

TEST_CASE("weighting of a singleton and of a chain", "[posets]") {
  auto w = weighting(chain(1));
  CHECK(w.up == std::vector<Integer>{1});
  CHECK(w.down == std::vector<Integer>{1});
  w = weighting(chain(3));
  CHECK(w.up == std::vector<Integer>{0, 0, 1});
  CHECK(w.down == std::vector<Integer>{1, 0, 0});
  w = weighting(antichain(3));
  CHECK(w.euler == 3);
}

TEST_CASE("contractor examples", "[posets]") {
  auto c4 = groups::FiniteGroup::make(groups::cyclic_group(4));
  const auto& lat = c4->lattice();
  const auto& t = c4->table();
  std::vector<Bitset> open;
  for (const auto& s : lat.subgroups())
    if (s.order() != 1 && s.order() != 4) open.push_back(s.members);
  auto p = FinitePoset<Bitset>::build(open, [](const Bitset& a, const Bitset& b) { return a.is_subset_of(b); });
  auto meet = [](const Bitset& a, const Bitset& b) { return a & b; };
  auto join = [&](const Bitset& a, const Bitset& b) {
    auto gens = (a | b).indices();
    return t.generated(gens);
  };
  REQUIRE(open.size() == 1);
  CHECK(is_contractor(p, open[0], meet, join));
  CHECK(reduced_euler(p) == 0);

  auto c8 = groups::FiniteGroup::make(groups::cyclic_group(8));
  std::vector<Bitset> open8;
  Bitset frattini(8);
  for (const auto& s : c8->lattice().subgroups()) {
    if (s.order() != 1 && s.order() != 8) open8.push_back(s.members);
    if (s.order() == 4) frattini = s.members;
  }
  auto p8 = FinitePoset<Bitset>::build(open8, [](const Bitset& a, const Bitset& b) { return a.is_subset_of(b); });
  auto join8 = [&](const Bitset& a, const Bitset& b) {
    auto gens = (a | b).indices();
    return c8->table().generated(gens);
  };
  CHECK(is_contractor(p8, frattini, meet, join8));
  CHECK(reduced_euler(p8) == 0);

  // The maximum of a meet-closed subposet.
  auto pi = partitions::partition_lattice(4, true);
  auto top = partitions::SetPartition::parse("12-34", 4);
  Bitset keep(pi.size());
  for (std::size_t i = 0; i < pi.size(); ++i)
    if (pi.element(i).refines(top)) keep.set(i);
  auto below = pi.subposet(keep);
  auto pmeet = [](const partitions::SetPartition& a, const partitions::SetPartition& b) { return a.meet(b); };
  auto pjoin = [](const partitions::SetPartition& a, const partitions::SetPartition& b) { return a.join(b); };
  CHECK(is_contractor(below, top, pmeet, pjoin));
  CHECK_FALSE(is_contractor(below, partitions::SetPartition::parse("13-24", 4), pmeet, pjoin));
  CHECK_FALSE(is_contractor(pi, top, pmeet, pjoin));
}

TEST_CASE("a contractor forces vanishing reduced Euler characteristic", "[posets][property]") {
  // Random subposets of the proper part of the Boolean lattice on 4 atoms.
  std::mt19937 rng(7);
  std::vector<unsigned> proper;
  for (unsigned m = 1; m < 15; ++m) proper.push_back(m);
  auto meet = [](unsigned a, unsigned b) { return a & b; };
  auto join = [](unsigned a, unsigned b) { return a | b; };
  std::size_t contractors = 0;
  for (int trial = 0; trial < 300; ++trial) {
    std::vector<unsigned> elems;
    for (auto m : proper)
      if (rng() % 2) elems.push_back(m);
    auto p = FinitePoset<unsigned>::build(elems, [](unsigned a, unsigned b) { return (a & b) == a; });
    for (auto c : elems)
      if (is_contractor(p, c, meet, join)) {
        ++contractors;
        CHECK(reduced_euler(p) == 0);
        break;
      }
  }
  CHECK(contractors > 20);

  // Joins for some x and meets for others do not make a contractor.
  std::vector<unsigned> mixed{1, 3, 4, 5, 7, 8, 11, 13};
  auto p = FinitePoset<unsigned>::build(mixed, [](unsigned a, unsigned b) { return (a & b) == a; });
  CHECK_FALSE(is_contractor(p, 3u, meet, join));
  CHECK(reduced_euler(p) == -1);
}
