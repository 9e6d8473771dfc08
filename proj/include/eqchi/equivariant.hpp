#pragma once

// The r-th reduced equivariant Euler characteristic of the partition poset of
// a G-set: by commuting tuples, by abelian subgroups, by isomorphism classes of
// free abelian subgroups, and by the closed form.

#include <cstdint>
#include <functional>
#include <string>
#include <thread>
#include <unordered_map>
#include <vector>

#include "eqchi/abelian.hpp"
#include "eqchi/arith.hpp"
#include "eqchi/common.hpp"
#include "eqchi/group.hpp"
#include "eqchi/gsets.hpp"
#include "eqchi/partitions.hpp"
#include "eqchi/posets.hpp"

namespace eqchi::equivariant {

enum class Method { bruteforce, abelian, isoclasses, closed };

inline std::string method_name(Method m) {
  switch (m) {
    case Method::bruteforce: return "bruteforce";
    case Method::abelian: return "abelian";
    case Method::isoclasses: return "isoclasses";
    case Method::closed: return "closed";
  }
  return "?";
}

struct EquivariantResult {
  std::size_t n = 0;
  unsigned r = 0;
  Method method = Method::closed;
  Rational value;
  bool integral = true;
  Integer denominator() const { return boost::multiprecision::denominator(value); }
};

inline EquivariantResult make_result(std::size_t n, unsigned r, Method m, Rational v) {
  EquivariantResult res{n, r, m, std::move(v), true};
  res.integral = res.denominator() == 1;
  return res;
}

struct BruteforceCaps {
  std::size_t order_r3 = 120;  ///< largest |G| allowed for r <= 3
  std::size_t order_r4 = 24;   ///< largest |G| allowed for r >= 4
  std::size_t max_r = 4;
};

/// Fixed partitions of S per group element, and chi~ of Pi*(S)^X by fixed set.
class FixedPosetOracle {
 public:
  explicit FixedPosetOracle(const gsets::GSetAction& s) : s_(s) {
    parts_ = partitions::all_partitions(s.degree());
    std::erase_if(parts_, [](const partitions::SetPartition& p) { return p.is_discrete() || p.is_indiscrete(); });
    for (const auto& a : s.action()) {
      Bitset f(parts_.size());
      for (std::size_t i = 0; i < parts_.size(); ++i)
        if (partitions::is_fixed(parts_[i], a)) f.set(i);
      fixed_.push_back(std::move(f));
    }
  }

  std::size_t partition_count() const { return parts_.size(); }
  const Bitset& fixed_by(std::size_t g) const { return fixed_[g]; }

  Bitset fixed_by_subgroup(const Bitset& a) const {
    Bitset f = Bitset::full(parts_.size());
    a.for_each([&](std::size_t g) { f &= fixed_[g]; });
    return f;
  }

  Integer chi_tilde(const Bitset& fixed) {
    if (auto it = memo_.find(fixed); it != memo_.end()) return it->second;
    std::vector<partitions::SetPartition> elems;
    fixed.for_each([&](std::size_t i) { elems.push_back(parts_[i]); });
    Integer v = posets::reduced_euler_moebius(partitions::refinement_poset(std::move(elems)));
    memo_.emplace(fixed, v);
    return v;
  }

 private:
  const gsets::GSetAction& s_;
  std::vector<partitions::SetPartition> parts_;
  std::vector<Bitset> fixed_;
  std::unordered_map<Bitset, Integer> memo_;
};

/// (1/|G|) sum over commuting r-tuples X of chi~(Pi*(S)^X).
inline EquivariantResult chi_r_bruteforce(const gsets::GSetAction& s, unsigned r, BruteforceCaps caps = {},
                                          unsigned threads = 1) {
  if (r == 0) throw DomainError("chi_r_bruteforce: r must be >= 1");
  const auto& t = s.group().table();
  const std::size_t limit = r <= 3 ? caps.order_r3 : caps.order_r4;
  if (r > caps.max_r || t.order() > limit)
    throw ResourceError("chi_r_bruteforce: |G| = " + std::to_string(t.order()) + " with r = " + std::to_string(r) +
                        " exceeds caps (|G| <= " + std::to_string(caps.order_r3) + " for r <= 3, |G| <= " +
                        std::to_string(caps.order_r4) + " for r <= " + std::to_string(caps.max_r) + ")");
  if (s.degree() < 2) throw DomainError("chi_r_bruteforce: |S| must be >= 2");
  std::vector<Bitset> cent;
  for (std::size_t x = 0; x < t.order(); ++x) cent.push_back(t.centralizer(x));

  auto run = [&](std::size_t first_lo, std::size_t first_hi) {
    FixedPosetOracle oracle(s);
    Integer total = 0;
    std::function<void(const Bitset&, const Bitset&, unsigned)> rec = [&](const Bitset& cand, const Bitset& fixed,
                                                                        unsigned left) {
      if (left == 0) {
        total += oracle.chi_tilde(fixed);
        return;
      }
      cand.for_each([&](std::size_t x) { rec(cand & cent[x], fixed & oracle.fixed_by(x), left - 1); });
    };
    Bitset all_fixed = Bitset::full(oracle.partition_count());
    for (std::size_t x = first_lo; x < first_hi; ++x) rec(cent[x], all_fixed & oracle.fixed_by(x), r - 1);
    return total;
  };

  Integer total = 0;
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(t.order())));
  if (threads == 1) {
    total = run(0, t.order());
  } else {
    std::vector<Integer> part(threads);
    std::vector<std::thread> pool;
    const std::size_t chunk = (t.order() + threads - 1) / threads;
    for (unsigned k = 0; k < threads; ++k)
      pool.emplace_back([&, k] {
        std::size_t lo = std::min(t.order(), k * chunk), hi = std::min(t.order(), lo + chunk);
        part[k] = run(lo, hi);
      });
    for (auto& th : pool) th.join();
    for (auto& p : part) total += p;
  }
  return make_result(s.degree(), r, Method::bruteforce, Rational(total, Integer(t.order())));
}

/// (1/|G|) sum over abelian A <= G of chi~(Pi*(S)^A) phi_r(A).
inline EquivariantResult chi_r_abelian(const gsets::GSetAction& s, unsigned r,
                                       std::size_t cap = groups::kDefaultSubgroupCap) {
  if (r == 0) throw DomainError("chi_r_abelian: r must be >= 1");
  if (s.degree() < 2) throw DomainError("chi_r_abelian: |S| must be >= 2");
  const auto& g = s.group();
  groups::SubgroupLattice lat(g.lattice().table_ptr(), {true, cap});
  FixedPosetOracle oracle(s);
  Integer total = 0;
  for (const auto& a : lat.subgroups()) {
    Integer phi = groups::phi_generating(lat, a.members, r);
    if (phi == 0) continue;
    total += oracle.chi_tilde(oracle.fixed_by_subgroup(a.members)) * phi;
  }
  return make_result(s.degree(), r, Method::abelian, Rational(total, Integer(g.order())));
}

/// -(1/n) sum over abelian types A with |A| | n of
/// (-1)^(n/|A|) mu(1, A) phi_r(A) / |Aut A|.
inline EquivariantResult chi_r_isoclasses(std::size_t n, unsigned r) {
  if (n < 2) throw DomainError("chi_r_isoclasses: n must be >= 2");
  if (r == 0) throw DomainError("chi_r_isoclasses: r must be >= 1");
  Rational sum = 0;
  for (std::size_t d = 1; d <= n; ++d) {
    if (n % d) continue;
    for (const auto& a : groups::abelian_types_of_order(d)) {
      Integer mu = groups::mu_one(a);
      if (mu == 0) continue;
      Integer phi = groups::phi_formula(a, r);
      sum += Rational(sign_power(static_cast<unsigned>(n / d)) * mu * phi, groups::aut_order_formula(a));
    }
  }
  return make_result(n, r, Method::isoclasses, -sum / Rational(Integer(n)));
}

inline EquivariantResult chi_r_closed(std::size_t n, unsigned r) {
  return make_result(n, r, Method::closed, Rational(arith::chi_tilde_closed(static_cast<int>(r),
                                                                            static_cast<std::int64_t>(n))));
}

/// (-1)^(m-1) mu(1, A) |A|^(m-1) (m-1)! for A acting freely on n = m|A| points.
inline Integer fixed_poset_euler_closed(const groups::PermGroup& a, std::size_t n) {
  if (a.degree() != n) throw DomainError("fixed_poset_euler_closed: group degree differs from n");
  if (!a.acts_freely()) throw DomainError("fixed_poset_euler_closed: action is not free");
  const std::size_t m = n / a.order();
  auto type = groups::abelian_type_of(a);
  return sign_power(static_cast<unsigned>(m - 1)) * groups::mu_one(type) *
         ipow(Integer(a.order()), static_cast<unsigned>(m - 1)) * factorial(static_cast<unsigned>(m - 1));
}

/// chi~ of Pi*(n)^A computed on the materialized fixed poset.
inline Integer fixed_poset_euler_direct(const groups::PermGroup& a) {
  auto p = partitions::fixed_subposet(a.degree(), a.generators(), true);
  return posets::reduced_euler(p);
}

}  // namespace eqchi::equivariant
