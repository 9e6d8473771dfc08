#pragma once

// Finite abelian groups by primary decomposition: enumeration of isomorphism
// types, automorphism orders, mu(1, A), generating-tuple counts, and free
// permutation representations.

#include <algorithm>
#include <cstdint>
#include <map>
#include <string>
#include <unordered_map>
#include <vector>

#include "eqchi/arith.hpp"
#include "eqchi/common.hpp"
#include "eqchi/group.hpp"
#include "eqchi/perm.hpp"

namespace eqchi::groups {

/// For each prime, the exponents of the cyclic p-power factors, descending.
class AbelianType {
 public:
  AbelianType() = default;

  explicit AbelianType(std::map<std::uint64_t, std::vector<unsigned>> parts) {
    for (auto& [p, ex] : parts) {
      if (!arith::is_prime(p)) throw DomainError("AbelianType: " + std::to_string(p) + " is not prime");
      std::erase(ex, 0u);
      if (ex.empty()) continue;
      std::sort(ex.rbegin(), ex.rend());
      parts_.emplace(p, std::move(ex));
    }
  }

  /// Builds a type from cyclic factor orders, e.g. {2, 2} or {4, 3}.
  static AbelianType from_cyclic_orders(const std::vector<std::uint64_t>& orders) {
    std::map<std::uint64_t, std::vector<unsigned>> parts;
    for (auto q : orders) {
      if (q == 0) throw DomainError("AbelianType: cyclic factor of order 0");
      for (const auto& [p, e] : arith::factorize(static_cast<std::int64_t>(q))) parts[p].push_back(e);
    }
    return AbelianType(std::move(parts));
  }

  const std::map<std::uint64_t, std::vector<unsigned>>& parts() const { return parts_; }

  std::uint64_t order() const {
    std::uint64_t n = 1;
    for (const auto& [p, ex] : parts_)
      for (auto e : ex)
        for (unsigned i = 0; i < e; ++i) n *= p;
    return n;
  }

  /// Orders of the cyclic primary factors, by prime then descending.
  std::vector<std::uint64_t> cyclic_factors() const {
    std::vector<std::uint64_t> out;
    for (const auto& [p, ex] : parts_)
      for (auto e : ex) {
        std::uint64_t q = 1;
        for (unsigned i = 0; i < e; ++i) q *= p;
        out.push_back(q);
      }
    return out;
  }

  bool is_elementary_p(std::uint64_t p) const {
    auto it = parts_.find(p);
    return it == parts_.end() || std::all_of(it->second.begin(), it->second.end(), [](unsigned e) { return e == 1; });
  }

  unsigned rank_at(std::uint64_t p) const {
    auto it = parts_.find(p);
    return it == parts_.end() ? 0 : static_cast<unsigned>(it->second.size());
  }

  /// "1", "C2", "C2xC2", "C4xC3", ...
  std::string to_string() const {
    auto f = cyclic_factors();
    if (f.empty()) return "1";
    std::string s;
    for (std::size_t i = 0; i < f.size(); ++i) s += (i ? "xC" : "C") + std::to_string(f[i]);
    return s;
  }

  auto operator<=>(const AbelianType&) const = default;
  bool operator==(const AbelianType&) const = default;

 private:
  std::map<std::uint64_t, std::vector<unsigned>> parts_;
};

namespace detail {

inline void integer_partitions(unsigned n, unsigned max_part, std::vector<unsigned>& cur,
                               std::vector<std::vector<unsigned>>& out) {
  if (n == 0) {
    out.push_back(cur);
    return;
  }
  for (unsigned k = std::min(n, max_part); k >= 1; --k) {
    cur.push_back(k);
    integer_partitions(n - k, k, cur, out);
    cur.pop_back();
  }
}

}  // namespace detail

inline std::vector<std::vector<unsigned>> integer_partitions(unsigned n) {
  std::vector<std::vector<unsigned>> out;
  std::vector<unsigned> cur;
  detail::integer_partitions(n, n, cur, out);
  return out;
}

/// All isomorphism types of abelian groups of order n.
inline std::vector<AbelianType> abelian_types_of_order(std::uint64_t n) {
  if (n == 0) throw DomainError("abelian_types_of_order: order must be >= 1");
  std::vector<std::map<std::uint64_t, std::vector<unsigned>>> acc{{}};
  for (const auto& [p, e] : arith::factorize(static_cast<std::int64_t>(n))) {
    std::vector<std::map<std::uint64_t, std::vector<unsigned>>> next;
    for (const auto& base : acc)
      for (auto& part : integer_partitions(e)) {
        auto m = base;
        m[p] = part;
        next.push_back(std::move(m));
      }
    acc = std::move(next);
  }
  std::vector<AbelianType> out;
  for (auto& m : acc) out.emplace_back(std::move(m));
  std::sort(out.begin(), out.end());
  return out;
}

/// Automorphism group order from the exponent structure of each primary part.
inline Integer aut_order_formula(const AbelianType& a) {
  Integer total = 1;
  for (const auto& [p, desc] : a.parts()) {
    std::vector<unsigned> e(desc.rbegin(), desc.rend());  // ascending
    const std::size_t k = e.size();
    Integer P(p);
    for (std::size_t j = 0; j < k; ++j) {
      std::size_t d = j, c = j;
      while (d + 1 < k && e[d + 1] == e[j]) ++d;
      while (c > 0 && e[c - 1] == e[j]) --c;
      // 1-based: d_j = d + 1, c_j = c + 1.
      total *= ipow(P, static_cast<unsigned>(d + 1)) - ipow(P, static_cast<unsigned>(j));
      total *= ipow(ipow(P, e[j]), static_cast<unsigned>(k - (d + 1)));
      total *= ipow(ipow(P, e[j] - 1), static_cast<unsigned>(k - c));
    }
  }
  return total;
}

/// Elements of Z_{q_1} x ... x Z_{q_k} in mixed radix, with the group law.
class AbelianModel {
 public:
  explicit AbelianModel(std::vector<std::uint64_t> moduli) : mod_(std::move(moduli)) {
    order_ = 1;
    for (auto q : mod_) order_ *= q;
  }
  std::uint64_t order() const { return order_; }
  const std::vector<std::uint64_t>& moduli() const { return mod_; }

  std::vector<std::uint64_t> digits(std::uint64_t x) const {
    std::vector<std::uint64_t> d(mod_.size());
    for (std::size_t i = 0; i < mod_.size(); ++i) {
      d[i] = x % mod_[i];
      x /= mod_[i];
    }
    return d;
  }
  std::uint64_t index(const std::vector<std::uint64_t>& d) const {
    std::uint64_t x = 0;
    for (std::size_t i = mod_.size(); i-- > 0;) x = x * mod_[i] + d[i];
    return x;
  }
  std::uint64_t add(std::uint64_t x, std::uint64_t y) const {
    auto a = digits(x), b = digits(y);
    for (std::size_t i = 0; i < mod_.size(); ++i) a[i] = (a[i] + b[i]) % mod_[i];
    return index(a);
  }
  std::uint64_t scale(std::uint64_t x, std::uint64_t k) const {
    auto a = digits(x);
    for (std::size_t i = 0; i < mod_.size(); ++i) a[i] = (a[i] * (k % mod_[i])) % mod_[i];
    return index(a);
  }

 private:
  std::vector<std::uint64_t> mod_;
  std::uint64_t order_ = 1;
};

inline constexpr std::uint64_t kBruteAutCap = 64;

/// Counts generator images (g_1..g_k) with q_i g_i = 0 that generate A. Such
/// tuples are exactly the automorphisms. Dynamic programming over the
/// subgroup generated so far.
inline Integer aut_order_brute(const AbelianType& a) {
  const auto n = a.order();
  if (n > kBruteAutCap)
    throw ResourceError("aut_order_brute: |A| = " + std::to_string(n) + " exceeds cap " + std::to_string(kBruteAutCap));
  auto q = a.cyclic_factors();
  AbelianModel m(q);
  std::vector<std::vector<std::uint64_t>> sum(n, std::vector<std::uint64_t>(n));
  for (std::uint64_t x = 0; x < n; ++x)
    for (std::uint64_t y = 0; y < n; ++y) sum[x][y] = m.add(x, y);
  auto join = [&](std::uint64_t mask, std::uint64_t g) {
    // mask is a subgroup; add multiples of g until closed.
    std::uint64_t out = mask;
    std::uint64_t mult = g;
    while (!((out >> mult) & 1u)) {
      std::uint64_t shifted = 0;
      for (std::uint64_t s = 0; s < n; ++s)
        if ((mask >> s) & 1u) shifted |= std::uint64_t{1} << sum[s][mult];
      out |= shifted;
      mult = sum[mult][g];
    }
    return out;
  };
  const std::uint64_t full = n == 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1);
  std::unordered_map<std::uint64_t, Integer> layer{{1u, Integer(1)}};
  for (auto qi : q) {
    std::vector<std::uint64_t> ok;
    for (std::uint64_t g = 0; g < n; ++g)
      if (m.scale(g, qi) == 0) ok.push_back(g);
    std::unordered_map<std::uint64_t, Integer> next;
    for (const auto& [mask, ways] : layer)
      for (auto g : ok) next[join(mask, g)] += ways;
    layer = std::move(next);
  }
  auto it = layer.find(full);
  return it == layer.end() ? Integer(0) : it->second;
}

/// mu(1, A) in the subgroup lattice of A.
inline Integer mu_one(const AbelianType& a) {
  Integer v = 1;
  for (const auto& [p, ex] : a.parts()) {
    if (!a.is_elementary_p(p)) return 0;
    const auto d = static_cast<unsigned>(ex.size());
    v *= sign_power(d) * ipow(Integer(p), d * (d - 1) / 2);
  }
  return v;
}

struct AbelianInvariants {
  Integer order;
  Integer aut_order;
  Integer mu_one;
};

/// Throws ConsistencyError if the brute automorphism count (|A| <= 64) or the
/// general-linear product (elementary abelian) disagrees with the formula.
inline AbelianInvariants abelian_invariants(const AbelianType& a) {
  AbelianInvariants inv{Integer(a.order()), aut_order_formula(a), mu_one(a)};
  if (a.order() <= kBruteAutCap) {
    Integer b = aut_order_brute(a);
    if (b != inv.aut_order)
      throw ConsistencyError("abelian_invariants: Aut(" + a.to_string() + ") brute " + b.str() + " vs formula " +
                             inv.aut_order.str());
  }
  bool elementary = true;
  Integer gl = 1;
  for (const auto& [p, ex] : a.parts()) {
    if (!a.is_elementary_p(p)) elementary = false;
    gl *= arith::general_linear_order(static_cast<unsigned>(ex.size()), p);
  }
  if (elementary && gl != inv.aut_order)
    throw ConsistencyError("abelian_invariants: Aut(" + a.to_string() + ") GL product " + gl.str() + " vs formula " +
                           inv.aut_order.str());
  return inv;
}

/// phi_r(C_p^d) = [r choose d]_p |GL_d(p)|.
inline Integer phi_elementary(std::uint64_t p, unsigned d, unsigned r) {
  return arith::gaussian_binomial(static_cast<int>(r), static_cast<int>(d), p) * arith::general_linear_order(d, p);
}

/// phi_r(A) for any abelian type: per prime, |Frattini|^r times the count for
/// the elementary quotient of rank d.
inline Integer phi_formula(const AbelianType& a, unsigned r) {
  Integer v = 1;
  for (const auto& [p, ex] : a.parts()) {
    const auto d = static_cast<unsigned>(ex.size());
    unsigned frattini_exp = 0;
    for (auto e : ex) frattini_exp += e - 1;
    v *= ipow(ipow(Integer(p), frattini_exp), r) * phi_elementary(p, d, r);
  }
  return v;
}

/// `copies` disjoint copies of the right regular representation of A.
inline PermGroup regular_representation(const AbelianType& a, std::size_t copies = 1) {
  if (copies == 0) throw DomainError("regular_representation: copies must be >= 1");
  AbelianModel m(a.cyclic_factors());
  const auto n = m.order();
  const std::size_t degree = static_cast<std::size_t>(n) * copies;
  std::vector<Permutation> gens;
  for (std::size_t i = 0; i < m.moduli().size(); ++i) {
    std::vector<std::uint64_t> unit(m.moduli().size(), 0);
    unit[i] = 1;
    auto u = m.index(unit);
    std::vector<Point> im(degree);
    for (std::size_t c = 0; c < copies; ++c)
      for (std::uint64_t x = 0; x < n; ++x) im[c * n + x] = static_cast<Point>(c * n + m.add(x, u));
    gens.emplace_back(std::move(im));
  }
  return PermGroup::generate(degree, std::move(gens));
}

/// Primary decomposition of an abelian permutation group from its element
/// orders: #{g : ord(g) | p^k} = p^(sum_i min(e_i, k)).
inline AbelianType abelian_type_of(const PermGroup& g) {
  if (!g.is_abelian()) throw DomainError("abelian_type_of: group is not abelian");
  std::vector<std::size_t> orders;
  orders.reserve(g.order());
  for (const auto& x : g.elements()) orders.push_back(x.order());
  std::map<std::uint64_t, std::vector<unsigned>> parts;
  for (const auto& [p, e] : arith::factorize(static_cast<std::int64_t>(g.order()))) {
    // level[k] = sum_i min(e_i, k)
    std::vector<unsigned> level{0};
    std::uint64_t pk = 1;
    for (unsigned k = 1; level.back() < e; ++k) {
      pk *= p;
      std::size_t cnt = 0;
      for (auto o : orders) cnt += (pk % o == 0) ? 1 : 0;
      unsigned lv = 0;
      while (cnt > 1) {
        cnt /= p;
        ++lv;
      }
      level.push_back(lv);
    }
    // Number of factors with exponent >= k is level[k] - level[k-1].
    std::vector<unsigned> at_least;
    for (std::size_t k = 1; k < level.size(); ++k) at_least.push_back(level[k] - level[k - 1]);
    std::vector<unsigned> ex;
    for (std::size_t k = 0; k < at_least.size(); ++k) {
      unsigned next = k + 1 < at_least.size() ? at_least[k + 1] : 0;
      for (unsigned c = next; c < at_least[k]; ++c) ex.push_back(static_cast<unsigned>(k + 1));
    }
    parts[p] = std::move(ex);
  }
  return AbelianType(std::move(parts));
}

struct FreeAbelianClass {
  AbelianType type;
  PermGroup embedding;
  std::size_t copies = 1;
};

/// One free embedding into Sigma_n per abelian type whose order divides n.
inline std::vector<FreeAbelianClass> free_abelian_classes(std::size_t n) {
  if (n == 0) throw DomainError("free_abelian_classes: n must be >= 1");
  std::vector<FreeAbelianClass> out;
  for (std::size_t d = 1; d <= n; ++d) {
    if (n % d) continue;
    for (auto& t : abelian_types_of_order(d)) {
      auto emb = regular_representation(t, n / d);
      if (!emb.acts_freely() || emb.order() != d)
        throw ConsistencyError("free_abelian_classes: embedding of " + t.to_string() + " is not free");
      out.push_back({std::move(t), std::move(emb), n / d});
    }
  }
  return out;
}

}  // namespace eqchi::groups
