#pragma once

// Generic finite posets: zeta and Moebius matrices, reduced Euler
// characteristics, slices, weightings, and the contractor predicate.

#include <algorithm>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "eqchi/common.hpp"

namespace eqchi::posets {

template <class T>
class FinitePoset {
 public:
  FinitePoset() = default;

  /// Validates `leq` as a partial order on `elements`.
  template <class Leq>
  static FinitePoset build(std::vector<T> elements, Leq&& leq) {
    const std::size_t n = elements.size();
    std::vector<Bitset> up(n, Bitset(n));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (leq(elements[i], elements[j])) up[i].set(j);
    return from_up_sets(std::move(elements), std::move(up));
  }

  /// up[i] holds every j with element i <= element j.
  static FinitePoset from_up_sets(std::vector<T> elements, std::vector<Bitset> up) {
    const std::size_t n = elements.size();
    for (std::size_t i = 0; i < n; ++i)
      if (!up[i].test(i)) throw DomainError("FinitePoset: reflexivity fails at element " + std::to_string(i));
    for (std::size_t i = 0; i < n; ++i) {
      std::optional<std::string> bad;
      up[i].for_each([&](std::size_t j) {
        if (bad || j == i) return;
        if (up[j].test(i))
          bad = "FinitePoset: antisymmetry fails for pair (" + std::to_string(i) + ", " + std::to_string(j) + ")";
        else if (!up[j].is_subset_of(up[i])) {
          Bitset miss = up[j];
          for (std::size_t w = 0; w < n; ++w)
            if (up[i].test(w)) miss.reset(w);
          bad = "FinitePoset: transitivity fails for pair (" + std::to_string(i) + ", " +
                std::to_string(miss.indices().front()) + ") through " + std::to_string(j);
        }
      });
      if (bad) throw DomainError(*bad);
    }
    FinitePoset p;
    p.elements_ = std::move(elements);
    p.up_ = std::move(up);
    p.down_.assign(n, Bitset(n));
    for (std::size_t i = 0; i < n; ++i) p.up_[i].for_each([&](std::size_t j) { p.down_[j].set(i); });
    p.order_.resize(n);
    std::iota(p.order_.begin(), p.order_.end(), std::size_t{0});
    std::vector<std::size_t> below(n);
    for (std::size_t i = 0; i < n; ++i) below[i] = p.down_[i].count();
    std::stable_sort(p.order_.begin(), p.order_.end(),
                     [&](std::size_t a, std::size_t b) { return below[a] < below[b]; });
    return p;
  }

  std::size_t size() const { return elements_.size(); }
  bool empty() const { return elements_.empty(); }
  const std::vector<T>& elements() const { return elements_; }
  const T& element(std::size_t i) const { return elements_[i]; }

  bool leq(std::size_t i, std::size_t j) const { return up_[i].test(j); }
  bool less(std::size_t i, std::size_t j) const { return i != j && up_[i].test(j); }
  const Bitset& up_set(std::size_t i) const { return up_[i]; }
  const Bitset& down_set(std::size_t i) const { return down_[i]; }

  /// Elements listed so that every element follows everything below it.
  const std::vector<std::size_t>& linear_extension() const { return order_; }

  std::optional<std::size_t> index_of(const T& x) const {
    for (std::size_t i = 0; i < elements_.size(); ++i)
      if (elements_[i] == x) return i;
    return std::nullopt;
  }

  FinitePoset subposet(const Bitset& keep) const {
    std::vector<std::size_t> idx = keep.indices();
    std::vector<T> elems;
    elems.reserve(idx.size());
    for (auto i : idx) elems.push_back(elements_[i]);
    std::vector<Bitset> up(idx.size(), Bitset(idx.size()));
    for (std::size_t a = 0; a < idx.size(); ++a)
      for (std::size_t b = 0; b < idx.size(); ++b)
        if (up_[idx[a]].test(idx[b])) up[a].set(b);
    return from_up_sets(std::move(elems), std::move(up));
  }

  /// a//P: elements strictly above a.
  FinitePoset strict_up(std::size_t a) const {
    Bitset keep = up_[a];
    keep.reset(a);
    return subposet(keep);
  }
  /// P//b: elements strictly below b.
  FinitePoset strict_down(std::size_t b) const {
    Bitset keep = down_[b];
    keep.reset(b);
    return subposet(keep);
  }

 private:
  std::vector<T> elements_;
  std::vector<Bitset> up_, down_;
  std::vector<std::size_t> order_;
};

template <class T>
std::vector<std::vector<Integer>> zeta_matrix(const FinitePoset<T>& p) {
  std::vector<std::vector<Integer>> z(p.size(), std::vector<Integer>(p.size()));
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = 0; j < p.size(); ++j) z[i][j] = p.leq(i, j) ? 1 : 0;
  return z;
}

/// mu(x, y) for every y (zero where x is not below y), by back-substitution
/// along a linear extension.
template <class T>
std::vector<Integer> moebius_row(const FinitePoset<T>& p, std::size_t x) {
  std::vector<Integer> mu(p.size());
  for (std::size_t y : p.linear_extension()) {
    if (!p.leq(x, y)) continue;
    if (y == x) {
      mu[y] = 1;
      continue;
    }
    Integer s = 0;
    Bitset between = p.up_set(x) & p.down_set(y);
    between.for_each([&](std::size_t z) {
      if (z != y) s += mu[z];
    });
    mu[y] = -s;
  }
  return mu;
}

template <class T>
Integer moebius(const FinitePoset<T>& p, std::size_t x, std::size_t y) {
  if (!p.leq(x, y))
    throw DomainError("moebius: element " + std::to_string(x) + " is not below " + std::to_string(y));
  return moebius_row(p, x)[y];
}

template <class T>
std::vector<std::vector<Integer>> moebius_matrix(const FinitePoset<T>& p) {
  std::vector<std::vector<Integer>> m;
  m.reserve(p.size());
  for (std::size_t x = 0; x < p.size(); ++x) m.push_back(moebius_row(p, x));
  return m;
}

/// Chain counts c_i = number of chains with i+1 elements, i = 0, 1, ...
template <class T>
std::vector<Integer> chain_counts(const FinitePoset<T>& p) {
  const std::size_t n = p.size();
  // from[x][k]: chains with k+1 elements whose least element is x.
  std::vector<std::vector<Integer>> from(n);
  const auto& order = p.linear_extension();
  std::vector<Integer> total;
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    std::size_t x = *it;
    std::vector<Integer> f{1};
    p.up_set(x).for_each([&](std::size_t y) {
      if (y == x) return;
      const auto& g = from[y];
      if (f.size() < g.size() + 1) f.resize(g.size() + 1);
      for (std::size_t k = 0; k < g.size(); ++k) f[k + 1] += g[k];
    });
    if (total.size() < f.size()) total.resize(f.size());
    for (std::size_t k = 0; k < f.size(); ++k) total[k] += f[k];
    from[x] = std::move(f);
  }
  return total;
}

/// Reduced Euler characteristic of the order complex, -1 + c0 - c1 + ...
template <class T>
Integer reduced_euler_chains(const FinitePoset<T>& p) {
  Integer chi = -1;
  auto c = chain_counts(p);
  for (std::size_t k = 0; k < c.size(); ++k) chi += (k % 2 == 0) ? c[k] : Integer(-c[k]);
  return chi;
}

/// mu(bottom, top) of the poset with fresh bounds adjoined.
template <class T>
Integer reduced_euler_moebius(const FinitePoset<T>& p) {
  std::vector<Integer> mu(p.size());
  Integer total = 1;  // mu(bottom, bottom)
  for (std::size_t y : p.linear_extension()) {
    Integer s = 1;
    p.down_set(y).for_each([&](std::size_t z) {
      if (z != y) s += mu[z];
    });
    mu[y] = -s;
    total += mu[y];
  }
  return -total;
}

/// Both routes; throws ConsistencyError if they disagree.
template <class T>
Integer reduced_euler(const FinitePoset<T>& p) {
  Integer a = reduced_euler_chains(p);
  Integer b = reduced_euler_moebius(p);
  if (a != b)
    throw ConsistencyError("reduced_euler: chain count gives " + a.str() + ", Moebius gives " + b.str());
  return a;
}

template <class T>
Integer euler_characteristic(const FinitePoset<T>& p) {
  return reduced_euler(p) + 1;
}

struct Weighting {
  std::vector<Integer> up;    ///< k^a = -chi~(a//P)
  std::vector<Integer> down;  ///< k_b = -chi~(P//b)
  Integer euler;              ///< chi(P)
};

template <class T>
Weighting weighting(const FinitePoset<T>& p) {
  Weighting w;
  w.up.resize(p.size());
  w.down.resize(p.size());
  Integer su = 0, sd = 0;
  for (std::size_t a = 0; a < p.size(); ++a) {
    w.up[a] = -reduced_euler_moebius(p.strict_up(a));
    w.down[a] = -reduced_euler_moebius(p.strict_down(a));
    su += w.up[a];
    sd += w.down[a];
  }
  w.euler = reduced_euler(p) + 1;
  if (su != w.euler || sd != w.euler)
    throw ConsistencyError("weighting: sums " + su.str() + ", " + sd.str() + " differ from chi = " + w.euler.str());
  return w;
}

/// True iff join(x, c) lies in P for every x in P, or meet(x, c) lies in P for
/// every x in P. The lattice operations belong to the ambient lattice
/// containing P.
template <class T, class Meet, class Join>
bool is_contractor(const FinitePoset<T>& p, const T& c, Meet&& meet, Join&& join) {
  if (!p.index_of(c)) return false;
  auto all_in = [&](auto&& op) {
    return std::all_of(p.elements().begin(), p.elements().end(),
                       [&](const T& x) { return p.index_of(op(x, c)).has_value(); });
  };
  return all_in(join) || all_in(meet);
}

}  // namespace eqchi::posets
