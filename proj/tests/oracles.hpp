#pragma once

// Deliberately naive reference implementations used as test oracles. None of
// them share code paths with the library beyond the Integer type and
// Permutation.

#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <vector>

#include "eqchi/common.hpp"
#include "eqchi/perm.hpp"

namespace oracle {

using eqchi::Integer;
using eqchi::Permutation;
using Seq = std::function<Integer(std::int64_t)>;

/// (f * g)(n) as a literal divisor sum.
inline Integer divisor_convolution(const Seq& f, const Seq& g, std::int64_t n) {
  Integer s = 0;
  for (std::int64_t d = 1; d <= n; ++d)
    if (n % d == 0) s += f(d) * g(n / d);
  return s;
}

inline Integer moebius(std::int64_t n) {
  int sign = 1;
  for (std::int64_t p = 2; p <= n; ++p) {
    if (n % p) continue;
    n /= p;
    if (n % p == 0) return 0;
    sign = -sign;
  }
  return sign;
}

/// Rank of a list of vectors over F_p (entries in 0..p-1).
inline int rank_mod_p(std::vector<std::vector<int>> rows, int p) {
  int rank = 0;
  const int cols = rows.empty() ? 0 : static_cast<int>(rows[0].size());
  for (int c = 0; c < cols && rank < static_cast<int>(rows.size()); ++c) {
    int piv = -1;
    for (int r = rank; r < static_cast<int>(rows.size()); ++r)
      if (rows[r][c] % p) piv = r;
    if (piv < 0) continue;
    std::swap(rows[piv], rows[rank]);
    int inv = 1;
    while ((rows[rank][c] * inv) % p != 1) ++inv;
    for (auto& x : rows[rank]) x = (x * inv) % p;
    for (int r = 0; r < static_cast<int>(rows.size()); ++r) {
      if (r == rank || rows[r][c] == 0) continue;
      int f = rows[r][c];
      for (int k = 0; k < cols; ++k) rows[r][k] = ((rows[r][k] - f * rows[rank][k]) % p + p) % p;
    }
    ++rank;
  }
  return rank;
}

/// Number of linearly independent ordered d-tuples in F_p^r.
inline Integer independent_tuples(int r, int d, int p) {
  int total = 1;
  for (int i = 0; i < r; ++i) total *= p;
  Integer count = 0;
  std::vector<int> pick(d, 0);
  while (true) {
    std::vector<std::vector<int>> rows;
    for (int v : pick) {
      std::vector<int> row(r);
      for (int k = 0, x = v; k < r; ++k, x /= p) row[k] = x % p;
      rows.push_back(row);
    }
    if (rank_mod_p(rows, p) == d) ++count;
    int i = 0;
    while (i < d && ++pick[i] == total) pick[i++] = 0;
    if (i == d) break;
  }
  return count;
}

/// Number of d-dimensional subspaces of F_p^r by counting bases.
inline Integer subspace_count(int r, int d, int p) {
  if (d < 0 || d > r) return 0;
  if (d == 0) return 1;
  return independent_tuples(r, d, p) / independent_tuples(d, d, p);
}

/// Set partitions of {0..n-1} as block-id vectors, by recursive insertion.
inline std::vector<std::vector<int>> set_partitions(int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> ids;
  std::function<void(int, int)> rec = [&](int x, int blocks) {
    if (x == n) {
      out.push_back(ids);
      return;
    }
    for (int b = 0; b <= blocks; ++b) {
      ids.push_back(b);
      rec(x + 1, std::max(blocks, b + 1));
      ids.pop_back();
    }
  };
  rec(0, 0);
  return out;
}

inline Integer stirling2(int n, int k) {
  Integer c = 0;
  for (const auto& p : set_partitions(n))
    if (*std::max_element(p.begin(), p.end()) + 1 == k) ++c;
  return n == 0 ? Integer(k == 0) : c;
}

inline bool refines(const std::vector<int>& a, const std::vector<int>& b) {
  for (std::size_t x = 0; x < a.size(); ++x)
    for (std::size_t y = 0; y < a.size(); ++y)
      if (a[x] == a[y] && b[x] != b[y]) return false;
  return true;
}

/// pi is fixed by g iff x ~ y exactly when g(x) ~ g(y).
inline bool fixed_by(const std::vector<int>& ids, const Permutation& g) {
  for (std::size_t x = 0; x < ids.size(); ++x)
    for (std::size_t y = 0; y < ids.size(); ++y)
      if ((ids[x] == ids[y]) != (ids[g(static_cast<eqchi::Point>(x))] == ids[g(static_cast<eqchi::Point>(y))]))
        return false;
  return true;
}

/// Reduced Euler characteristic of a poset given by its strict order
/// relation, by counting chains depth first.
inline Integer reduced_euler(const std::vector<std::vector<bool>>& less) {
  const std::size_t n = less.size();
  std::vector<Integer> chains(n + 1, 0);
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t top, std::size_t len) {
    ++chains[len];
    for (std::size_t y = 0; y < n; ++y)
      if (less[top][y]) rec(y, len + 1);
  };
  for (std::size_t x = 0; x < n; ++x) rec(x, 0);
  Integer chi = -1;
  for (std::size_t k = 0; k <= n; ++k) chi += (k % 2 == 0) ? chains[k] : Integer(-chains[k]);
  return chi;
}

/// chi~ of the proper part of the partitions of n points fixed by xs.
inline Integer fixed_partition_euler(int n, const std::vector<Permutation>& xs) {
  std::vector<std::vector<int>> keep;
  for (const auto& p : set_partitions(n)) {
    const int blocks = *std::max_element(p.begin(), p.end()) + 1;
    if (blocks == 1 || blocks == n) continue;
    bool ok = true;
    for (const auto& g : xs) ok = ok && fixed_by(p, g);
    if (ok) keep.push_back(p);
  }
  std::vector<std::vector<bool>> less(keep.size(), std::vector<bool>(keep.size()));
  for (std::size_t i = 0; i < keep.size(); ++i)
    for (std::size_t j = 0; j < keep.size(); ++j) less[i][j] = i != j && refines(keep[i], keep[j]);
  return reduced_euler(less);
}

/// All elements of the group generated by gens, by breadth-first closure.
inline std::vector<Permutation> closure(std::size_t degree, const std::vector<Permutation>& gens) {
  std::set<std::vector<eqchi::Point>> seen;
  std::vector<Permutation> out{Permutation::identity(degree)};
  seen.insert({out[0].images().begin(), out[0].images().end()});
  for (std::size_t i = 0; i < out.size(); ++i)
    for (const auto& g : gens) {
      Permutation h = out[i] * g;
      std::vector<eqchi::Point> key(h.images().begin(), h.images().end());
      if (seen.insert(key).second) out.push_back(h);
    }
  return out;
}

/// (1/|G|) sum over commuting r-tuples of chi~ of the fixed partitions, from
/// scratch; only for very small groups.
inline std::pair<Integer, Integer> chi_r(int n, const std::vector<Permutation>& elems, unsigned r) {
  Integer total = 0;
  std::vector<Permutation> tuple;
  std::map<std::vector<std::vector<eqchi::Point>>, Integer> memo;
  std::function<void()> rec = [&] {
    if (tuple.size() == r) {
      std::vector<std::vector<eqchi::Point>> key;
      for (const auto& t : tuple) key.emplace_back(t.images().begin(), t.images().end());
      std::sort(key.begin(), key.end());
      auto it = memo.find(key);
      if (it == memo.end()) it = memo.emplace(key, fixed_partition_euler(n, tuple)).first;
      total += it->second;
      return;
    }
    for (const auto& g : elems) {
      bool commutes = true;
      for (const auto& t : tuple) commutes = commutes && (t * g == g * t);
      if (!commutes) continue;
      tuple.push_back(g);
      rec();
      tuple.pop_back();
    }
  };
  rec();
  return {total, Integer(elems.size())};
}

}  // namespace oracle
