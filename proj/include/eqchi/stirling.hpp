#pragma once

// Classical and G-Stirling numbers, the G-Stirling matrix with its exact
// inverse, and higher Moebius numbers mu_i(H, G).

#include <cstdint>
#include <string>
#include <vector>

#include "eqchi/common.hpp"
#include "eqchi/group.hpp"
#include "eqchi/gsets.hpp"

namespace eqchi::stirling {

using gsets::GroupPtr;
using groups::FiniteGroup;

/// Lower-triangular integer matrix; rows and columns indexed from 0.
using Matrix = std::vector<std::vector<Integer>>;

/// Inverse of a unit lower-triangular matrix by forward substitution.
inline Matrix invert_unit_lower(const Matrix& l) {
  const std::size_t n = l.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (l[i][i] != 1) throw DomainError("invert_unit_lower: diagonal entry " + std::to_string(i) + " is not 1");
    for (std::size_t j = i + 1; j < n; ++j)
      if (l[i][j] != 0) throw DomainError("invert_unit_lower: matrix is not lower triangular");
  }
  Matrix inv(n, std::vector<Integer>(n));
  for (std::size_t j = 0; j < n; ++j) {
    inv[j][j] = 1;
    for (std::size_t i = j + 1; i < n; ++i) {
      Integer s = 0;
      for (std::size_t k = j; k < i; ++k) s += l[i][k] * inv[k][j];
      inv[i][j] = -s;
    }
  }
  return inv;
}

inline Matrix multiply(const Matrix& a, const Matrix& b) {
  const std::size_t n = a.size(), m = b.empty() ? 0 : b[0].size(), k = b.size();
  Matrix c(n, std::vector<Integer>(m));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t t = 0; t < k; ++t) {
      if (a[i][t] == 0) continue;
      for (std::size_t j = 0; j < m; ++j) c[i][j] += a[i][t] * b[t][j];
    }
  return c;
}

class StirlingTriangle {
 public:
  explicit StirlingTriangle(std::size_t max_n) : n_(max_n) {
    second_.assign(n_ + 1, std::vector<Integer>(n_ + 1));
    second_[0][0] = 1;
    for (std::size_t n = 1; n <= n_; ++n)
      for (std::size_t k = 1; k <= n; ++k) second_[n][k] = Integer(k) * second_[n - 1][k] + second_[n - 1][k - 1];
    Matrix l(n_, std::vector<Integer>(n_));
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j <= i; ++j) l[i][j] = second_[i + 1][j + 1];
    auto inv = invert_unit_lower(l);
    first_.assign(n_ + 1, std::vector<Integer>(n_ + 1));
    first_[0][0] = 1;
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j) first_[i + 1][j + 1] = inv[i][j];
  }

  std::size_t max_n() const { return n_; }
  Integer second(std::size_t n, std::size_t k) const { return n <= n_ && k <= n_ ? second_[n][k] : Integer(0); }
  Integer first(std::size_t n, std::size_t k) const { return n <= n_ && k <= n_ ? first_[n][k] : Integer(0); }

 private:
  std::size_t n_;
  Matrix second_, first_;
};

/// S(n, k); zero outside 1 <= k <= n (and S(0, 0) = 1).
inline Integer stirling2(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  return StirlingTriangle(n).second(n, k);
}

/// Signed s(n, k), the entries of the inverse of the second-kind triangle.
inline Integer stirling1_signed(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  return StirlingTriangle(n).first(n, k);
}

/// S_G(s (H\G), t (K\G)) = TOM(H,K)^s / TOM(K,K)^t * S(s,t) over class ids.
inline Integer g_stirling(const std::vector<std::vector<std::int64_t>>& tom, std::size_t h, std::size_t s,
                          std::size_t k, std::size_t t) {
  if (s == 0 || t == 0) throw DomainError("g_stirling: multiplicities must be >= 1");
  if (tom[h][k] == 0 || t > s) return 0;
  Integer num = ipow(Integer(tom[h][k]), static_cast<unsigned>(s)) * stirling2(s, t);
  return exact_div(num, ipow(Integer(tom[k][k]), static_cast<unsigned>(t)), "g_stirling");
}

inline Integer g_stirling(const FiniteGroup& g, std::size_t h, std::size_t s, std::size_t k, std::size_t t) {
  return g_stirling(groups::table_of_marks(g.lattice()), h, s, k, t);
}

/// Number of isotypical G-partitions of S whose block G-set is t (K\G).
inline Integer g_stirling_bruteforce(const gsets::GSetAction& s, std::size_t k, std::size_t t,
                                     std::size_t cap = gsets::kDefaultPointCap) {
  gsets::Fingerprint target(s.group().classes().size(), 0);
  target.at(k) = static_cast<std::uint16_t>(t);
  auto counts = gsets::block_type_counts(s, false, cap);
  auto it = counts.find(target);
  return it == counts.end() ? Integer(0) : Integer(it->second);
}

struct StirlingIndex {
  std::size_t class_id;
  std::size_t multiplicity;
};

/// Class labels as printed in tables: S_i with i the subgroup index, and a
/// letter suffix when several classes share an index.
inline std::vector<std::string> class_labels(const FiniteGroup& g) {
  std::vector<std::string> out;
  const auto& cls = g.classes();
  for (std::size_t c = 0; c < cls.size(); ++c) {
    std::size_t idx = g.class_index(c);
    std::size_t same = 0, rank = 0;
    for (std::size_t d = 0; d < cls.size(); ++d)
      if (g.class_index(d) == idx) {
        if (d < c) ++rank;
        ++same;
      }
    std::string l = "S" + std::to_string(idx);
    if (same > 1) l += static_cast<char>('a' + rank);
    out.push_back(std::move(l));
  }
  return out;
}

class GStirlingMatrix {
 public:
  GStirlingMatrix(GroupPtr g, std::size_t degree) : g_(std::move(g)), degree_(degree) {
    if (degree_ == 0) throw DomainError("g_stirling_matrix: degree must be >= 1");
    const auto tom = groups::table_of_marks(g_->lattice());
    for (std::size_t c = 0; c < g_->classes().size(); ++c)
      for (std::size_t i = 1; i <= degree_; ++i) index_.push_back({c, i});
    const std::size_t n = index_.size();
    entries_.assign(n, std::vector<Integer>(n));
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c)
        entries_[r][c] = g_stirling(tom, index_[r].class_id, index_[r].multiplicity, index_[c].class_id,
                                    index_[c].multiplicity);
  }

  const FiniteGroup& group() const { return *g_; }
  const GroupPtr& group_ptr() const { return g_; }
  std::size_t degree() const { return degree_; }
  std::size_t size() const { return index_.size(); }
  const std::vector<StirlingIndex>& index() const { return index_; }
  const Matrix& entries() const { return entries_; }
  const Integer& at(std::size_t r, std::size_t c) const { return entries_[r][c]; }

  /// Row/column labels such as "1S1", "3S6".
  std::vector<std::string> labels() const {
    auto cl = class_labels(*g_);
    std::vector<std::string> out;
    for (const auto& ix : index_) out.push_back(std::to_string(ix.multiplicity) + cl[ix.class_id]);
    return out;
  }

  bool is_unit_lower_triangular() const {
    for (std::size_t r = 0; r < size(); ++r) {
      if (entries_[r][r] != 1) return false;
      for (std::size_t c = r + 1; c < size(); ++c)
        if (entries_[r][c] != 0) return false;
    }
    return true;
  }

  Matrix inverse() const { return invert_unit_lower(entries_); }

 private:
  GroupPtr g_;
  std::size_t degree_;
  std::vector<StirlingIndex> index_;
  Matrix entries_;
};

enum class MoebiusMethod { solve, direct };

class HigherMoebiusTable {
 public:
  HigherMoebiusTable(GroupPtr g, std::size_t degree, std::vector<std::vector<Integer>> values)
      : g_(std::move(g)), degree_(degree), values_(std::move(values)) {}

  const FiniteGroup& group() const { return *g_; }
  std::size_t degree() const { return degree_; }
  /// mu_i(H, G) for class id h and 1 <= i <= degree.
  const Integer& mu(std::size_t h, std::size_t i) const { return values_.at(h).at(i - 1); }
  const std::vector<std::vector<Integer>>& values() const { return values_; }

  /// The column -mu in matrix order with the top entry set to 0.
  std::vector<Integer> weighting_column() const {
    std::vector<Integer> col;
    for (std::size_t h = 0; h < values_.size(); ++h)
      for (std::size_t i = 1; i <= degree_; ++i) col.push_back(-mu(h, i));
    if (!col.empty()) col[0] = 0;
    return col;
  }

 private:
  GroupPtr g_;
  std::size_t degree_;
  std::vector<std::vector<Integer>> values_;
};

/// Higher Moebius numbers by solving the Stirling system.
inline HigherMoebiusTable higher_moebius_solve(const GStirlingMatrix& m) {
  auto inv = m.inverse();
  const auto classes = m.group().classes().size();
  std::vector<std::vector<Integer>> v(classes, std::vector<Integer>(m.degree()));
  for (std::size_t r = 0; r < m.size(); ++r) v[m.index()[r].class_id][m.index()[r].multiplicity - 1] = inv[r][0];
  return HigherMoebiusTable(m.group_ptr(), m.degree(), std::move(v));
}

/// mu_i(H, G) = chi~(Pi*(i (H\G))^G), with mu_1(G, G) = 1.
inline Integer higher_moebius_direct(gsets::GPartitionEuler& euler, std::size_t h, std::size_t i) {
  const auto& g = *euler.group();
  if (i == 0) throw DomainError("higher_moebius: i must be >= 1");
  const std::size_t points = i * g.class_index(h);
  if (points == 1) return 1;
  if (points > euler.cap())
    throw ResourceError("higher_moebius direct: i*|G:H| = " + std::to_string(points) + " exceeds cap " +
                        std::to_string(euler.cap()) + "; feasible for i <= " +
                        std::to_string(euler.cap() / g.class_index(h)));
  gsets::Fingerprint fp(g.classes().size(), 0);
  fp[h] = static_cast<std::uint16_t>(i);
  return euler.chi_tilde(fp);
}

inline HigherMoebiusTable higher_moebius(const GroupPtr& g, std::size_t degree, MoebiusMethod method,
                                         std::size_t cap = gsets::kDefaultPointCap) {
  if (method == MoebiusMethod::solve) return higher_moebius_solve(GStirlingMatrix(g, degree));
  gsets::GPartitionEuler euler(g, cap);
  std::vector<std::vector<Integer>> v(g->classes().size(), std::vector<Integer>(degree));
  for (std::size_t h = 0; h < v.size(); ++h)
    for (std::size_t i = 1; i <= degree; ++i) v[h][i - 1] = higher_moebius_direct(euler, h, i);
  return HigherMoebiusTable(g, degree, std::move(v));
}

}  // namespace eqchi::stirling
