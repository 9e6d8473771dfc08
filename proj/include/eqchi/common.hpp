#pragma once

// Shared vocabulary for the eqchi library: exact number types, the error
// hierarchy, and a small dynamic bitset used for element and partition sets.

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace eqchi {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Mathematical precondition violated by the caller (bad argument value).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Malformed request: unknown names, unparsable group specs, bad flags.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A configurable size cap would be exceeded.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An internal identity failed (e.g. a division that must be exact was not).
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

inline Integer ipow(const Integer& base, unsigned exponent) {
  return boost::multiprecision::pow(base, exponent);
}

inline Integer factorial(unsigned n) {
  Integer f = 1;
  for (unsigned i = 2; i <= n; ++i) f *= i;
  return f;
}

inline Integer sign_power(unsigned e) { return (e % 2 == 0) ? Integer(1) : Integer(-1); }

inline std::string to_string(const Integer& v) { return v.str(); }

inline std::string to_string(const Rational& v) {
  auto num = boost::multiprecision::numerator(v);
  auto den = boost::multiprecision::denominator(v);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

/// Exact quotient, throwing ConsistencyError when `den` does not divide `num`.
inline Integer exact_div(const Integer& num, const Integer& den, const char* what) {
  if (den == 0) throw ConsistencyError(std::string(what) + ": division by zero");
  Integer q, r;
  boost::multiprecision::divide_qr(num, den, q, r);
  if (r != 0)
    throw ConsistencyError(std::string(what) + ": " + num.str() + " is not divisible by " +
                           den.str());
  return q;
}

/// Fixed-size bitset whose size is chosen at run time.
class Bitset {
 public:
  Bitset() = default;
  explicit Bitset(std::size_t size) : size_(size), words_((size + 63) / 64, 0) {}

  static Bitset full(std::size_t size) {
    Bitset b(size);
    for (auto& w : b.words_) w = ~std::uint64_t{0};
    b.trim();
    return b;
  }

  std::size_t size() const { return size_; }

  void set(std::size_t i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void reset(std::size_t i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
  bool test(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1U; }

  std::size_t count() const {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }
  bool none() const {
    return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
  }
  bool any() const { return !none(); }

  bool is_subset_of(const Bitset& other) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & ~other.words_[i]) return false;
    return true;
  }

  Bitset& operator&=(const Bitset& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }
  Bitset& operator|=(const Bitset& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }
  friend Bitset operator&(Bitset a, const Bitset& b) { return a &= b; }
  friend Bitset operator|(Bitset a, const Bitset& b) { return a |= b; }

  bool operator==(const Bitset&) const = default;

  /// Lexicographic comparison of the sorted index lists.
  bool lex_less(const Bitset& o) const {
    for (std::size_t i = 0; i < words_.size(); ++i) {
      if (words_[i] == o.words_[i]) continue;
      std::uint64_t diff = words_[i] ^ o.words_[i];
      std::uint64_t low = diff & (~diff + 1);
      // The set owning the lowest differing index is smaller, unless the
      // other set has run out of elements before that index.
      bool mine = (words_[i] & low) != 0;
      if (mine) {
        std::uint64_t below = low - 1;
        bool other_has_more = (o.words_[i] & ~below) != 0 || tail_any(o, i + 1);
        return other_has_more;
      }
      std::uint64_t below = low - 1;
      bool i_have_more = (words_[i] & ~below) != 0 || tail_any(*this, i + 1);
      return !i_have_more;
    }
    return false;
  }

  template <class F>
  void for_each(F&& f) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t bits = words_[w];
      while (bits) {
        int b = std::countr_zero(bits);
        f(w * 64 + static_cast<std::size_t>(b));
        bits &= bits - 1;
      }
    }
  }

  std::vector<std::size_t> indices() const {
    std::vector<std::size_t> out;
    out.reserve(count());
    for_each([&](std::size_t i) { out.push_back(i); });
    return out;
  }

  std::size_t hash() const {
    std::size_t h = size_ * 0x9e3779b97f4a7c15ULL;
    for (auto w : words_) h ^= std::hash<std::uint64_t>{}(w) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
  }

  const std::vector<std::uint64_t>& words() const { return words_; }

 private:
  static bool tail_any(const Bitset& b, std::size_t from) {
    for (std::size_t i = from; i < b.words_.size(); ++i)
      if (b.words_[i]) return true;
    return false;
  }
  void trim() {
    if (size_ % 64 != 0 && !words_.empty()) words_.back() &= (std::uint64_t{1} << (size_ % 64)) - 1;
  }

  std::size_t size_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace eqchi

template <>
struct std::hash<eqchi::Bitset> {
  std::size_t operator()(const eqchi::Bitset& b) const noexcept { return b.hash(); }
};
