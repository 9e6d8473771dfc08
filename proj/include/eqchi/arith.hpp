#pragma once

// Multiplicative arithmetic functions with exact values.
//
// A multiplicative function is stored as a rule on prime powers: given a prime
// p and a bound e, it yields the values f(1), f(p), ..., f(p^e). Convolution
// and inversion act on those prime-power sequences directly, so evaluating a
// nested expression at n costs O(e^2) per prime factor of n and never touches
// divisor sums.

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "eqchi/common.hpp"

namespace eqchi::arith {

struct PrimePower {
  std::uint64_t prime;
  unsigned exponent;
  bool operator==(const PrimePower&) const = default;
};

/// Prime factorization with strictly increasing primes; n = 1 is empty.
using Factorization = std::vector<PrimePower>;

/// Deterministic trial-division primality test.
inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n < 4) return true;
  if (n % 2 == 0 || n % 3 == 0) return false;
  for (std::uint64_t d = 5; d * d <= n; d += 6)
    if (n % d == 0 || n % (d + 2) == 0) return false;
  return true;
}

inline Factorization factorize(std::int64_t n) {
  if (n <= 0) throw DomainError("factorize: argument must be positive, got " + std::to_string(n));
  Factorization out;
  auto m = static_cast<std::uint64_t>(n);
  auto pull = [&](std::uint64_t p) {
    unsigned e = 0;
    while (m % p == 0) {
      m /= p;
      ++e;
    }
    if (e) out.push_back({p, e});
  };
  pull(2);
  pull(3);
  for (std::uint64_t d = 5; d * d <= m; d += 6) {
    pull(d);
    pull(d + 2);
  }
  if (m > 1) out.push_back({m, 1});
  return out;
}

inline std::uint64_t reconstruct(const Factorization& f) {
  std::uint64_t n = 1;
  for (const auto& [p, e] : f)
    for (unsigned i = 0; i < e; ++i) n *= p;
  return n;
}

class MultiplicativeFunction {
 public:
  /// Values f(p^0), ..., f(p^max_e) for a prime p.
  using Sequence = std::function<std::vector<Integer>(std::uint64_t p, unsigned max_e)>;
  /// Value at a prime power p^e with e >= 1.
  using Rule = std::function<Integer(std::uint64_t p, unsigned e)>;

  MultiplicativeFunction(std::string name, Sequence seq)
      : name_(std::move(name)), seq_(std::make_shared<const Sequence>(std::move(seq))) {}

  /// Builds a function from its prime-power rule; f(1) = unit.
  static MultiplicativeFunction from_rule(std::string name, Rule rule, Integer unit = 1) {
    return MultiplicativeFunction(
        std::move(name), [rule = std::move(rule), unit](std::uint64_t p, unsigned max_e) {
          std::vector<Integer> v(max_e + 1);
          v[0] = unit;
          for (unsigned e = 1; e <= max_e; ++e) v[e] = rule(p, e);
          return v;
        });
  }

  const std::string& name() const { return name_; }

  std::vector<Integer> prime_power_values(std::uint64_t p, unsigned max_e) const {
    return (*seq_)(p, max_e);
  }

  Integer unit_value() const { return (*seq_)(2, 0)[0]; }

  Integer at_prime_power(std::uint64_t p, unsigned e) const { return (*seq_)(p, e)[e]; }

  Integer operator()(std::int64_t n) const {
    auto fac = factorize(n);
    if (fac.empty()) return unit_value();
    Integer v = 1;
    for (const auto& [p, e] : fac) v *= at_prime_power(p, e);
    return v;
  }

 private:
  std::string name_;
  std::shared_ptr<const Sequence> seq_;
};

inline Integer evaluate(const MultiplicativeFunction& f, std::int64_t n) { return f(n); }

/// The Gaussian binomial coefficient: number of d-dimensional subspaces of an
/// r-dimensional vector space over the field with p elements.
inline Integer gaussian_binomial(int r, int d, std::uint64_t p) {
  if (!is_prime(p)) throw DomainError("gaussian_binomial: " + std::to_string(p) + " is not prime");
  if (r < 0) throw DomainError("gaussian_binomial: negative dimension");
  if (d < 0 || d > r) return 0;
  Integer num = 1, den = 1;
  Integer pr = ipow(Integer(p), static_cast<unsigned>(r));
  Integer pd = ipow(Integer(p), static_cast<unsigned>(d));
  Integer pi = 1;
  for (int i = 0; i < d; ++i) {
    num *= pr - pi;
    den *= pd - pi;
    pi *= p;
  }
  return exact_div(num, den, "gaussian_binomial");
}

/// Order of the general linear group GL_d over the field with p elements.
inline Integer general_linear_order(unsigned d, std::uint64_t p) {
  Integer order = 1;
  Integer pd = ipow(Integer(p), d);
  Integer pi = 1;
  for (unsigned i = 0; i < d; ++i) {
    order *= pd - pi;
    pi *= p;
  }
  return order;
}

inline MultiplicativeFunction moebius() {
  return MultiplicativeFunction::from_rule("moebius", [](std::uint64_t, unsigned e) {
    return e == 1 ? Integer(-1) : Integer(0);
  });
}

inline MultiplicativeFunction one() {
  return MultiplicativeFunction::from_rule("one", [](std::uint64_t, unsigned) { return Integer(1); });
}

inline MultiplicativeFunction delta() {
  return MultiplicativeFunction::from_rule("delta", [](std::uint64_t, unsigned) { return Integer(0); });
}

/// n -> n^k.
inline MultiplicativeFunction id_k(unsigned k) {
  return MultiplicativeFunction::from_rule("id_" + std::to_string(k), [k](std::uint64_t p, unsigned e) {
    return ipow(Integer(p), k * e);
  });
}

/// n -> (-1)^(n+1): -1 on powers of two, +1 on odd prime powers.
inline MultiplicativeFunction alternating_sign() {
  return MultiplicativeFunction::from_rule("a", [](std::uint64_t p, unsigned) {
    return p == 2 ? Integer(-1) : Integer(1);
  });
}

inline MultiplicativeFunction dirichlet_convolve(const MultiplicativeFunction& f,
                                                 const MultiplicativeFunction& g) {
  return MultiplicativeFunction("(" + f.name() + "*" + g.name() + ")",
                                [f, g](std::uint64_t p, unsigned max_e) {
                                  auto fv = f.prime_power_values(p, max_e);
                                  auto gv = g.prime_power_values(p, max_e);
                                  std::vector<Integer> out(max_e + 1);
                                  for (unsigned e = 0; e <= max_e; ++e)
                                    for (unsigned i = 0; i <= e; ++i) out[e] += fv[i] * gv[e - i];
                                  return out;
                                });
}

inline MultiplicativeFunction dirichlet_inverse(const MultiplicativeFunction& f) {
  if (f.unit_value() != 1)
    throw DomainError("dirichlet_inverse: " + f.name() + "(1) = " + f.unit_value().str() +
                      ", expected 1");
  return MultiplicativeFunction("inv(" + f.name() + ")", [f](std::uint64_t p, unsigned max_e) {
    auto fv = f.prime_power_values(p, max_e);
    std::vector<Integer> out(max_e + 1);
    out[0] = 1;
    for (unsigned e = 1; e <= max_e; ++e) {
      Integer s = 0;
      for (unsigned i = 1; i <= e; ++i) s += fv[i] * out[e - i];
      out[e] = -s;
    }
    return out;
  });
}

/// b_r(p^e) = (-1)^e p^C(e,2) [r choose e]_p.
inline MultiplicativeFunction b_of(int r) {
  if (r < 1) throw DomainError("b_of: r must be >= 1, got " + std::to_string(r));
  return MultiplicativeFunction::from_rule("b_" + std::to_string(r), [r](std::uint64_t p, unsigned e) {
    if (static_cast<int>(e) > r) return Integer(0);
    return sign_power(e) * ipow(Integer(p), e * (e - 1) / 2) * gaussian_binomial(r, static_cast<int>(e), p);
  });
}

/// c_r = a * b_r.
inline MultiplicativeFunction c_of(int r) {
  if (r < 1) throw DomainError("c_of: r must be >= 1, got " + std::to_string(r));
  auto c = dirichlet_convolve(alternating_sign(), b_of(r));
  return MultiplicativeFunction("c_" + std::to_string(r),
                                [c](std::uint64_t p, unsigned max_e) { return c.prime_power_values(p, max_e); });
}

/// Looks up a named function: moebius, one, delta, a, id (with parameter k).
inline MultiplicativeFunction named_function(std::string_view name, unsigned k = 0) {
  if (name == "moebius" || name == "mu") return moebius();
  if (name == "one") return one();
  if (name == "delta") return delta();
  if (name == "a") return alternating_sign();
  if (name == "id" || name == "id_k") return id_k(k);
  throw UsageError("named_function: unknown function '" + std::string(name) + "'");
}

/// Closed form of the r-th reduced equivariant Euler characteristic of the
/// proper part of the partition lattice of an n-set under the symmetric group.
inline Integer chi_tilde_closed(int r, std::int64_t n) {
  if (n < 2) throw DomainError("chi_tilde_closed: n must be >= 2, got " + std::to_string(n));
  return exact_div(c_of(r)(n), Integer(n), "chi_tilde_closed");
}

}  // namespace eqchi::arith
