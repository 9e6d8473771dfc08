#include <catch2/catch_amalgamated.hpp>

#include "eqchi/arith.hpp"
#include "oracles.hpp"

using namespace eqchi;
using namespace eqchi::arith;

TEST_CASE("factorize and reconstruct", "[arith]") {
  CHECK(factorize(1).empty());
  auto f = factorize(360);
  REQUIRE(f.size() == 3);
  CHECK(f[0].prime == 2);
  CHECK(f[0].exponent == 3);
  CHECK(f[2].prime == 5);
  for (std::int64_t n = 1; n <= 500; ++n) CHECK(reconstruct(factorize(n)) == static_cast<std::uint64_t>(n));
  CHECK_THROWS_AS(factorize(0), DomainError);
  CHECK_THROWS_AS(factorize(-4), DomainError);
}

TEST_CASE("named functions match their definitions", "[arith]") {
  for (std::int64_t n = 1; n <= 120; ++n) {
    CHECK(moebius()(n) == oracle::moebius(n));
    CHECK(one()(n) == 1);
    CHECK(delta()(n) == (n == 1 ? 1 : 0));
    CHECK(id_k(2)(n) == Integer(n * n));
    CHECK(alternating_sign()(n) == (n % 2 ? 1 : -1));
  }
  CHECK(named_function("id", 3)(5) == 125);
  CHECK_THROWS_AS(named_function("sigma"), UsageError);
}

TEST_CASE("Dirichlet convolution agrees with the divisor sum", "[arith][property]") {
  const std::vector<MultiplicativeFunction> fs{moebius(), one(), id_k(1), alternating_sign(), b_of(2), b_of(3)};
  for (const auto& f : fs)
    for (const auto& g : fs) {
      auto h = dirichlet_convolve(f, g);
      for (std::int64_t n = 1; n <= 96; ++n) CHECK(h(n) == oracle::divisor_convolution(f, g, n));
    }
}

TEST_CASE("convolution is commutative and associative", "[arith][property]") {
  auto f = b_of(2), g = alternating_sign(), h = id_k(1);
  auto fg_h = dirichlet_convolve(dirichlet_convolve(f, g), h);
  auto f_gh = dirichlet_convolve(f, dirichlet_convolve(g, h));
  auto gf = dirichlet_convolve(g, f);
  for (std::int64_t n = 1; n <= 200; ++n) {
    CHECK(fg_h(n) == f_gh(n));
    CHECK(dirichlet_convolve(f, g)(n) == gf(n));
  }
}

TEST_CASE("Dirichlet inverse", "[arith][property]") {
  auto inv_one = dirichlet_inverse(one());
  auto mu_inv = dirichlet_inverse(moebius());
  for (std::int64_t n = 1; n <= 150; ++n) {
    CHECK(inv_one(n) == moebius()(n));
    CHECK(mu_inv(n) == 1);
  }
  for (int r = 1; r <= 4; ++r) {
    auto f = b_of(r);
    auto id = dirichlet_convolve(f, dirichlet_inverse(f));
    for (std::int64_t n = 1; n <= 100; ++n) CHECK(id(n) == (n == 1 ? 1 : 0));
  }
  auto zero_at_one = MultiplicativeFunction::from_rule("z", [](std::uint64_t, unsigned) { return Integer(1); }, 0);
  CHECK_THROWS_AS(dirichlet_inverse(zero_at_one), DomainError);
}

TEST_CASE("Gaussian binomials count subspaces", "[arith]") {
  CHECK(gaussian_binomial(2, 1, 2) == 3);
  CHECK(gaussian_binomial(3, 1, 2) == 7);
  CHECK(gaussian_binomial(4, 2, 2) == 35);
  CHECK(gaussian_binomial(3, 4, 3) == 0);
  CHECK(gaussian_binomial(0, 0, 5) == 1);
  for (int p : {2, 3})
    for (int r = 0; r <= (p == 2 ? 4 : 3); ++r)
      for (int d = 0; d <= r; ++d) CHECK(gaussian_binomial(r, d, p) == oracle::subspace_count(r, d, p));
  CHECK_THROWS_AS(gaussian_binomial(3, 1, 4), DomainError);
  CHECK_THROWS_AS(gaussian_binomial(-1, 0, 2), DomainError);
}

TEST_CASE("general linear orders", "[arith]") {
  CHECK(general_linear_order(1, 5) == 4);
  CHECK(general_linear_order(2, 2) == 6);
  CHECK(general_linear_order(3, 2) == 168);
  CHECK(general_linear_order(2, 3) == 48);
  for (int d = 1; d <= 3; ++d) CHECK(general_linear_order(d, 2) == oracle::independent_tuples(d, d, 2));
}

TEST_CASE("b and c at small arguments", "[arith]") {
  CHECK(b_of(1)(2) == -1);
  CHECK(b_of(1)(4) == 0);
  CHECK(b_of(2)(4) == 2);
  CHECK(b_of(2)(2) == -3);
  CHECK(b_of(2)(6) == 12);
  CHECK(c_of(1)(2) == -2);
  CHECK(c_of(1)(3) == 0);
  CHECK_THROWS_AS(b_of(0), DomainError);
  CHECK_THROWS_AS(c_of(-1), DomainError);
  for (int r = 1; r <= 4; ++r) {
    auto b = b_of(r), c = c_of(r);
    for (std::int64_t n = 1; n <= 120; ++n)
      CHECK(c(n) == oracle::divisor_convolution(alternating_sign(), b, n));
  }
}

TEST_CASE("the closed form reproduces the tabulated values", "[arith]") {
  const std::vector<std::vector<std::int64_t>> rows{
      {-2, -1, 1, -1, 2, -1, 0, 0, 2, -1, -1, -1, 2, 1},
      {-4, -4, 5, -6, 16, -8, -2, 3, 24, -12, -20, -14, 32, 24},
      {-8, -13, 21, -31, 104, -57, -22, 39, 248, -133, -273, -183, 456, 403},
      {-16, -40, 85, -156, 640, -400, -190, 390, 2496, -1464, -3400, -2380, 6400, 6240},
  };
  for (int r = 2; r <= 5; ++r)
    for (std::int64_t n = 2; n <= 15; ++n) {
      CAPTURE(r, n);
      CHECK(chi_tilde_closed(r, n) == rows[r - 2][n - 2]);
    }
  CHECK_THROWS_AS(chi_tilde_closed(2, 1), DomainError);
}

TEST_CASE("c_1 gives the index-one row", "[arith]") {
  CHECK(chi_tilde_closed(1, 2) == -1);
  for (std::int64_t n = 3; n <= 30; ++n) CHECK(chi_tilde_closed(1, n) == 0);
}

TEST_CASE("exact division rejects remainders", "[arith]") {
  CHECK(exact_div(12, 4, "t") == 3);
  CHECK_THROWS_AS(exact_div(13, 4, "t"), ConsistencyError);
}
