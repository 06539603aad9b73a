#include <gtest/gtest.h>

#include <cmath>

#include "lzero/arith.hpp"
#include "lzero/errors.hpp"
#include "lzero/rational.hpp"

using namespace lzero;

TEST(Arith, Basics) {
  EXPECT_EQ(gcd(12, 18), 6);
  EXPECT_EQ(lcm(4, 6), 12);
  EXPECT_EQ(mod(-3, 5), 2);
  EXPECT_EQ(pow_mod(3, 200, 1'000'000'007), pow_mod(9, 100, 1'000'000'007));
  EXPECT_EQ(mul_mod(inv_mod(7, 40), 7, 40), 1);
  EXPECT_THROW(inv_mod(6, 9), RejectedInput);
}

TEST(Arith, PrimesAgainstTrialDivision) {
  const auto primes = primes_up_to(2000);
  std::size_t k = 0;
  for (i64 n = 2; n <= 2000; ++n) {
    bool p = true;
    for (i64 d = 2; d * d <= n; ++d)
      if (n % d == 0) p = false;
    EXPECT_EQ(is_prime(n), p) << n;
    if (p) EXPECT_EQ(primes.at(k++), n);
  }
  EXPECT_EQ(k, primes.size());
}

TEST(Arith, FactorPhiCubefree) {
  for (i64 n = 1; n <= 500; ++n) {
    i64 prod = 1;
    bool cubefree = true;
    for (auto [p, e] : factor(n)) {
      for (int i = 0; i < e; ++i) prod *= p;
      if (e >= 3) cubefree = false;
    }
    EXPECT_EQ(prod, n);
    EXPECT_EQ(is_cubefree(n), cubefree);
    i64 phi = 0;
    for (i64 a = 1; a <= n; ++a) phi += gcd(a, n) == 1;
    EXPECT_EQ(euler_phi(n), phi);
  }
}

TEST(Arith, PrimitiveRoots) {
  EXPECT_EQ(smallest_primitive_root(3), 2);
  EXPECT_EQ(smallest_primitive_root(5), 2);
  EXPECT_EQ(smallest_primitive_root(7), 3);
  // 14 is a primitive root mod 29 but not mod 29^2; the smallest is 2 anyway
  for (i64 p : primes_up_to(200)) {
    if (p == 2) continue;
    const i64 g = smallest_primitive_root(p);
    const i64 p2 = p * p;
    i64 order = 1, x = g % p2;
    while (x != 1) {
      x = mul_mod(x, g, p2);
      ++order;
    }
    EXPECT_EQ(order, p * (p - 1)) << p;
  }
}

TEST(Arith, VonMangoldtTable) {
  const auto lam = von_mangoldt_table(100);
  EXPECT_NEAR(lam[8], std::log(2.0), 1e-15);
  EXPECT_EQ(lam[10], 0.0);
  EXPECT_NEAR(lam[97], std::log(97.0), 1e-15);
  EXPECT_EQ(lam[1], 0.0);
  EXPECT_TRUE(as_prime_power(81).has_value());
  EXPECT_EQ(as_prime_power(81)->prime, 3);
  EXPECT_FALSE(as_prime_power(12).has_value());
}

TEST(Rational, ParseForms) {
  EXPECT_EQ(Rational::parse("7"), Rational(7));
  EXPECT_EQ(Rational::parse("13/2"), Rational(13, 2));
  EXPECT_EQ(Rational::parse("2.5"), Rational(5, 2));
  EXPECT_EQ(Rational::parse("10/4"), Rational(5, 2));
  EXPECT_EQ(Rational::parse("0.125"), Rational(1, 8));
  EXPECT_THROW(Rational::parse("1e3"), RejectedInput);
  EXPECT_THROW(Rational::parse("abc"), RejectedInput);
  EXPECT_THROW(Rational::parse("1/0"), RejectedInput);
  EXPECT_THROW(Rational::parse(""), RejectedInput);
}

TEST(Rational, Arithmetic) {
  const Rational a(13, 2), b(7);
  EXPECT_EQ(abs(a - b), Rational(1, 2));
  EXPECT_EQ(a + b, Rational(27, 2));
  EXPECT_LT(a, b);
  EXPECT_EQ(a.floor(), 6);
  EXPECT_EQ(a.ceil(), 7);
  EXPECT_EQ(Rational(-13, 2).floor(), -7);
  EXPECT_EQ(a.str(), "13/2");
  EXPECT_EQ(b.str(), "7");
  EXPECT_NEAR(a.log(), std::log(6.5), 1e-15);
}
