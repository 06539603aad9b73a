#include <gtest/gtest.h>

#include <cmath>

#include "lzero/charsums.hpp"
#include "lzero/errors.hpp"

using namespace lzero;

namespace {

DirichletCharacter chi(i64 q, i64 n) { return character_from_label({q, n}); }

}  // namespace

TEST(CharSums, Examples) {
  EXPECT_EQ(char_sum(chi(4, 3), 0, 3), std::complex<double>(0, 0));
  EXPECT_EQ(char_sum(chi(4, 3), 0, 1), std::complex<double>(1, 0));
  EXPECT_THROW(char_sum(chi(4, 3), 0, 0.5), RejectedInput);
  // N and H real: the sum runs over N < n <= N + H
  EXPECT_EQ(char_sum(chi(4, 3), 0.5, 2.7), std::complex<double>(0, 0));  // n = 1, 2, 3
  EXPECT_EQ(char_sum(chi(4, 3), 0.5, 2.4), std::complex<double>(1, 0));  // n = 1, 2
}

TEST(CharSums, CompletePeriodsVanish) {
  for (i64 q = 3; q <= 40; ++q)
    for (const auto& c : enumerate_characters(q)) {
      if (c.is_principal()) continue;
      for (double N : {0.0, 7.0, 123.0, -40.0}) EXPECT_LT(std::abs(char_sum(c, N, double(q))), 1e-12);
    }
}

TEST(CharSums, TrivialBoundAndDirectSum) {
  for (i64 q = 3; q <= 30; ++q)
    for (const auto& c : enumerate_characters(q))
      for (double H : {1.0, 2.5, 7.0, 40.0, 333.0}) {
        EXPECT_LE(std::abs(char_sum(c, 3, H)), H + 1e-12);
        // a fractional N can fit floor(H) + 1 integers
        const auto s = char_sum(c, 3.5, H);
        EXPECT_LE(std::abs(s), std::floor(H) + 1 + 1e-12);
        std::complex<double> direct = 0;
        for (i64 n = 4; n <= static_cast<i64>(std::floor(3.5 + H)); ++n) direct += c.value(n);
        EXPECT_LT(std::abs(s - direct), 1e-9);
      }
}

TEST(CharSums, BurgessRhs) {
  BurgessParams p;
  p.r = 2;
  p.eps = 0;
  EXPECT_NEAR(burgess_rhs(16, 4, p), 2 * std::pow(16.0, 0.1875), 1e-12);
  EXPECT_NEAR(burgess_rhs(16, 4, p), 3.363, 1e-3);
  // r = 3, eps = (theta - 1/3)/4, H = c3 q^theta: exponent of q is theta - (theta - 1/3)/12
  const double theta = 0.4, c3 = 2;
  BurgessParams g;
  g.eps = burgess_eps_general(theta);
  for (i64 q : {101, 1009}) {
    const double H = c3 * std::pow(double(q), theta);
    const double expect = std::pow(c3, 2.0 / 3) * std::pow(double(q), theta - (theta - 1.0 / 3) / 12);
    EXPECT_NEAR(burgess_rhs(q, H, g), expect, 1e-9 * expect);
  }
  BurgessParams bad;
  bad.r = 4;
  EXPECT_THROW(burgess_rhs(16, 4, bad), RejectedInput);
  bad.cubefree = true;
  EXPECT_THROW(burgess_rhs(16, 4, bad), RejectedInput);
  EXPECT_NO_THROW(burgess_rhs(15, 4, bad));
}

TEST(CharSums, CubefreeExponent) {
  for (double theta : {0.26, 0.3, 0.35, 0.5}) {
    const int r = burgess_min_r_cubefree(theta);
    EXPECT_GT(burgess_eps_cubefree(theta, r), 0);
    EXPECT_LE(burgess_eps_cubefree(theta, r - 1), 0);
    EXPECT_GT(r, 2 / (theta - 0.25));
  }
  EXPECT_THROW(burgess_min_r_cubefree(0.25), RejectedInput);
}

TEST(CharSums, BurgessRatiosBounded) {
  BurgessParams p;
  p.eps = burgess_eps_general(0.4);
  double worst = 0;
  for (i64 q = 3; q <= 50; ++q)
    for (const auto& c : enumerate_primitive(q)) {
      const double H = std::ceil(std::pow(double(q), 0.4));
      worst = std::max(worst, char_sum_report(c, 0, H, p).ratio);
    }
  // recorded constant for this scan (observed maximum 1.0634)
  EXPECT_LT(worst, 1.1);
  EXPECT_GT(worst, 0.1);
}

TEST(CharSums, WitnessExamples) {
  const auto w = find_witness_prime(chi(3, 2), 0.4, 2, 2 * std::log(3.0) * std::log(3.0));
  ASSERT_TRUE(w.found);
  EXPECT_EQ(w.p0, 2);
  EXPECT_NEAR(w.distance, 2, 1e-15);
  // order-6 character mod 7 built on the primitive root 3
  const auto c = chi(7, 3);
  EXPECT_EQ(c.order(), 6);
  const auto w7 = find_witness_prime(c, 0.4, 2, 1);
  ASSERT_TRUE(w7.found);
  EXPECT_EQ(w7.p0, 2);
  EXPECT_THROW(find_witness_prime(chi(7, 1), 0.4, 2, 1), RejectedInput);
  const auto none = find_witness_prime(chi(7, 3), 0.4, 0.1, 1);
  EXPECT_FALSE(none.found);
}

TEST(CharSums, WitnessSkipsDivisorsWhenAsked) {
  // chi mod 6 vanishes at 2 and 3; with coprime_only the first candidate is 5
  const auto c = chi(6, 5);
  const auto any = find_witness_prime(c, 0.4, 2, 1);
  ASSERT_TRUE(any.found);
  EXPECT_EQ(any.p0, 2);
  const auto coprime = find_witness_prime(c, 0.4, 5, 1, true);
  ASSERT_TRUE(coprime.found);
  EXPECT_EQ(coprime.p0, 5);
}

TEST(CharSums, QuadraticWitnessDistanceIsTwo) {
  for (i64 q = 3; q <= 50; ++q)
    for (const auto& c : enumerate_characters(q)) {
      if (c.order() != 2) continue;
      const auto w = find_witness_prime(c, 0.4, 2, 1, true);
      if (w.found) EXPECT_NEAR(w.distance, 2, 1e-15) << c.label().str();
    }
}

TEST(CharSums, WitnessMonotone) {
  for (i64 q = 3; q <= 40; ++q)
    for (const auto& c : enumerate_characters(q)) {
      if (c.is_principal()) continue;
      const auto base = find_witness_prime(c, 0.4, 1.2, 1);
      if (!base.found) continue;
      const auto wider = find_witness_prime(c, 0.4, 3, 1);
      ASSERT_TRUE(wider.found);
      EXPECT_LE(wider.p0, base.p0);
      const auto looser = find_witness_prime(c, 0.4, 1.2, 0.5);
      ASSERT_TRUE(looser.found);
      EXPECT_LE(looser.p0, base.p0);
    }
}

TEST(CharSums, Lemma3Scan) {
  const auto table = scan_lemma3(3, 50, 0.4, 2, 1);
  EXPECT_EQ(table.missing, 0);
  std::size_t expected = 0;
  for (i64 q = 3; q <= 50; ++q) expected += static_cast<std::size_t>(euler_phi(q) - 1);
  EXPECT_EQ(table.rows.size(), expected);
  for (const auto& row : table.rows) {
    ASSERT_TRUE(row.witness.found);
    EXPECT_TRUE(is_prime(row.witness.p0));
    EXPECT_LE(row.witness.p0, row.witness.bound);
  }
  EXPECT_TRUE(scan_lemma3(10, 5, 0.4, 2, 1).rows.empty());
  EXPECT_TRUE(scan_lemma3(1, 2, 0.4, 2, 1).rows.empty());
  const auto cubefree = scan_lemma3(3, 20, 0.3, 2, 1, true);
  for (const auto& row : cubefree.rows) EXPECT_TRUE(is_cubefree(row.label.modulus));
}
