#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <set>
#include <random>

#include "lzero/characters.hpp"
#include "lzero/errors.hpp"

using namespace lzero;

namespace {

// smallest f | q such that chi(a) = 1 whenever a = 1 mod f and gcd(a, q) = 1
i64 brute_conductor(const DirichletCharacter& chi) {
  const i64 q = chi.modulus();
  for (i64 f = 1; f <= q; ++f) {
    if (q % f) continue;
    bool induced = true;
    for (i64 a = 1; a <= q && induced; ++a)
      if (gcd(a, q) == 1 && a % f == 1 % f && !chi(a).is_one()) induced = false;
    if (induced) return f;
  }
  return q;
}

CharValue mul(const CharValue& a, const CharValue& b) { return a * b; }

}  // namespace

TEST(Characters, LabelExamples) {
  const auto chi = character_from_label({4, 3});
  EXPECT_EQ(chi.parity(), 1);
  EXPECT_EQ(chi.order(), 2);
  EXPECT_TRUE(chi.is_primitive());
  EXPECT_EQ(eval_char(chi, 3).embed(), std::complex<double>(-1, 0));
  EXPECT_TRUE(eval_char(chi, 2).zero);

  const auto principal = character_from_label({9, 1});
  EXPECT_TRUE(principal.is_principal());
  EXPECT_EQ(principal.parity(), 0);
  EXPECT_EQ(conductor(principal), 1);

  const auto c52 = character_from_label({5, 2});
  EXPECT_EQ(c52.order(), 4);
  EXPECT_EQ(c52.value(2), std::complex<double>(0, 1));
  EXPECT_EQ(c52.value(4), std::complex<double>(-1, 0));

  // the only nonprincipal character mod 6 comes from mod 3
  const auto c65 = character_from_label({6, 5});
  EXPECT_EQ(conductor(c65), 3);
  EXPECT_FALSE(c65.is_primitive());
}

TEST(Characters, LabelParsing) {
  EXPECT_EQ(CharacterLabel::parse("11.2"), (CharacterLabel{11, 2}));
  EXPECT_EQ((CharacterLabel{8, 5}).str(), "8.5");
  EXPECT_THROW(CharacterLabel::parse("8"), RejectedInput);
  EXPECT_THROW(CharacterLabel::parse("8.x"), RejectedInput);
  EXPECT_THROW(character_from_label({6, 3}), RejectedInput);
  EXPECT_THROW(character_from_label({0, 1}), RejectedInput);
  EXPECT_THROW(character_from_label({5, 7}), RejectedInput);
}

TEST(Characters, Enumeration) {
  EXPECT_EQ(enumerate_primitive(4).size(), 1u);
  EXPECT_EQ(enumerate_primitive(4)[0].label(), (CharacterLabel{4, 3}));
  EXPECT_EQ(enumerate_primitive(1).size(), 1u);
  EXPECT_EQ(enumerate_primitive(8).size(), 2u);
  EXPECT_EQ(enumerate_primitive(2).size(), 0u);
  for (i64 q = 1; q <= 50; ++q) EXPECT_EQ(static_cast<i64>(enumerate_characters(q).size()), euler_phi(q));
}

TEST(Characters, ConductorMatchesBruteForce) {
  for (i64 q = 1; q <= 50; ++q) {
    std::size_t primitive = 0;
    for (const auto& chi : enumerate_characters(q)) {
      const i64 f = brute_conductor(chi);
      EXPECT_EQ(chi.conductor(), f) << chi.label().str();
      primitive += f == q;
    }
    EXPECT_EQ(enumerate_primitive(q).size(), primitive) << q;
  }
}

TEST(Characters, GroupStructureOfLabels) {
  // Conrey labels satisfy chi_a chi_b = chi_ab and chi_a(b) = chi_b(a)
  for (i64 q = 1; q <= 50; ++q) {
    const auto chars = enumerate_characters(q);
    std::map<i64, const DirichletCharacter*> by_index;
    for (const auto& c : chars) by_index[c.label().index] = &c;
    for (const auto& a : chars)
      for (const auto& b : chars) {
        const i64 ia = a.label().index % q, ib = b.label().index % q;
        EXPECT_EQ(a(ib), b(ia)) << q;
        const auto& ab = *by_index.at(q == 1 ? 1 : mul_mod(ia, ib, q) == 0 ? q : mul_mod(ia, ib, q));
        for (i64 m = 0; m < q; ++m) ASSERT_EQ(mul(a(m), b(m)), ab(m)) << q;
      }
  }
}

TEST(Characters, DistinctTables) {
  for (i64 q = 2; q <= 50; ++q) {
    std::set<std::vector<i64>> tables;
    for (const auto& c : enumerate_characters(q)) {
      std::vector<i64> t;
      for (i64 m = 0; m < q; ++m) t.push_back(c(m).zero ? -1 : c(m).num * (1'000'000 / c(m).den));
      tables.insert(t);
    }
    EXPECT_EQ(static_cast<i64>(tables.size()), euler_phi(q));
  }
}

TEST(Characters, Multiplicativity) {
  std::mt19937_64 rng(7);
  for (i64 q = 1; q <= 50; ++q)
    for (const auto& chi : enumerate_characters(q))
      for (int k = 0; k < 40; ++k) {
        const i64 m = static_cast<i64>(rng() % 10'000), n = static_cast<i64>(rng() % 10'000);
        ASSERT_EQ(chi(m * n), chi(m) * chi(n)) << chi.label().str();
      }
}

TEST(Characters, OrthogonalityExact) {
  for (i64 q = 1; q <= 50; ++q)
    for (const auto& chi : enumerate_characters(q)) {
      std::vector<i64> counts(static_cast<std::size_t>(chi.order()), 0);
      for (i64 a = 1; a <= q; ++a)
        if (chi.exponent(a) >= 0) ++counts[static_cast<std::size_t>(chi.exponent(a))];
      // every order-th root of unity is hit equally often, so the sum is
      // exactly zero once order > 1
      EXPECT_TRUE(std::all_of(counts.begin(), counts.end(), [&](i64 c) { return c == counts[0] && c > 0; }));
      EXPECT_EQ(chi.order() > 1, !chi.is_principal());
    }
}

TEST(Characters, ParityAndZeroSet) {
  for (i64 q = 1; q <= 50; ++q)
    for (const auto& chi : enumerate_characters(q)) {
      const auto minus_one = chi(-1);
      if (q > 1) EXPECT_EQ(minus_one.embed(), std::complex<double>(chi.parity() ? -1 : 1, 0));
      for (i64 m = 0; m < 2 * q; ++m) EXPECT_EQ(chi(m).zero, gcd(m, q) != 1);
      for (i64 m = 1; m < q; ++m)
        if (!chi(m).zero) EXPECT_EQ(chi.order() % chi(m).den, 0);
    }
}

TEST(Characters, MulConj) {
  const auto c52 = character_from_label({5, 2}), c53 = character_from_label({5, 3});
  EXPECT_TRUE(mul_conj(c52, c52).is_principal());
  const auto prod = mul_conj(c52, c53);
  EXPECT_FALSE(prod.is_principal());
  for (i64 m = 0; m < 5; ++m) {
    const auto expect = c52.value(m) * std::conj(c53.value(m));
    EXPECT_NEAR(std::abs(prod.value(m) - expect), 0, 1e-15);
  }
  EXPECT_EQ(mul_conj(character_from_label({4, 3}), character_from_label({4, 1})).label(), (CharacterLabel{4, 3}));
  EXPECT_THROW(mul_conj(c52, character_from_label({4, 3})), RejectedInput);
  for (i64 q = 3; q <= 30; ++q)
    for (const auto& a : enumerate_characters(q))
      for (const auto& b : enumerate_characters(q)) EXPECT_EQ(mul_conj(a, b).is_principal(), a == b);
}

TEST(Characters, Conjugate) {
  for (i64 q = 1; q <= 30; ++q)
    for (const auto& chi : enumerate_characters(q)) {
      const auto c = chi.conj();
      for (i64 m = 0; m < q; ++m) {
        const CharValue expect = chi(m).zero ? CharValue{} : CharValue{false, 0, 1};
        EXPECT_EQ(chi(m) * c(m), expect);
      }
    }
}
