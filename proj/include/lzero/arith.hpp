#pragma once

// Elementary integer arithmetic shared by the character, Landau and
// character-sum modules. Everything here is exact.

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace lzero {

using i64 = std::int64_t;

struct PrimePower {
  i64 prime = 0;
  int exponent = 0;
  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

i64 gcd(i64 a, i64 b);
i64 lcm(i64 a, i64 b);

/// Reduces `a` into [0, m).
i64 mod(i64 a, i64 m);
i64 mul_mod(i64 a, i64 b, i64 m);
i64 pow_mod(i64 base, i64 exp, i64 m);
/// Inverse of `a` modulo `m`; throws RejectedInput when gcd(a, m) != 1.
i64 inv_mod(i64 a, i64 m);

bool is_prime(i64 n);

/// Prime factorisation in increasing prime order. factor(1) is empty.
std::vector<PrimePower> factor(i64 n);

i64 euler_phi(i64 n);
bool is_cubefree(i64 n);

/// p and k with n = p^k (k >= 1), if n is a prime power.
std::optional<PrimePower> as_prime_power(i64 n);

/// Smallest g that generates (Z/p^2 Z)^*, hence (Z/p^e Z)^* for every e.
i64 smallest_primitive_root(i64 p);

/// Primes up to and including `limit`, increasing.
std::vector<i64> primes_up_to(i64 limit);

/// Table of the von Mangoldt function on [0, limit]; entry n is log p when
/// n = p^k and 0 otherwise.
std::vector<double> von_mangoldt_table(i64 limit);

}  // namespace lzero
