#include "lzero/arith.hpp"

#include <cmath>
#include <numeric>

#include "lzero/errors.hpp"

namespace lzero {

i64 gcd(i64 a, i64 b) { return std::gcd(a, b); }

i64 lcm(i64 a, i64 b) { return std::lcm(a, b); }

i64 mod(i64 a, i64 m) {
  i64 r = a % m;
  return r < 0 ? r + m : r;
}

i64 mul_mod(i64 a, i64 b, i64 m) {
  return static_cast<i64>(static_cast<__int128>(mod(a, m)) * mod(b, m) % m);
}

i64 pow_mod(i64 base, i64 exp, i64 m) {
  if (m == 1) return 0;
  i64 result = 1;
  base = mod(base, m);
  while (exp > 0) {
    if (exp & 1) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1;
  }
  return result;
}

i64 inv_mod(i64 a, i64 m) {
  i64 old_r = mod(a, m), r = m;
  i64 old_s = 1, s = 0;
  while (r != 0) {
    const i64 quot = old_r / r;
    old_r -= quot * r;
    std::swap(old_r, r);
    old_s -= quot * s;
    std::swap(old_s, s);
  }
  if (old_r != 1 && m != 1) throw RejectedInput("inv_mod: argument not invertible");
  return mod(old_s, m);
}

bool is_prime(i64 n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (i64 d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

std::vector<PrimePower> factor(i64 n) {
  std::vector<PrimePower> out;
  for (i64 d = 2; d * d <= n; ++d) {
    if (n % d != 0) continue;
    int e = 0;
    while (n % d == 0) {
      n /= d;
      ++e;
    }
    out.push_back({d, e});
  }
  if (n > 1) out.push_back({n, 1});
  return out;
}

i64 euler_phi(i64 n) {
  i64 phi = n;
  for (const auto& [p, e] : factor(n)) phi = phi / p * (p - 1);
  return phi;
}

bool is_cubefree(i64 n) {
  for (const auto& f : factor(n))
    if (f.exponent >= 3) return false;
  return true;
}

std::optional<PrimePower> as_prime_power(i64 n) {
  if (n < 2) return std::nullopt;
  auto f = factor(n);
  if (f.size() != 1) return std::nullopt;
  return f.front();
}

i64 smallest_primitive_root(i64 p) {
  if (p == 2) return 1;
  const auto divisors = factor(p - 1);
  const i64 p2 = p * p;
  for (i64 g = 2; g < p; ++g) {
    bool generates = true;
    for (const auto& [r, e] : divisors) {
      if (pow_mod(g, (p - 1) / r, p) == 1) {
        generates = false;
        break;
      }
    }
    if (generates && pow_mod(g, p - 1, p2) != 1) return g;
  }
  throw RejectedInput("no primitive root found");
}

std::vector<i64> primes_up_to(i64 limit) {
  std::vector<i64> primes;
  if (limit < 2) return primes;
  std::vector<bool> composite(static_cast<std::size_t>(limit) + 1, false);
  for (i64 i = 2; i <= limit; ++i) {
    if (composite[i]) continue;
    primes.push_back(i);
    for (i64 j = i * i; j <= limit; j += i) composite[j] = true;
  }
  return primes;
}

std::vector<double> von_mangoldt_table(i64 limit) {
  std::vector<double> table(static_cast<std::size_t>(std::max<i64>(limit, 1)) + 1, 0.0);
  for (i64 p : primes_up_to(limit)) {
    const double lp = std::log(static_cast<double>(p));
    for (i64 pk = p; pk <= limit; pk *= p) {
      table[pk] = lp;
      if (pk > limit / p) break;
    }
  }
  return table;
}

}  // namespace lzero
