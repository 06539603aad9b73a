#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace lzero {

/// Exact rational number p/q with q > 0 and gcd(p, q) = 1.
class Rational {
 public:
  constexpr Rational() = default;
  Rational(std::int64_t num, std::int64_t den = 1);

  /// Accepts "7", "-3", "13/2" and finite decimals like "2.5" or "0.125".
  /// Throws RejectedInput on anything else (exponents, inf, nan, ...).
  static Rational parse(std::string_view text);

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }
  bool is_integer() const { return den_ == 1; }

  std::int64_t floor() const;
  std::int64_t ceil() const;
  double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }
  /// log of the value computed as log(num) - log(den); requires a positive value.
  double log() const;

  std::string str() const;

  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational abs(const Rational& a);
  friend bool operator==(const Rational& a, const Rational& b) = default;
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

}  // namespace lzero
