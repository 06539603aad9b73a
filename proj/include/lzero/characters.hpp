#pragma once

// Dirichlet characters with Conrey labels and exact values.
//
// A character value is stored as an exponent k of e(k / order), where
// e(x) = exp(2 pi i x), or as "zero" when gcd(m, q) > 1. The complex
// embedding is taken only at evaluation boundaries.

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <string>
#include <vector>

#include "lzero/arith.hpp"

namespace lzero {

/// Conrey label (q, n): modulus q >= 1 and index n in [1, q] coprime to q.
struct CharacterLabel {
  i64 modulus = 1;
  i64 index = 1;

  /// "q.n", the usual database spelling.
  std::string str() const;
  static CharacterLabel parse(const std::string& text);
  friend bool operator==(const CharacterLabel&, const CharacterLabel&) = default;
  friend auto operator<=>(const CharacterLabel&, const CharacterLabel&) = default;
};

/// e(k / order), or zero.
struct CharValue {
  bool zero = true;
  i64 num = 0;
  i64 den = 1;

  bool is_one() const { return !zero && num == 0; }

  template <class Real = double>
  std::complex<Real> embed() const {
    if (zero) return {0, 0};
    return unit_root<Real>(num, den);
  }

  /// e(num/den) with the exact values at multiples of 1/4 and 1/2 pinned.
  template <class Real = double>
  static std::complex<Real> unit_root(i64 num, i64 den) {
    num = mod(num, den);
    if (num == 0) return {1, 0};
    if (2 * num == den) return {-1, 0};
    if (4 * num == den) return {0, 1};
    if (4 * num == 3 * den) return {0, -1};
    const long double angle = 2.0L * std::numbers::pi_v<long double> * static_cast<long double>(num) /
                              static_cast<long double>(den);
    return {static_cast<Real>(std::cos(angle)), static_cast<Real>(std::sin(angle))};
  }

  friend bool operator==(const CharValue& a, const CharValue& b) {
    if (a.zero || b.zero) return a.zero == b.zero;
    return a.num * b.den == b.num * a.den;
  }
  friend CharValue operator*(const CharValue& a, const CharValue& b);
};

class DirichletCharacter {
 public:
  /// Builds the character with Conrey label `label`; throws RejectedInput
  /// when q < 1 or gcd(n, q) != 1.
  explicit DirichletCharacter(CharacterLabel label);

  const CharacterLabel& label() const { return label_; }
  i64 modulus() const { return label_.modulus; }
  i64 conductor() const { return conductor_; }
  i64 order() const { return order_; }
  /// kappa: 0 for even characters, 1 for odd ones.
  int parity() const { return parity_; }
  bool is_primitive() const { return conductor_ == label_.modulus; }
  bool is_principal() const { return order_ == 1; }

  /// Exponent k with chi(m) = e(k / order), or -1 when gcd(m, q) > 1.
  i64 exponent(i64 m) const { return exponents_[static_cast<std::size_t>(mod(m, label_.modulus))]; }

  CharValue operator()(i64 m) const {
    const i64 k = exponent(m);
    if (k < 0) return {};
    return {false, k, order_};
  }

  template <class Real = double>
  std::complex<Real> value(i64 m) const {
    const i64 k = exponent(m);
    if (k < 0) return {0, 0};
    return CharValue::unit_root<Real>(k, order_);
  }

  /// The complex conjugate character (label (q, n^{-1} mod q)).
  DirichletCharacter conj() const;

  friend bool operator==(const DirichletCharacter& a, const DirichletCharacter& b) {
    return a.label_ == b.label_;
  }

 private:
  CharacterLabel label_;
  i64 conductor_ = 1;
  i64 order_ = 1;
  int parity_ = 0;
  std::vector<i64> exponents_;
};

DirichletCharacter character_from_label(CharacterLabel label);
/// All phi(q) characters mod q, ordered by Conrey index.
std::vector<DirichletCharacter> enumerate_characters(i64 q);
/// The primitive characters mod q, ordered by Conrey index.
std::vector<DirichletCharacter> enumerate_primitive(i64 q);

CharValue eval_char(const DirichletCharacter& chi, i64 m);
i64 conductor(const DirichletCharacter& chi);

/// n -> chi1(n) conj(chi2(n)); throws RejectedInput on mismatched moduli.
DirichletCharacter mul_conj(const DirichletCharacter& chi1, const DirichletCharacter& chi2);

}  // namespace lzero
