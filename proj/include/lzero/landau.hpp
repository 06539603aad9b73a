#pragma once

// Sums of x^rho over zeros in a height window against the main term
// -((T2 - T1) / 2 pi) Lambda(x) chi(x) 1_Z(x) and the error scale
//   E = x log x loglog 2x + x log x min{T2 / x, 1 / <x>} + x loglog 2x log(2 q T2),
// where <x> is the distance from x to the nearest prime power other than x.

#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "lzero/arith.hpp"
#include "lzero/cache.hpp"
#include "lzero/characters.hpp"
#include "lzero/rational.hpp"
#include "lzero/zeros.hpp"

namespace lzero {

/// An exact rational x >= 2. Floats never enter: 1_Z(x) and <x> are
/// discontinuous in x.
class ExactX {
 public:
  explicit ExactX(Rational x);
  static ExactX parse(std::string_view text) { return ExactX(Rational::parse(text)); }

  const Rational& value() const { return x_; }
  bool is_integer() const { return x_.is_integer(); }
  /// p^k = x, when x is an integer prime power.
  std::optional<PrimePower> prime_power() const;
  double log() const { return x_.log(); }
  double to_double() const { return x_.to_double(); }
  std::string str() const { return x_.str(); }

 private:
  Rational x_;
};

/// log p when x = p^k exactly, else 0.
double von_mangoldt(const ExactX& x);

/// <x>: min |x - p^k| over prime powers p^k != x, exactly.
Rational prime_power_gap(const ExactX& x);

std::complex<double> main_term(const DirichletCharacter& chi, const ExactX& x, double t1, double t2);

/// E(x, q, T2). RejectedInput when T2 <= 1.
double error_budget(const ExactX& x, i64 q, double t2);

struct LandauSum {
  std::complex<double> value;
  int zeros_used = 0;
  bool certified = false;
};

/// sum over the list of multiplicity * x^beta * e^{i gamma log x}, with
/// compensated accumulation.
LandauSum landau_sum(const ZeroList& list, const ExactX& x);

struct GonekSides {
  /// Truncated sum plus the bound on its tail.
  double lhs = 0;
  double rhs = 0;
  double ratio = 0;
  double tail_bound = 0;
  double abscissa = 0;
};

/// Both sides of the bound
///   sum_{n >= 2, n != x} Lambda(n) n^{-c} min{T, 1/|log(x/n)|}
///     << log x loglog 2x + log x min{T/x, 1/<x>},   c = 1 + 1/log x,
/// without the implied constant.
GonekSides gonek_lemma_sides(const ExactX& x, double T, std::int64_t cutoff = 1'000'000);

struct LandauReport {
  CharacterLabel label;
  std::string x;
  double t1 = 0;
  double t2 = 0;
  std::complex<double> zero_sum;
  std::complex<double> main;
  double error_budget = 0;
  double observed_error = 0;
  double ratio = 0;
  int zeros_used = 0;
  bool certified = false;
};

/// Assembles a report from a zero list already covering (t1, t2).
LandauReport landau_report(const DirichletCharacter& chi, const ExactX& x, const ZeroList& zeros);

/// Full pipeline: zeros in (t1, t2) (through the cache when given), S, M, E
/// and the ratio |S - M| / E. Requires chi primitive and t2 > t1 >= 1. For
/// q = 1 this checks Landau's formula over zeta zeros.
LandauReport verify_thm2(const DirichletCharacter& chi, const ExactX& x, double t1, double t2,
                         const ZeroSettings& settings = {}, const ZeroCache* cache = nullptr);

}  // namespace lzero
