#pragma once

// Numerical evaluation of Dirichlet L-functions.
//
// L(s, chi) is continued to the whole plane through the Hurwitz
// decomposition L(s, chi) = q^{-s} sum_{a=1}^{q} chi(a) zeta(s, a/q), and
// each zeta(s, a) is evaluated by Euler-Maclaurin summation. All kernels
// are templated on the real scalar: `double` is the standard mode,
// `long double` the extended-precision verification mode.

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <string>

#include "lzero/characters.hpp"
#include "lzero/errors.hpp"
#include "lzero/special.hpp"
#include "lzero/summation.hpp"

namespace lzero {

enum class Precision { standard, extended };

struct EvalSettings {
  double target_accuracy = 1e-12;
  /// Euler-Maclaurin shift N; 0 means automatic (at least |s| + 10).
  int shift = 0;
  /// Number of Bernoulli correction terms.
  int bernoulli_terms = 20;
  Precision precision = Precision::standard;

  std::string fingerprint() const;
};

template <class Real>
struct Evaluated {
  std::complex<Real> value;
  /// Bound on the Euler-Maclaurin truncation error plus a rounding estimate.
  Real error = 0;
};

namespace detail {

// zeta(s, a) = regular + w^{1-s} / (s - 1) with w = N + a. Splitting the
// pole term out lets eval_L cancel it exactly for nonprincipal characters.
template <class Real>
struct HurwitzParts {
  std::complex<Real> regular;
  Real log_w = 0;
  Real error = 0;
};

// a = a_num / a_den in (0, 1].
template <class Real>
HurwitzParts<Real> hurwitz_parts(std::complex<Real> s, i64 a_num, i64 a_den, const EvalSettings& settings) {
  using C = std::complex<Real>;
  const Real eps = std::numeric_limits<Real>::epsilon();
  const int terms = std::max(settings.bernoulli_terms, 1);
  const Real log_den = std::log(static_cast<Real>(a_den));
  const Real sigma = s.real();
  if (!(sigma + 2 * terms + 1 > 0)) throw RejectedInput("hurwitz_zeta: Re(s) too negative for the requested terms");

  i64 shift = static_cast<i64>(std::ceil(std::abs(s))) + 10;
  shift = std::max<i64>(shift, settings.shift);
  for (int attempt = 0;; ++attempt) {
    CompensatedComplexSum<Real> head;
    Real magnitude = 0;
    for (i64 n = 0; n < shift; ++n) {
      const Real log_n = std::log(static_cast<Real>(n * a_den + a_num)) - log_den;
      const C term = std::exp(-s * log_n);
      head += term;
      magnitude += std::abs(term);
    }
    const Real log_w = std::log(static_cast<Real>(shift * a_den + a_num)) - log_den;
    const Real w = std::exp(log_w);
    const C w_pow_s = std::exp(-s * log_w);  // w^{-s}
    C tail = w_pow_s / Real(2);

    // B_{2k}/(2k)! (s)_{2k-1} w^{-s-2k+1}
    C rising = s;               // (s)_{2k-1}
    C w_pow = w_pow_s / w;      // w^{-s-2k+1}
    Real factorial = 2;         // (2k)!
    const Real inv_w2 = 1 / (w * w);
    C last{0, 0};
    for (int k = 1; k <= terms; ++k) {
      last = bernoulli_2k<Real>(k) / factorial * rising * w_pow;
      tail += last;
      rising *= (s + Real(2 * k - 1)) * (s + Real(2 * k));
      w_pow *= inv_w2;
      factorial *= static_cast<Real>((2 * k + 1) * (2 * k + 2));
    }
    // |R_M| <= |s + 2M + 1| / (sigma + 2M + 1) * |T_{M+1}|
    const Real next = std::abs(bernoulli_2k<Real>(terms + 1) / factorial * rising * w_pow);
    const Real trunc = next * std::abs(s + Real(2 * terms + 1)) / (sigma + Real(2 * terms + 1));
    const Real rounding = 8 * eps * (magnitude + std::abs(tail) + 1);

    const C value = head.value() + tail;
    if (trunc <= settings.target_accuracy * std::max(Real(1), std::abs(value)) || attempt >= 8)
      return {value, log_w, trunc + rounding};
    shift *= 2;
  }
}

// (e^z - 1) / z
template <class Real>
std::complex<Real> expm1_over(std::complex<Real> z) {
  if (std::abs(z) < Real(1e-3)) {
    return Real(1) + z * (Real(1) / 2 + z * (Real(1) / 6 + z * (Real(1) / 24 + z / Real(120))));
  }
  return (std::exp(z) - Real(1)) / z;
}

}  // namespace detail

/// zeta(s, a) for rational a = a_num / a_den in (0, 1]. Throws PoleError at s = 1.
template <class Real>
Evaluated<Real> hurwitz_zeta(std::complex<Real> s, i64 a_num, i64 a_den, const EvalSettings& settings = {}) {
  if (a_den <= 0 || a_num <= 0 || a_num > a_den) throw RejectedInput("hurwitz_zeta: a must lie in (0, 1]");
  if (s == std::complex<Real>(1, 0)) throw PoleError("hurwitz_zeta: pole at s = 1");
  const auto parts = detail::hurwitz_parts<Real>(s, a_num, a_den, settings);
  const std::complex<Real> one_minus_s = Real(1) - s;
  const std::complex<Real> pole = std::exp(one_minus_s * parts.log_w) / (s - Real(1));
  const Real eps = std::numeric_limits<Real>::epsilon();
  return {parts.regular + pole, parts.error + 8 * eps * std::abs(pole)};
}

/// L(s, chi) by analytic continuation. PoleError for principal chi at s = 1.
template <class Real>
Evaluated<Real> eval_L(const DirichletCharacter& chi, std::complex<Real> s, const EvalSettings& settings = {}) {
  using C = std::complex<Real>;
  const i64 q = chi.modulus();
  if (q == 1) return hurwitz_zeta<Real>(s, 1, 1, settings);
  if (chi.is_principal() && s == C(1, 0)) throw PoleError("eval_L: principal character at s = 1");

  CompensatedComplexSum<Real> regular;
  CompensatedComplexSum<Real> pole;
  Real error = 0;
  const C one_minus_s = Real(1) - s;
  for (i64 a = 1; a <= q; ++a) {
    if (gcd(a, q) != 1) continue;
    const C c = chi.value<Real>(a);
    const auto parts = detail::hurwitz_parts<Real>(s, a, q, settings);
    regular += c * parts.regular;
    error += parts.error;
    if (chi.is_principal()) {
      pole += c * std::exp(one_minus_s * parts.log_w) / (s - Real(1));
    } else {
      // sum_a chi(a) = 0, so w^{1-s}/(s-1) may be replaced by (w^{1-s} - 1)/(s-1).
      pole += -c * parts.log_w * detail::expm1_over<Real>(one_minus_s * parts.log_w);
    }
  }
  const C q_pow = std::exp(-s * std::log(static_cast<Real>(q)));
  const C total = regular.value() + pole.value();
  const Real eps = std::numeric_limits<Real>::epsilon();
  return {q_pow * total, std::abs(q_pow) * (error + 8 * eps * (std::abs(pole.value()) + 1))};
}

/// log of the gamma factor (q/pi)^{(s+kappa)/2} Gamma((s+kappa)/2).
template <class Real>
std::complex<Real> log_gamma_factor(const DirichletCharacter& chi, std::complex<Real> s) {
  const Real q = static_cast<Real>(chi.modulus());
  const std::complex<Real> z = (s + static_cast<Real>(chi.parity())) / Real(2);
  return z * std::log(q / std::numbers::pi_v<Real>) + log_gamma(z);
}

/// Gauss sum tau(chi) = sum_{a=1}^{q} chi(a) e(a/q).
std::complex<double> gauss_sum(const DirichletCharacter& chi);

/// Root number eps(chi) = tau(chi) / (i^kappa sqrt(q)), unit modulus for primitive chi.
std::complex<double> root_number(const DirichletCharacter& chi);

/// Completed L-function (q/pi)^{(s+kappa)/2} Gamma((s+kappa)/2) L(s, chi);
/// RejectedInput for non-primitive chi.
template <class Real>
Evaluated<Real> completed_L(const DirichletCharacter& chi, std::complex<Real> s, const EvalSettings& settings = {}) {
  if (!chi.is_primitive()) throw RejectedInput("completed_L: character is not primitive");
  const auto l = eval_L<Real>(chi, s, settings);
  const std::complex<Real> factor = std::exp(log_gamma_factor<Real>(chi, s));
  return {factor * l.value, std::abs(factor) * l.error};
}

struct LogDerivative {
  std::complex<double> value;
  /// Bound on the omitted tail sum_{n > cutoff} Lambda(n) n^{-sigma}.
  double tail_bound = 0;
};

/// L'/L(s, chi) = -sum_{n >= 2} Lambda(n) chi(n) n^{-s}, truncated at `cutoff`.
/// RejectedInput when Re(s) <= 1.
LogDerivative log_deriv_L(const DirichletCharacter& chi, std::complex<double> s, std::int64_t cutoff = 1'000'000);

/// Tolerance for the imaginary residue of the rotated critical-line value.
inline constexpr double kHardyImagTolerance = 1e-9;

/// Hardy Z-function of a primitive character: the real rotation
/// eps^{-1/2} e^{i arg G(1/2+it)} L(1/2+it, chi), with |Z(t)| = |L(1/2+it, chi)|.
/// Throws AccuracyFailure when the rotated value has an imaginary residue
/// above kHardyImagTolerance (relative to max(1, |Z|)).
template <class Real>
Evaluated<Real> hardy_Z(const DirichletCharacter& chi, Real t, const EvalSettings& settings = {}) {
  using C = std::complex<Real>;
  if (!chi.is_primitive()) throw RejectedInput("hardy_Z: character is not primitive");
  const C s{Real(0.5), t};
  const auto l = eval_L<Real>(chi, s, settings);
  const std::complex<double> eps = root_number(chi);
  const C eps_root = std::sqrt(C(static_cast<Real>(eps.real()), static_cast<Real>(eps.imag())));
  const Real phase = log_gamma_factor<Real>(chi, s).imag();
  const C rotated = std::polar(Real(1), phase) / eps_root * l.value;
  if (std::abs(rotated.imag()) > kHardyImagTolerance * std::max(Real(1), std::abs(rotated)))
    throw AccuracyFailure("hardy_Z: rotated value not real at t = " + std::to_string(static_cast<double>(t)));
  return {C(rotated.real(), 0), l.error};
}

}  // namespace lzero
