#pragma once

// Gamma-function pieces used by the completed L-function and the Hardy
// Z rotation, templated on the real scalar.

#include <cmath>
#include <complex>
#include <numbers>

#include <boost/math/special_functions/bernoulli.hpp>

#include "lzero/errors.hpp"

namespace lzero {

/// B_{2k}, k >= 0, as Real.
template <class Real>
Real bernoulli_2k(int k) {
  return static_cast<Real>(boost::math::bernoulli_b2n<long double>(k));
}

/// log Gamma(z) for complex z away from the poles 0, -1, -2, ...
///
/// The argument is shifted upward until |z + n| >= 20 and Re(z + n) > 0
/// and the Stirling series is summed there; the shift is undone with
/// principal logarithms. On any path avoiding the real half-line
/// (-inf, 0] the imaginary part is continuous, which the zero counter
/// relies on. For real positive z it agrees with std::lgamma.
template <class Real>
std::complex<Real> log_gamma(std::complex<Real> z) {
  using C = std::complex<Real>;
  if (z.imag() == 0 && z.real() <= 0 && std::floor(z.real()) == z.real())
    throw PoleError("log_gamma: pole at non-positive integer");
  constexpr Real kMin = 20;
  C shift_log{0, 0};
  while (z.real() <= 0 || std::abs(z) < kMin) {
    shift_log += std::log(z);
    z += Real(1);
  }
  const Real half_log_2pi = std::log(2 * std::numbers::pi_v<Real>) / 2;
  C result = (z - Real(0.5)) * std::log(z) - z + half_log_2pi;
  const C inv = Real(1) / z;
  const C inv2 = inv * inv;
  C power = inv;
  for (int k = 1; k <= 12; ++k) {
    const Real coeff = bernoulli_2k<Real>(k) / static_cast<Real>((2 * k) * (2 * k - 1));
    result += coeff * power;
    power *= inv2;
  }
  return result - shift_log;
}

template <class Real>
std::complex<Real> gamma(std::complex<Real> z) {
  return std::exp(log_gamma(z));
}

}  // namespace lzero
