#include "lzero/lfunc.hpp"

#include <cstdio>
#include <vector>

#include "lzero/arith.hpp"

namespace lzero {

std::string EvalSettings::fingerprint() const {
  char buf[128];
  std::snprintf(buf, sizeof buf, "acc=%.3g;N=%d;M=%d;prec=%s", target_accuracy, shift, bernoulli_terms,
                precision == Precision::standard ? "std" : "ext");
  return buf;
}

std::complex<double> gauss_sum(const DirichletCharacter& chi) {
  const i64 q = chi.modulus();
  const i64 order = chi.order();
  CompensatedComplexSum<long double> sum;
  for (i64 a = 1; a <= q; ++a) {
    const i64 k = chi.exponent(a);
    if (k < 0) continue;
    // e(k/order) e(a/q) = e((k q + a order) / (order q))
    sum += CharValue::unit_root<long double>(k * q + a * order, order * q);
  }
  const auto v = sum.value();
  return {static_cast<double>(v.real()), static_cast<double>(v.imag())};
}

std::complex<double> root_number(const DirichletCharacter& chi) {
  const std::complex<double> i_kappa = chi.parity() == 1 ? std::complex<double>(0, 1) : 1.0;
  return gauss_sum(chi) / (i_kappa * std::sqrt(static_cast<double>(chi.modulus())));
}

LogDerivative log_deriv_L(const DirichletCharacter& chi, std::complex<double> s, std::int64_t cutoff) {
  const double sigma = s.real();
  if (!(sigma > 1)) throw RejectedInput("log_deriv_L: Dirichlet series needs Re(s) > 1");
  if (cutoff < 2) throw RejectedInput("log_deriv_L: cutoff must be >= 2");
  const auto lambda = von_mangoldt_table(cutoff);
  CompensatedComplexSum<double> sum;
  for (i64 n = 2; n <= cutoff; ++n) {
    if (lambda[n] == 0) continue;
    const i64 k = chi.exponent(n);
    if (k < 0) continue;
    sum += -lambda[n] * chi.value<double>(n) * std::exp(-s * std::log(static_cast<double>(n)));
  }
  // psi(x) <= 1.03883 x, so by partial summation
  // sum_{n > N} Lambda(n) n^{-sigma} <= 1.03883 sigma N^{1-sigma} / (sigma - 1).
  const double n = static_cast<double>(cutoff);
  const double tail = 1.03883 * sigma * std::pow(n, 1 - sigma) / (sigma - 1);
  return {sum.value(), tail};
}

}  // namespace lzero
