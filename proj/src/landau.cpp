#include "lzero/landau.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "lzero/errors.hpp"
#include "lzero/summation.hpp"

namespace lzero {

ExactX::ExactX(Rational x) : x_(x) {
  if (x_ < Rational(2)) throw RejectedInput("x must be >= 2, got " + x_.str());
}

std::optional<PrimePower> ExactX::prime_power() const {
  if (!x_.is_integer()) return std::nullopt;
  return as_prime_power(x_.num());
}

double von_mangoldt(const ExactX& x) {
  const auto pp = x.prime_power();
  return pp ? std::log(static_cast<double>(pp->prime)) : 0.0;
}

Rational prime_power_gap(const ExactX& x) {
  const Rational& v = x.value();
  std::optional<Rational> best;
  for (i64 m = v.floor(); m >= 2; --m) {
    if (Rational(m) == v || !as_prime_power(m)) continue;
    best = v - Rational(m);
    break;
  }
  for (i64 m = v.ceil();; ++m) {
    if (Rational(m) == v || !as_prime_power(m)) continue;
    const Rational d = Rational(m) - v;
    if (!best || d < *best) best = d;
    break;
  }
  return *best;
}

std::complex<double> main_term(const DirichletCharacter& chi, const ExactX& x, double t1, double t2) {
  if (t2 < t1) throw RejectedInput("main_term: need t2 >= t1");
  const auto pp = x.prime_power();
  if (!pp) return {0, 0};
  const CharValue cv = chi(x.value().num());
  if (cv.zero) return {0, 0};
  const double lambda = std::log(static_cast<double>(pp->prime));
  return -(t2 - t1) / (2 * std::numbers::pi) * lambda * cv.embed<double>();
}

double error_budget(const ExactX& x, i64 q, double t2) {
  if (!(t2 > 1)) throw RejectedInput("error_budget: need T2 > 1");
  const double xv = x.to_double();
  const double log_x = x.log();
  const double loglog = std::log(std::log(2 * xv));
  const double gap = prime_power_gap(x).to_double();
  return xv * log_x * loglog + xv * log_x * std::min(t2 / xv, 1 / gap) +
         xv * loglog * std::log(2 * static_cast<double>(q) * t2);
}

LandauSum landau_sum(const ZeroList& list, const ExactX& x) {
  const double log_x = x.log();
  CompensatedComplexSum<double> sum;
  for (const auto& z : list.zeros)
    sum += static_cast<double>(z.multiplicity) * std::exp(z.beta * log_x) * std::polar(1.0, z.gamma * log_x);
  return {sum.value(), list.count(), list.certified};
}

GonekSides gonek_lemma_sides(const ExactX& x, double T, std::int64_t cutoff) {
  if (!(T > 1)) throw RejectedInput("gonek_lemma_sides: need T > 1");
  const double xv = x.to_double();
  const double log_x = x.log();
  if (static_cast<double>(cutoff) <= 3 * xv) throw RejectedInput("gonek_lemma_sides: cutoff too small for x");
  const double c = 1 + 1 / log_x;
  const auto lambda = von_mangoldt_table(cutoff);
  CompensatedSum<double> sum;
  for (i64 n = 2; n <= cutoff; ++n) {
    if (lambda[n] == 0) continue;
    if (x.is_integer() && n == x.value().num()) continue;
    const double ln = std::log(static_cast<double>(n));
    const double dist = std::abs(log_x - ln);
    sum += lambda[n] * std::exp(-c * ln) * std::min(T, 1 / dist);
  }
  // n > N: min{T, 1/log(n/x)} <= 1/log(N/x), and
  // sum_{n > N} Lambda(n) n^{-c} <= 1.03883 c N^{1-c} / (c - 1).
  const double big_n = static_cast<double>(cutoff);
  const double tail = 1.03883 * c * std::pow(big_n, 1 - c) / (c - 1) / std::log(big_n / xv);
  const double gap = prime_power_gap(x).to_double();
  const double rhs = log_x * std::log(std::log(2 * xv)) + log_x * std::min(T / xv, 1 / gap);
  const double lhs = sum.value() + tail;
  return {lhs, rhs, lhs / rhs, tail, c};
}

LandauReport landau_report(const DirichletCharacter& chi, const ExactX& x, const ZeroList& zeros) {
  LandauReport r;
  r.label = chi.label();
  r.x = x.str();
  r.t1 = zeros.t1;
  r.t2 = zeros.t2;
  const LandauSum s = landau_sum(zeros, x);
  r.zero_sum = s.value;
  r.zeros_used = s.zeros_used;
  r.certified = s.certified;
  r.main = main_term(chi, x, zeros.t1, zeros.t2);
  r.error_budget = error_budget(x, chi.modulus(), zeros.t2);
  r.observed_error = std::abs(r.zero_sum - r.main);
  r.ratio = r.observed_error / r.error_budget;
  return r;
}

LandauReport verify_thm2(const DirichletCharacter& chi, const ExactX& x, double t1, double t2,
                         const ZeroSettings& settings, const ZeroCache* cache) {
  if (!chi.is_primitive()) throw RejectedInput("verify_thm2: character " + chi.label().str() + " is not primitive");
  if (!(t1 >= 1) || !(t2 > t1)) throw RejectedInput("verify_thm2: need t2 > t1 >= 1");
  const ZeroList zeros = cached_find_zeros(chi, t1, t2, settings, cache);
  return landau_report(chi, x, zeros);
}

}  // namespace lzero
