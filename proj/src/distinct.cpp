#include "lzero/distinct.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "lzero/errors.hpp"

namespace lzero {
namespace {

void check_pair(const DirichletCharacter& chi1, const DirichletCharacter& chi2) {
  if (!chi1.is_primitive() || !chi2.is_primitive())
    throw RejectedInput("both characters must be primitive");
  if (chi1.modulus() != chi2.modulus()) throw RejectedInput("characters must share the modulus");
  if (chi1 == chi2) throw RejectedInput("characters must be distinct");
}

std::vector<Zero> expand(const std::vector<Zero>& zs) {
  std::vector<Zero> out;
  for (const auto& z : zs)
    for (int k = 0; k < z.multiplicity; ++k) {
      Zero unit = z;
      unit.multiplicity = 1;
      out.push_back(unit);
    }
  return out;
}

}  // namespace

void validate(const DistinctnessParams& p, i64 q) {
  if (p.c1 <= 0 || p.c3 <= 0 || p.c4 <= 0 || p.c2 < 0 || p.tolerance <= 0)
    throw RejectedInput("distinctness constants must be positive");
  if (p.cubefree) {
    if (!is_cubefree(q)) throw RejectedInput("modulus " + std::to_string(q) + " is not cubefree");
    if (!(p.theta > 0.25)) throw RejectedInput("cubefree path needs theta > 1/4");
  } else if (!(p.theta > 1.0 / 3.0)) {
    throw RejectedInput("general path needs theta > 1/3");
  }
}

Region region(i64 q, double T, const DistinctnessParams& p) {
  if (q < 3 || !(T > 1)) throw RejectedInput("region needs q >= 3 and T > 1");
  Region r;
  r.q = q;
  r.T = T;
  const double q_theta = std::pow(static_cast<double>(q), p.theta);
  r.width = p.c2 * q_theta * std::log(T);
  r.t_lo = T;
  r.t_hi = T + r.width;
  r.within_hypothesis = T >= p.c1 * q_theta;
  return r;
}

Delta delta(i64 q, double T, const DistinctnessParams& p) {
  if (q < 3 || !(T > 1)) throw RejectedInput("delta needs q >= 3 and T > 1");
  const double value = p.c2 * std::pow(static_cast<double>(q), p.theta) * std::log(T) / std::log(static_cast<double>(q));
  return {value, value < T};
}

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::distinct:
      return "distinct";
    case Verdict::indistinguishable:
      return "indistinguishable-at-tolerance";
    case Verdict::withheld:
      return "withheld";
  }
  return "withheld";
}

MultisetDiff diff_zero_lists(const ZeroList& first, const ZeroList& second, double tolerance) {
  MultisetDiff d;
  d.label1 = first.label;
  d.label2 = second.label;
  d.t1 = std::max(first.t1, second.t1);
  d.t2 = std::min(first.t2, second.t2);
  d.tolerance = tolerance;
  const auto a = expand(first.zeros), b = expand(second.zeros);
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    const double dist = std::abs(std::complex<double>(a[i].beta - b[j].beta, a[i].gamma - b[j].gamma));
    if (dist <= tolerance) {
      d.matched.push_back({a[i], b[j], dist});
      ++i;
      ++j;
    } else if (a[i].gamma < b[j].gamma) {
      d.only_first.push_back(a[i++]);
    } else {
      d.only_second.push_back(b[j++]);
    }
  }
  for (; i < a.size(); ++i) d.only_first.push_back(a[i]);
  for (; j < b.size(); ++j) d.only_second.push_back(b[j]);
  if (!first.certified || !second.certified)
    d.verdict = Verdict::withheld;
  else
    d.verdict = d.only_first.empty() && d.only_second.empty() ? Verdict::indistinguishable : Verdict::distinct;
  return d;
}

MultisetDiff compare_zero_multisets(const DirichletCharacter& chi1, const DirichletCharacter& chi2, double t1,
                                    double t2, double tolerance, const ZeroSettings& settings,
                                    const ZeroCache* cache) {
  check_pair(chi1, chi2);
  if (!(t2 > t1)) throw RejectedInput("compare_zero_multisets: empty window");
  const ZeroList a = cached_find_zeros(chi1, t1, t2, settings, cache);
  const ZeroList b = cached_find_zeros(chi2, t1, t2, settings, cache);
  return diff_zero_lists(a, b, tolerance);
}

Thm1Report verify_thm1(const DirichletCharacter& chi1, const DirichletCharacter& chi2, double T,
                       const DistinctnessParams& params, const ZeroSettings& settings, const ZeroCache* cache) {
  check_pair(chi1, chi2);
  const i64 q = chi1.modulus();
  validate(params, q);
  Thm1Report rep;
  rep.label1 = chi1.label();
  rep.label2 = chi2.label();
  rep.params = params;
  rep.T = T;
  rep.theta_prime = params.theta_prime();
  rep.region = region(q, T, params);
  rep.delta = delta(q, T, params);
  if (!(rep.region.width > 0)) throw RejectedInput("verify_thm1: region has zero width");

  const DirichletCharacter chi = mul_conj(chi1, chi2);
  rep.product = chi.label();
  rep.witness = find_witness_prime(chi, rep.theta_prime, params.c3, params.c4, /*coprime_only=*/true);
  if (!rep.witness.found) {
    rep.halted = true;
    rep.diagnostic = "no witness prime below c3 q^theta' = " + std::to_string(rep.witness.bound) +
                     " with |chi(p) - 1| >= " + std::to_string(rep.witness.threshold);
    return rep;
  }
  const i64 p0 = rep.witness.p0;
  rep.chi1_p0 = chi1.value<double>(p0);
  rep.chi2_p0 = chi2.value<double>(p0);

  const double t_hi = std::max(rep.region.t_hi, T + rep.delta.value);
  const ZeroList z1 = cached_find_zeros(chi1, T, t_hi, settings, cache);
  const ZeroList z2 = cached_find_zeros(chi2, T, t_hi, settings, cache);
  const ZeroList w1 = z1.restricted(T, T + rep.delta.value);
  const ZeroList w2 = z2.restricted(T, T + rep.delta.value);

  const ExactX x{Rational(p0)};
  rep.sum1 = landau_sum(w1, x);
  rep.sum2 = landau_sum(w2, x);
  rep.sum_difference = std::abs(rep.sum1.value - rep.sum2.value);
  const double log_p0 = std::log(static_cast<double>(p0));
  rep.separation = rep.delta.value * log_p0 / (2 * std::numbers::pi) * std::abs(rep.chi1_p0 - rep.chi2_p0);
  rep.error_scale = static_cast<double>(p0) * std::log(T) * std::log(std::log(2.0 * static_cast<double>(p0)));

  rep.window_diff = diff_zero_lists(w1, w2, params.tolerance);
  rep.region_diff = diff_zero_lists(z1.restricted(rep.region.t_lo, rep.region.t_hi),
                                    z2.restricted(rep.region.t_lo, rep.region.t_hi), params.tolerance);
  rep.verdict = rep.window_diff.verdict;
  if (!rep.region.within_hypothesis) rep.diagnostic = "T below c1 q^theta: outside the theorem's hypothesis";
  return rep;
}

}  // namespace lzero
