#include "lzero/charsums.hpp"

#include <cmath>
#include <limits>

#include "lzero/errors.hpp"
#include "lzero/summation.hpp"

namespace lzero {

void validate(const BurgessParams& p, i64 q) {
  if (p.r < 2) throw RejectedInput("Burgess bound needs r >= 2");
  if (p.eps < 0) throw RejectedInput("Burgess bound needs eps >= 0");
  if (!p.cubefree && p.r > 3) throw RejectedInput("Burgess bound with r > 3 needs a cubefree modulus");
  if (p.cubefree && !is_cubefree(q)) throw RejectedInput("modulus " + std::to_string(q) + " is not cubefree");
}

double burgess_eps_general(double theta) { return (theta - 1.0 / 3.0) / 4.0; }

double burgess_eps_cubefree(double theta, int r) { return (theta - 0.25) / (8.0 * r) - 1.0 / (4.0 * r * r); }

int burgess_min_r_cubefree(double theta) {
  if (!(theta > 0.25)) throw RejectedInput("cubefree path needs theta > 1/4");
  int r = 2;
  while (!(burgess_eps_cubefree(theta, r) > 0)) ++r;
  return r;
}

std::complex<double> char_sum(const DirichletCharacter& chi, double N, double H) {
  if (!(H >= 1)) throw RejectedInput("char_sum: need H >= 1");
  const i64 q = chi.modulus();
  const i64 lo = static_cast<i64>(std::floor(N)) + 1;
  const i64 hi = static_cast<i64>(std::floor(N + H));
  const i64 len = hi - lo + 1;
  std::vector<i64> counts(static_cast<std::size_t>(chi.order()), 0);
  const i64 periods = len / q;
  if (periods > 0)
    for (i64 a = 0; a < q; ++a)
      if (const i64 k = chi.exponent(a); k >= 0) counts[k] += periods;
  for (i64 n = lo + periods * q; n <= hi; ++n)
    if (const i64 k = chi.exponent(n); k >= 0) ++counts[k];
  CompensatedComplexSum<long double> sum;
  for (std::size_t k = 0; k < counts.size(); ++k)
    if (counts[k] != 0)
      sum += static_cast<long double>(counts[k]) * CharValue::unit_root<long double>(static_cast<i64>(k), chi.order());
  const auto v = sum.value();
  return {static_cast<double>(v.real()), static_cast<double>(v.imag())};
}

double burgess_rhs(i64 q, double H, const BurgessParams& params) {
  validate(params, q);
  const double r = params.r;
  return std::pow(H, 1 - 1 / r) * std::pow(static_cast<double>(q), (r + 1) / (4 * r * r) + params.eps);
}

CharSumReport char_sum_report(const DirichletCharacter& chi, double N, double H, const BurgessParams& params) {
  CharSumReport rep;
  rep.label = chi.label();
  rep.N = N;
  rep.H = H;
  rep.value = char_sum(chi, N, H);
  rep.magnitude = std::abs(rep.value);
  rep.burgess_rhs = burgess_rhs(chi.modulus(), H, params);
  rep.ratio = rep.magnitude / rep.burgess_rhs;
  return rep;
}

Witness find_witness_prime(const DirichletCharacter& chi, double theta, double c3, double c4, bool coprime_only) {
  if (chi.is_principal()) throw RejectedInput("find_witness_prime: principal character has no witness");
  if (!(theta > 0) || !(c3 > 0) || !(c4 > 0)) throw RejectedInput("find_witness_prime: theta, c3, c4 must be > 0");
  const i64 q = chi.modulus();
  const double log_q = std::log(static_cast<double>(q));
  Witness w;
  w.bound = c3 * std::pow(static_cast<double>(q), theta);
  w.threshold = c4 / (log_q * log_q);
  const i64 limit = static_cast<i64>(std::floor(w.bound));
  for (i64 p : primes_up_to(limit)) {
    const CharValue v = chi(p);
    if (coprime_only && v.zero) continue;
    const double distance = std::abs(v.embed<double>() - 1.0);
    // ties at the threshold count; both sides carry rounding
    if (distance >= w.threshold * (1 - 1e-12)) {
      w.found = true;
      w.p0 = p;
      w.distance = distance;
      return w;
    }
  }
  return w;
}

Lemma3Table scan_lemma3(i64 q_lo, i64 q_hi, double theta, double c3, double c4, bool cubefree_only) {
  Lemma3Table table;
  table.theta = theta;
  table.c3 = c3;
  table.c4 = c4;
  double worst = std::numeric_limits<double>::infinity();
  for (i64 q = std::max<i64>(q_lo, 3); q <= q_hi; ++q) {
    if (cubefree_only && !is_cubefree(q)) continue;
    const double log_q = std::log(static_cast<double>(q));
    for (const auto& chi : enumerate_characters(q)) {
      if (chi.is_principal()) continue;
      Lemma3Row row;
      row.label = chi.label();
      row.order = chi.order();
      row.witness = find_witness_prime(chi, theta, c3, c4);
      if (row.witness.found) {
        row.scaled = row.witness.distance * log_q * log_q;
        worst = std::min(worst, row.scaled);
        table.largest_p0 = std::max(table.largest_p0, row.witness.p0);
      } else {
        ++table.missing;
      }
      table.rows.push_back(row);
    }
  }
  table.worst_scaled = std::isfinite(worst) ? worst : 0;
  return table;
}

}  // namespace lzero
