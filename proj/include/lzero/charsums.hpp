#pragma once

// Incomplete character sums, Burgess right-hand sides and witness primes
// p0 <= c3 q^theta with |chi(p0) - 1| >= c4 / (log q)^2.

#include <complex>
#include <vector>

#include "lzero/characters.hpp"

namespace lzero {

struct BurgessParams {
  int r = 3;
  double eps = 0;
  double theta = 0.4;
  double c3 = 2;
  double c4 = 1;
  /// Use the cubefree-modulus form of the bound (valid for every r >= 2).
  bool cubefree = false;
};

/// Throws RejectedInput unless r >= 2, eps >= 0 and (r <= 3 or cubefree),
/// and, when cubefree is set, q is cubefree.
void validate(const BurgessParams& params, i64 q);

/// eps = (theta - 1/3) / 4, the general-modulus choice with r = 3.
double burgess_eps_general(double theta);
/// eps = (theta - 1/4) / (8 r) - 1 / (4 r^2), the cubefree choice.
double burgess_eps_cubefree(double theta, int r);
/// Smallest r with burgess_eps_cubefree(theta, r) > 0.
int burgess_min_r_cubefree(double theta);

/// sum_{N < n <= N + H} chi(n), accumulated exactly per root of unity and
/// embedded at the end. RejectedInput when H < 1.
std::complex<double> char_sum(const DirichletCharacter& chi, double N, double H);

/// H^{1 - 1/r} q^{(r+1)/(4 r^2) + eps}, implied constant omitted.
double burgess_rhs(i64 q, double H, const BurgessParams& params);

struct CharSumReport {
  CharacterLabel label;
  double N = 0;
  double H = 0;
  std::complex<double> value;
  double magnitude = 0;
  double burgess_rhs = 0;
  double ratio = 0;
};

CharSumReport char_sum_report(const DirichletCharacter& chi, double N, double H, const BurgessParams& params);

struct Witness {
  bool found = false;
  i64 p0 = 0;
  /// |chi(p0) - 1| at the witness.
  double distance = 0;
  /// c4 / (log q)^2
  double threshold = 0;
  /// c3 q^theta
  double bound = 0;
};

/// Smallest prime p0 <= c3 q^theta with |chi(p0) - 1| >= c4 / (log q)^2.
/// With `coprime_only`, primes dividing q are skipped (there chi(p0) = 0).
/// Not finding one is a reported outcome; a principal chi is RejectedInput.
Witness find_witness_prime(const DirichletCharacter& chi, double theta, double c3, double c4,
                           bool coprime_only = false);

struct Lemma3Row {
  CharacterLabel label;
  i64 order = 0;
  Witness witness;
  /// |chi(p0) - 1| (log q)^2
  double scaled = 0;
};

struct Lemma3Table {
  double theta = 0, c3 = 0, c4 = 0;
  std::vector<Lemma3Row> rows;
  int missing = 0;
  /// Smallest scaled distance over rows with a witness (0 if none).
  double worst_scaled = 0;
  i64 largest_p0 = 0;
};

/// Witness search for every nonprincipal character mod q, q_lo <= q <= q_hi
/// (moduli below 3 are skipped).
Lemma3Table scan_lemma3(i64 q_lo, i64 q_hi, double theta, double c3, double c4, bool cubefree_only = false);

}  // namespace lzero
