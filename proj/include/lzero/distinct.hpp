#pragma once

// Comparison of the zero multisets of two primitive characters to the same
// modulus, and the quantitative pipeline behind it: witness prime p0 for
// chi1 * conj(chi2), Landau sums at x = p0 over (T, T + Delta) for both
// characters, and the size of their difference.

#include <complex>
#include <string>
#include <vector>

#include "lzero/cache.hpp"
#include "lzero/characters.hpp"
#include "lzero/charsums.hpp"
#include "lzero/landau.hpp"
#include "lzero/zeros.hpp"

namespace lzero {

struct DistinctnessParams {
  double theta = 0.4;
  double c1 = 1;
  double c2 = 1;
  /// Witness-prime constants.
  double c3 = 2;
  double c4 = 1;
  /// Cubefree-modulus path (theta > 1/4 instead of theta > 1/3).
  bool cubefree = false;
  double tolerance = 1e-6;

  /// (theta + 1/3) / 2, or (theta + 1/4) / 2 on the cubefree path.
  double theta_prime() const { return cubefree ? (theta + 0.25) / 2 : (theta + 1.0 / 3.0) / 2; }
};

/// Throws RejectedInput when theta is out of range for the chosen path or
/// the cubefree path is requested for a modulus that is not cubefree.
void validate(const DistinctnessParams& params, i64 q);

/// Region 0 < sigma < 1, T < t < T + c2 q^theta log T.
struct Region {
  i64 q = 0;
  double T = 0;
  double width = 0;
  double t_lo = 0;
  double t_hi = 0;
  /// T >= c1 q^theta; below that the theorem makes no claim.
  bool within_hypothesis = false;
};

Region region(i64 q, double T, const DistinctnessParams& params);

struct Delta {
  /// c2 q^theta log T / log q
  double value = 0;
  bool below_T = false;
};

Delta delta(i64 q, double T, const DistinctnessParams& params);

enum class Verdict { distinct, indistinguishable, withheld };

const char* to_string(Verdict v);

struct MatchedPair {
  Zero first;
  Zero second;
  double distance = 0;
};

struct MultisetDiff {
  CharacterLabel label1;
  CharacterLabel label2;
  double t1 = 0;
  double t2 = 0;
  double tolerance = 0;
  std::vector<Zero> only_first;
  std::vector<Zero> only_second;
  std::vector<MatchedPair> matched;
  Verdict verdict = Verdict::withheld;
};

/// Tolerance matching of two zero lists (multiplicities expanded), greedy
/// over gamma-sorted lists. Verdict is withheld unless both are certified.
MultisetDiff diff_zero_lists(const ZeroList& first, const ZeroList& second, double tolerance);

/// Zeros of both characters in (t1, t2) compared as multisets. Requires
/// primitive, distinct characters to the same modulus.
MultisetDiff compare_zero_multisets(const DirichletCharacter& chi1, const DirichletCharacter& chi2, double t1,
                                    double t2, double tolerance, const ZeroSettings& settings = {},
                                    const ZeroCache* cache = nullptr);

struct Thm1Report {
  CharacterLabel label1;
  CharacterLabel label2;
  DistinctnessParams params;
  double T = 0;
  double theta_prime = 0;
  Region region;
  Delta delta;
  CharacterLabel product;
  Witness witness;
  std::complex<double> chi1_p0;
  std::complex<double> chi2_p0;
  LandauSum sum1;
  LandauSum sum2;
  /// |S1 - S2|
  double sum_difference = 0;
  /// (Delta log p0 / 2 pi) |chi1(p0) - chi2(p0)|
  double separation = 0;
  /// p0 log T loglog 2p0
  double error_scale = 0;
  /// Direct comparison over (T, T + Delta).
  MultisetDiff window_diff;
  /// Direct comparison over the whole region (T, T + width).
  MultisetDiff region_diff;
  Verdict verdict = Verdict::withheld;
  bool halted = false;
  std::string diagnostic;
};

/// The full pipeline; see Thm1Report. A missing witness prime halts the
/// pipeline with a diagnostic and a withheld verdict.
Thm1Report verify_thm1(const DirichletCharacter& chi1, const DirichletCharacter& chi2, double T,
                       const DistinctnessParams& params = {}, const ZeroSettings& settings = {},
                       const ZeroCache* cache = nullptr);

}  // namespace lzero
