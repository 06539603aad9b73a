#pragma once

// Nontrivial zeros of L(s, chi) in height windows.
//
// Zeros on the critical line are located by sign changes of the Hardy
// Z-function and refined by bracketing; the list is certified complete
// when its size matches the argument-principle count for the same window.

#include <string>
#include <vector>

#include "lzero/characters.hpp"
#include "lzero/lfunc.hpp"

namespace lzero {

enum class ZeroSource { on_line, off_line };

struct Zero {
  double beta = 0.5;
  double gamma = 0;
  int multiplicity = 1;
  /// Bound on |gamma_true - gamma|.
  double accuracy = 0;
  ZeroSource source = ZeroSource::on_line;

  friend bool operator==(const Zero&, const Zero&) = default;
};

struct ZeroList {
  CharacterLabel label;
  double t1 = 0;
  double t2 = 0;
  /// Strictly increasing gamma.
  std::vector<Zero> zeros;
  bool certified = false;

  /// Sum of multiplicities.
  int count() const;
  /// Zeros with t1 < gamma < t2, keeping the certified flag.
  ZeroList restricted(double t1, double t2) const;

  friend bool operator==(const ZeroList&, const ZeroList&) = default;
};

struct ZeroSettings {
  EvalSettings eval;
  /// Multiplies the default scan step 1 / (2 log(q(|t| + 3))).
  double scan_factor = 1.0;
  /// Bracket width at which refinement stops.
  double bracket_tolerance = 1e-11;
  /// Largest accuracy a zero may carry in a certified list.
  double accuracy = 1e-9;
  /// Window subdivision / rectangle bisection depth limit.
  int max_depth = 20;
  /// Endpoints closer than this to a zero ordinate are moved.
  double nudge = 1e-6;

  std::string fingerprint() const;
};

/// Result of an argument-principle count.
struct ZeroCount {
  int count = 0;
  /// Contour heights actually used (after endpoint nudging).
  double t1 = 0;
  double t2 = 0;
  /// Distance of the raw winding number from the returned integer.
  double deviation = 0;
};

/// Number of zeros (with multiplicity) with t1 < gamma < t2 and 0 < beta < 1,
/// from the winding of L(s, chi) around [-1/2, 3/2] x [t1, t2]. Endpoints
/// within `settings.nudge` of a zero ordinate (including 0, the ordinate of
/// the trivial zeros) are moved first. Windows containing 0 are split there.
ZeroCount count_zeros_argument(const DirichletCharacter& chi, double t1, double t2,
                               const ZeroSettings& settings = {});

/// All zeros with t1 < gamma < t2. Never silently incomplete: `certified`
/// is false whenever the located zeros do not account for the argument count.
ZeroList find_zeros(const DirichletCharacter& chi, double t1, double t2, const ZeroSettings& settings = {});

/// Default Hardy-Z scan step at height t.
double scan_step(const DirichletCharacter& chi, double t);

}  // namespace lzero
