#include "lzero/zeros.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>

#include "lzero/winding.hpp"

namespace lzero {
namespace {

constexpr double kSigmaLeft = -0.5;
constexpr double kSigmaRight = 1.5;

struct ZValue {
  double value;
  double error;
};

ZValue hardy(const DirichletCharacter& chi, double t, const ZeroSettings& settings) {
  if (settings.eval.precision == Precision::extended) {
    const auto z = hardy_Z<long double>(chi, static_cast<long double>(t), settings.eval);
    return {static_cast<double>(z.value.real()), static_cast<double>(z.error)};
  }
  const auto z = hardy_Z<double>(chi, t, settings.eval);
  return {z.value.real(), z.error};
}

int sign(double v) { return (v > 0) - (v < 0); }

// Refines a sign-change bracket of Z by false position with the Illinois
// modification, falling back to bisection when the bracket stalls.
Zero refine(const DirichletCharacter& chi, double a, double b, double za, double zb, const ZeroSettings& settings) {
  double err = 0;
  int side = 0;
  for (int it = 0; it < 200 && (b - a) > settings.bracket_tolerance; ++it) {
    const double width = b - a;
    double c = (a * zb - b * za) / (zb - za);
    if (!(c > a && c < b) || it % 4 == 3) c = 0.5 * (a + b);
    const ZValue zc = hardy(chi, c, settings);
    err = zc.error;
    if (zc.value == 0) return {0.5, c, 1, err, ZeroSource::on_line};
    if (sign(zc.value) == sign(zb)) {
      b = c;
      zb = zc.value;
      if (side == -1) za /= 2;
      side = -1;
    } else {
      a = c;
      za = zc.value;
      if (side == +1) zb /= 2;
      side = +1;
    }
    if (b - a > 0.75 * width) side = 0;
  }
  const double slope = std::abs((zb - za) / (b - a));
  const double gamma = 0.5 * (a + b);
  const double acc = 0.5 * (b - a) + (slope > 0 ? 2 * err / slope : 0);
  return {0.5, gamma, 1, acc, ZeroSource::on_line};
}

// Sign-change scan of Z on [lo, hi] with every bracket refined.
std::vector<Zero> scan(const DirichletCharacter& chi, double lo, double hi, double factor, const ZeroSettings& settings) {
  std::vector<Zero> found;
  double t = lo;
  double z = hardy(chi, t, settings).value;
  if (z == 0) found.push_back({0.5, t, 1, 0, ZeroSource::on_line});
  while (t < hi) {
    const double step = factor * scan_step(chi, t);
    const double next = std::min(t + step, hi);
    const double zn = hardy(chi, next, settings).value;
    if (zn == 0) {
      found.push_back({0.5, next, 1, 0, ZeroSource::on_line});
    } else if (z != 0 && sign(z) != sign(zn)) {
      found.push_back(refine(chi, t, next, z, zn, settings));
    }
    t = next;
    z = zn;
  }
  return found;
}

std::vector<Zero> within(const std::vector<Zero>& zs, double a, double b) {
  std::vector<Zero> out;
  for (const auto& z : zs)
    if (z.gamma > a && z.gamma < b) out.push_back(z);
  return out;
}

int multiplicity_sum(const std::vector<Zero>& zs) {
  int n = 0;
  for (const auto& z : zs) n += z.multiplicity;
  return n;
}

void sort_and_merge(std::vector<Zero>& zs) {
  std::sort(zs.begin(), zs.end(), [](const Zero& a, const Zero& b) { return a.gamma < b.gamma; });
  std::vector<Zero> merged;
  for (const auto& z : zs) {
    if (!merged.empty() && std::abs(merged.back().gamma - z.gamma) <= std::max(merged.back().accuracy, z.accuracy) &&
        std::abs(merged.back().beta - z.beta) <= 1e-9) {
      // same zero seen twice (e.g. exact hit on a grid point and a bracket)
      if (z.accuracy < merged.back().accuracy) merged.back() = z;
      continue;
    }
    merged.push_back(z);
  }
  zs = std::move(merged);
}

// Moves t off any ordinate in `avoid` (and off 0), trying the inward
// direction first and never crossing 0.
double nudged(double t, int inward, const std::vector<double>& avoid, double nudge) {
  auto safe = [&](double u) {
    if (std::abs(u) < nudge) return false;
    for (double g : avoid)
      if (std::abs(g - u) <= nudge) return false;
    return true;
  };
  if (safe(t)) return t;
  const int sgn = t > 0 ? 1 : (t < 0 ? -1 : inward);
  for (int k = 1; k <= 16; ++k) {
    for (int dir : {inward, -inward}) {
      const double u = t + dir * 2.0 * k * nudge;
      if (sign(u) != sgn) continue;
      if (safe(u)) return u;
    }
  }
  throw RejectedInput("window endpoint " + std::to_string(t) + " collides with a zero ordinate after nudging");
}

// Winding count for a window with 0 < t1 < t2 or t1 < t2 < 0 and safe
// endpoints. The left side is not traversed: its argument change follows
// from the right side through the functional equation
//   arg L(-1/2+it) = const - arg G(3/2+it) - arg L(3/2+it) - arg G(-1/2+it),
// so the total is an integer only when all pieces are computed accurately.
ZeroCount raw_count(const DirichletCharacter& chi, double t1, double t2, const ZeroSettings& settings) {
  auto L = [&](cplx s) { return eval_L<double>(chi, s, settings.eval).value; };
  auto arg_g = [&](double sigma, double t) { return log_gamma_factor<double>(chi, cplx(sigma, t)).imag(); };

  ArgTrackOptions vertical;
  vertical.pieces = std::max(1, static_cast<int>(std::ceil((t2 - t1) / 0.25)));
  ArgTrackOptions horizontal;
  horizontal.pieces = 16;

  const double right = arg_change(L, {kSigmaRight, t1}, {kSigmaRight, t2}, vertical);
  const double top = arg_change(L, {kSigmaRight, t2}, {kSigmaLeft, t2}, horizontal);
  const double bottom = arg_change(L, {kSigmaLeft, t1}, {kSigmaRight, t1}, horizontal);
  const double left = (arg_g(kSigmaRight, t2) - arg_g(kSigmaRight, t1)) + right +
                      (arg_g(kSigmaLeft, t2) - arg_g(kSigmaLeft, t1));
  const double w = (right + top + left + bottom) / (2 * std::numbers::pi);
  const double k = std::round(w);
  if (std::abs(w - k) > 0.1)
    throw AccuracyFailure("argument count for " + chi.label().str() + " on (" + std::to_string(t1) + ", " +
                          std::to_string(t2) + ") is " + std::to_string(w) + ", not close to an integer");
  return {static_cast<int>(k), t1, t2, std::abs(w - k)};
}

struct Resolved {
  std::vector<Zero> zeros;
  bool certified = false;
};

Resolved resolve(const DirichletCharacter& chi, double a, double b, std::vector<Zero> located, double factor, int depth,
                 const ZeroSettings& settings) {
  const int expected = raw_count(chi, a, b, settings).count;
  const int have = multiplicity_sum(located);
  if (have == expected) return {std::move(located), true};
  if (depth >= settings.max_depth || have > expected) return {std::move(located), false};

  if (b - a > 0.25) {
    std::vector<double> avoid;
    for (const auto& z : located) avoid.push_back(z.gamma);
    const double mid = nudged(0.5 * (a + b), 1, avoid, settings.nudge);
    const double finer = factor / 2;
    auto lo_zeros = scan(chi, a, mid, finer, settings);
    auto hi_zeros = scan(chi, mid, b, finer, settings);
    Resolved lo = resolve(chi, a, mid, within(lo_zeros, a, mid), finer, depth + 1, settings);
    Resolved hi = resolve(chi, mid, b, within(hi_zeros, mid, b), finer, depth + 1, settings);
    lo.zeros.insert(lo.zeros.end(), hi.zeros.begin(), hi.zeros.end());
    return {std::move(lo.zeros), lo.certified && hi.certified};
  }

  // Short window still missing zeros: off-line or multiple zeros. Search the
  // rectangle by winding-number bisection.
  auto L = [&](cplx s) { return eval_L<double>(chi, s, settings.eval).value; };
  const Rect box{kSigmaLeft, kSigmaRight, a, b};
  std::vector<Zero> zeros;
  bool all_resolved = true;
  for (const auto& lz : locate_zeros(L, box, settings.max_depth - depth, settings.accuracy)) {
    const bool on_line = std::abs(lz.point.real() - 0.5) <= std::max(lz.accuracy, 1e-10);
    zeros.push_back({on_line ? 0.5 : lz.point.real(), lz.point.imag(), lz.multiplicity, lz.accuracy,
                     on_line ? ZeroSource::on_line : ZeroSource::off_line});
    all_resolved = all_resolved && lz.resolved;
  }
  const bool ok = all_resolved && multiplicity_sum(zeros) == expected;
  return {std::move(zeros), ok};
}

void check_window(const DirichletCharacter& chi, double t1, double t2) {
  if (!chi.is_primitive()) throw RejectedInput("character " + chi.label().str() + " is not primitive");
  if (!std::isfinite(t1) || !std::isfinite(t2) || t2 < t1)
    throw RejectedInput("window must satisfy t1 <= t2");
}

}  // namespace

int ZeroList::count() const { return multiplicity_sum(zeros); }

ZeroList ZeroList::restricted(double a, double b) const {
  ZeroList out{label, a, b, within(zeros, a, b), certified};
  return out;
}

std::string ZeroSettings::fingerprint() const {
  char buf[256];
  std::snprintf(buf, sizeof buf, "%s;scan=%.6g;br=%.3g;acc=%.3g;depth=%d;nudge=%.3g", eval.fingerprint().c_str(),
                scan_factor, bracket_tolerance, accuracy, max_depth, nudge);
  return buf;
}

double scan_step(const DirichletCharacter& chi, double t) {
  return 1.0 / (2.0 * std::log(static_cast<double>(chi.modulus()) * (std::abs(t) + 3.0)));
}

ZeroCount count_zeros_argument(const DirichletCharacter& chi, double t1, double t2, const ZeroSettings& settings) {
  check_window(chi, t1, t2);
  if (t1 == t2) return {0, t1, t2, 0};
  if (t1 < 0 && t2 > 0) {
    const ZeroCount lo = count_zeros_argument(chi, t1, 0, settings);
    const ZeroCount hi = count_zeros_argument(chi, 0, t2, settings);
    return {lo.count + hi.count, lo.t1, hi.t2, std::max(lo.deviation, hi.deviation)};
  }
  // Detect ordinates near the endpoints by a sign change of Z across them.
  auto near_ordinates = [&](double t) {
    std::vector<double> avoid;
    const double h = settings.nudge;
    if (sign(hardy(chi, t - h, settings).value) != sign(hardy(chi, t + h, settings).value)) avoid.push_back(t);
    return avoid;
  };
  auto safe_endpoint = [&](double t, int inward) {
    double u = nudged(t, inward, near_ordinates(t), settings.nudge);
    // re-check the moved endpoint once
    if (u != t) u = nudged(u, inward, near_ordinates(u), settings.nudge);
    return u;
  };
  const double a = safe_endpoint(t1, +1);
  const double b = safe_endpoint(t2, -1);
  if (a >= b) return {0, a, b, 0};
  return raw_count(chi, a, b, settings);
}

ZeroList find_zeros(const DirichletCharacter& chi, double t1, double t2, const ZeroSettings& settings) {
  check_window(chi, t1, t2);
  ZeroList out{chi.label(), t1, t2, {}, true};
  if (t1 == t2) return out;
  if (t1 < 0 && t2 > 0) {
    ZeroList lo = find_zeros(chi, t1, 0, settings);
    ZeroList hi = find_zeros(chi, 0, t2, settings);
    out.zeros = std::move(lo.zeros);
    out.zeros.insert(out.zeros.end(), hi.zeros.begin(), hi.zeros.end());
    out.certified = lo.certified && hi.certified;
    return out;
  }

  const double guard = 10 * settings.nudge;
  std::vector<Zero> scanned = scan(chi, t1 - guard, t2 + guard, settings.scan_factor, settings);
  std::vector<double> avoid;
  for (const auto& z : scanned) avoid.push_back(z.gamma);
  const double a = nudged(t1, +1, avoid, settings.nudge);
  const double b = nudged(t2, -1, avoid, settings.nudge);

  std::vector<Zero> zeros;
  bool certified = true;
  if (a < b) {
    Resolved r = resolve(chi, a, b, within(scanned, a, b), settings.scan_factor, 0, settings);
    zeros = std::move(r.zeros);
    certified = r.certified;
  }
  // zeros in the slivers between the requested and the nudged endpoints
  for (const auto& z : scanned)
    if ((z.gamma > t1 && z.gamma <= a) || (z.gamma >= b && z.gamma < t2)) zeros.push_back(z);

  sort_and_merge(zeros);
  out.zeros = within(zeros, t1, t2);
  for (const auto& z : out.zeros)
    if (z.accuracy > settings.accuracy) certified = false;
  out.certified = certified;
  return out;
}

}  // namespace lzero
