#pragma once

// Argument tracking and zero location for an analytic function given as a
// callable C -> C. Used for zero counting of L-functions and, through the
// generic interface, testable on functions with known zeros.

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include "lzero/errors.hpp"

namespace lzero {

using cplx = std::complex<double>;

struct ArgTrackOptions {
  /// Initial number of pieces the segment is cut into.
  int pieces = 8;
  /// Largest accepted phase increment across one piece.
  double max_phase_step = 0.5;
  /// Pieces shorter than this that still do not resolve signal a zero on the contour.
  double min_length = 1e-12;
};

/// Continuous change of arg f(z) as z runs along the segment from z0 to z1.
template <class F>
double arg_change(F&& f, cplx z0, cplx z1, const ArgTrackOptions& opt = {}) {
  struct Piece {
    cplx a, b;
    cplx fa, fb;
  };
  auto phase = [](cplx from, cplx to) { return std::arg(to / from); };
  auto checked = [&](cplx z) {
    const cplx v = f(z);
    if (v == cplx(0, 0) || !std::isfinite(v.real()) || !std::isfinite(v.imag()))
      throw AccuracyFailure("arg_change: function vanishes or is not finite on the contour");
    return v;
  };

  const int n = std::max(opt.pieces, 1);
  std::vector<cplx> nodes(n + 1), values(n + 1);
  for (int i = 0; i <= n; ++i) {
    nodes[i] = z0 + (z1 - z0) * (static_cast<double>(i) / n);
    values[i] = checked(nodes[i]);
  }
  double total = 0;
  std::vector<Piece> stack;
  for (int i = n - 1; i >= 0; --i) stack.push_back({nodes[i], nodes[i + 1], values[i], values[i + 1]});
  while (!stack.empty()) {
    Piece p = stack.back();
    stack.pop_back();
    const cplx m = (p.a + p.b) / 2.0;
    const cplx fm = checked(m);
    const double whole = phase(p.fa, p.fb);
    const double left = phase(p.fa, fm);
    const double right = phase(fm, p.fb);
    const bool smooth = std::abs(left) < opt.max_phase_step && std::abs(right) < opt.max_phase_step &&
                        std::abs(left + right - whole) < 1e-6;
    if (smooth) {
      total += left + right;
      continue;
    }
    if (std::abs(p.b - p.a) < opt.min_length)
      throw AccuracyFailure("arg_change: contour passes too close to a zero");
    stack.push_back({m, p.b, fm, p.fb});
    stack.push_back({p.a, m, p.fa, fm});
  }
  return total;
}

/// Axis-aligned rectangle [sigma_lo, sigma_hi] x [t_lo, t_hi].
struct Rect {
  double sigma_lo = 0, sigma_hi = 0, t_lo = 0, t_hi = 0;
  double width() const { return sigma_hi - sigma_lo; }
  double height() const { return t_hi - t_lo; }
  cplx center() const { return {(sigma_lo + sigma_hi) / 2, (t_lo + t_hi) / 2}; }
  bool contains(cplx z) const {
    return z.real() > sigma_lo && z.real() < sigma_hi && z.imag() > t_lo && z.imag() < t_hi;
  }
};

/// Winding number of f around the rectangle boundary (counterclockwise),
/// as a real number; callers round it.
template <class F>
double winding_number(F&& f, const Rect& r, const ArgTrackOptions& opt = {}) {
  const cplx a{r.sigma_lo, r.t_lo}, b{r.sigma_hi, r.t_lo}, c{r.sigma_hi, r.t_hi}, d{r.sigma_lo, r.t_hi};
  auto side = [&](cplx from, cplx to) {
    ArgTrackOptions o = opt;
    o.pieces = std::max(opt.pieces, static_cast<int>(std::ceil(std::abs(to - from) / 0.25)));
    return arg_change(f, from, to, o);
  };
  const double total = side(a, b) + side(b, c) + side(c, d) + side(d, a);
  return total / (2 * std::numbers::pi);
}

/// Winding number rounded to an integer; AccuracyFailure when the raw value
/// is more than `tolerance` away from the nearest integer.
template <class F>
int zero_count(F&& f, const Rect& r, double tolerance = 0.1) {
  const double w = winding_number(f, r);
  const double k = std::round(w);
  if (std::abs(w - k) > tolerance)
    throw AccuracyFailure("winding number " + std::to_string(w) + " is not close to an integer");
  return static_cast<int>(k);
}

struct LocatedZero {
  cplx point;
  int multiplicity = 1;
  /// Bound on |point - true zero| (Newton step size or box half-diagonal).
  double accuracy = 0;
  bool resolved = true;
};

namespace detail {

template <class F>
std::optional<std::pair<cplx, double>> newton(F&& f, cplx z, int multiplicity, const Rect& box) {
  const double h = 1e-6 * std::max(1.0, std::abs(z));
  double step = 0;
  for (int it = 0; it < 60; ++it) {
    const cplx fz = f(z);
    if (fz == cplx(0, 0)) return std::pair{z, 0.0};
    const cplx deriv = (f(z + h) - f(z - h)) / (2 * h);
    if (deriv == cplx(0, 0)) return std::nullopt;
    const cplx dz = static_cast<double>(multiplicity) * fz / deriv;
    z -= dz;
    step = std::abs(dz);
    if (!box.contains(z)) return std::nullopt;
    if (step < 1e-13 * std::max(1.0, std::abs(z))) return std::pair{z, std::max(step, 1e-15)};
  }
  return std::nullopt;
}

template <class F>
void locate(F&& f, const Rect& r, int count, int depth, int max_depth, double tol, std::vector<LocatedZero>& out) {
  if (count == 0) return;
  if (auto hit = newton(f, r.center(), count, r)) {
    bool accept = count == 1;
    if (!accept) {
      // all `count` zeros must sit at the Newton limit
      const double rad = std::min({1e-6, r.width() / 4, r.height() / 4});
      const cplx z = hit->first;
      const Rect tiny{z.real() - rad, z.real() + rad, z.imag() - rad, z.imag() + rad};
      try {
        accept = zero_count(f, tiny) == count;
      } catch (const AccuracyFailure&) {
        accept = false;
      }
    }
    if (accept) {
      out.push_back({hit->first, count, hit->second, true});
      return;
    }
  }
  const double diag = std::hypot(r.width(), r.height()) / 2;
  if (depth >= max_depth || diag < tol) {
    out.push_back({r.center(), count, diag, diag < tol});
    return;
  }
  const bool split_t = r.height() >= r.width();
  for (double frac : {0.5, 0.4731, 0.5317, 0.4412, 0.5583}) {
    Rect lo = r, hi = r;
    if (split_t) {
      lo.t_hi = hi.t_lo = r.t_lo + frac * r.height();
    } else {
      lo.sigma_hi = hi.sigma_lo = r.sigma_lo + frac * r.width();
    }
    int n_lo = 0;
    try {
      n_lo = zero_count(f, lo);
    } catch (const AccuracyFailure&) {
      continue;  // split line too close to a zero; move it
    }
    const int n_hi = count - n_lo;
    if (n_hi < 0) continue;
    locate(f, lo, n_lo, depth + 1, max_depth, tol, out);
    locate(f, hi, n_hi, depth + 1, max_depth, tol, out);
    return;
  }
  out.push_back({r.center(), count, diag, false});
}

}  // namespace detail

/// Finds all zeros of f inside `r` by recursive bisection on winding
/// numbers, polishing each isolated cluster with Newton's method (using
/// the cluster's multiplicity). Clusters left unresolved after `max_depth`
/// levels are returned with resolved = false.
template <class F>
std::vector<LocatedZero> locate_zeros(F&& f, const Rect& r, int max_depth = 20, double tol = 1e-9) {
  std::vector<LocatedZero> out;
  detail::locate(f, r, zero_count(f, r), 0, max_depth, tol, out);
  std::sort(out.begin(), out.end(), [](const LocatedZero& a, const LocatedZero& b) {
    return a.point.imag() < b.point.imag() || (a.point.imag() == b.point.imag() && a.point.real() < b.point.real());
  });
  return out;
}

}  // namespace lzero
