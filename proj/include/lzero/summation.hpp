#pragma once

#include <cmath>
#include <complex>

namespace lzero {

/// Neumaier's variant of Kahan summation. Keeps the running compensation
/// separately so adding a term larger than the sum is also exact to
/// first order.
template <class Real>
class CompensatedSum {
 public:
  void add(Real x) {
    const Real t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x))
      comp_ += (sum_ - t) + x;
    else
      comp_ += (x - t) + sum_;
    sum_ = t;
  }
  CompensatedSum& operator+=(Real x) {
    add(x);
    return *this;
  }
  Real value() const { return sum_ + comp_; }

 private:
  Real sum_{0};
  Real comp_{0};
};

template <class Real>
class CompensatedComplexSum {
 public:
  void add(const std::complex<Real>& z) {
    re_.add(z.real());
    im_.add(z.imag());
  }
  CompensatedComplexSum& operator+=(const std::complex<Real>& z) {
    add(z);
    return *this;
  }
  std::complex<Real> value() const { return {re_.value(), im_.value()}; }

 private:
  CompensatedSum<Real> re_;
  CompensatedSum<Real> im_;
};

}  // namespace lzero
