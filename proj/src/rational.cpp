#include "lzero/rational.hpp"

#include <charconv>
#include <cmath>
#include <limits>
#include <numeric>

#include "lzero/errors.hpp"

namespace lzero {
namespace {

std::int64_t checked(__int128 v) {
  if (v > std::numeric_limits<std::int64_t>::max() || v < std::numeric_limits<std::int64_t>::min())
    throw RejectedInput("rational overflow");
  return static_cast<std::int64_t>(v);
}

Rational make(__int128 num, __int128 den) {
  if (den < 0) {
    num = -num;
    den = -den;
  }
  __int128 a = num < 0 ? -num : num, b = den;
  while (b != 0) {
    const __int128 t = a % b;
    a = b;
    b = t;
  }
  if (a > 1) {
    num /= a;
    den /= a;
  }
  return Rational(checked(num), checked(den));
}

std::int64_t parse_int(std::string_view s) {
  std::int64_t v = 0;
  if (s.empty()) throw RejectedInput("empty integer");
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size())
    throw RejectedInput("cannot parse integer '" + std::string(s) + "'");
  return v;
}

}  // namespace

Rational::Rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw RejectedInput("rational with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const std::int64_t g = std::gcd(num, den);
  num_ = num / g;
  den_ = den / g;
}

Rational Rational::parse(std::string_view text) {
  while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
  while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
  if (text.empty()) throw RejectedInput("empty rational");
  if (auto slash = text.find('/'); slash != std::string_view::npos)
    return Rational(parse_int(text.substr(0, slash)), parse_int(text.substr(slash + 1)));
  if (auto dot = text.find('.'); dot != std::string_view::npos) {
    std::string_view whole = text.substr(0, dot);
    std::string_view frac = text.substr(dot + 1);
    bool negative = !whole.empty() && whole.front() == '-';
    if (negative || (!whole.empty() && whole.front() == '+')) whole.remove_prefix(1);
    if (frac.empty() && whole.empty()) throw RejectedInput("cannot parse '" + std::string(text) + "'");
    if (frac.size() > 18) throw RejectedInput("too many decimal digits in '" + std::string(text) + "'");
    for (char c : frac)
      if (c < '0' || c > '9') throw RejectedInput("cannot parse '" + std::string(text) + "'");
    __int128 scale = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
    const __int128 w = whole.empty() ? 0 : parse_int(whole);
    if (w < 0) throw RejectedInput("cannot parse '" + std::string(text) + "'");
    const __int128 f = frac.empty() ? 0 : parse_int(frac);
    __int128 num = w * scale + f;
    if (negative) num = -num;
    return make(num, scale);
  }
  return Rational(parse_int(text));
}

std::int64_t Rational::floor() const {
  std::int64_t q = num_ / den_;
  if (num_ % den_ != 0 && num_ < 0) --q;
  return q;
}

std::int64_t Rational::ceil() const {
  std::int64_t q = num_ / den_;
  if (num_ % den_ != 0 && num_ > 0) ++q;
  return q;
}

double Rational::log() const {
  return std::log(static_cast<double>(num_)) - std::log(static_cast<double>(den_));
}

std::string Rational::str() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational operator-(const Rational& a, const Rational& b) {
  return make(static_cast<__int128>(a.num_) * b.den_ - static_cast<__int128>(b.num_) * a.den_,
              static_cast<__int128>(a.den_) * b.den_);
}

Rational operator+(const Rational& a, const Rational& b) {
  return make(static_cast<__int128>(a.num_) * b.den_ + static_cast<__int128>(b.num_) * a.den_,
              static_cast<__int128>(a.den_) * b.den_);
}

Rational abs(const Rational& a) { return a.num_ < 0 ? Rational(-a.num_, a.den_) : a; }

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  const __int128 lhs = static_cast<__int128>(a.num_) * b.den_;
  const __int128 rhs = static_cast<__int128>(b.num_) * a.den_;
  return lhs <=> rhs;
}

}  // namespace lzero
