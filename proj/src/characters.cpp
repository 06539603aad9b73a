#include "lzero/characters.hpp"

#include <numeric>
#include <unordered_map>

#include "lzero/errors.hpp"

namespace lzero {
namespace {

// One prime-power factor of (Z/qZ)^* with its discrete-log table.
struct Component {
  i64 p = 0;
  int e = 0;
  i64 pe = 1;
  i64 group_exponent = 1;           // exponent of the cyclic part
  std::unordered_map<i64, i64> log;  // residue -> discrete log (of |x| for p = 2)

  explicit Component(const PrimePower& f) : p(f.prime), e(f.exponent) {
    for (int i = 0; i < e; ++i) pe *= p;
    if (p == 2) {
      if (e <= 2) {
        group_exponent = e == 2 ? 2 : 1;
        return;
      }
      group_exponent = pe / 4;  // 5 has order 2^{e-2}
      i64 x = 1;
      for (i64 k = 0; k < group_exponent; ++k) {
        log[x] = k;
        x = x * 5 % pe;
      }
      return;
    }
    group_exponent = pe / p * (p - 1);
    const i64 g = smallest_primitive_root(p);
    i64 x = 1;
    for (i64 k = 0; k < group_exponent; ++k) {
      log[x] = k;
      x = x * g % pe;
    }
  }

  // For p = 2, e >= 3: (sign bit, log_5) with x = (-1)^sign 5^log.
  std::pair<int, i64> split2(i64 x) const {
    x = mod(x, pe);
    if (x % 4 == 1) return {0, log.at(x)};
    return {1, log.at(pe - x)};
  }

  // Phase of chi_n(m) on this component as a fraction over `scale`, where
  // `scale` is a multiple of lcm(2, group_exponent).
  i64 phase(i64 n, i64 m, i64 scale) const {
    if (p == 2) {
      if (e == 1) return 0;
      if (e == 2) return (mod(n, 4) == 3 && mod(m, 4) == 3) ? scale / 2 : 0;
      auto [sn, an] = split2(n);
      auto [sm, am] = split2(m);
      i64 ph = (sn && sm) ? scale / 2 : 0;
      return ph + mul_mod(an, am, group_exponent) * (scale / group_exponent);
    }
    const i64 an = log.at(mod(n, pe)), am = log.at(mod(m, pe));
    return mul_mod(an, am, group_exponent) * (scale / group_exponent);
  }

  i64 conductor(i64 n) const {
    if (p == 2) {
      if (e == 1) return 1;
      if (e == 2) return mod(n, 4) == 3 ? 4 : 1;
      auto [sn, an] = split2(n);
      if (an == 0) return sn ? 4 : 1;
      i64 ord = group_exponent / gcd(an, group_exponent);
      return 4 * ord;
    }
    const i64 a = log.at(mod(n, pe));
    if (a == 0) return 1;
    i64 ord = group_exponent / gcd(a, group_exponent);
    i64 f = p;
    while (ord % p == 0) {
      ord /= p;
      f *= p;
    }
    return f;
  }
};

}  // namespace

std::string CharacterLabel::str() const { return std::to_string(modulus) + "." + std::to_string(index); }

CharacterLabel CharacterLabel::parse(const std::string& text) {
  const auto dot = text.find('.');
  if (dot == std::string::npos) throw RejectedInput("character label must look like q.n, got '" + text + "'");
  try {
    std::size_t used_q = 0, used_n = 0;
    const std::string qs = text.substr(0, dot), ns = text.substr(dot + 1);
    CharacterLabel label{std::stoll(qs, &used_q), std::stoll(ns, &used_n)};
    if (used_q != qs.size() || used_n != ns.size()) throw std::invalid_argument("trailing");
    return label;
  } catch (const std::logic_error&) {
    throw RejectedInput("character label must look like q.n, got '" + text + "'");
  }
}

CharValue operator*(const CharValue& a, const CharValue& b) {
  if (a.zero || b.zero) return {};
  const i64 den = lcm(a.den, b.den);
  i64 num = mod(a.num * (den / a.den) + b.num * (den / b.den), den);
  const i64 g = gcd(num, den);
  return {false, num / g, den / g};
}

DirichletCharacter::DirichletCharacter(CharacterLabel label) : label_(label) {
  const i64 q = label.modulus;
  if (q < 1) throw RejectedInput("modulus must be >= 1");
  if (label.index < 1 || label.index > q || gcd(label.index, q) != 1)
    throw RejectedInput("Conrey index " + std::to_string(label.index) + " is not a unit mod " +
                        std::to_string(q));
  std::vector<Component> parts;
  i64 scale = 2;
  for (const auto& f : factor(q)) {
    parts.emplace_back(f);
    scale = lcm(scale, parts.back().group_exponent);
  }

  const i64 n = label.index;
  std::vector<i64> raw(static_cast<std::size_t>(q), -1);
  i64 common = scale;
  for (i64 m = 0; m < q; ++m) {
    if (gcd(m, q) != 1) continue;
    i64 ph = 0;
    for (const auto& c : parts) ph = (ph + c.phase(n, m, scale)) % scale;
    raw[m] = ph;
    common = gcd(common, ph);
  }
  order_ = scale / common;
  exponents_.resize(raw.size());
  for (std::size_t m = 0; m < raw.size(); ++m) exponents_[m] = raw[m] < 0 ? -1 : raw[m] / common;

  conductor_ = 1;
  for (const auto& c : parts) conductor_ *= c.conductor(n);
  parity_ = (q > 2 && exponent(q - 1) != 0) ? 1 : 0;
}

DirichletCharacter DirichletCharacter::conj() const {
  return DirichletCharacter({label_.modulus, label_.modulus == 1 ? 1 : inv_mod(label_.index, label_.modulus)});
}

DirichletCharacter character_from_label(CharacterLabel label) { return DirichletCharacter(label); }

std::vector<DirichletCharacter> enumerate_characters(i64 q) {
  if (q < 1) throw RejectedInput("modulus must be >= 1");
  std::vector<DirichletCharacter> out;
  for (i64 n = 1; n <= q; ++n)
    if (gcd(n, q) == 1) out.emplace_back(CharacterLabel{q, n});
  return out;
}

std::vector<DirichletCharacter> enumerate_primitive(i64 q) {
  std::vector<DirichletCharacter> out;
  for (auto& chi : enumerate_characters(q))
    if (chi.is_primitive()) out.push_back(std::move(chi));
  return out;
}

CharValue eval_char(const DirichletCharacter& chi, i64 m) { return chi(m); }

i64 conductor(const DirichletCharacter& chi) { return chi.conductor(); }

DirichletCharacter mul_conj(const DirichletCharacter& chi1, const DirichletCharacter& chi2) {
  const i64 q = chi1.modulus();
  if (chi2.modulus() != q) throw RejectedInput("mul_conj: characters have different moduli");
  if (q == 1) return DirichletCharacter({1, 1});
  return DirichletCharacter({q, mul_mod(chi1.label().index, inv_mod(chi2.label().index, q), q)});
}

}  // namespace lzero
