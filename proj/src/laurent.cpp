#include "fvj/laurent.hpp"

#include <sstream>

namespace fvj {

LaurentPoly::LaurentPoly(std::initializer_list<std::pair<const Exponent, BigInt>> terms) {
  for (const auto& [k, c] : terms) add_term(k, c);
}

LaurentPoly LaurentPoly::constant(BigInt c) { return monomial(std::move(c), 0); }

LaurentPoly LaurentPoly::monomial(BigInt c, Exponent k) {
  LaurentPoly p;
  p.add_term(k, c);
  return p;
}

BigInt LaurentPoly::coefficient(Exponent k) const {
  auto it = terms_.find(k);
  return it == terms_.end() ? BigInt(0) : it->second;
}

void LaurentPoly::add_term(Exponent k, const BigInt& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(k, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& rhs) {
  for (const auto& [k, c] : rhs.terms_) add_term(k, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& rhs) {
  for (const auto& [k, c] : rhs.terms_) add_term(k, -c);
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& rhs) {
  LaurentPoly out;
  for (const auto& [k1, c1] : terms_)
    for (const auto& [k2, c2] : rhs.terms_) out.add_term(k1 + k2, c1 * c2);
  terms_ = std::move(out.terms_);
  return *this;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r = *this;
  for (auto& [k, c] : r.terms_) c = -c;
  return r;
}

LaurentPoly LaurentPoly::shifted(Exponent k) const {
  LaurentPoly r;
  for (const auto& [e, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), e + k, c);
  return r;
}

LaurentPoly LaurentPoly::pow(unsigned n) const {
  LaurentPoly result = constant(1);
  LaurentPoly base = *this;
  while (n != 0) {
    if (n & 1U) result *= base;
    n >>= 1U;
    if (n != 0) base *= base;
  }
  return result;
}

std::string LaurentPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : terms_) {
    const bool negative = c < 0;
    const BigInt magnitude = negative ? BigInt(-c) : c;
    if (first)
      os << (negative ? "-" : "");
    else
      os << (negative ? " - " : " + ");
    first = false;
    if (k == 0) {
      os << magnitude;
      continue;
    }
    if (magnitude != 1) os << magnitude << '*';
    os << "a^" << k;
  }
  return os.str();
}

LaurentPoly loop_factor() { return LaurentPoly{{-2, -1}, {2, -1}}; }

LaurentPoly writhe_prefactor(std::int64_t writhe) {
  const BigInt sign = (writhe % 2 == 0) ? 1 : -1;
  return LaurentPoly::monomial(sign, -3 * writhe);
}

}  // namespace fvj
