#pragma once

#include <cstdint>
#include <initializer_list>
#include <map>
#include <string>
#include <utility>

#include <boost/multiprecision/cpp_int.hpp>

namespace fvj {

using BigInt = boost::multiprecision::cpp_int;

/// Integer Laurent polynomial in one variable `a`.
///
/// Stored sparsely as exponent -> coefficient with no zero coefficients, so
/// structural equality is polynomial equality.
class LaurentPoly {
public:
  using Exponent = std::int64_t;
  using Terms = std::map<Exponent, BigInt>;

  LaurentPoly() = default;
  LaurentPoly(std::initializer_list<std::pair<const Exponent, BigInt>> terms);

  static LaurentPoly constant(BigInt c);
  static LaurentPoly monomial(BigInt c, Exponent k);

  bool is_zero() const noexcept { return terms_.empty(); }
  const Terms& terms() const noexcept { return terms_; }
  /// Coefficient of a^k; zero when absent.
  BigInt coefficient(Exponent k) const;

  LaurentPoly& operator+=(const LaurentPoly& rhs);
  LaurentPoly& operator-=(const LaurentPoly& rhs);
  LaurentPoly& operator*=(const LaurentPoly& rhs);
  LaurentPoly operator-() const;

  /// Adds c * a^k in place.
  void add_term(Exponent k, const BigInt& c);
  /// Multiplies by a^k.
  LaurentPoly shifted(Exponent k) const;
  LaurentPoly pow(unsigned n) const;

  friend LaurentPoly operator+(LaurentPoly x, const LaurentPoly& y) { return x += y; }
  friend LaurentPoly operator-(LaurentPoly x, const LaurentPoly& y) { return x -= y; }
  friend LaurentPoly operator*(const LaurentPoly& x, const LaurentPoly& y) {
    LaurentPoly r = x;
    return r *= y;
  }
  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

  /// Canonical text: "c*a^k" terms, ascending k, "a^0" and unit coefficients elided.
  std::string to_string() const;

private:
  Terms terms_;
};

/// The loop value -a^2 - a^-2.
LaurentPoly loop_factor();

/// (-a)^(-3w) = (-1)^w a^(-3w).
LaurentPoly writhe_prefactor(std::int64_t writhe);

}  // namespace fvj
