#pragma once

#include <map>
#include <string>

#include "troplin/semifield.hpp"

namespace troplin {

// Exact univariate Laurent polynomial over the rationals: a map from
// integer exponent to nonzero coefficient. The zero polynomial is the
// empty map. Exponents are plain integers; generalized power series are
// out of scope.
class LaurentPoly {
 public:
  LaurentPoly() = default;

  static LaurentPoly constant(Rational c);
  static LaurentPoly t_power(long long e, Rational c = Rational(1));

  bool is_zero() const { return terms_.empty(); }
  const std::map<long long, Rational>& terms() const { return terms_; }

  void add_term(long long exponent, const Rational& coeff);

  long long degree() const;       // maximum exponent; throws on zero
  long long low_degree() const;   // minimum exponent; throws on zero
  const Rational& leading_coefficient() const;

  // Valuation onto max-plus: zero ↦ -inf, otherwise the leading exponent.
  TropValue valuation() const;

  // Substitutes t ↦ t^c (used by the exact common-denominator rescaling).
  LaurentPoly exponent_scaled(long long c) const;

  LaurentPoly operator-() const;
  friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  LaurentPoly pow(unsigned k) const;

  // Exact quotient; throws DomainError when the division has a remainder.
  static LaurentPoly div_exact(const LaurentPoly& num, const LaurentPoly& den);

  bool operator==(const LaurentPoly& o) const { return terms_ == o.terms_; }

  std::string str() const;

 private:
  std::map<long long, Rational> terms_;
};

}  // namespace troplin
