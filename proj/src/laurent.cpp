#include "troplin/laurent.hpp"

#include <sstream>
#include <vector>

namespace troplin {

LaurentPoly LaurentPoly::constant(Rational c) {
  LaurentPoly p;
  p.add_term(0, c);
  return p;
}

LaurentPoly LaurentPoly::t_power(long long e, Rational c) {
  LaurentPoly p;
  p.add_term(e, c);
  return p;
}

void LaurentPoly::add_term(long long exponent, const Rational& coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = terms_.try_emplace(exponent, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

long long LaurentPoly::degree() const {
  if (terms_.empty()) throw DomainError("the zero polynomial has no degree");
  return terms_.rbegin()->first;
}

long long LaurentPoly::low_degree() const {
  if (terms_.empty()) throw DomainError("the zero polynomial has no degree");
  return terms_.begin()->first;
}

const Rational& LaurentPoly::leading_coefficient() const {
  if (terms_.empty()) throw DomainError("the zero polynomial has no leading coefficient");
  return terms_.rbegin()->second;
}

TropValue LaurentPoly::valuation() const {
  if (terms_.empty()) return TropValue::zero();
  return TropValue(Rational(degree()));
}

LaurentPoly LaurentPoly::exponent_scaled(long long c) const {
  LaurentPoly out;
  for (const auto& [e, q] : terms_) out.add_term(e * c, q);
  return out;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly out;
  for (const auto& [e, q] : terms_) out.terms_.emplace(e, -q);
  return out;
}

LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly out = a;
  for (const auto& [e, q] : b.terms_) out.add_term(e, q);
  return out;
}

LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly out = a;
  for (const auto& [e, q] : b.terms_) out.add_term(e, -q);
  return out;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly out;
  for (const auto& [ea, qa] : a.terms_)
    for (const auto& [eb, qb] : b.terms_) out.add_term(ea + eb, qa * qb);
  return out;
}

LaurentPoly LaurentPoly::pow(unsigned k) const {
  LaurentPoly out = constant(Rational(1));
  for (unsigned i = 0; i < k; ++i) out = out * *this;
  return out;
}

LaurentPoly LaurentPoly::div_exact(const LaurentPoly& num, const LaurentPoly& den) {
  if (den.is_zero()) throw DomainError("division by the zero polynomial");
  if (num.is_zero()) return LaurentPoly();
  // Shift both to ordinary polynomials and long-divide; the shift of the
  // quotient restores the Laurent exponents.
  const long long num_low = num.low_degree();
  const long long den_low = den.low_degree();
  std::vector<Rational> a(static_cast<std::size_t>(num.degree() - num_low + 1));
  std::vector<Rational> b(static_cast<std::size_t>(den.degree() - den_low + 1));
  for (const auto& [e, q] : num.terms_) a[static_cast<std::size_t>(e - num_low)] = q;
  for (const auto& [e, q] : den.terms_) b[static_cast<std::size_t>(e - den_low)] = q;
  if (a.size() < b.size()) throw DomainError("inexact polynomial division");
  std::vector<Rational> quotient(a.size() - b.size() + 1);
  for (std::size_t i = quotient.size(); i-- > 0;) {
    Rational q = a[i + b.size() - 1] / b.back();
    quotient[i] = q;
    if (q != 0)
      for (std::size_t j = 0; j < b.size(); ++j) a[i + j] -= q * b[j];
  }
  for (const Rational& r : a)
    if (r != 0) throw DomainError("inexact polynomial division");
  LaurentPoly out;
  for (std::size_t i = 0; i < quotient.size(); ++i)
    out.add_term(static_cast<long long>(i) + num_low - den_low, quotient[i]);
  return out;
}

std::string LaurentPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    if (!first) os << " + ";
    os << rational_to_string(it->second);
    if (it->first != 0) os << "*t^" << it->first;
    first = false;
  }
  return os.str();
}

}  // namespace troplin
