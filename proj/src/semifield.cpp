#include "troplin/semifield.hpp"

#include <sstream>

namespace troplin {

std::string rational_to_string(const Rational& q) {
  std::ostringstream os;
  os << q;
  return os.str();
}

Rational rational_from_string(std::string_view text) {
  if (text.empty()) throw DomainError("empty rational literal");
  try {
    return Rational(std::string(text));
  } catch (const std::exception&) {
    throw DomainError("malformed rational literal: \"" + std::string(text) + "\"");
  }
}

std::string TropValue::str() const {
  if (!finite_) return "-inf";
  return rational_to_string(value_);
}

TropValue TropValue::parse(std::string_view text) {
  if (text == "-inf") return TropValue::zero();
  return TropValue(rational_from_string(text));
}

}  // namespace troplin
