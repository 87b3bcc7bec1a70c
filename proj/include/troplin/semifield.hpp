#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <concepts>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace troplin {

// Exact rational scalars; no floating point is used anywhere in the library.
using Rational = boost::multiprecision::cpp_rational;

// Raised for violated preconditions of library operations (inverting zero,
// mismatched ground sets, invalid input data). The CLI maps these to exit
// code 1; malformed input documents map to exit code 2.
class DomainError : public std::runtime_error {
 public:
  explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

std::string rational_to_string(const Rational& q);
Rational rational_from_string(std::string_view text);

// Max-plus semifield over the rationals. Addition is maximum,
// multiplication is rational addition, the additive identity is -infinity
// (absorbing under multiplication) and the multiplicative identity is 0.
class TropValue {
 public:
  // Default-constructs the additive identity (-infinity).
  TropValue() : finite_(false) {}
  explicit TropValue(Rational v) : finite_(true), value_(std::move(v)) {}
  explicit TropValue(long v) : finite_(true), value_(v) {}

  static TropValue zero() { return TropValue(); }
  static TropValue one() { return TropValue(Rational(0)); }
  static constexpr std::string_view name() { return "maxplus-rational"; }

  bool is_zero() const { return !finite_; }
  bool is_one() const { return finite_ && value_ == 0; }

  // Finite payload; only valid when !is_zero().
  const Rational& finite_value() const {
    if (!finite_) throw DomainError("no finite value in the tropical zero");
    return value_;
  }

  TropValue inv() const {
    if (!finite_) throw DomainError("the tropical zero has no multiplicative inverse");
    return TropValue(-value_);
  }

  friend TropValue operator+(const TropValue& a, const TropValue& b) {
    if (!a.finite_) return b;
    if (!b.finite_) return a;
    return a.value_ >= b.value_ ? a : b;
  }
  friend TropValue operator*(const TropValue& a, const TropValue& b) {
    if (!a.finite_ || !b.finite_) return TropValue();
    return TropValue(a.value_ + b.value_);
  }

  bool operator==(const TropValue& o) const {
    if (finite_ != o.finite_) return false;
    return !finite_ || value_ == o.value_;
  }

  // Canonical order of the idempotent addition: a <= b iff a + b == b.
  bool leq(const TropValue& o) const {
    if (!finite_) return true;
    return o.finite_ && value_ <= o.value_;
  }

  std::string str() const;
  static TropValue parse(std::string_view text);

 private:
  bool finite_;
  Rational value_;
};

// The Boolean semifield {0, 1}: or / and.
class BoolValue {
 public:
  BoolValue() : v_(false) {}
  explicit BoolValue(bool v) : v_(v) {}

  static BoolValue zero() { return BoolValue(false); }
  static BoolValue one() { return BoolValue(true); }
  static constexpr std::string_view name() { return "boolean"; }

  bool is_zero() const { return !v_; }
  bool is_one() const { return v_; }
  bool truth() const { return v_; }

  BoolValue inv() const {
    if (!v_) throw DomainError("0 has no multiplicative inverse in the Boolean semifield");
    return BoolValue(true);
  }

  friend BoolValue operator+(const BoolValue& a, const BoolValue& b) {
    return BoolValue(a.v_ || b.v_);
  }
  friend BoolValue operator*(const BoolValue& a, const BoolValue& b) {
    return BoolValue(a.v_ && b.v_);
  }

  bool operator==(const BoolValue& o) const { return v_ == o.v_; }
  bool leq(const BoolValue& o) const { return !v_ || o.v_; }

  std::string str() const { return v_ ? "1" : "0"; }

 private:
  bool v_;
};

// The arithmetic contract every value type above satisfies. Downstream
// modules are written once against this concept.
template <typename S>
concept Semifield = std::regular<S> && requires(const S a, const S b) {
  { S::zero() } -> std::same_as<S>;
  { S::one() } -> std::same_as<S>;
  { a + b } -> std::same_as<S>;
  { a * b } -> std::same_as<S>;
  { a.inv() } -> std::same_as<S>;
  { a.is_zero() } -> std::convertible_to<bool>;
  { a.leq(b) } -> std::convertible_to<bool>;
  { S::name() } -> std::convertible_to<std::string_view>;
};

// Canonical semiring homomorphism onto the Boolean semifield.
inline BoolValue push_forward(const TropValue& a) { return BoolValue(!a.is_zero()); }
inline BoolValue push_forward(const BoolValue& a) { return a; }

}  // namespace troplin
